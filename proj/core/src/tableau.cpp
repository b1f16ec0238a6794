#include "plethysm/tableau.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace plethysm {

Tableau::Tableau(Partition shape, std::vector<unsigned> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    if (entries_.size() != shape_.size())
        throw std::invalid_argument("entry count does not match shape");
    for (unsigned e : entries_)
        if (e == 0) throw std::invalid_argument("tableau entries must be positive");
    row_offset_.reserve(shape_.length() + 1);
    std::size_t off = 0;
    for (std::size_t i = 0; i < shape_.length(); ++i) {
        row_offset_.push_back(off);
        off += shape_[i];
    }
    row_offset_.push_back(off);
}

Tableau Tableau::parse(const std::string& text) {
    std::vector<std::vector<unsigned>> rows;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t slash = text.find('/', pos);
        std::string row = text.substr(pos, slash == std::string::npos ? std::string::npos : slash - pos);
        std::vector<unsigned> vals;
        if (row.find(' ') != std::string::npos) {
            std::istringstream in(row);
            unsigned v;
            while (in >> v) vals.push_back(v);
            if (!in.eof()) throw std::invalid_argument("bad tableau row '" + row + "'");
        } else {
            for (char c : row) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw std::invalid_argument("bad tableau row '" + row + "'");
                vals.push_back(static_cast<unsigned>(c - '0'));
            }
        }
        rows.push_back(std::move(vals));
        if (slash == std::string::npos) break;
        pos = slash + 1;
    }
    std::vector<unsigned> parts, entries;
    for (const auto& r : rows) {
        parts.push_back(static_cast<unsigned>(r.size()));
        entries.insert(entries.end(), r.begin(), r.end());
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Tableau(Partition(parts), std::move(entries));
}

unsigned Tableau::at(std::size_t row, std::size_t col) const {
    return entries_[row_offset_[row] + col];
}

unsigned Tableau::max_entry() const {
    unsigned m = 0;
    for (unsigned e : entries_) m = std::max(m, e);
    return m;
}

unsigned Tableau::entry_sum() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0u);
}

std::vector<unsigned> Tableau::column(std::size_t j) const {
    std::vector<unsigned> col;
    for (std::size_t i = 0; i < rows() && shape_[i] > j; ++i)
        col.push_back(at(i, j));
    std::sort(col.begin(), col.end());
    return col;
}

std::vector<std::vector<unsigned>> Tableau::columns() const {
    std::vector<std::vector<unsigned>> cols(shape_.empty() ? 0 : shape_[0]);
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < shape_[i]; ++j)
            cols[j].push_back(at(i, j));
    for (auto& c : cols) std::sort(c.begin(), c.end());
    return cols;
}

std::vector<unsigned> Tableau::weight() const {
    std::vector<unsigned> w(max_entry(), 0);
    for (unsigned e : entries_) ++w[e - 1];
    return w;
}

std::vector<unsigned> Tableau::sorted_row(std::size_t row) const {
    std::vector<unsigned> r(entries_.begin() + row_offset_[row],
                            entries_.begin() + row_offset_[row + 1]);
    std::sort(r.begin(), r.end());
    return r;
}

std::string Tableau::str() const {
    bool wide = max_entry() >= 10;
    std::string out;
    for (std::size_t i = 0; i < rows(); ++i) {
        if (i) out += '/';
        for (std::size_t j = 0; j < shape_[i]; ++j) {
            if (wide && j) out += ' ';
            out += std::to_string(at(i, j));
        }
    }
    return out;
}

bool is_conjugate_semistandard(const Tableau& t) {
    const Partition& sh = t.shape();
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 1; j < sh[i]; ++j)
            if (t.at(i, j) <= t.at(i, j - 1)) return false;
    for (std::size_t i = 1; i < t.rows(); ++i)
        for (std::size_t j = 0; j < sh[i]; ++j)
            if (t.at(i, j) < t.at(i - 1, j)) return false;
    return true;
}

namespace {

// boxes in column-reading order: columns left to right, top to bottom
// within a column
void fill_cs(const Partition& mu, const Partition& mu_conj, unsigned k,
             std::size_t col, std::size_t row,
             std::vector<std::vector<unsigned>>& grid,
             std::vector<Tableau>& out) {
    if (col == (mu.empty() ? 0 : mu[0])) {
        std::vector<unsigned> entries;
        for (std::size_t i = 0; i < mu.length(); ++i)
            entries.insert(entries.end(), grid[i].begin(), grid[i].end());
        out.emplace_back(mu, std::move(entries));
        return;
    }
    if (row == mu_conj[col]) {
        fill_cs(mu, mu_conj, k, col + 1, 0, grid, out);
        return;
    }
    unsigned lo = 1;
    if (col > 0) lo = std::max(lo, grid[row][col - 1] + 1); // strict along the row
    if (row > 0) lo = std::max(lo, grid[row - 1][col]);      // weak down the column
    for (unsigned v = lo; v <= k; ++v) {
        grid[row][col] = v;
        fill_cs(mu, mu_conj, k, col, row + 1, grid, out);
    }
}

} // namespace

std::vector<Tableau> enumerate_cs(const Partition& mu, unsigned k) {
    std::vector<Tableau> out;
    Partition mu_conj = mu.conjugate();
    std::vector<std::vector<unsigned>> grid(mu.length());
    for (std::size_t i = 0; i < mu.length(); ++i) grid[i].assign(mu[i], 0);
    fill_cs(mu, mu_conj, k, 0, 0, grid, out);
    std::sort(out.begin(), out.end(), colex_less);
    return out;
}

Int count_cs(const Partition& mu, unsigned k) {
    // |CS(mu,k)| = #SSYT(mu', k), hook content formula
    Partition c = mu.conjugate();
    Partition cc = mu; // conjugate of the conjugate
    Rat prod{1};
    for (std::size_t i = 0; i < c.length(); ++i) {
        for (std::size_t j = 0; j < c[i]; ++j) {
            long content = static_cast<long>(j) - static_cast<long>(i);
            long num = static_cast<long>(k) + content;
            if (num <= 0) return 0;
            long hook = static_cast<long>(c[i] - j) + static_cast<long>(cc[j] - i) - 1;
            prod *= Rat(num, hook);
        }
    }
    Int numer = boost::multiprecision::numerator(prod);
    Int denom = boost::multiprecision::denominator(prod);
    if (denom != 1) throw std::logic_error("hook content product not integral");
    return numer;
}

namespace {

std::strong_ordering cmp_multiset_colex(const std::vector<unsigned>& a,
                                        const std::vector<unsigned>& b) {
    // sorted ascending, equal sizes; colex reads from the largest element down
    for (std::size_t q = a.size(); q-- > 0;) {
        if (a[q] != b[q]) return a[q] <=> b[q];
    }
    return std::strong_ordering::equal;
}

} // namespace

std::strong_ordering compare_colex(const Tableau& u, const Tableau& v) {
    if (u.shape() != v.shape())
        throw std::invalid_argument("colex comparison requires equal shapes");
    auto cu = u.columns();
    auto cv = v.columns();
    for (std::size_t j = cu.size(); j-- > 0;) {
        auto c = cmp_multiset_colex(cu[j], cv[j]);
        if (c != 0) return c;
    }
    // identical columnar tabloids; break ties by row reading word (never
    // reached when both tableaux are conjugate-semistandard)
    return u.entries() <=> v.entries();
}

bool majorizes(const Tableau& u, const Tableau& v) {
    if (u.shape() != v.shape())
        throw std::invalid_argument("majorization requires equal shapes");
    for (std::size_t i = 0; i < u.rows(); ++i) {
        auto ru = u.sorted_row(i);
        auto rv = v.sorted_row(i);
        for (std::size_t j = 0; j < ru.size(); ++j)
            if (ru[j] > rv[j]) return false;
    }
    return true;
}

Relation compare_col_preorder(const Tableau& u, const Tableau& v) {
    if (u.shape() != v.shape())
        throw std::invalid_argument("columnar comparison requires equal shapes");
    auto cu = u.columns();
    auto cv = v.columns();
    for (std::size_t j = cu.size(); j-- > 0;) {
        if (cu[j] == cv[j]) continue;
        bool u_le = true, v_le = true;
        for (std::size_t i = 0; i < cu[j].size(); ++i) {
            if (cu[j][i] > cv[j][i]) u_le = false;
            if (cv[j][i] > cu[j][i]) v_le = false;
        }
        if (u_le) return Relation::less;
        if (v_le) return Relation::greater;
        return Relation::incomparable;
    }
    return Relation::equivalent;
}

Relation compare_entry_preorder(const Tableau& u, const Tableau& v) {
    if (u.shape() != v.shape())
        throw std::invalid_argument("entry comparison requires equal shapes");
    auto eu = u.entries();
    auto ev = v.entries();
    std::sort(eu.begin(), eu.end());
    std::sort(ev.begin(), ev.end());
    auto c = cmp_multiset_colex(eu, ev);
    if (c < 0) return Relation::less;
    if (c > 0) return Relation::greater;
    return Relation::equivalent;
}

} // namespace plethysm
