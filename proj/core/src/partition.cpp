#include "plethysm/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace plethysm {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw std::invalid_argument("partition part must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        sum_ += parts_[i];
    }
}

Partition Partition::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (!s.empty() && s.front() == '(' && s.back() == ')')
        s = s.substr(1, s.size() - 2);
    if (s.empty()) return Partition{};

    std::vector<unsigned> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto bad = [&] { throw std::invalid_argument("bad partition token '" + tok + "'"); };
        if (tok.empty()) bad();
        std::size_t caret = tok.find('^');
        std::string base = tok.substr(0, caret == std::string::npos ? tok.size() : caret);
        std::string exp = caret == std::string::npos ? "1" : tok.substr(caret + 1);
        if (base.empty() || exp.empty()) bad();
        if (base.find_first_not_of("0123456789") != std::string::npos ||
            exp.find_first_not_of("0123456789") != std::string::npos)
            bad();
        unsigned long p = std::stoul(base), e = std::stoul(exp);
        if (p == 0 || e == 0) bad();
        for (unsigned long i = 0; i < e; ++i) parts.push_back(static_cast<unsigned>(p));
    }
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<unsigned> out(parts_[0], 0);
    for (unsigned j = 0; j < parts_[0]; ++j)
        out[j] = static_cast<unsigned>(
            std::count_if(parts_.begin(), parts_.end(), [&](unsigned p) { return p > j; }));
    return Partition(std::move(out));
}

std::string Partition::str() const {
    if (parts_.empty()) return "()";
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (i) out << ',';
        out << parts_[i];
        if (j - i > 1) out << '^' << (j - i);
        i = j;
    }
    return out.str();
}

std::string Partition::str_flat() const {
    if (parts_.empty()) return "()";
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    return out.str();
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(),
                                                  o.parts_.begin(), o.parts_.end());
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("incomparable sizes");
    unsigned sa = 0, sb = 0;
    std::size_t len = std::max(a.length(), b.length());
    for (std::size_t i = 0; i < len; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb) return false;
    }
    return true;
}

Partition join(const Partition& a, const Partition& b) {
    std::vector<unsigned> parts;
    parts.reserve(a.length() + b.length());
    parts.insert(parts.end(), a.parts().begin(), a.parts().end());
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

namespace {

void enumerate_rec(unsigned remaining, unsigned max_part, unsigned parts_left,
                   std::vector<unsigned>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (parts_left == 0) return;
    for (unsigned p = std::min(max_part, remaining); p >= 1; --p) {
        acc.push_back(p);
        enumerate_rec(remaining - p, p, parts_left - 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(unsigned n, std::optional<unsigned> max_parts,
                                            std::optional<unsigned> max_part) {
    std::vector<Partition> out;
    std::vector<unsigned> acc;
    enumerate_rec(n, max_part.value_or(n), max_parts.value_or(n), acc, out);
    return out;
}

Int count_partitions_in_box(unsigned d, unsigned rows, unsigned cols) {
    // B(r,c,d) = B(r-1,c,d) + B(r,c-1,d-r): split on whether there are
    // exactly r parts (then subtract 1 from each).
    static thread_local std::map<std::tuple<unsigned, unsigned, unsigned>, Int> memo;
    struct Rec {
        std::map<std::tuple<unsigned, unsigned, unsigned>, Int>& memo;
        Int operator()(unsigned r, unsigned c, unsigned dd) {
            if (dd == 0) return 1;
            if (r == 0 || c == 0) return 0;
            if (dd > r * c) return 0;
            auto key = std::make_tuple(r, c, dd);
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
            Int v = (*this)(r - 1, c, dd);
            if (dd >= r) v += (*this)(r, c - 1, dd - r);
            memo.emplace(key, v);
            return v;
        }
    } rec{memo};
    return rec(rows, cols, d);
}

namespace {

std::vector<Partition> antichain_filter(const std::vector<Partition>& set, bool want_minimal) {
    std::set<Partition> uniq(set.begin(), set.end());
    std::vector<Partition> out;
    for (const auto& x : uniq) {
        bool extreme = true;
        for (const auto& y : uniq) {
            if (x == y) continue;
            if (want_minimal ? dominates(x, y) : dominates(y, x)) {
                extreme = false;
                break;
            }
        }
        if (extreme) out.push_back(x);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

} // namespace

std::vector<Partition> dominance_minimal(const std::vector<Partition>& set) {
    return antichain_filter(set, true);
}

std::vector<Partition> dominance_maximal(const std::vector<Partition>& set) {
    return antichain_filter(set, false);
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    Int r{1};
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Int factorial(unsigned n) {
    Int r{1};
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace plethysm
