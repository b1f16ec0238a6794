#include "plethysm/extrema.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <utility>

namespace plethysm {

namespace {

// invariants of the segment algorithm hold by theorem; check them in every
// build type since a violation means the trace is garbage
void check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

using Cell = std::pair<std::size_t, std::size_t>;

struct Removal {
    Partition shape;
    std::vector<Cell> cells;
};

// delete c boxes from shape, no two in the same row, keeping a partition
std::vector<Removal> remove_boxes(const Partition& shape, unsigned c) {
    std::vector<Removal> out;
    const auto& p = shape.parts();
    std::size_t len = p.size();
    if (c == 0) {
        out.push_back({shape, {}});
        return out;
    }
    if (c > len) return out;
    std::vector<std::size_t> idx(c);
    for (std::size_t i = 0; i < c; ++i) idx[i] = i;
    while (true) {
        std::vector<unsigned> q(p);
        for (std::size_t r : idx) q[r] -= 1;
        if (std::is_sorted(q.rbegin(), q.rend())) {
            Removal rm;
            for (std::size_t r : idx) rm.cells.emplace_back(r, p[r] - 1);
            while (!q.empty() && q.back() == 0) q.pop_back();
            rm.shape = Partition(std::move(q));
            out.push_back(std::move(rm));
        }
        std::size_t i = c;
        while (i > 0 && idx[i - 1] == len - c + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < c; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

// partial removal sequence: the shape left, plus the cells each run deleted
struct RemovalSeq {
    Partition shape;
    std::vector<std::vector<Cell>> cells_by_run;
};

std::vector<RemovalSeq> removal_sequences(const Partition& mu, const std::vector<unsigned>& counts) {
    std::vector<RemovalSeq> seqs{{mu, {}}};
    for (unsigned c : counts) {
        std::vector<RemovalSeq> next;
        for (const auto& s : seqs) {
            for (auto& r : remove_boxes(s.shape, c)) {
                RemovalSeq ns{std::move(r.shape), s.cells_by_run};
                ns.cells_by_run.push_back(std::move(r.cells));
                next.push_back(std::move(ns));
            }
        }
        seqs = std::move(next);
    }
    return seqs;
}

// run-length encoding of the k-prefix: (value, count) pairs
std::vector<std::pair<unsigned, unsigned>> run_lengths(const std::vector<unsigned>& k) {
    std::vector<std::pair<unsigned, unsigned>> runs;
    for (unsigned v : k) {
        if (!runs.empty() && runs.back().first == v)
            ++runs.back().second;
        else
            runs.emplace_back(v, 1);
    }
    return runs;
}

// entries: boxes deleted by run i carry value l_i + 1; the remaining shape
// takes the fill (entry ranges are disjoint, so the result is always
// conjugate-semistandard and distinct sequences give distinct tableaux)
Tableau assemble(const Partition& mu, const std::vector<std::pair<unsigned, unsigned>>& runs,
                 const RemovalSeq& sq, const Tableau* fill) {
    std::vector<std::size_t> off(mu.length() + 1, 0);
    for (std::size_t r = 0; r < mu.length(); ++r) off[r + 1] = off[r] + mu.parts()[r];
    std::vector<unsigned> entries(mu.size(), 0);
    for (std::size_t i = 0; i < sq.cells_by_run.size(); ++i)
        for (const auto& [r, c] : sq.cells_by_run[i])
            entries[off[r] + c] = runs[i].first + 1;
    if (fill)
        for (std::size_t r = 0; r < fill->rows(); ++r)
            for (std::size_t c = 0; c < fill->row_length(r); ++c)
                entries[off[r] + c] = fill->at(r, c);
    return Tableau(mu, std::move(entries));
}

std::vector<unsigned> run_counts(const std::vector<std::pair<unsigned, unsigned>>& runs) {
    std::vector<unsigned> counts;
    counts.reserve(runs.size());
    for (const auto& [value, count] : runs) counts.push_back(count);
    return counts;
}

} // namespace

Partition kappa_of(const Partition& mu, const Partition& nu) {
    return mu.size() % 2 == 0 ? nu.conjugate() : nu;
}

std::vector<Partition> minimal_constituents(const Partition& mu, const Partition& nu) {
    if (mu.empty() || nu.empty())
        throw std::invalid_argument("minimal_constituents: mu and nu must be nonempty");
    auto tuples = enumerate_closed_tuples(mu, kappa_of(mu, nu));
    std::vector<Partition> types;
    types.reserve(tuples.size());
    for (const auto& t : tuples) types.push_back(tuple_type(t));
    return dominance_minimal(types);
}

std::vector<Partition> maximal_constituents(const Partition& mu, const Partition& nu) {
    if (mu.empty() || nu.empty())
        throw std::invalid_argument("maximal_constituents: mu and nu must be nonempty");
    Partition outer = mu.size() % 2 == 0 ? nu : nu.conjugate();
    auto mins = minimal_constituents(mu.conjugate(), outer);
    std::vector<Partition> out;
    out.reserve(mins.size());
    for (const auto& p : mins) out.push_back(p.conjugate());
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return a > b; });
    return out;
}

std::pair<Partition, Int> lex_greatest(const Partition& mu, const Partition& nu) {
    if (mu.empty() || nu.empty())
        throw std::invalid_argument("lex_greatest: mu and nu must be nonempty");
    unsigned n = nu.size();
    const auto& mp = mu.parts();
    std::vector<unsigned> parts;
    for (std::size_t i = 0; i + 1 < mp.size(); ++i) parts.push_back(n * mp[i]);
    parts.push_back(n * (mp.back() - 1) + nu[0]);
    for (std::size_t i = 1; i < nu.length(); ++i) parts.push_back(nu.parts()[i]);
    return {Partition(std::move(parts)), Int{1}};
}

Partition lex_least(const Partition& mu, const Partition& nu) {
    if (mu.empty() || nu.empty())
        throw std::invalid_argument("lex_least: mu and nu must be nonempty");
    Partition acc;
    Partition kap = kappa_of(mu, nu); // keep alive: parts() borrows from it
    for (unsigned part : kap.parts()) acc = join(acc, lexmin_type(mu, part));
    return acc;
}

SegmentTrace lexmin_segments(const Partition& mu, unsigned n) {
    if (mu.empty()) throw std::invalid_argument("lexmin_segments: mu must be nonempty");
    if (n == 0) throw std::invalid_argument("lexmin_segments: n must be positive");
    unsigned m = mu.size();
    SegmentTrace trace;
    unsigned placed = 0;

    for (unsigned j = 1; j <= m; ++j) {
        unsigned budget = n - placed;
        unsigned k = 0;
        TableauFamily tier;
        if (j == 1) {
            while (count_cs(mu, k + 1) <= budget) ++k;
            tier = enumerate_cs(mu, k);
        } else {
            auto runs = run_lengths(trace.k);
            auto seqs = removal_sequences(mu, run_counts(runs));
            check(!seqs.empty(), "no removal sequence for the k-prefix");
            auto total = [&](unsigned kk) {
                Int s = 0;
                for (const auto& sq : seqs) s += count_cs(sq.shape, kk);
                return s;
            };
            // k = 0 is always feasible here: fewer than m boxes are gone, so
            // every remaining shape is nonempty and |CS(theta, 0)| = 0
            while (total(k + 1) <= budget) ++k;
            for (const auto& sq : seqs)
                for (const auto& fill : enumerate_cs(sq.shape, k))
                    tier.push_back(assemble(mu, runs, sq, &fill));
            std::sort(tier.begin(), tier.end(), colex_less);
            check(std::adjacent_find(tier.begin(), tier.end()) == tier.end(),
                  "duplicate tableau across removal sequences");
        }
        check(trace.k.empty() || k <= trace.k.back(), "segment bounds not weakly decreasing");
        trace.k.push_back(k);
        placed += static_cast<unsigned>(tier.size());
        trace.tiers.push_back(std::move(tier));
    }

    auto runs = run_lengths(trace.k);
    for (const auto& sq : removal_sequences(mu, run_counts(runs))) {
        check(sq.shape.empty(), "final removal sequence left boxes behind");
        trace.final_pool.push_back(assemble(mu, runs, sq, nullptr));
    }
    std::sort(trace.final_pool.begin(), trace.final_pool.end(), colex_less);
    check(std::adjacent_find(trace.final_pool.begin(), trace.final_pool.end()) ==
              trace.final_pool.end(),
          "duplicate tableau in the final pool");
    for (const auto& t : trace.final_pool)
        check(t.weight() == trace.final_pool.front().weight(),
              "final pool entry multisets differ");

    check(placed <= n, "tiers overshot the family size");
    std::size_t e = n - placed;
    check(trace.final_pool.size() >= e, "final pool too small to complete the family");

    TableauFamily base;
    for (const auto& tier : trace.tiers) base.insert(base.end(), tier.begin(), tier.end());

    // every e-subset of the pool completes base to a family of the minimal
    // type; index subsets in lexicographic order put the canonical completion
    // (the colex-least pool members) first
    std::vector<std::size_t> idx(e);
    for (std::size_t i = 0; i < e; ++i) idx[i] = i;
    while (true) {
        TableauFamily fam = base;
        for (std::size_t i : idx) fam.push_back(trace.final_pool[i]);
        std::sort(fam.begin(), fam.end(), colex_less);
        trace.segments.push_back(std::move(fam));
        if (e == 0) break;
        std::size_t i = e;
        while (i > 0 && idx[i - 1] == trace.final_pool.size() - e + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < e; ++j) idx[j] = idx[j - 1] + 1;
    }
    return trace;
}

Partition lexmin_type(const Partition& mu, unsigned n) {
    auto trace = lexmin_segments(mu, n);
    unsigned m = mu.size();
    std::map<unsigned, long long> cnt;
    unsigned long long cum = 0;
    for (unsigned j = 1; j <= m; ++j) {
        auto tier = static_cast<unsigned long long>(trace.tiers[j - 1].size());
        cum += tier;
        long long a = static_cast<long long>(n) - static_cast<long long>(cum);
        unsigned kj = trace.k[j - 1];
        cnt[kj + 1] += a;
        if (kj > 0) {
            unsigned long long num = tier * (m + 1 - j);
            check(num % kj == 0, "tier size not divisible by its entry bound");
            cnt[kj] += static_cast<long long>(num / kj) - a;
        }
    }
    std::vector<unsigned> parts;
    for (auto it = cnt.rbegin(); it != cnt.rend(); ++it) {
        check(it->second >= 0, "negative part count in the type formula");
        parts.insert(parts.end(), static_cast<std::size_t>(it->second), it->first);
    }
    Partition type{std::move(parts)};
    check(type.size() == m * n, "type formula lost boxes");
    return type;
}

Int lexmin_multiplicity_hook(unsigned m, unsigned n) {
    if (m < 2) throw std::invalid_argument("lexmin_multiplicity_hook: need m >= 2");
    if (n == 0) throw std::invalid_argument("lexmin_multiplicity_hook: n must be positive");
    auto trace = lexmin_segments(Partition({m - 1, 1}), n);
    std::size_t placed = 0;
    for (const auto& tier : trace.tiers) placed += tier.size();
    auto e = static_cast<unsigned>(n - placed);
    Int hook = binomial(m - 1, e);
    check(binomial(static_cast<unsigned>(trace.final_pool.size()), e) == hook,
          "pool completion count disagrees with the hook formula");
    check(Int(trace.segments.size()) == hook, "segment count disagrees with the hook formula");
    return hook;
}

unsigned lexmin_multiplicity_least_n(unsigned m) {
    if (m < 2) throw std::invalid_argument("lexmin_multiplicity_least_n: need m >= 2");
    Int target = binomial(m - 1, (m - 1) / 2);
    for (unsigned n = 1; n <= m * m + 2; ++n)
        if (lexmin_multiplicity_hook(m, n) == target) return n;
    throw std::logic_error("hook multiplicity never reached its maximum");
}

UniquenessPredicates uniqueness_predicates(const Partition& mu, const Partition& nu) {
    if (mu.empty() || nu.empty())
        throw std::invalid_argument("uniqueness_predicates: mu and nu must be nonempty");
    unsigned m = mu.size();
    unsigned n = nu.size();
    bool rect = mu.parts().front() == mu.parts().back();
    UniquenessPredicates u{};
    if (m == 1) {
        u.unique_max = u.unique_min = true;
    } else {
        u.unique_max = nu.length() == 1 || (rect && nu.length() == 2);
        Partition kap = kappa_of(mu, nu);
        u.unique_min = kap[0] == 1 || (rect && kap[0] == 2);
    }
    u.unique_maxweight_family = m == 1 || n == 1 || (rect && n == 2);
    return u;
}

TableauFamily lexmax_weight_family(const Partition& mu, unsigned n) {
    if (mu.empty()) throw std::invalid_argument("lexmax_weight_family: mu must be nonempty");
    if (n == 0) throw std::invalid_argument("lexmax_weight_family: n must be positive");
    std::vector<unsigned> base;
    for (unsigned p : mu.parts())
        for (unsigned c = 1; c <= p; ++c) base.push_back(c);
    // least row whose last box is removable: the end of the first block of
    // equal parts
    std::size_t e = 0;
    std::size_t pos = 0;
    while (e + 1 < mu.length() && mu.parts()[e] == mu.parts()[e + 1]) ++e;
    for (std::size_t r = 0; r <= e; ++r) pos += mu.parts()[r];
    pos -= 1;
    TableauFamily fam;
    for (unsigned c = 0; c < n; ++c) {
        auto entries = base;
        entries[pos] = mu.parts()[e] + c;
        fam.emplace_back(mu, std::move(entries));
        assert(is_conjugate_semistandard(fam.back()));
    }
    std::sort(fam.begin(), fam.end(), colex_less);
    return fam;
}

Partition rectangular_min_formula(unsigned a, unsigned b, unsigned n, unsigned c) {
    if (a == 0 || b == 0 || n == 0)
        throw std::invalid_argument("rectangular_min_formula: a, b, n must be positive");
    if (2 * c > n)
        throw std::invalid_argument("rectangular_min_formula: need 2c <= n");
    std::vector<unsigned> parts;
    parts.insert(parts.end(), c, a + 1);
    parts.insert(parts.end(), (2 * b - 2) * c + b * (n - 2 * c), a);
    if (a > 1) parts.insert(parts.end(), c, a - 1);
    return Partition(std::move(parts));
}

} // namespace plethysm
