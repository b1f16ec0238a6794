#include "plethysm/family.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace plethysm {

bool family_less(const TableauFamily& a, const TableauFamily& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto c = compare_colex(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

std::vector<unsigned> family_weight(const TableauFamily& f) {
    std::vector<unsigned> w;
    for (const Tableau& t : f) {
        auto tw = t.weight();
        if (tw.size() > w.size()) w.resize(tw.size(), 0);
        for (std::size_t j = 0; j < tw.size(); ++j) w[j] += tw[j];
    }
    return w;
}

std::vector<unsigned> tuple_weight(const FamilyTuple& t) {
    std::vector<unsigned> w;
    for (const TableauFamily& f : t.components) {
        auto fw = family_weight(f);
        if (fw.size() > w.size()) w.resize(fw.size(), 0);
        for (std::size_t j = 0; j < fw.size(); ++j) w[j] += fw[j];
    }
    return w;
}

namespace {

Partition type_of_weight(std::vector<unsigned> w) {
    while (!w.empty() && w.back() == 0) w.pop_back();
    for (std::size_t j = 1; j < w.size(); ++j)
        if (w[j] > w[j - 1]) throw std::invalid_argument("type undefined");
    return Partition(w).conjugate();
}

} // namespace

Partition tuple_type(const FamilyTuple& t) { return type_of_weight(tuple_weight(t)); }
Partition family_type(const TableauFamily& f) { return type_of_weight(family_weight(f)); }

namespace {

struct ColexCmp {
    bool operator()(const Tableau& a, const Tableau& b) const { return colex_less(a, b); }
};

// every single-entry decrement of t that is again conjugate-semistandard
void decrements(const Tableau& t, std::vector<Tableau>& out) {
    const Partition& sh = t.shape();
    auto entries = t.entries();
    std::size_t pos = 0;
    for (std::size_t i = 0; i < t.rows(); ++i) {
        for (std::size_t j = 0; j < sh[i]; ++j, ++pos) {
            if (entries[pos] <= 1) continue;
            --entries[pos];
            Tableau u(sh, entries);
            if (is_conjugate_semistandard(u)) out.push_back(std::move(u));
            ++entries[pos];
        }
    }
}

} // namespace

TableauFamily downward_closure(const Tableau& v) {
    std::set<Tableau, ColexCmp> seen;
    std::vector<Tableau> queue{v};
    seen.insert(v);
    while (!queue.empty()) {
        Tableau t = std::move(queue.back());
        queue.pop_back();
        std::vector<Tableau> down;
        decrements(t, down);
        for (Tableau& u : down)
            if (seen.insert(u).second) queue.push_back(std::move(u));
    }
    return TableauFamily(seen.begin(), seen.end());
}

bool is_closed(const TableauFamily& f) {
    for (const Tableau& t : f) {
        std::vector<Tableau> down;
        decrements(t, down);
        for (const Tableau& u : down)
            if (!std::binary_search(f.begin(), f.end(), u, ColexCmp{})) return false;
    }
    return true;
}

std::vector<TableauFamily> enumerate_closed_families(const Partition& mu, unsigned d) {
    std::vector<TableauFamily> out;
    if (d == 0) {
        out.emplace_back();
        return out;
    }
    unsigned bound = mu.empty() ? 0 : mu[0] + d - 1;
    std::vector<Tableau> ground = enumerate_cs(mu, bound);
    if (ground.size() < d) return out;

    // topological order for majorization: entry sum is a strict rank
    std::stable_sort(ground.begin(), ground.end(),
                     [](const Tableau& a, const Tableau& b) { return a.entry_sum() < b.entry_sum(); });
    std::size_t n = ground.size();
    std::vector<std::vector<std::size_t>> pred(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (ground[i].entry_sum() < ground[j].entry_sum() && majorizes(ground[i], ground[j]))
                pred[j].push_back(i);

    std::vector<char> in(n, 0);
    std::vector<std::size_t> chosen;
    auto dfs = [&](auto&& self, std::size_t pos, unsigned count) -> void {
        if (count == d) {
            TableauFamily f;
            f.reserve(d);
            for (std::size_t i : chosen) f.push_back(ground[i]);
            std::sort(f.begin(), f.end(), colex_less);
            assert(is_closed(f));
            out.push_back(std::move(f));
            return;
        }
        if (pos == n || count + (n - pos) < d) return;
        bool can_take = true;
        for (std::size_t p : pred[pos])
            if (!in[p]) { can_take = false; break; }
        if (can_take) {
            in[pos] = 1;
            chosen.push_back(pos);
            self(self, pos + 1, count + 1);
            chosen.pop_back();
            in[pos] = 0;
        }
        self(self, pos + 1, count);
    };
    dfs(dfs, 0, 0);
    std::sort(out.begin(), out.end(), family_less);
    return out;
}

std::vector<FamilyTuple> enumerate_closed_tuples(const Partition& mu, const Partition& kappa) {
    std::map<unsigned, std::vector<TableauFamily>> by_size;
    for (std::size_t i = 0; i < kappa.length(); ++i)
        if (!by_size.count(kappa[i]))
            by_size[kappa[i]] = enumerate_closed_families(mu, kappa[i]);

    std::vector<FamilyTuple> out;
    std::vector<std::size_t> idx(kappa.length(), 0);
    while (true) {
        FamilyTuple t{mu, kappa, {}};
        bool valid = true;
        for (std::size_t i = 0; i < kappa.length(); ++i) {
            const auto& pool = by_size[kappa[i]];
            if (pool.empty()) { valid = false; break; }
            t.components.push_back(pool[idx[i]]);
        }
        if (!valid) return out;
        out.push_back(std::move(t));
        std::size_t i = kappa.length();
        while (i > 0) {
            --i;
            if (++idx[i] < by_size[kappa[i]].size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
        if (kappa.length() == 0) return out;
    }
}

namespace {

using Weight = std::vector<unsigned>;

Weight add_weights(const Weight& a, const Weight& b) {
    Weight w(a);
    for (std::size_t j = 0; j < b.size(); ++j) w[j] += b[j];
    return w;
}

bool fits(const Weight& w, const Weight& cap) {
    for (std::size_t j = 0; j < w.size(); ++j)
        if (w[j] > cap[j]) return false;
    return true;
}

// all size-s subsets of the ground tableaux with weight <= cap, grouped by
// weight; subsets are index lists (ascending = colex order of members)
struct SubsetPool {
    std::map<Weight, std::vector<std::vector<std::size_t>>> by_weight;
    std::vector<std::vector<std::size_t>> all; // deterministic enumeration order
    std::vector<Weight> all_weights;
};

SubsetPool enumerate_subsets(const std::vector<Weight>& wts, unsigned s, const Weight& cap) {
    SubsetPool pool;
    std::size_t n = wts.size();
    std::vector<std::size_t> cur;
    Weight acc(cap.size(), 0);
    auto dfs = [&](auto&& self, std::size_t pos, unsigned left) -> void {
        if (left == 0) {
            pool.by_weight[acc].push_back(cur);
            pool.all.push_back(cur);
            pool.all_weights.push_back(acc);
            return;
        }
        if (pos == n || n - pos < left) return;
        Weight next = add_weights(acc, wts[pos]);
        if (fits(next, cap)) {
            std::swap(acc, next);
            cur.push_back(pos);
            self(self, pos + 1, left - 1);
            cur.pop_back();
            std::swap(acc, next);
        }
        self(self, pos + 1, left);
    };
    dfs(dfs, 0, s);
    return pool;
}

using WeightMap = std::map<Weight, Int>;

WeightMap convolve(const WeightMap& a, const WeightMap& b, const Weight& cap) {
    WeightMap out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Weight w = add_weights(wa, wb);
            if (fits(w, cap)) out[w] += ca * cb;
        }
    return out;
}

// run of c equal-size components drawing from the pool's weight buckets:
// ordered tuples and multisets, tracked by total weight
WeightMap run_ordered(const WeightMap& bucket, unsigned c, const Weight& cap) {
    WeightMap acc{{Weight(cap.size(), 0), 1}};
    for (unsigned i = 0; i < c; ++i) acc = convolve(acc, bucket, cap);
    return acc;
}

WeightMap run_multisets(const WeightMap& bucket, unsigned c, const Weight& cap) {
    // dp[t] = weight map after the buckets processed so far with t picks
    std::vector<WeightMap> dp(c + 1);
    dp[0][Weight(cap.size(), 0)] = 1;
    for (const auto& [w, count] : bucket) {
        std::vector<WeightMap> next(c + 1);
        for (unsigned t = 0; t <= c; ++t) {
            for (const auto& [aw, ac] : dp[t]) {
                Weight step = aw;
                Int ways{1};
                for (unsigned extra = 0; t + extra <= c; ++extra) {
                    if (extra > 0) {
                        // multisets of size extra from `count` families
                        ways = ways * (count + extra - 1) / extra;
                        step = add_weights(step, w);
                        if (!fits(step, cap)) break;
                    }
                    next[t + extra][step] += ac * ways;
                }
            }
        }
        dp = std::move(next);
    }
    return dp[c];
}

struct RunSpec {
    unsigned size;  // kappa part value
    unsigned count; // multiplicity of that part
};

std::vector<RunSpec> runs_of(const Partition& kappa) {
    std::vector<RunSpec> runs;
    for (std::size_t i = 0; i < kappa.length(); ++i) {
        if (!runs.empty() && runs.back().size == kappa[i]) ++runs.back().count;
        else runs.push_back({kappa[i], 1});
    }
    return runs;
}

Weight target_weight(const Partition& mu, const Partition& kappa, const Partition& lambda) {
    if (lambda.size() != mu.size() * kappa.size())
        throw std::invalid_argument("size mismatch: |lambda| != |mu| * |kappa|");
    Partition conj = lambda.conjugate();
    Weight w(conj.parts().begin(), conj.parts().end());
    return w;
}

} // namespace

TupleCounts count_tuples_of_type(const Partition& mu, const Partition& kappa,
                                 const Partition& lambda) {
    Weight cap = target_weight(mu, kappa, lambda);
    if (kappa.empty()) {
        Int one = cap.empty() ? 1 : 0;
        return {one, one};
    }
    std::vector<Tableau> ground = enumerate_cs(mu, static_cast<unsigned>(cap.size()));
    std::vector<Weight> wts;
    wts.reserve(ground.size());
    for (const Tableau& t : ground) {
        Weight w = t.weight();
        w.resize(cap.size(), 0);
        wts.push_back(std::move(w));
    }

    WeightMap ordered{{Weight(cap.size(), 0), 1}};
    WeightMap sym = ordered;
    for (const RunSpec& run : runs_of(kappa)) {
        SubsetPool pool = enumerate_subsets(wts, run.size, cap);
        WeightMap bucket;
        for (const auto& [w, subsets] : pool.by_weight) bucket[w] = Int(subsets.size());
        ordered = convolve(ordered, run_ordered(bucket, run.count, cap), cap);
        sym = convolve(sym, run_multisets(bucket, run.count, cap), cap);
    }
    auto it_o = ordered.find(cap);
    auto it_s = sym.find(cap);
    return {it_o == ordered.end() ? Int(0) : it_o->second,
            it_s == sym.end() ? Int(0) : it_s->second};
}

std::vector<FamilyTuple> enumerate_tuples_of_type(const Partition& mu, const Partition& kappa,
                                                  const Partition& lambda) {
    Weight cap = target_weight(mu, kappa, lambda);
    std::vector<FamilyTuple> out;
    if (kappa.empty()) {
        if (cap.empty()) out.push_back({mu, kappa, {}});
        return out;
    }
    std::vector<Tableau> ground = enumerate_cs(mu, static_cast<unsigned>(cap.size()));
    std::vector<Weight> wts;
    wts.reserve(ground.size());
    for (const Tableau& t : ground) {
        Weight w = t.weight();
        w.resize(cap.size(), 0);
        wts.push_back(std::move(w));
    }

    std::vector<RunSpec> runs = runs_of(kappa);
    std::vector<SubsetPool> pools;
    pools.reserve(runs.size());
    for (const RunSpec& run : runs) pools.push_back(enumerate_subsets(wts, run.size, cap));

    std::vector<std::vector<std::size_t>> chosen; // subset index per component
    Weight acc(cap.size(), 0);
    std::vector<std::size_t> pick;
    auto dfs = [&](auto&& self, std::size_t run_idx, unsigned within, std::size_t min_subset) -> void {
        if (run_idx == runs.size()) {
            if (acc == cap) {
                FamilyTuple t{mu, kappa, {}};
                for (std::size_t r = 0, p = 0; r < runs.size(); ++r)
                    for (unsigned i = 0; i < runs[r].count; ++i, ++p) {
                        TableauFamily f;
                        for (std::size_t g : pools[r].all[pick[p]]) f.push_back(ground[g]);
                        std::sort(f.begin(), f.end(), colex_less);
                        t.components.push_back(std::move(f));
                    }
                out.push_back(std::move(t));
            }
            return;
        }
        if (within == runs[run_idx].count) {
            self(self, run_idx + 1, 0, 0);
            return;
        }
        const SubsetPool& pool = pools[run_idx];
        for (std::size_t s = min_subset; s < pool.all.size(); ++s) {
            Weight next = add_weights(acc, pool.all_weights[s]);
            if (!fits(next, cap)) continue;
            std::swap(acc, next);
            pick.push_back(s);
            self(self, run_idx, within + 1, s); // non-decreasing within the run
            pick.pop_back();
            std::swap(acc, next);
        }
    };
    dfs(dfs, 0, 0, 0);
    return out;
}

} // namespace plethysm
