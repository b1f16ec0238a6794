#include "plethysm/multiplicity.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "plethysm/extrema.hpp"
#include "plethysm/oracle.hpp"

namespace plethysm {

namespace {

std::vector<Tableau> flatten(const FamilyTuple& t) {
    std::vector<Tableau> all;
    for (const auto& comp : t.components) all.insert(all.end(), comp.begin(), comp.end());
    return all;
}

// edge a -> b: every tableau of a lies strictly below some tableau of b in
// the column pre-order
bool strictly_below(const std::vector<Tableau>& a, const std::vector<Tableau>& b) {
    for (const Tableau& u : a) {
        bool covered = false;
        for (const Tableau& s : b)
            if (compare_col_preorder(u, s) == Relation::less) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

} // namespace

TupleCounts upper_bound(const Partition& mu, const Partition& nu, const Partition& lambda) {
    return count_tuples_of_type(mu, kappa_of(mu, nu), lambda);
}

Int lower_bound(const Partition& mu, const Partition& nu, const Partition& lambda) {
    Partition kap = kappa_of(mu, nu);
    if (count_tuples_of_type(mu, kap, lambda).ordered == 0) return 0;
    auto mins = minimal_constituents(mu, nu);
    if (std::find(mins.begin(), mins.end(), lambda) == mins.end()) return 1;
    auto tuples = enumerate_tuples_of_type(mu, kap, lambda);

    std::vector<std::vector<Tableau>> flat;
    flat.reserve(tuples.size());
    for (const auto& t : tuples) flat.push_back(flatten(t));

    std::size_t n = flat.size();
    std::vector<std::vector<std::size_t>> succ(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && strictly_below(flat[i], flat[j])) succ[i].push_back(j);

    // longest path, counted in nodes; the strict pre-order makes the digraph
    // acyclic, so a cycle means the comparison is broken
    enum class Mark { untouched, on_stack, done };
    std::vector<Mark> mark(n, Mark::untouched);
    std::vector<Int> len(n);
    auto dfs = [&](auto&& self, std::size_t v) -> Int {
        if (mark[v] == Mark::on_stack)
            throw std::logic_error("column pre-order digraph has a cycle");
        if (mark[v] == Mark::done) return len[v];
        mark[v] = Mark::on_stack;
        Int best = 0;
        for (std::size_t w : succ[v]) best = std::max(best, self(self, w));
        mark[v] = Mark::done;
        len[v] = best + 1;
        return len[v];
    };
    Int best = 0;
    for (std::size_t v = 0; v < n; ++v) best = std::max(best, dfs(dfs, v));
    return best;
}

MultiplicityBounds bounds(const Partition& mu, const Partition& nu, const Partition& lambda,
                          bool with_oracle) {
    MultiplicityBounds b;
    auto counts = upper_bound(mu, nu, lambda);
    b.upper_ordered = counts.ordered;
    b.upper_symmetrized = counts.symmetrized;
    b.lower = lower_bound(mu, nu, lambda);
    if (b.upper_symmetrized > b.upper_ordered)
        throw std::logic_error("symmetrized tuple count exceeds the ordered count");
    if (with_oracle) {
        b.exact = plethysm_coefficient(nu, mu, lambda);
        if (*b.exact > b.upper_symmetrized)
            throw std::logic_error("multiplicity exceeds the tuple upper bound");
    }
    return b;
}

} // namespace plethysm
