#pragma once

#include <utility>
#include <vector>

#include "plethysm/family.hpp"
#include "plethysm/partition.hpp"
#include "plethysm/tableau.hpp"

namespace plethysm {

// the shape governing family tuples: conjugate of nu when |mu| is even,
// nu itself when |mu| is odd
Partition kappa_of(const Partition& mu, const Partition& nu);

// dominance-minimal constituents of s_nu composed with s_mu: the minimal
// types over all tuples of closed families of shape mu^kappa
std::vector<Partition> minimal_constituents(const Partition& mu, const Partition& nu);

// dominance-maximal constituents, computed purely by the sign-twist
// conjugation reduction to the minimal case
std::vector<Partition> maximal_constituents(const Partition& mu, const Partition& nu);

// closed formula for the lexicographically greatest constituent; its
// multiplicity is always 1
std::pair<Partition, Int> lex_greatest(const Partition& mu, const Partition& nu);

// lexicographically least constituent: join of the single-family values
// lexmin_type(mu, kappa_i) over the parts of kappa
Partition lex_least(const Partition& mu, const Partition& nu);

// full ledger of the initial-segment algorithm for families of shape mu^n
struct SegmentTrace {
    std::vector<unsigned> k;            // k_1..k_m, weakly decreasing
    std::vector<TableauFamily> tiers;   // tableaux first reachable at each step
    TableauFamily final_pool;           // completions sharing one entry multiset
    std::vector<TableauFamily> segments; // all minimal-type families; [0] canonical
};

SegmentTrace lexmin_segments(const Partition& mu, unsigned n);

// type shared by every family the trace emits, via the closed formula on
// tier sizes (not by re-deriving weights)
Partition lexmin_type(const Partition& mu, unsigned n);

// multiplicity of the lexicographically least constituent for mu = (m-1,1):
// binomial(m-1, e) with e the final-pool draw size
Int lexmin_multiplicity_hook(unsigned m, unsigned n);

// least n at which the hook multiplicity reaches its maximum value
// binomial(m-1, floor((m-1)/2))
unsigned lexmin_multiplicity_least_n(unsigned m);

struct UniquenessPredicates {
    bool unique_max;
    bool unique_min;
    bool unique_maxweight_family;
};

// closed-form uniqueness tests for |maximal| = 1, |minimal| = 1, and for the
// maximal-weight family of shape mu^n being unique
UniquenessPredicates uniqueness_predicates(const Partition& mu, const Partition& nu);

// the greatest-weight family built from the minimum tableau by growing the
// last box of the first removable row; its weight is lexicographically
// greatest among families of shape mu^n
TableauFamily lexmax_weight_family(const Partition& mu, unsigned n);

// unique minimal constituent for rectangular mu = (a^b) with
// kappa = (2^c, 1^{n-2c}): ((a+1)^c, a^{(2b-2)c + b(n-2c)}, (a-1)^c)
Partition rectangular_min_formula(unsigned a, unsigned b, unsigned n, unsigned c);

} // namespace plethysm
