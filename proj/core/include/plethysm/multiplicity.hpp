#pragma once

#include <optional>

#include "plethysm/family.hpp"
#include "plethysm/partition.hpp"

namespace plethysm {

struct MultiplicityBounds {
    Int lower;
    Int upper_ordered;
    Int upper_symmetrized;
    std::optional<Int> exact; // filled only when the oracle is invoked
};

// tuples of shape mu^kappa and type lambda, ordered and up to permuting
// equal-size components; the symmetrized count bounds the multiplicity of
// s_lambda in s_nu(s_mu) from above
TupleCounts upper_bound(const Partition& mu, const Partition& nu, const Partition& lambda);

// Chain lower bound.  0 when no tuple of the type exists.  At a
// dominance-minimal lambda, the longest path in the strict column pre-order
// digraph on canonical tuples (a proven lower bound there).  Otherwise 1,
// which is heuristic: a tuple of type lambda only certifies a constituent
// dominated by lambda, not lambda itself.
Int lower_bound(const Partition& mu, const Partition& nu, const Partition& lambda);

MultiplicityBounds bounds(const Partition& mu, const Partition& nu, const Partition& lambda,
                          bool with_oracle = false);

} // namespace plethysm
