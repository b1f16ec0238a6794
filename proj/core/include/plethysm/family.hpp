#pragma once

#include <vector>

#include "plethysm/partition.hpp"
#include "plethysm/tableau.hpp"

namespace plethysm {

// set of distinct same-shape tableaux, kept sorted by compare_colex
using TableauFamily = std::vector<Tableau>;

// shape mu^kappa: component i holds exactly kappa_i tableaux
struct FamilyTuple {
    Partition mu;
    Partition kappa;
    std::vector<TableauFamily> components;
};

struct TupleCounts {
    Int ordered;     // tuples counted with component order significant
    Int symmetrized; // up to permuting components of equal size
};

// lexicographic on members under compare_colex; usable once both are sorted
bool family_less(const TableauFamily& a, const TableauFamily& b);

// componentwise sum of member weights over every component
std::vector<unsigned> tuple_weight(const FamilyTuple& t);
std::vector<unsigned> family_weight(const TableauFamily& f);

// conjugate of the weight; the type is only defined when the weight is
// weakly decreasing, otherwise throws "type undefined"
Partition tuple_type(const FamilyTuple& t);
Partition family_type(const TableauFamily& f);

// all conjugate-semistandard u with u majorized by v, found by breadth-first
// single-entry decrements
TableauFamily downward_closure(const Tableau& v);

// order ideal test under majorization, via single-entry decrements
bool is_closed(const TableauFamily& f);

// all order ideals of exactly d tableaux in the majorization poset of
// conjugate-semistandard mu-tableaux; entries never exceed mu_1 + d - 1
// (an entry e needs a decrement chain of e - mu_1 + 1 members below it)
std::vector<TableauFamily> enumerate_closed_families(const Partition& mu, unsigned d);

// Cartesian product of enumerate_closed_families(mu, kappa_i) over i
std::vector<FamilyTuple> enumerate_closed_tuples(const Partition& mu, const Partition& kappa);

// tuples of shape mu^kappa (members arbitrary, not only closed) whose weight
// is conjugate(lambda), counted ordered and up to permuting equal-size
// components
TupleCounts count_tuples_of_type(const Partition& mu, const Partition& kappa,
                                 const Partition& lambda);

// the same tuples listed explicitly, one representative per equivalence
// class under permuting equal-size components (components non-decreasing in
// family_less within each run of equal kappa parts)
std::vector<FamilyTuple> enumerate_tuples_of_type(const Partition& mu, const Partition& kappa,
                                                  const Partition& lambda);

} // namespace plethysm
