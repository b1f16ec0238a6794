#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "plethysm/partition.hpp"

namespace plethysm {

// Four-way outcome of a pre-order comparison.  Incomparability is a
// legitimate result, not an error.
enum class Relation { less, greater, equivalent, incomparable };

// Filling of a partition shape by positive integers, stored row-major.
// Equality is structural.
class Tableau {
public:
    Tableau(Partition shape, std::vector<unsigned> entries);

    // "12/1" (entries are single digits) or "1 2/1" (space-separated; used
    // whenever some entry is >= 10).  A row with no spaces is read one digit
    // per entry, so bare multi-digit rows only round-trip in the
    // space-separated form.
    static Tableau parse(const std::string& text);

    const Partition& shape() const { return shape_; }
    const std::vector<unsigned>& entries() const { return entries_; }
    unsigned at(std::size_t row, std::size_t col) const;
    std::size_t rows() const { return shape_.length(); }
    std::size_t row_length(std::size_t row) const { return shape_[row]; }

    unsigned max_entry() const;
    unsigned entry_sum() const;
    // entries of column j, sorted ascending (a multiset)
    std::vector<unsigned> column(std::size_t j) const;
    // all columns at once, index j = column j
    std::vector<std::vector<unsigned>> columns() const;
    // entry counts: component j-1 = number of entries equal to j
    std::vector<unsigned> weight() const;
    // entries in row-reading order but each row sorted ascending
    std::vector<unsigned> sorted_row(std::size_t row) const;

    std::string str() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    Partition shape_;
    std::vector<unsigned> entries_;
    std::vector<std::size_t> row_offset_;
};

// rows strictly increasing left-to-right, columns weakly increasing
// top-to-bottom
bool is_conjugate_semistandard(const Tableau& t);

// CS(mu, k): all conjugate-semistandard mu-tableaux with entries in
// {1,...,k}, sorted by compare_colex.
std::vector<Tableau> enumerate_cs(const Partition& mu, unsigned k);

// |CS(mu,k)| by the hook content formula on the conjugate shape.
Int count_cs(const Partition& mu, unsigned k);

// Total order: rightmost column whose entry multisets differ, compared
// colexicographically.  Tableaux of equal column multisets everywhere but
// different fillings (impossible when both are conjugate-semistandard) fall
// back to row-reading-word comparison.  Throws on shape mismatch.
std::strong_ordering compare_colex(const Tableau& u, const Tableau& v);

// convenience predicate for sorting containers of same-shape tableaux
inline bool colex_less(const Tableau& u, const Tableau& v) {
    return compare_colex(u, v) < 0;
}

// u majorized by v: for every row, the sorted entries of v dominate the
// sorted entries of u entrywise.
bool majorizes(const Tableau& u, const Tableau& v);

// Pre-order on columnar tabloids ||u||, ||v||: rightmost column whose
// multisets differ, compared entrywise after sorting (for a totally ordered
// alphabet the multiset-matching condition reduces to this).
Relation compare_col_preorder(const Tableau& u, const Tableau& v);

// Colexicographic comparison of the full entry multisets.
Relation compare_entry_preorder(const Tableau& u, const Tableau& v);

// weight as a composition: component j-1 counts entries equal to j
inline std::vector<unsigned> tableau_weight(const Tableau& t) {
    return t.weight();
}

} // namespace plethysm
