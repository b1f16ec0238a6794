#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace plethysm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Weakly decreasing sequence of positive parts; the empty sequence is the
// partition of 0.  Immutable after construction.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);

    // Accepts "3,3,2,2,1,1" and "3^2,2^2,1^2" (mixed forms too), optionally
    // wrapped in one pair of parentheses; "()" and "" denote the empty
    // partition.  Whitespace is ignored.  Throws std::invalid_argument naming
    // the offending token.
    static Partition parse(const std::string& text);

    const std::vector<unsigned>& parts() const { return parts_; }
    // part i (0-based), 0 beyond the last part
    unsigned operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    unsigned size() const { return sum_; }            // sum of parts
    std::size_t length() const { return parts_.size(); } // number of parts
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;

    // exponent form, e.g. "3^2,2^3,1^3"; "()" for the empty partition
    std::string str() const;
    // one token per part, e.g. "3,3,2,2,2,1,1,1"
    std::string str_flat() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    // lexicographic on the part sequences; used for deterministic ordering
    std::strong_ordering operator<=>(const Partition& o) const;

private:
    std::vector<unsigned> parts_;
    unsigned sum_ = 0;
};

// a dominates b: every leading partial sum of a is >= that of b.
// Throws std::invalid_argument("incomparable sizes") when sizes differ:
// silent false would mask caller bugs.
bool dominates(const Partition& a, const Partition& b);

// multiset union of the parts
Partition join(const Partition& a, const Partition& b);

// All partitions of n (with optional bounds on part count and part size) in
// decreasing lexicographic order.
std::vector<Partition> enumerate_partitions(unsigned n,
                                            std::optional<unsigned> max_parts = std::nullopt,
                                            std::optional<unsigned> max_part = std::nullopt);

// Number of partitions of d with at most `rows` parts, each at most `cols`:
// the coefficient of q^d in the Gaussian binomial [rows+cols choose rows]_q.
Int count_partitions_in_box(unsigned d, unsigned rows, unsigned cols);

// Antichain filters over a set of equal-sized partitions (duplicates are
// collapsed first).  Results sorted decreasing-lexicographically.
std::vector<Partition> dominance_minimal(const std::vector<Partition>& set);
std::vector<Partition> dominance_maximal(const std::vector<Partition>& set);

Int binomial(unsigned n, unsigned k);
Int factorial(unsigned n);

} // namespace plethysm
