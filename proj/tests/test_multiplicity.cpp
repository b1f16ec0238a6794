#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "plethysm/extrema.hpp"
#include "plethysm/multiplicity.hpp"
#include "plethysm/oracle.hpp"

using namespace plethysm;

namespace {

Partition P(const char* s) { return Partition::parse(s); }

} // namespace

TEST_CASE("flagship sandwich: lower = exact = upper = 2") {
    auto a = bounds(P("2,1"), P("4"), P("3,3,2,2,1,1"), true);
    CHECK(a.lower == 2);
    CHECK(a.upper_ordered == 2);
    CHECK(a.upper_symmetrized == 2);
    REQUIRE(a.exact.has_value());
    CHECK(*a.exact == 2);

    auto b = bounds(P("2,1"), P("4,1"), P("3,3,2,2,2,1,1,1"), true);
    CHECK(b.lower == 2);
    CHECK(b.upper_ordered == 2);
    CHECK(b.upper_symmetrized == 2);
    REQUIRE(b.exact.has_value());
    CHECK(*b.exact == 2);

    CHECK(!bounds(P("2,1"), P("4"), P("3,3,2,2,1,1")).exact.has_value());
}

TEST_CASE("hook shape least constituent: bounds against the closed formula") {
    // mu = (m-1,1) with kappa = (n); the chain bound misses the true value
    // exactly at m = 4, n >= 7 where the three completing families form a
    // two-level order
    for (unsigned n = 4; n <= 8; ++n) {
        Partition mu = P("2,1");
        Partition nu({n});
        Partition least = lex_least(mu, nu);
        Int hook = lexmin_multiplicity_hook(3, n);
        CHECK(hook == (n == 4 ? 2 : 1));
        auto r = bounds(mu, nu, least, true);
        CHECK(r.lower == hook);
        CHECK(r.upper_symmetrized == hook);
        CHECK(*r.exact == hook);
    }
    for (unsigned n = 4; n <= 8; ++n) {
        Partition mu = P("3,1");
        Partition nu(std::vector<unsigned>(n, 1)); // |mu| even, kappa = nu' = (n)
        Partition least = lex_least(mu, nu);
        Int hook = lexmin_multiplicity_hook(4, n);
        CHECK(hook == (n >= 7 ? 3 : 1));
        auto r = bounds(mu, nu, least, true);
        CHECK(r.lower == (n >= 7 ? 2 : 1));
        CHECK(r.upper_symmetrized == hook);
        CHECK(*r.exact == hook);
    }
}

TEST_CASE("sandwich over the full oracle support, mn <= 10") {
    for (unsigned ms = 1; ms <= 5; ++ms)
        for (unsigned ns = 1; ms * ns <= 10; ++ns)
            for (const auto& mu : enumerate_partitions(ms))
                for (const auto& nu : enumerate_partitions(ns)) {
                    auto dec = full_decomposition(nu, mu).multiplicities;
                    for (const auto& lam : enumerate_partitions(ms * ns)) {
                        auto counts = upper_bound(mu, nu, lam);
                        CHECK(counts.symmetrized <= counts.ordered);
                        auto it = dec.find(lam);
                        Int exact = it == dec.end() ? Int{0} : it->second;
                        CHECK(exact <= counts.symmetrized);
                        if (exact > 0) {
                            Int low = lower_bound(mu, nu, lam);
                            CHECK(low >= 1);
                            CHECK(low <= exact);
                        }
                    }
                }
}

TEST_CASE("lower bound boundary behavior") {
    // impossible type: no tuple has twelve equal entries
    CHECK(lower_bound(P("2,1"), P("4"), Partition(std::vector<unsigned>(12, 1))) == 0);
    CHECK(upper_bound(P("2,1"), P("4"), Partition(std::vector<unsigned>(12, 1))).ordered == 0);
    // the bound is only meaningful on the support: here a tuple exists but
    // the coefficient vanishes, so callers must pair it with the upper bound
    CHECK(lower_bound(P("2"), P("2"), P("3,1")) == 1);
    CHECK(upper_bound(P("2"), P("2"), P("3,1")).symmetrized == 1);
    CHECK(plethysm_coefficient(P("2"), P("2"), P("3,1")) == 0);
    CHECK_THROWS_AS(bounds(P("2,1"), P("4"), P("3,3")), std::invalid_argument);
}

TEST_CASE("ordered versus symmetrized counts") {
    auto c = upper_bound(P("2"), P("2"), P("3,1"));
    CHECK(c.ordered == 2); // the two families swap across the equal kappa parts
    CHECK(c.symmetrized == 1);
    auto a = upper_bound(P("2,1"), P("4"), P("3,3,2,2,1,1"));
    CHECK(a.ordered == 2);
    CHECK(a.symmetrized == 2);
}
