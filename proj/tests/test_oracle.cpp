#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <vector>

#include "plethysm/oracle.hpp"

using namespace plethysm;

namespace {

Partition P(const char* s) { return Partition::parse(s); }

Int schur_inner(const PlethysmExpansion& a, const PlethysmExpansion& b) {
    Int r = 0;
    for (const auto& [lam, c] : a.multiplicities) {
        auto it = b.multiplicities.find(lam);
        if (it != b.multiplicities.end()) r += c * it->second;
    }
    return r;
}

// k-regular multigraphs on n unlabeled vertices, loops allowed and counting
// 2 toward the degree; independent of all library code
unsigned count_regular_multigraphs(unsigned n, unsigned k) {
    std::vector<std::vector<unsigned>> mats;
    std::vector<std::vector<unsigned>> a(n, std::vector<unsigned>(n, 0));
    auto degree = [&](unsigned v) {
        unsigned d = a[v][v];
        for (unsigned u = 0; u < n; ++u)
            if (u != v) d += a[v][u];
        return d;
    };
    auto rec = [&](auto&& self, unsigned i, unsigned j) -> void {
        if (i == n) {
            for (unsigned v = 0; v < n; ++v)
                if (degree(v) != k) return;
            std::vector<unsigned> flat;
            for (const auto& row : a) flat.insert(flat.end(), row.begin(), row.end());
            mats.push_back(flat);
            return;
        }
        unsigned ni = j + 1 == n ? i + 1 : i;
        unsigned nj = j + 1 == n ? ni : j + 1;
        unsigned cap = i == j ? k / 2 : k;
        unsigned base = degree(i); // a[i][j] is zero here
        for (unsigned v = 0; v <= cap; ++v) {
            unsigned add = i == j ? 2 * v : v;
            if (base + add > k) break;
            a[i][j] = a[j][i] = i == j ? 2 * v : v;
            self(self, ni, nj);
        }
        a[i][j] = a[j][i] = 0;
    };
    rec(rec, 0, 0);

    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::vector<unsigned>> canon;
    for (const auto& flat : mats) {
        std::vector<unsigned> best;
        auto p = perm;
        do {
            std::vector<unsigned> img(n * n);
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j) img[i * n + j] = flat[p[i] * n + p[j]];
            if (best.empty() || img < best) best = img;
        } while (std::next_permutation(p.begin(), p.end()));
        canon.insert(best);
    }
    return static_cast<unsigned>(canon.size());
}

} // namespace

TEST_CASE("characters by Murnaghan-Nakayama match the S4 table") {
    CHECK(character(P("4"), P("2,1,1")) == 1);
    CHECK(character(P("3,1"), P("1,1,1,1")) == 3);
    CHECK(character(P("3,1"), P("2,1,1")) == 1);
    CHECK(character(P("3,1"), P("2,2")) == -1);
    CHECK(character(P("3,1"), P("3,1")) == 0);
    CHECK(character(P("3,1"), P("4")) == -1);
    CHECK(character(P("2,2"), P("2,2")) == 2);
    CHECK(character(P("2,2"), P("3,1")) == -1);
    CHECK(character(P("1,1,1,1"), P("4")) == -1);
    CHECK(character(P("2,1"), P("3")) == -1);
    CHECK(character(Partition(), Partition()) == 1);
    CHECK_THROWS_AS(character(P("3"), P("2")), std::invalid_argument);
}

TEST_CASE("trivial and sign characters, degrees") {
    for (unsigned n = 1; n <= 7; ++n)
        for (const auto& rho : enumerate_partitions(n)) {
            CHECK(character(Partition({n}), rho) == 1);
            Int sign = (n - rho.length()) % 2 == 0 ? 1 : -1;
            CHECK(character(Partition(std::vector<unsigned>(n, 1)), rho) == sign);
        }
    for (unsigned n = 1; n <= 8; ++n) {
        Int sq = 0;
        for (const auto& lam : enumerate_partitions(n)) {
            CHECK(character(lam, Partition(std::vector<unsigned>(n, 1))) == syt_count(lam));
            sq += syt_count(lam) * syt_count(lam);
        }
        CHECK(sq == factorial(n)); // sum of squares of degrees
    }
}

TEST_CASE("centralizer orders") {
    CHECK(centralizer_order(P("2,2")) == 8);
    CHECK(centralizer_order(P("3,1")) == 3);
    CHECK(centralizer_order(P("1,1,1,1")) == 24);
    CHECK(centralizer_order(Partition()) == 1);
    for (unsigned n = 1; n <= 8; ++n) {
        Int total = 0;
        for (const auto& rho : enumerate_partitions(n)) total += factorial(n) / centralizer_order(rho);
        CHECK(total == factorial(n)); // class sizes partition the group
    }
}

TEST_CASE("standard tableau counts") {
    CHECK(syt_count(P("2,2")) == 2);
    CHECK(syt_count(P("3,1")) == 3);
    CHECK(syt_count(P("2,1")) == 2);
    CHECK(syt_count(P("7")) == 1);
    CHECK(syt_count(P("4,3,2,1")) == 768);
    CHECK(syt_count(Partition()) == 1);
}

TEST_CASE("schur to power sum expansion and orthonormality") {
    auto s2 = schur_to_powersum(P("2"));
    CHECK(s2.at(P("1,1")) == Rat(1, 2));
    CHECK(s2.at(P("2")) == Rat(1, 2));
    auto s11 = schur_to_powersum(P("1,1"));
    CHECK(s11.at(P("2")) == Rat(-1, 2));
    // <p_rho, p_sigma> = delta * z_rho makes the Schur basis orthonormal
    for (unsigned n = 1; n <= 6; ++n) {
        auto lams = enumerate_partitions(n);
        for (const auto& a : lams)
            for (const auto& b : lams) {
                auto pa = schur_to_powersum(a);
                auto pb = schur_to_powersum(b);
                Rat inner = 0;
                for (const auto& [rho, ca] : pa) {
                    auto it = pb.find(rho);
                    if (it != pb.end()) inner += ca * it->second * Rat(centralizer_order(rho));
                }
                CHECK(inner == (a == b ? Rat(1) : Rat(0)));
            }
    }
}

TEST_CASE("small plethysms in the schur basis") {
    auto d22 = full_decomposition(P("2"), P("2"));
    CHECK(d22.multiplicities ==
          std::map<Partition, Int>{{P("4"), 1}, {P("2,2"), 1}});
    CHECK(full_decomposition(P("2"), P("1,1")).multiplicities ==
          std::map<Partition, Int>{{P("2,2"), 1}, {P("1,1,1,1"), 1}});
    CHECK(full_decomposition(P("1,1"), P("2")).multiplicities ==
          std::map<Partition, Int>{{P("3,1"), 1}});
    CHECK(full_decomposition(P("1,1"), P("1,1")).multiplicities ==
          std::map<Partition, Int>{{P("2,1,1"), 1}});
    CHECK(full_decomposition(P("3"), P("2")).multiplicities ==
          std::map<Partition, Int>{{P("6"), 1}, {P("4,2"), 1}, {P("2,2,2"), 1}});
    CHECK(full_decomposition(P("2"), P("3")).multiplicities ==
          std::map<Partition, Int>{{P("6"), 1}, {P("4,2"), 1}});
    // identity plethysms
    CHECK(full_decomposition(P("1"), P("3,1")).multiplicities ==
          std::map<Partition, Int>{{P("3,1"), 1}});
    CHECK(full_decomposition(P("2,1"), P("1")).multiplicities ==
          std::map<Partition, Int>{{P("2,1"), 1}});
}

TEST_CASE("single coefficients agree with full decompositions") {
    for (auto [nu, mu] : {std::pair{P("3"), P("2,1")}, {P("2,1"), P("2,1")}, {P("4"), P("3")}}) {
        auto d = full_decomposition(nu, mu);
        for (const auto& lam : enumerate_partitions(nu.size() * mu.size())) {
            auto it = d.multiplicities.find(lam);
            Int want = it == d.multiplicities.end() ? Int{0} : it->second;
            CHECK(plethysm_coefficient(nu, mu, lam) == want);
        }
    }
    CHECK(plethysm_coefficient(P("2"), P("2"), P("3,1")) == 0);
    CHECK_THROWS_AS(plethysm_coefficient(P("2"), P("2"), P("3")), std::invalid_argument);
}

TEST_CASE("cayley-sylvester two-row multiplicities") {
    for (unsigned m = 1; m <= 4; ++m)
        for (unsigned n = 1; n <= 4; ++n)
            for (unsigned d = 0; 2 * d <= m * n; ++d) {
                Int want = count_partitions_in_box(d, n, m);
                want -= d == 0 ? 0 : count_partitions_in_box(d - 1, n, m);
                std::vector<unsigned> parts{m * n - d};
                if (d > 0) parts.push_back(d);
                CHECK(plethysm_coefficient(Partition({n}), Partition({m}), Partition(parts)) ==
                      want);
            }
}

TEST_CASE("foulkes positivity up to m+n = 8") {
    for (unsigned m = 1; m <= 4; ++m)
        for (unsigned n = m; m + n <= 8; ++n) {
            auto big = full_decomposition(Partition({n}), Partition({m})).multiplicities;
            auto small = full_decomposition(Partition({m}), Partition({n})).multiplicities;
            for (const auto& [lam, c] : small) {
                auto it = big.find(lam);
                Int have = it == big.end() ? Int{0} : it->second;
                CHECK(have >= c);
            }
        }
}

TEST_CASE("newell degree-raising identities") {
    for (unsigned m = 1; m <= 3; ++m)
        for (unsigned n = 1; n <= 3; ++n) {
            Partition row({n});
            Partition col(std::vector<unsigned>(n, 1));
            for (const auto& lam : enumerate_partitions(m * n, n)) {
                std::vector<unsigned> raised;
                for (unsigned i = 0; i < n; ++i) raised.push_back(lam[i] + 1);
                Partition lifted{std::move(raised)};
                CHECK(plethysm_coefficient(row, Partition({m}), lam) ==
                      plethysm_coefficient(col, Partition({m + 1}), lifted));
                CHECK(plethysm_coefficient(col, Partition({m}), lam) ==
                      plethysm_coefficient(row, Partition({m + 1}), lifted));
            }
        }
}

TEST_CASE("read regular-graph counts") {
    CHECK(count_regular_multigraphs(4, 2) == 5);
    CHECK(count_regular_multigraphs(5, 2) == 7);
    for (auto [n, k] : {std::pair{4u, 2u}, {5u, 2u}, {4u, 3u}}) {
        auto lhs = full_decomposition(Partition({n}), Partition({k}));
        auto rhs = full_decomposition(Partition({n * k / 2}), P("2"));
        CHECK(schur_inner(lhs, rhs) == count_regular_multigraphs(n, k));
    }
}

TEST_CASE("budget control") {
    unsetenv("PLETHYSM_ORACLE_BUDGET");
    CHECK(decomposition_budget() == 16); // default when env unset
    CHECK_THROWS_AS(full_decomposition(P("3"), P("3,3")), BudgetExceeded);
    setenv("PLETHYSM_ORACLE_BUDGET", "8", 1);
    CHECK(decomposition_budget() == 8);
    CHECK_THROWS_AS(full_decomposition(P("3"), P("3")), BudgetExceeded);
    unsetenv("PLETHYSM_ORACLE_BUDGET");
    CHECK_THROWS_AS(plethysm_coefficient(P("7"), P("7"), Partition(std::vector<unsigned>(49, 1))),
                    BudgetExceeded);
}

TEST_CASE("worker count does not change results") {
    auto one = full_decomposition(P("3"), P("3"));
    set_oracle_threads(4);
    CHECK(oracle_threads() == 4);
    auto four = full_decomposition(P("3"), P("3"));
    set_oracle_threads(1);
    CHECK(one.multiplicities == four.multiplicities);
}
