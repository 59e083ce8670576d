#include <doctest.h>

#include <random>

#include "chipfire/abelian_group.hpp"
#include "chipfire/errors.hpp"
#include "chipfire/smith.hpp"
#include "oracles.hpp"

using namespace chipfire;
using oracle::bigs;

namespace {

CriticalGroup from_cyclics(std::initializer_list<long> orders) {
    CriticalGroup g;
    for (long o : orders) g = direct_sum(g, CriticalGroup::cyclic(o));
    return g;
}

// Independent route: the SNF of the block-diagonal relation matrix.
CriticalGroup direct_sum_by_snf(const CriticalGroup& a, const CriticalGroup& b) {
    std::vector<BigInt> all = a.invariant_factors();
    all.insert(all.end(), b.invariant_factors().begin(), b.invariant_factors().end());
    IntMatrix d(all.size(), all.size());
    for (std::size_t i = 0; i < all.size(); ++i) d(i, i) = all[i];
    return CriticalGroup::from_diagonal(smith_normal_form(d).diagonal);
}

}  // namespace

TEST_CASE("canonical form drops units") {
    const auto g = CriticalGroup::from_diagonal(bigs({1, 1, 4, 4}));
    CHECK(g.invariant_factors() == bigs({4, 4}));
    CHECK(g.order() == 16);
    CHECK(g.rank() == 2);
    CHECK(CriticalGroup::from_diagonal(bigs({1, 1})).trivial());
    CHECK(CriticalGroup().order() == 1);
    CHECK(CriticalGroup().to_string() == "0");
    CHECK(g.to_string() == "Z/4 + Z/4");
    CHECK_THROWS_AS(CriticalGroup::from_diagonal(bigs({2, 0})), InputError);
    CHECK_THROWS_AS(CriticalGroup::from_diagonal(bigs({2, 3})), InputError);
    CHECK_THROWS_AS(CriticalGroup::cyclic(0), InputError);
}

TEST_CASE("direct sum examples") {
    CHECK(from_cyclics({9, 27, 16, 16, 19}).invariant_factors() == bigs({144, 8208}));
    CHECK(direct_sum(CriticalGroup::cyclic(2), CriticalGroup::cyclic(3)).invariant_factors() == bigs({6}));
    CHECK(direct_sum(CriticalGroup::cyclic(2), CriticalGroup::cyclic(2)).invariant_factors() == bigs({2, 2}));
    CHECK(direct_sum(CriticalGroup(), CriticalGroup::cyclic(5)) == CriticalGroup::cyclic(5));
    CHECK(groups_isomorphic(from_cyclics({4, 3}), CriticalGroup::cyclic(12)));
    CHECK_FALSE(groups_isomorphic(from_cyclics({2, 2}), CriticalGroup::cyclic(4)));
}

TEST_CASE("direct sum agrees with block-diagonal SNF") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> order(1, 120);
    for (int trial = 0; trial < 100; ++trial) {
        CriticalGroup a, b;
        for (int i = 0; i < 3; ++i) {
            a = direct_sum(a, CriticalGroup::cyclic(order(rng)));
            b = direct_sum(b, CriticalGroup::cyclic(order(rng)));
        }
        const CriticalGroup sum = direct_sum(a, b);
        CHECK(sum == direct_sum_by_snf(a, b));
        CHECK(sum == direct_sum(b, a));
        CHECK(sum.order() == a.order() * b.order());
    }
}

TEST_CASE("factorization and elementary divisors") {
    CHECK(factorize(1).empty());
    const auto f = factorize(8208);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == PrimePower{2, 4});
    CHECK(f[1] == PrimePower{3, 3});
    CHECK(f[2] == PrimePower{19, 1});

    // Two primes beyond the trial-division range.
    const BigInt p("1000003"), q("998244353");
    const auto big = factorize(p * p * q);
    REQUIRE(big.size() == 2);
    CHECK(big[0] == PrimePower{p, 2});
    CHECK(big[1] == PrimePower{q, 1});

    const auto parts = elementary_divisors(CriticalGroup::from_diagonal(bigs({144, 8208})));
    std::vector<BigInt> values;
    for (const auto& pp : parts) values.push_back(pp.value());
    CHECK(values == bigs({16, 16, 9, 27, 19}));
    CHECK(from_elementary_divisors(parts).invariant_factors() == bigs({144, 8208}));
    CHECK_THROWS_AS(factorize(0), InputError);
}
