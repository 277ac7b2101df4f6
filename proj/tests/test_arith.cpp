#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hypbr/arith.hpp"

using namespace hypbr;

TEST_CASE("valuation") {
    CHECK(valuation(Rational(-2), Integer(2)) == 1);
    CHECK(valuation(Rational(289), Integer(17)) == 2);
    CHECK(valuation(make_rational(9, 2), Integer(3)) == 2);
    CHECK(valuation(make_rational(9, 2), Integer(2)) == -1);
    CHECK_THROWS_AS(valuation(Rational(0), Integer(2)), std::domain_error);
}

TEST_CASE("valuation is additive") {
    std::mt19937_64 rng(11);
    const long ps[4] = {2, 3, 5, 17};
    for (int i = 0; i < 200; ++i) {
        Integer p(ps[rng() % 4]);
        Rational q1 = make_rational(1 + rng() % 500, 1 + rng() % 500);
        Rational q2 = make_rational(1 + rng() % 500, 1 + rng() % 500);
        CHECK(valuation(Rational(q1 * q2), p) == valuation(q1, p) + valuation(q2, p));
    }
}

TEST_CASE("legendre examples against enumeration") {
    CHECK(legendre(Integer(17), Integer(3)) == -1);
    CHECK(legendre(Integer(-1), Integer(17)) == 1);
    CHECK(legendre(Integer(0), Integer(5)) == 0);
    CHECK_THROWS_AS(legendre(Integer(3), Integer(2)), std::domain_error);

    for (long p : {3L, 5L, 7L, 11L, 13L, 17L}) {
        std::vector<char> residue(p, 0);
        for (long z = 0; z < p; ++z) residue[z * z % p] = 1;
        for (long a = -2 * p; a < 2 * p; ++a) {
            long r = ((a % p) + p) % p;
            int expected = r == 0 ? 0 : (residue[r] ? 1 : -1);
            CHECK(legendre(Integer(a), Integer(p)) == expected);
        }
    }
}

TEST_CASE("legendre is completely multiplicative in a") {
    std::mt19937_64 rng(12);
    const long ps[5] = {3, 5, 13, 17, 97};
    for (int i = 0; i < 300; ++i) {
        Integer p(ps[rng() % 5]);
        Integer a(static_cast<long>(rng() % 2000) - 1000);
        Integer b(static_cast<long>(rng() % 2000) - 1000);
        CHECK(legendre(a * b, p) == legendre(a, p) * legendre(b, p));
    }
}

TEST_CASE("factor") {
    auto f = factor(Integer(289));
    CHECK(f.sign == 1);
    REQUIRE(f.primes.size() == 1);
    CHECK(f.primes[0] == std::pair<Integer, int>(Integer(17), 2));

    auto g = factor(Integer(-12));
    CHECK(g.sign == -1);
    REQUIRE(g.primes.size() == 2);
    CHECK(g.primes[0] == std::pair<Integer, int>(Integer(2), 2));
    CHECK(g.primes[1] == std::pair<Integer, int>(Integer(3), 1));

    CHECK(factor(Integer(1)).primes.empty());
    CHECK_THROWS_AS(factor(Integer(0)), std::domain_error);
}

TEST_CASE("factor reassembles and finds big factors") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        Integer n(static_cast<long>(rng() % 2000000) + 2);
        if (rng() % 2) n = -n;
        auto f = factor(n);
        Integer prod = f.sign;
        for (const auto& [p, e] : f.primes) {
            CHECK(is_prime(p));
            for (int k = 0; k < e; ++k) prod *= p;
        }
        CHECK(prod == n);
    }
    // beyond the trial-division limit: both factors prime and > 1e6
    Integer big = Integer(1000003) * Integer(1000033);
    auto f = factor(big);
    REQUIRE(f.primes.size() == 2);
    CHECK(f.primes[0].first == 1000003);
    CHECK(f.primes[1].first == 1000033);
}

TEST_CASE("squarefree_part") {
    CHECK(squarefree_part(Rational(289)) == 1);
    CHECK(squarefree_part(make_rational(-8, 9)) == -2);
    CHECK(squarefree_part(Rational(1)) == 1);
    CHECK_THROWS_AS(squarefree_part(Rational(0)), std::domain_error);
}

TEST_CASE("squarefree_part properties") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 200; ++i) {
        Rational q = make_rational(static_cast<long>(rng() % 4000) - 2000,
                                   1 + static_cast<long>(rng() % 300));
        if (q == 0) continue;
        Integer d = squarefree_part(q);
        CHECK(is_rational_square(Rational(q / Rational(d))));
        Rational q2 = make_rational(static_cast<long>(rng() % 4000) - 2000,
                                    1 + static_cast<long>(rng() % 300));
        if (q2 == 0) continue;
        // square-class multiplicativity
        Integer lhs = squarefree_part(Rational(q * q2));
        Integer rhs = squarefree_part(
            Rational(Rational(squarefree_part(q)) * Rational(squarefree_part(q2))));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("is_local_square") {
    CHECK(is_local_square(Rational(289), Place::finite(Integer(17))));
    CHECK(!is_local_square(Rational(-1), Place::real()));
    CHECK(is_local_square(Rational(17), Place::finite(Integer(2))));
    CHECK(!is_local_square(Rational(2), Place::finite(Integer(5))));
    CHECK(is_local_square(make_rational(-1, 4), Place::finite(Integer(7))) ==
          (legendre(Integer(-1), Integer(7)) == 1));
}

TEST_CASE("squares are local squares everywhere") {
    std::mt19937_64 rng(15);
    std::vector<Place> places = {Place::real(), Place::finite(Integer(2)),
                                 Place::finite(Integer(3)), Place::finite(Integer(17))};
    for (int i = 0; i < 100; ++i) {
        Rational q = make_rational(static_cast<long>(rng() % 500) - 250,
                                   1 + static_cast<long>(rng() % 100));
        if (q == 0) continue;
        for (const Place& v : places) CHECK(is_local_square(Rational(q * q), v));
    }
}

TEST_CASE("Place") {
    CHECK_THROWS_AS(Place::finite(Integer(15)), std::domain_error);
    CHECK(Place::finite(Integer(2)).str() == "2");
    CHECK(Place::real().str() == "inf");
    CHECK(Place::finite(Integer(2)) < Place::finite(Integer(17)));
    CHECK(Place::finite(Integer(17)) < Place::real());
}

TEST_CASE("is_prime") {
    CHECK(is_prime(Integer(2)));
    CHECK(is_prime(Integer(1000003)));
    CHECK(!is_prime(Integer(1)));
    CHECK(!is_prime(Integer("3215031751")));  // strong pseudoprime to bases 2,3,5,7
    CHECK(is_prime(Integer("170141183460469231731687303715884105727")));  // 2^127 - 1
}
