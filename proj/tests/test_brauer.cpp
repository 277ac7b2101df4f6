#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "hypbr/brauer.hpp"

using namespace hypbr;

namespace {

std::mt19937_64 rng(52001);

Rational nonzero_rational(long span = 40) {
    Rational q = make_rational(static_cast<long>(rng() % (2 * span + 1)) - span,
                               1 + static_cast<long>(rng() % 12));
    return q == 0 ? Rational(1) : q;
}

std::vector<Place> support_places(const std::vector<Rational>& values) {
    std::set<Place> s{Place::real(), Place::finite(Integer(2))};
    for (const Rational& v : values)
        for (const auto& [p, e] : factor(Integer(v.get_num() * v.get_den())).primes)
            s.insert(Place::finite(p));
    return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("symbols normalize entries to square classes") {
    QuaternionSymbol s(parse_poly("9*(x-1)*(x-1)*(x^2+1)"), parse_poly("-8"));
    CHECK(s.a() == Poly(Rational(-2)));
    CHECK(s.b() == parse_poly("x^2+1"));
    CHECK(QuaternionSymbol(Poly(Rational(4)), parse_poly("x")).is_split());
    CHECK_THROWS_AS(QuaternionSymbol(Poly(), parse_poly("x")), std::domain_error);

    // (a,b) and (b,a) are the same class
    CHECK(QuaternionSymbol(parse_poly("x"), Poly(Rational(-1))) ==
          QuaternionSymbol(Poly(Rational(-1)), parse_poly("x")));
}

TEST_CASE("rational function entries fold denominators") {
    RationalFunction r(Poly(Rational(1)), parse_poly("x"));
    QuaternionSymbol s(r, RationalFunction(Poly(Rational(-1))));
    CHECK(s.b() == parse_poly("x"));  // 1/x ~ x modulo squares
    CHECK(s.a() == Poly(Rational(-1)));
}

TEST_CASE("reduced cancels duplicate pairs and drops split symbols") {
    QuaternionSymbol dup(parse_poly("x"), Poly(Rational(-1)));
    BrauerElement e({dup, dup, QuaternionSymbol(Poly(Rational(1)), parse_poly("x^2+1"))});
    CHECK(e.reduced().is_trivial_multiset());
    BrauerElement odd({dup, dup, dup});
    CHECK(odd.reduced().symbols().size() == 1);
}

TEST_CASE("hilbert examples") {
    CHECK(hilbert(Rational(-1), Rational(-2), Place::real()) == HalfInvariant::half());
    CHECK(hilbert(Rational(-1), Rational(-17), Place::finite(Integer(2))) ==
          HalfInvariant::half());
    CHECK(hilbert(Rational(1), Rational(7), Place::finite(Integer(7))) == HalfInvariant::zero());
    CHECK(hilbert(Rational(1), Rational(-3), Place::real()) == HalfInvariant::zero());
    CHECK_THROWS_AS(hilbert(Rational(0), Rational(1), Place::real()), std::domain_error);
    // (2, 17)_17: 17 | b, 2 a nonresidue mod 17? 6^2 = 36 = 2 mod 17, so residue
    CHECK(hilbert(Rational(2), Rational(17), Place::finite(Integer(17))) ==
          HalfInvariant::zero());
    CHECK(hilbert(Rational(3), Rational(17), Place::finite(Integer(17))) ==
          HalfInvariant::half());
}

TEST_CASE("hilbert properties") {
    std::vector<Place> ps = {Place::real(), Place::finite(Integer(2)), Place::finite(Integer(3)),
                             Place::finite(Integer(5)), Place::finite(Integer(17))};
    for (int i = 0; i < 300; ++i) {
        Rational a = nonzero_rational(), b = nonzero_rational(), c = nonzero_rational();
        const Place& v = ps[rng() % ps.size()];
        CHECK(hilbert(a, b, v) == hilbert(b, a, v));  // symmetry
        CHECK(hilbert(Rational(a * c), b, v) ==
              hilbert(a, b, v) + hilbert(c, b, v));  // bimultiplicativity
        CHECK(hilbert(a, Rational(-a), v) == HalfInvariant::zero());
        if (a != 1) CHECK(hilbert(a, Rational(1 - a), v) == HalfInvariant::zero());
        CHECK(hilbert(Rational(a * a), b, v) == HalfInvariant::zero());
    }
}

TEST_CASE("hilbert product formula") {
    for (int i = 0; i < 100; ++i) {
        Rational a = nonzero_rational(), b = nonzero_rational();
        HalfInvariant total;
        for (const Place& v : support_places({a, b})) total += hilbert(a, b, v);
        CHECK(total.is_zero());
    }
}

TEST_CASE("constant_invariant_profile") {
    BrauerElement e = BrauerElement::single(Poly(Rational(-1)), Poly(Rational(-1)));
    auto prof = constant_invariant_profile(e);
    REQUIRE(prof.size() == 2);
    CHECK(prof.at(Place::finite(Integer(2))) == HalfInvariant::half());
    CHECK(prof.at(Place::real()) == HalfInvariant::half());

    CHECK(constant_invariant_profile(BrauerElement()).empty());

    auto prof2 = constant_invariant_profile(
        BrauerElement::single(Poly(Rational(-1)), Poly(Rational(3))));
    REQUIRE(prof2.size() == 2);
    CHECK(prof2.at(Place::finite(Integer(2))) == HalfInvariant::half());
    CHECK(prof2.at(Place::finite(Integer(3))) == HalfInvariant::half());

    CHECK_THROWS_AS(constant_invariant_profile(
                        BrauerElement::single(parse_poly("x"), Poly(Rational(1)))),
                    std::domain_error);
}

TEST_CASE("constant_class_equal") {
    BrauerElement m11 = BrauerElement::single(Poly(Rational(-1)), Poly(Rational(-1)));
    BrauerElement with_split = m11 + BrauerElement::single(Poly(Rational(1)), Poly(Rational(5)));
    CHECK(constant_class_equal(m11, with_split));
    CHECK(!constant_class_equal(m11, BrauerElement()));
    // (2,3) + (3,2) = 2(2,3) = 0
    BrauerElement sym({QuaternionSymbol(Poly(Rational(2)), Poly(Rational(3))),
                       QuaternionSymbol(Poly(Rational(3)), Poly(Rational(2)))});
    CHECK(constant_class_equal(sym, BrauerElement()));
}

TEST_CASE("curve_square_rewrite") {
    HyperCurve rl(Rational(2), parse_poly("x^4-17"));
    QuaternionSymbol s(parse_poly("-x^2-4"), parse_poly("x^4-17"));
    QuaternionSymbol r = curve_square_rewrite(s, rl);
    CHECK(r == QuaternionSymbol(parse_poly("-x^2-4"), Poly(Rational(2))));

    // the full relation collapses to a split symbol
    QuaternionSymbol full(parse_poly("x^2+9"), rl.cf());
    CHECK(curve_square_rewrite(full, rl).is_split());

    HyperCurve tw(Rational(3), parse_poly("(x^2+1)*(x^2+17)*(x^2-17)"));
    QuaternionSymbol t(Poly(Rational(-1)), parse_poly("x^2-17"));
    CHECK(curve_square_rewrite(t, tw) ==
          QuaternionSymbol(Poly(Rational(-1)), parse_poly("3*(x^2+1)*(x^2+17)")));
}

TEST_CASE("HyperCurve invariants") {
    CHECK_THROWS_AS(HyperCurve(Rational(0), parse_poly("x^4-17")), std::domain_error);
    CHECK_THROWS_AS(HyperCurve(Rational(1), parse_poly("x^2-1")), std::domain_error);
    CHECK_THROWS_AS(HyperCurve(Rational(1), parse_poly("(x-1)*(x-1)*(x-2)")), std::domain_error);
    CHECK(HyperCurve(Rational(2), parse_poly("x^4-17")).genus() == 1);
    CHECK(HyperCurve(Rational(2), parse_poly("x^4-17")).parity() == Parity::Even);
    CHECK(HyperCurve(Rational(1), parse_poly("x^5+1")).genus() == 2);
    CHECK(HyperCurve(Rational(1), parse_poly("x^5+1")).parity() == Parity::Odd);
    CHECK(HyperCurve(Rational(1), parse_poly("x^3-x")).genus() == 1);
}
