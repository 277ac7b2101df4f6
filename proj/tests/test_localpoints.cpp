#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypbr/localpoints.hpp"
#include "hypbr/obstruction.hpp"

using namespace hypbr;

TEST_CASE("real point on the quartic") {
    HyperCurve curve(Rational(2), parse_poly("x^4-17"));
    auto pt = find_point(curve, Place::real(), 3);
    REQUIRE(pt.has_value());
    CHECK(pt->kind == PointKind::Affine);
    CHECK(pt->x0 == 3);  // smallest nonnegative integer with 2(x^4-17) > 0
}

TEST_CASE("2-adic point with c*f(0) a square") {
    HyperCurve curve(Rational(-1), parse_poly("(x^2+1)*(x^2+17)*(x^2-17)"));
    auto pt = find_point(curve, Place::finite(Integer(2)), 3);
    REQUIRE(pt.has_value());
    CHECK(pt->x0 == 0);  // c*f(0) = 289 = 17^2
}

TEST_CASE("tabulated 2-adic point for c = 3 mod 8") {
    HyperCurve curve(Rational(3), parse_poly("(x^2+1)*(x^2+17)*(x^2-17)"));
    auto pt = find_point(curve, Place::finite(Integer(2)), 3);
    REQUIRE(pt.has_value());
    CHECK(pt->x0 == 2);
}

TEST_CASE("found affine points satisfy their invariant") {
    for (long c : {1L, 3L, -5L, 7L}) {
        HyperCurve curve = twist_curve(Integer(c));
        for (const Place& v :
             {Place::real(), Place::finite(Integer(2)), Place::finite(Integer(17))}) {
            auto pts = find_points(curve, v, 3, 3);
            for (const auto& pt : pts) {
                if (pt.kind != PointKind::Affine) continue;
                Rational y2 = curve.c() * curve.f().eval(pt.x0);
                CHECK(y2 != 0);
                CHECK(is_local_square(y2, v));
            }
        }
    }
}

TEST_CASE("search is deterministic") {
    HyperCurve curve(Rational(2), parse_poly("x^4-17"));
    for (const Place& v : {Place::real(), Place::finite(Integer(17))}) {
        auto a = find_points(curve, v, 4, 4);
        auto b = find_points(curve, v, 4, 4);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].x0 == b[i].x0);
    }
}

TEST_CASE("twist family curves have points everywhere in the bad set") {
    for (long c = -50; c <= 50; ++c) {
        if (c == 0) continue;
        bool sf = true;
        for (const auto& [p, e] : factor(Integer(c)).primes)
            if (e > 1) sf = false;
        if (!sf) continue;
        HyperCurve curve = twist_curve(Integer(c));
        for (const Place& v : bad_places(curve)) {
            // effort 3 covers every place except p = 2 for even c, where the
            // smallest usable integer candidates are 11 and 13
            int effort = v.is_finite() && v.prime() == 2 ? 4 : 3;
            auto pt = find_point(curve, v, effort);
            CHECK_MESSAGE(pt.has_value(),
                          "no point at " << v.str() << " for c = " << c);
        }
    }
}

TEST_CASE("weierstrass points: rational roots") {
    HyperCurve curve(Rational(1), parse_poly("x*(x-1)*(x-2)*(x-3)"));
    auto pts = weierstrass_points_over(curve, Place::real());
    REQUIRE(pts.size() == 4);
    for (long r = 0; r < 4; ++r) {
        CHECK(pts[r].kind == PointKind::Weierstrass);
        CHECK(curve.f().eval(pts[r].x0) == 0);
    }
}

TEST_CASE("weierstrass points: no rational roots of x^4-17 over R") {
    HyperCurve curve(Rational(2), parse_poly("x^4-17"));
    CHECK(weierstrass_points_over(curve, Place::real()).empty());
}

TEST_CASE("weierstrass points: 17-adic roots of x^2+1") {
    // -1 is a square mod 17, so x^2+1 has two simple 17-adic roots
    HyperCurve curve = twist_curve(Integer(1));
    auto pts = weierstrass_points_over(curve, Place::finite(Integer(17)), 4);
    int on_x2p1 = 0;
    Integer mod = Integer(17) * 17 * 17 * 17;
    for (const auto& pt : pts) {
        if (pt.branch == parse_poly("x^2+1")) {
            ++on_x2p1;
            Rational val = pt.branch.eval(pt.x0);
            CHECK(valuation(val, Integer(17)) >= 4);
        }
    }
    CHECK(on_x2p1 == 2);
}

TEST_CASE("weierstrass points: 2-adic roots of x^2-17 need the strengthened lift") {
    HyperCurve curve = twist_curve(Integer(1));
    auto pts = weierstrass_points_over(curve, Place::finite(Integer(2)), 8);
    int on_x2m17 = 0;
    for (const auto& pt : pts) {
        if (pt.branch == parse_poly("x^2-17")) {
            ++on_x2m17;
            CHECK(valuation(pt.branch.eval(pt.x0), Integer(2)) >= 8);
        }
    }
    CHECK(on_x2m17 == 2);  // +-sqrt(17) in Z_2
}
