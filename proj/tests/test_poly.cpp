#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "hypbr/polyfactor.hpp"

using namespace hypbr;

namespace {

std::mt19937_64 rng(20103);

Poly random_poly(int maxdeg, long span = 9) {
    int d = static_cast<int>(rng() % (maxdeg + 1));
    std::vector<Rational> c(d + 1);
    for (auto& x : c)
        x = make_rational(static_cast<long>(rng() % (2 * span + 1)) - span,
                          1 + static_cast<long>(rng() % 3));
    return Poly(std::move(c));
}

// float oracle for the discriminant: prod (alpha_i - alpha_j)^2 over complex
// roots found by Durand-Kerner iteration
double disc_oracle(const Poly& f) {
    int n = f.degree();
    std::vector<std::complex<double>> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = f[i].get_d();
    for (auto& x : c) x /= c[n];
    std::vector<std::complex<double>> r(n);
    for (int i = 0; i < n; ++i) r[i] = std::pow(std::complex<double>(0.4, 0.9), i);
    for (int it = 0; it < 500; ++it) {
        for (int i = 0; i < n; ++i) {
            // monic polynomial value at r[i]
            std::complex<double> num = 1.0;
            for (int k = n - 1; k >= 0; --k) num = num * r[i] + c[k];
            std::complex<double> den = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= r[i] - r[j];
            r[i] -= num / den;
        }
    }
    std::complex<double> prod = 1.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) prod *= (r[i] - r[j]) * (r[i] - r[j]);
    double lc = f.lc().get_d();
    return prod.real() * std::pow(lc, 2 * n - 2);
}

}  // namespace

TEST_CASE("parse and print") {
    CHECK(parse_poly("2*x^4 - 17").str() == "2*x^4 - 17");
    CHECK(parse_poly("-1/2*x + 3").str() == "-1/2*x + 3");
    CHECK(parse_poly(" x ^ 2+1 ") == parse_poly("x^2+1"));
    CHECK(parse_poly("(x^2+1)*(x^2-17)") == parse_poly("x^4 - 16*x^2 - 17"));
    CHECK(parse_poly("-t^2-4", 't') == parse_poly("-x^2-4"));
    CHECK(parse_poly("3x^2") == parse_poly("3*x^2"));
    CHECK_THROWS_AS(parse_poly("2*y"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x^2 +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("1/0"), std::invalid_argument);
}

TEST_CASE("divrem") {
    auto [q, r] = divrem(parse_poly("x^4-17"), parse_poly("-x^2-4"));
    CHECK(q == parse_poly("-x^2+4"));
    CHECK(r == Poly(Rational(-1)));

    auto [q2, r2] = divrem(parse_poly("x^2"), parse_poly("x^2"));
    CHECK(q2 == Poly(Rational(1)));
    CHECK(r2.is_zero());

    auto [q3, r3] = divrem(parse_poly("x+1"), parse_poly("x^2"));
    CHECK(q3.is_zero());
    CHECK(r3 == parse_poly("x+1"));

    CHECK_THROWS_AS(divrem(parse_poly("x"), Poly()), std::domain_error);
}

TEST_CASE("divrem round-trip") {
    for (int i = 0; i < 500; ++i) {
        Poly a = random_poly(7), b = random_poly(4);
        if (b.is_zero()) continue;
        auto [q, r] = divrem(a, b);
        CHECK(a == q * b + r);
        CHECK((r.is_zero() || r.degree() < b.degree()));
    }
}

TEST_CASE("gcd") {
    CHECK(gcd(parse_poly("x^2-1"), parse_poly("x-1")) == parse_poly("x-1"));
    CHECK(gcd(parse_poly("x^4-17"), parse_poly("-x^2-4")) == Poly(Rational(1)));
    Poly f = parse_poly("3*x^3-3*x+6");
    CHECK(gcd(f, f) == f.monic());
    CHECK_THROWS_AS(gcd(Poly(), Poly()), std::domain_error);
}

TEST_CASE("gcd divides and detects coprime products") {
    for (int i = 0; i < 200; ++i) {
        Poly a = random_poly(5), b = random_poly(5);
        if (a.is_zero() && b.is_zero()) continue;
        Poly g = gcd(a, b);
        if (!a.is_zero()) CHECK(divides(g, a));
        if (!b.is_zero()) CHECK(divides(g, b));
    }
}

TEST_CASE("gcd of coprime products is 1; gcd recovers a shared factor") {
    const Poly irred[4] = {parse_poly("x^2+1"), parse_poly("x^2-2"), parse_poly("x-3"),
                           parse_poly("x^2+x+1")};
    for (int i = 0; i < 40; ++i) {
        size_t k = rng() % 4, l = (k + 1 + rng() % 3) % 4;
        Poly a = irred[k] * random_poly(1, 3);
        Poly b = irred[l] * Poly(Rational(1 + static_cast<long>(rng() % 5)));
        if (a.is_zero()) continue;
        if (gcd(irred[k], irred[l]).degree() != 0) continue;
        if (divides(irred[l], a)) continue;
        CHECK(gcd(a * irred[l], b) == irred[l]);
        if (!divides(irred[k], b) && gcd(a / a.content(), b).degree() == 0)
            CHECK(gcd(a, b).degree() == 0);
    }
}

TEST_CASE("resultant convention: Res(a,b) = lc(a)^deg(b) prod b(alpha)") {
    CHECK(resultant(parse_poly("x^4-17"), parse_poly("-x^2-4")) == 1);
    // the stated convention gives -1 here (b evaluated at the root 2 of a)
    CHECK(resultant(parse_poly("x-2"), parse_poly("x-3")) == -1);
    CHECK(resultant(parse_poly("x"), parse_poly("x")) == 0);

    // oracle on split polynomials: a = prod (x - u_i), b arbitrary
    for (int i = 0; i < 100; ++i) {
        std::vector<long> roots;
        Poly a(Rational(1));
        int n = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < n; ++k) {
            long u = static_cast<long>(rng() % 11) - 5;
            roots.push_back(u);
            a = a * parse_poly("x-(" + std::to_string(u) + ")");
        }
        Poly b = random_poly(3);
        if (b.is_zero()) continue;
        Rational expected(1);
        for (long u : roots) expected *= b.eval(Rational(u));
        CHECK(resultant(a, b) == expected);
    }
}

TEST_CASE("resultant multiplicativity") {
    for (int i = 0; i < 100; ++i) {
        Poly a = random_poly(3) + Poly::monomial(4);
        Poly b = random_poly(2) + Poly::monomial(3);
        Poly c = random_poly(2) + Poly::monomial(3);
        CHECK(resultant(a, b * c) == resultant(a, b) * resultant(a, c));
    }
}

TEST_CASE("discriminant") {
    CHECK(discriminant(parse_poly("x^2-17")) == 68);
    CHECK(discriminant(parse_poly("(x-1)*(x-1)")) == 0);
    CHECK_THROWS_AS(discriminant(Poly(Rational(3))), std::domain_error);

    // disc(x^4 + c) = -256 c^3; at a = -17 this is -256*17^3 (pinned by the float oracle below)
    CHECK(discriminant(parse_poly("x^4-17")) == Rational(Integer(-256) * 17 * 17 * 17));

    // float oracle on random squarefree quartics
    for (int i = 0; i < 40; ++i) {
        Poly f = random_poly(2, 4) + Poly::monomial(4);
        if (!is_squarefree(f)) continue;
        double oracle = disc_oracle(f);
        double exact = discriminant(f).get_d();
        double scale = std::max(1.0, std::abs(oracle));
        CHECK(std::abs(oracle - exact) / scale < 1e-4);
    }
}

TEST_CASE("discriminant zero iff repeated factor") {
    for (int i = 0; i < 100; ++i) {
        Poly f = random_poly(5);
        if (f.degree() < 1) continue;
        CHECK((discriminant(f) == 0) == (gcd(f, f.derivative()).degree() > 0));
    }
}

TEST_CASE("eval") {
    CHECK(parse_poly("x^4-17").eval(Rational(0)) == -17);
    CHECK(parse_poly("(x^2+1)*(x^2+17)*(x^2-17)").eval(Rational(0)) == -289);
    CHECK(parse_poly("x").eval(Rational(5)) == 5);
}

TEST_CASE("factor_poly examples") {
    auto fac = factor_poly(parse_poly("(x^2+1)*(x^2+17)*(x^2-17)"));
    CHECK(fac.content == 1);
    REQUIRE(fac.factors.size() == 3);
    CHECK(fac.factors[0] == std::pair<Poly, int>(parse_poly("x^2-17"), 1));
    CHECK(fac.factors[1] == std::pair<Poly, int>(parse_poly("x^2+1"), 1));
    CHECK(fac.factors[2] == std::pair<Poly, int>(parse_poly("x^2+17"), 1));

    auto irred = factor_poly(parse_poly("x^4-17"));
    REQUIRE(irred.factors.size() == 1);
    CHECK(irred.factors[0] == std::pair<Poly, int>(parse_poly("x^4-17"), 1));

    auto lin = factor_poly(parse_poly("x^2-1"));
    REQUIRE(lin.factors.size() == 2);
    CHECK(lin.factors[0] == std::pair<Poly, int>(parse_poly("x-1"), 1));
    CHECK(lin.factors[1] == std::pair<Poly, int>(parse_poly("x+1"), 1));

    CHECK_THROWS_AS(factor_poly(Poly()), std::domain_error);
}

TEST_CASE("factor_poly reassembles; factors pass spot irreducibility checks") {
    for (int i = 0; i < 60; ++i) {
        Poly a = random_poly(4), b = random_poly(4);
        Poly prod = a * b;
        if (prod.is_zero()) continue;
        auto fac = factor_poly(prod);
        CHECK(fac.reassemble() == prod);
        for (const auto& [q, e] : fac.factors) {
            CHECK(q.lc() == 1);
            // an irreducible factor of degree > 1 has no rational roots
            if (q.degree() > 1)
                for (long r = -6; r <= 6; ++r) CHECK(q.eval(Rational(r)) != 0);
            // and splits into a single factor when re-factored
            CHECK(factor_poly(q).factors.size() == 1);
        }
    }
}

TEST_CASE("factor_poly with multiplicities and content") {
    Poly f = parse_poly("18*(x-1)*(x-1)*(x^2+1)*(x^2+1)*(x^2+1)*(x+2)") / Rational(7);
    auto fac = factor_poly(f);
    CHECK(fac.reassemble() == f);
    bool saw_sq = false, saw_cube = false;
    for (const auto& [q, e] : fac.factors) {
        if (q == parse_poly("x-1")) {
            CHECK(e == 2);
            saw_sq = true;
        }
        if (q == parse_poly("x^2+1")) {
            CHECK(e == 3);
            saw_cube = true;
        }
    }
    CHECK(saw_sq);
    CHECK(saw_cube);
}

TEST_CASE("square_class_rep keeps odd-exponent part") {
    Poly f = parse_poly("12*(x-1)*(x-1)*(x^2+1)");
    CHECK(square_class_rep(f) == parse_poly("3*(x^2+1)"));
}

TEST_CASE("ext_gcd Bezout identity") {
    for (int i = 0; i < 120; ++i) {
        Poly a = random_poly(5), b = random_poly(5);
        if (a.is_zero() && b.is_zero()) continue;
        ExtGcd e = ext_gcd(a, b);
        CHECK(e.s * a + e.t * b == e.g);
        CHECK(e.g == gcd(a, b));
    }
}

TEST_CASE("odd_exponent_part agrees with the factored square class") {
    for (int i = 0; i < 40; ++i) {
        Poly a = random_poly(3), b = random_poly(2);
        Poly prod = a * a * b;
        if (prod.degree() < 1) continue;
        Poly via_gcd = odd_exponent_part(prod);
        Poly via_factor = square_class_rep(prod);
        // same monic polynomial part
        CHECK(via_gcd == via_factor.monic() * Rational(1));
    }
}

TEST_CASE("parser rejects mixed variables") {
    CHECK_THROWS_AS(parse_poly("t+x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x^2+t", 'x'), std::invalid_argument);
}

TEST_CASE("RationalFunction canonical form") {
    RationalFunction r(parse_poly("2*x^2-2"), parse_poly("4*x-4"));
    CHECK(r.num() == parse_poly("1/2*x+1/2"));
    CHECK(r.den() == Poly(Rational(1)));
    RationalFunction s(parse_poly("x"), parse_poly("3*x^2"));
    CHECK(s.den().lc() == 1);
    CHECK_THROWS_AS(RationalFunction(parse_poly("x"), Poly()), std::domain_error);
}
