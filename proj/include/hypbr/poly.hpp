#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypbr/arith.hpp"

namespace hypbr {

/// Univariate polynomial over Q, coefficients indexed by degree,
/// no stored leading zeros. The zero polynomial has an empty
/// coefficient vector and degree() == -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly x();                       // the monomial x
    static Poly monomial(int deg, const Rational& c = Rational(1));
    static Poly from_ints(std::vector<long> coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_constant() const { return c_.size() <= 1; }
    Rational constant_value() const;       // requires is_constant()

    const Rational& operator[](int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& lc() const;            // leading coefficient, nonzero poly

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& s) const;
    Poly operator/(const Rational& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }
    /// Total order (degree, then coefficients from the top); used only to
    /// keep containers and printed output deterministic.
    bool operator<(const Poly& o) const;

    Poly derivative() const;
    Rational eval(const Rational& x0) const;
    Poly monic() const;                    // nonzero poly
    Poly shift_mul_x(int k) const;         // * x^k

    /// Rational content cont with *this == cont * primitive integer poly.
    Rational content() const;

    std::string str(char var = 'x') const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// quotient and remainder, deg(rem) < deg(b).
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
/// exact division; throws if not divisible.
Poly divexact(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

/// monic gcd; not both zero.
Poly gcd(const Poly& a, const Poly& b);
/// g = gcd (monic), s*a + t*b = g.
struct ExtGcd {
    Poly g, s, t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

/// Res(a,b) = lc(a)^deg(b) * prod_{a(alpha)=0} b(alpha). Both nonzero.
Rational resultant(const Poly& a, const Poly& b);

/// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f), deg f >= 1.
Rational discriminant(const Poly& f);

bool is_squarefree(const Poly& f);

/// Parse `2*x^4 - 17`, `-1/2*x + 3`, `(x^2+1)*(x^2-17)`; whitespace-free or not.
/// Accepts exactly one variable letter (default any of x/t — pass 0) and
/// throws std::invalid_argument on malformed input.
Poly parse_poly(const std::string& text, char var = 0);

/// Reduced fraction of polynomials: gcd(num, den) = 1 and den monic.
class RationalFunction {
public:
    RationalFunction() : num_(Rational(0)), den_(Rational(1)) {}
    RationalFunction(Poly num, Poly den);
    explicit RationalFunction(Poly num) : num_(std::move(num)), den_(Rational(1)) {}

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator*(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    std::string str(char var = 'x') const;

private:
    Poly num_, den_;
};

}  // namespace hypbr
