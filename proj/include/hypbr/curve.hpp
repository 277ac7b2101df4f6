#pragma once

#include "hypbr/poly.hpp"

namespace hypbr {

enum class Parity { Odd, Even };

/// The hyperelliptic curve y^2 = c * f(x), f monic squarefree of degree >= 3.
class HyperCurve {
public:
    HyperCurve(Rational c, Poly f);

    const Rational& c() const { return c_; }
    const Poly& f() const { return f_; }
    Poly cf() const { return f_ * c_; }
    Parity parity() const { return f_.degree() % 2 ? Parity::Odd : Parity::Even; }
    int genus() const;

private:
    Rational c_;
    Poly f_;
};

}  // namespace hypbr
