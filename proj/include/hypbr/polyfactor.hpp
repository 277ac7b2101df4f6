#pragma once

#include "hypbr/poly.hpp"

namespace hypbr {

/// f == content * prod factors[i].first ^ factors[i].second,
/// factors monic irreducible over Q, sorted (degree, then coefficients).
struct PolyFactorization {
    Rational content;
    std::vector<std::pair<Poly, int>> factors;

    Poly reassemble() const;
};

/// Factor a nonzero polynomial into monic irreducibles over Q.
/// Squarefree decomposition, then factorization mod a good odd prime with
/// Hensel lifting and subset recombination. Intended for degree <= 16.
PolyFactorization factor_poly(const Poly& f);

/// Product of the irreducible factors of f that appear to odd exponent,
/// times the squarefree part of the content: the class of f in
/// Q(x)^x / Q(x)^x2, as a polynomial. f nonzero.
Poly square_class_rep(const Poly& f);

/// The monic product of the squarefree-decomposition layers of odd
/// multiplicity: square_class_rep without the content and without any
/// irreducible factorization (gcd arithmetic only). f nonconstant.
Poly odd_exponent_part(const Poly& f);

}  // namespace hypbr
