#pragma once

#include <memory>

#include "hypbr/polyfactor.hpp"

namespace hypbr {

/// L = Q[theta]/f(theta) for monic squarefree f; the product of the number
/// fields cut out by the irreducible factors of f.
class EtaleAlgebra {
public:
    explicit EtaleAlgebra(Poly modulus);

    const Poly& modulus() const { return modulus_; }
    const std::vector<std::pair<Poly, int>>& factors() const { return fac_.factors; }
    int degree() const { return modulus_.degree(); }

private:
    Poly modulus_;
    PolyFactorization fac_;
};

using EtaleAlgebraPtr = std::shared_ptr<const EtaleAlgebra>;

EtaleAlgebraPtr make_etale(const Poly& modulus);

class EtaleElement {
public:
    EtaleElement(EtaleAlgebraPtr alg, Poly rep);

    const Poly& rep() const { return rep_; }
    const EtaleAlgebraPtr& algebra() const { return alg_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_unit() const;

    EtaleElement operator*(const EtaleElement& o) const;
    EtaleElement operator*(const Rational& s) const;
    bool operator==(const EtaleElement& o) const { return rep_ == o.rep_; }

    /// Multiplicative inverse; throws ZeroDivisorError when rep shares a
    /// factor with the modulus (the element is not a unit).
    EtaleElement invert() const;

    /// Norm_{L/Q} = Res(modulus, rep) with the monic-product convention.
    Rational norm() const;

private:
    EtaleAlgebraPtr alg_;
    Poly rep_;
};

EtaleElement reduce(const EtaleAlgebraPtr& alg, const Poly& g);

/// Element congruent to each rep modulo its factor. The components must name
/// every irreducible factor of the modulus exactly once.
EtaleElement crt_assemble(const EtaleAlgebraPtr& alg,
                          const std::vector<std::pair<Poly, Poly>>& components);

/// true iff squarefree_part(norm(e)) lies in {1, squarefree_part(c)}: the
/// class of e has norm in the subgroup generated by the class of c.
bool class_in_Lc(const EtaleElement& e, const Rational& c);

}  // namespace hypbr
