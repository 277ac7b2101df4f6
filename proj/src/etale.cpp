#include "hypbr/etale.hpp"

#include <algorithm>

namespace hypbr {

EtaleAlgebra::EtaleAlgebra(Poly modulus) : modulus_(std::move(modulus)) {
    if (modulus_.degree() < 1) throw std::domain_error("EtaleAlgebra: degree < 1");
    if (modulus_.lc() != 1) throw std::domain_error("EtaleAlgebra: modulus not monic");
    if (!is_squarefree(modulus_)) throw std::domain_error("EtaleAlgebra: modulus not squarefree");
    fac_ = factor_poly(modulus_);
}

EtaleAlgebraPtr make_etale(const Poly& modulus) {
    return std::make_shared<const EtaleAlgebra>(modulus);
}

EtaleElement::EtaleElement(EtaleAlgebraPtr alg, Poly rep) : alg_(std::move(alg)) {
    rep_ = divrem(rep, alg_->modulus()).second;
}

bool EtaleElement::is_unit() const {
    if (rep_.is_zero()) return false;
    return gcd(rep_, alg_->modulus()).degree() == 0;
}

EtaleElement EtaleElement::operator*(const EtaleElement& o) const {
    return EtaleElement(alg_, rep_ * o.rep_);
}

EtaleElement EtaleElement::operator*(const Rational& s) const {
    return EtaleElement(alg_, rep_ * s);
}

EtaleElement EtaleElement::invert() const {
    ExtGcd e = ext_gcd(rep_, alg_->modulus());
    if (e.g.degree() != 0)
        throw ZeroDivisorError("EtaleElement: not a unit (gcd " + e.g.str() + ")");
    return EtaleElement(alg_, e.s);
}

Rational EtaleElement::norm() const {
    if (rep_.is_zero()) return Rational(0);
    return resultant(alg_->modulus(), rep_);
}

EtaleElement reduce(const EtaleAlgebraPtr& alg, const Poly& g) {
    return EtaleElement(alg, g);
}

EtaleElement crt_assemble(const EtaleAlgebraPtr& alg,
                          const std::vector<std::pair<Poly, Poly>>& components) {
    std::vector<Poly> expected;
    for (const auto& [q, e] : alg->factors()) expected.push_back(q);
    std::vector<Poly> given;
    for (const auto& [q, rep] : components) given.push_back(q.monic());
    std::sort(given.begin(), given.end());
    if (given != expected)
        throw std::domain_error("crt_assemble: components must cover each factor exactly once");

    Poly acc;
    for (const auto& [q, rep] : components) {
        Poly m = divexact(alg->modulus(), q.monic());
        // m * (m^{-1} mod q) is 1 mod q and 0 mod the other factors
        ExtGcd e = ext_gcd(m, q.monic());
        if (e.g.degree() != 0) throw std::domain_error("crt_assemble: factors not coprime");
        acc = acc + rep * m * e.s;
    }
    return EtaleElement(alg, acc);
}

bool class_in_Lc(const EtaleElement& e, const Rational& c) {
    if (c == 0) throw std::domain_error("class_in_Lc: c = 0");
    if (!e.is_unit()) throw ZeroDivisorError("class_in_Lc: not a unit");
    Integer d = squarefree_part(e.norm());
    return d == 1 || d == squarefree_part(c);
}

}  // namespace hypbr
