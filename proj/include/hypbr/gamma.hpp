#pragma once

#include "hypbr/brauer.hpp"
#include "hypbr/etale.hpp"

namespace hypbr {

/// A closed point of P^1 over Q: a monic irreducible polynomial or infinity.
class P1Place {
public:
    static P1Place finite(const Poly& q);           // checks irreducibility
    static P1Place finite_unchecked(const Poly& q); // caller guarantees it
    static P1Place infinity();

    bool is_infinity() const { return inf_; }
    const Poly& poly() const;

    bool operator==(const P1Place& o) const;
    bool operator<(const P1Place& o) const;
    std::string str() const;

private:
    P1Place() = default;
    bool inf_ = true;
    Poly q_;
};

enum class SquareStatus { Square, NonSquare, ProbablySquare };

/// Value of a residue map: a square-class representative in the residue
/// field k(q) = Q[t]/q (a rational number at infinity) with its squareness.
struct ResidueResult {
    P1Place place;
    Poly rep;            // reduced mod q; a constant for infinity
    SquareStatus status;

    bool certified_trivial() const { return status == SquareStatus::Square; }
    bool possibly_trivial() const { return status != SquareStatus::NonSquare; }
};

/// The Rosset-Tate remainder sequence: r0 = f, r1 = g,
/// r_{i+2} = r_i mod r_{i+1}, stopping at the first n with r_{n+2} = 0.
/// Returns (r_i, leading coefficient of r_i) for i = 0..n+1.
std::vector<std::pair<Poly, Rational>> rosset_tate_sequence(const Poly& f, const Poly& g);

/// The corestriction of (ell, x - alpha) from L(x) down to Q(x), written as a
/// sum of quaternion symbols via the Rosset-Tate remainder sequence. Constant
/// representatives use the closed form (a, f(x)). Split symbols are pruned.
BrauerElement gamma_prime(const HyperCurve& curve, const EtaleElement& ell);

/// Odd curves: always true. Even curves: true iff the class of ell lies in
/// L_c, i.e. the squarefree part of its norm is 1 or that of c.
bool is_unramified(const HyperCurve& curve, const EtaleElement& ell);

/// The element (-1)^deg(p) * p(theta) representing x(P) - alpha for the
/// closed point of P^1 with monic irreducible minimal polynomial p.
EtaleElement x_minus_alpha_closed_point(const HyperCurve& curve, const Poly& p);

/// Exact one-sided square test in k(q) = Q[t]/q. NonSquare results carry a
/// witness prime and are exact; Square is exact (rational residue field, or
/// an even-exponent factorization over Q); otherwise ProbablySquare after
/// `trials` split-prime witnesses all pass.
SquareStatus is_square_in_kq(const Poly& z, const Poly& q, int trials = 20);

/// Residue of the class at a place of P^1, by the tame-symbol formula
/// (-1)^(v(a)v(b)) a^(v(b)) b^(-v(a)) per symbol (leading coefficients at
/// infinity, where v = -deg).
ResidueResult residue_at(const BrauerElement& e, const P1Place& place, int trials = 20);

/// Compare residues of e1 and e2 (their union, since classes are 2-torsion)
/// at the given places plus every finite place dividing an entry. True iff
/// every residue is a certified or probable square.
bool residue_profile_equal(const BrauerElement& e1, const BrauerElement& e2,
                           const std::vector<P1Place>& places, int trials = 20);

/// Semi-decision for equality in Br k(C) modulo constant algebras: the union
/// multiset must have square residues on P^1 (as given, or after rewriting
/// every entry's f-part through the curve relation to the smaller-degree
/// side) and a sample-independent evaluated invariant profile.
bool class_equal_mod_constants(const BrauerElement& e1, const BrauerElement& e2,
                               const HyperCurve& curve);

/// The shared etale algebra Q[theta]/f of a curve.
EtaleAlgebraPtr curve_algebra(const HyperCurve& curve);

}  // namespace hypbr
