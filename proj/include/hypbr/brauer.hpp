#pragma once

#include <map>

#include "hypbr/curve.hpp"
#include "hypbr/polyfactor.hpp"

namespace hypbr {

/// An element of (1/2)Z/Z: a local invariant of a 2-torsion class.
class HalfInvariant {
public:
    HalfInvariant() = default;
    static HalfInvariant zero() { return HalfInvariant(); }
    static HalfInvariant half() {
        HalfInvariant h;
        h.nontrivial_ = true;
        return h;
    }

    bool is_zero() const { return !nontrivial_; }
    HalfInvariant operator+(HalfInvariant o) const {
        HalfInvariant r;
        r.nontrivial_ = nontrivial_ != o.nontrivial_;
        return r;
    }
    HalfInvariant& operator+=(HalfInvariant o) { return *this = *this + o; }
    bool operator==(HalfInvariant o) const { return nontrivial_ == o.nontrivial_; }
    bool operator!=(HalfInvariant o) const { return nontrivial_ != o.nontrivial_; }

    std::string str() const { return nontrivial_ ? "1/2" : "0"; }

private:
    bool nontrivial_ = false;
};

/// Quaternion symbol (a, b) over Q(x). Entries are stored as their square
/// classes in Q(x)^x/Q(x)^x2: denominators folded into numerators and each
/// entry replaced by its squarefree decomposition (squarefree content times
/// distinct odd-exponent monic factors).
class QuaternionSymbol {
public:
    QuaternionSymbol(const Poly& a, const Poly& b);
    QuaternionSymbol(const RationalFunction& a, const RationalFunction& b);

    const Poly& a() const { return a_; }
    const Poly& b() const { return b_; }

    /// entry 1 or a nonzero rational square: the symbol is split.
    bool is_split() const;
    bool is_constant() const { return a_.is_constant() && b_.is_constant(); }

    /// (a,b) and (b,a) are the same class; compare entry-sorted.
    bool operator==(const QuaternionSymbol& o) const;
    bool operator<(const QuaternionSymbol& o) const;

private:
    Poly a_, b_;  // entry-sorted so that a_ <= b_
};

/// Formal multiset of quaternion symbols; the empty element is the trivial
/// class. Addition of 2-torsion classes is multiset union with duplicate
/// pairs cancelled.
class BrauerElement {
public:
    BrauerElement() = default;
    explicit BrauerElement(std::vector<QuaternionSymbol> symbols);

    static BrauerElement single(const Poly& a, const Poly& b);

    const std::vector<QuaternionSymbol>& symbols() const { return symbols_; }
    bool is_trivial_multiset() const { return symbols_.empty(); }
    bool all_constant() const;

    BrauerElement operator+(const BrauerElement& o) const;

    /// Remove split symbols and cancel duplicate pairs.
    BrauerElement reduced() const;

private:
    std::vector<QuaternionSymbol> symbols_;  // kept sorted
};

/// Local Hilbert symbol of nonzero rationals: 0 iff z^2 = a x^2 + b y^2 has a
/// nontrivial solution over the completion at the place.
HalfInvariant hilbert(const Rational& a, const Rational& b, const Place& v);

/// Invariant at every place where a constant element can ramify (2, infinity
/// and the primes of the entries); places absent from the map are 0.
std::map<Place, HalfInvariant> constant_invariant_profile(const BrauerElement& e);

/// Equality in Br Q of constant classes, decided via invariant profiles.
bool constant_class_equal(const BrauerElement& e1, const BrauerElement& e2);

/// Multiply the b-entry by c*f: the same class in Br k(C) since c*f = y^2.
QuaternionSymbol curve_square_rewrite(const QuaternionSymbol& sym, const HyperCurve& curve);

}  // namespace hypbr
