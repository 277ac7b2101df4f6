#include "hypbr/brauer.hpp"

#include <algorithm>
#include <set>

namespace hypbr {

HyperCurve::HyperCurve(Rational c, Poly f) : c_(std::move(c)), f_(std::move(f)) {
    if (c_ == 0) throw std::domain_error("HyperCurve: c = 0");
    if (f_.degree() < 3) throw std::domain_error("HyperCurve: deg f < 3");
    if (f_.lc() != 1) throw std::domain_error("HyperCurve: f not monic");
    if (!is_squarefree(f_)) throw std::domain_error("HyperCurve: f not squarefree");
}

int HyperCurve::genus() const {
    int d = f_.degree();
    if (d % 2) ++d;
    return (d - 1) / 2;
}

namespace {

Poly strip_squares(const Poly& e) {
    if (e.is_zero()) throw std::domain_error("QuaternionSymbol: zero entry");
    if (e.is_constant()) return Poly(Rational(strip_square_divisors(e.constant_value())));
    // e = lc(e) * monic part; gcd-based odd-exponent extraction keeps the
    // remainder-sequence coefficients from forcing huge integer factorizations
    return Poly(Rational(strip_square_divisors(e.lc()))) * odd_exponent_part(e);
}

}  // namespace

QuaternionSymbol::QuaternionSymbol(const Poly& a, const Poly& b)
    : a_(strip_squares(a)), b_(strip_squares(b)) {
    if (b_ < a_) std::swap(a_, b_);
}

QuaternionSymbol::QuaternionSymbol(const RationalFunction& a, const RationalFunction& b)
    : QuaternionSymbol(a.num() * a.den(), b.num() * b.den()) {}

bool QuaternionSymbol::is_split() const {
    // after stripping, a rational square entry is exactly the constant 1
    return a_ == Poly(Rational(1)) || b_ == Poly(Rational(1));
}

bool QuaternionSymbol::operator==(const QuaternionSymbol& o) const {
    return a_ == o.a_ && b_ == o.b_;
}

bool QuaternionSymbol::operator<(const QuaternionSymbol& o) const {
    if (!(a_ == o.a_)) return a_ < o.a_;
    return b_ < o.b_;
}

BrauerElement::BrauerElement(std::vector<QuaternionSymbol> symbols)
    : symbols_(std::move(symbols)) {
    std::sort(symbols_.begin(), symbols_.end());
}

BrauerElement BrauerElement::single(const Poly& a, const Poly& b) {
    return BrauerElement({QuaternionSymbol(a, b)});
}

bool BrauerElement::all_constant() const {
    for (const auto& s : symbols_)
        if (!s.is_constant()) return false;
    return true;
}

BrauerElement BrauerElement::operator+(const BrauerElement& o) const {
    std::vector<QuaternionSymbol> v = symbols_;
    v.insert(v.end(), o.symbols_.begin(), o.symbols_.end());
    return BrauerElement(std::move(v));
}

BrauerElement BrauerElement::reduced() const {
    std::vector<QuaternionSymbol> v;
    for (const auto& s : symbols_) {
        if (s.is_split()) continue;
        // 2-torsion: a duplicate cancels
        auto it = std::find(v.begin(), v.end(), s);
        if (it != v.end())
            v.erase(it);
        else
            v.push_back(s);
    }
    return BrauerElement(std::move(v));
}

HalfInvariant hilbert(const Rational& a, const Rational& b, const Place& v) {
    if (a == 0 || b == 0) throw std::domain_error("hilbert: zero entry");
    if (v.is_real())
        return (a < 0 && b < 0) ? HalfInvariant::half() : HalfInvariant::zero();

    const Integer& p = v.prime();
    long alpha = valuation(a, p), beta = valuation(b, p);
    Integer pa;
    mpz_pow_ui(pa.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(std::abs(alpha)));
    Rational u = alpha >= 0 ? Rational(a / Rational(pa)) : Rational(a * Rational(pa));
    Integer pb;
    mpz_pow_ui(pb.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(std::abs(beta)));
    Rational w = beta >= 0 ? Rational(b / Rational(pb)) : Rational(b * Rational(pb));

    if (p == 2) {
        // (-1)^( eps(u)eps(w) + alpha*omega(w) + beta*omega(u) )
        Integer um = rational_mod(u, Integer(8));
        Integer wm = rational_mod(w, Integer(8));
        auto eps = [](const Integer& x) { return ((x - 1) / 2) % 2 != 0; };
        auto omega = [](const Integer& x) { return ((x * x - 1) / 8) % 2 != 0; };
        bool nontrivial = (eps(um) && eps(wm)) ^ ((alpha % 2 != 0) && omega(wm)) ^
                          ((beta % 2 != 0) && omega(um));
        return nontrivial ? HalfInvariant::half() : HalfInvariant::zero();
    }
    // (-1)^(alpha beta (p-1)/2) (u|p)^beta (w|p)^alpha
    int sign = 1;
    if ((alpha % 2 != 0) && (beta % 2 != 0) && ((p - 1) / 2) % 2 != 0) sign = -sign;
    if (beta % 2 != 0) sign *= legendre(rational_mod(u, p), p);
    if (alpha % 2 != 0) sign *= legendre(rational_mod(w, p), p);
    return sign == -1 ? HalfInvariant::half() : HalfInvariant::zero();
}

std::map<Place, HalfInvariant> constant_invariant_profile(const BrauerElement& e) {
    if (!e.all_constant())
        throw std::domain_error("constant_invariant_profile: non-constant entry");
    std::set<Place> support;
    support.insert(Place::real());
    support.insert(Place::finite(Integer(2)));
    for (const auto& s : e.symbols()) {
        for (const Rational& c : {s.a().constant_value(), s.b().constant_value()}) {
            for (const auto& [p, k] : factor(Integer(c.get_num() * c.get_den())).primes)
                support.insert(Place::finite(p));
        }
    }
    std::map<Place, HalfInvariant> out;
    for (const Place& v : support) {
        HalfInvariant inv;
        for (const auto& s : e.symbols())
            inv += hilbert(s.a().constant_value(), s.b().constant_value(), v);
        if (!inv.is_zero()) out[v] = inv;
    }
    return out;
}

bool constant_class_equal(const BrauerElement& e1, const BrauerElement& e2) {
    return constant_invariant_profile(e1 + e2).empty();
}

QuaternionSymbol curve_square_rewrite(const QuaternionSymbol& sym, const HyperCurve& curve) {
    return QuaternionSymbol(sym.a(), sym.b() * curve.cf());
}

}  // namespace hypbr
