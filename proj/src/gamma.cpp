#include "hypbr/gamma.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace hypbr {

P1Place P1Place::finite(const Poly& q) {
    if (q.degree() < 1 || q.lc() != 1)
        throw std::domain_error("P1Place: need a monic polynomial of degree >= 1");
    PolyFactorization fac = factor_poly(q);
    if (fac.factors.size() != 1 || fac.factors[0].second != 1)
        throw std::domain_error("P1Place: " + q.str() + " is not irreducible");
    return finite_unchecked(q);
}

P1Place P1Place::finite_unchecked(const Poly& q) {
    P1Place v;
    v.inf_ = false;
    v.q_ = q;
    return v;
}

P1Place P1Place::infinity() { return P1Place(); }

const Poly& P1Place::poly() const {
    if (inf_) throw std::domain_error("P1Place: infinity has no polynomial");
    return q_;
}

bool P1Place::operator==(const P1Place& o) const {
    return inf_ == o.inf_ && (inf_ || q_ == o.q_);
}

bool P1Place::operator<(const P1Place& o) const {
    if (inf_ != o.inf_) return !inf_;
    if (inf_) return false;
    return q_ < o.q_;
}

std::string P1Place::str() const { return inf_ ? "inf" : q_.str(); }

std::vector<std::pair<Poly, Rational>> rosset_tate_sequence(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw ZeroDivisorError("rosset_tate_sequence: g = 0");
    if (gcd(f, g).degree() != 0)
        throw ZeroDivisorError("rosset_tate_sequence: gcd(f, g) nonconstant");
    std::vector<std::pair<Poly, Rational>> seq;
    Poly r0 = f, r1 = g;
    seq.emplace_back(r0, r0.lc());
    seq.emplace_back(r1, r1.lc());
    for (;;) {
        Poly r2 = divrem(r0, r1).second;
        if (r2.is_zero()) break;
        seq.emplace_back(r2, r2.lc());
        r0 = r1;
        r1 = r2;
    }
    return seq;
}

EtaleAlgebraPtr curve_algebra(const HyperCurve& curve) { return make_etale(curve.f()); }

BrauerElement gamma_prime(const HyperCurve& curve, const EtaleElement& ell) {
    if (ell.algebra()->modulus() != curve.f())
        throw std::domain_error("gamma_prime: ell does not live on this curve");
    if (!ell.is_unit()) throw ZeroDivisorError("gamma_prime: ell not a unit");
    if (ell.rep().is_constant())
        return BrauerElement::single(ell.rep(), curve.f()).reduced();
    auto seq = rosset_tate_sequence(curve.f(), ell.rep());
    std::vector<QuaternionSymbol> syms;
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
        syms.emplace_back(seq[i + 1].first, seq[i].first);
        syms.emplace_back(Poly(seq[i + 1].second), Poly(seq[i].second));
    }
    return BrauerElement(std::move(syms)).reduced();
}

bool is_unramified(const HyperCurve& curve, const EtaleElement& ell) {
    if (!ell.is_unit()) throw ZeroDivisorError("is_unramified: ell not a unit");
    if (curve.parity() == Parity::Odd) return true;
    return class_in_Lc(ell, curve.c());
}

EtaleElement x_minus_alpha_closed_point(const HyperCurve& curve, const Poly& p) {
    if (p.is_zero() || p.lc() != 1) throw std::domain_error("x_minus_alpha: p must be monic");
    if (gcd(p, curve.f()).degree() != 0)
        throw std::domain_error("x_minus_alpha: point lies over the branch locus");
    PolyFactorization fac = factor_poly(p);
    if (fac.factors.size() != 1 || fac.factors[0].second != 1)
        throw std::domain_error("x_minus_alpha: p not irreducible");
    Poly signed_p = p.degree() % 2 ? -p : p;
    return reduce(curve_algebra(curve), signed_p);
}

namespace {

// multiplicity of q in a and the cofactor a / q^m
std::pair<int, Poly> strip_factor(const Poly& a, const Poly& q) {
    int m = 0;
    Poly u = a;
    while (u.degree() >= q.degree()) {
        auto [quo, rem] = divrem(u, q);
        if (!rem.is_zero()) break;
        u = quo;
        ++m;
    }
    return {m, u};
}

Poly mod_q(const Poly& a, const Poly& q) { return divrem(a, q).second; }

Poly inv_mod_q(const Poly& a, const Poly& q) {
    ExtGcd e = ext_gcd(a, q);
    if (e.g.degree() != 0) throw ZeroDivisorError("inverse mod q: common factor");
    return mod_q(e.s, q);
}

}  // namespace

SquareStatus is_square_in_kq(const Poly& z, const Poly& q, int trials) {
    Poly zr = mod_q(z, q);
    if (zr.is_zero()) throw std::domain_error("is_square_in_kq: z = 0 mod q");
    if (q.degree() == 1) {
        Rational v = zr.constant_value();
        return is_rational_square(v) ? SquareStatus::Square : SquareStatus::NonSquare;
    }
    {
        PolyFactorization fac = factor_poly(zr);
        bool even = true;
        for (const auto& [h, e] : fac.factors)
            if (e % 2) even = false;
        if (even && is_rational_square(fac.content)) return SquareStatus::Square;
    }
    // witness primes: split primes of q where the reduction of z is a unit
    Rational disc_q = discriminant(q);
    int passes = 0;
    Integer p(1);
    int scanned = 0;
    while (passes < trials && scanned < 400) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (p == 2) continue;
        ++scanned;
        bool bad = false;
        for (int i = 0; i <= q.degree() && !bad; ++i)
            if (q[i].get_den() % p == 0) bad = true;
        for (int i = 0; i <= zr.degree() && !bad; ++i)
            if (zr[i].get_den() % p == 0) bad = true;
        if (bad) continue;
        // q must stay squarefree mod p so its roots give unramified
        // degree-one primes of k(q)
        if (valuation(disc_q, p) != 0) continue;
        long pl = p.get_si();
        auto to_mod = [&](const Poly& f) {
            std::vector<long> c(f.degree() + 1);
            for (int i = 0; i <= f.degree(); ++i) c[i] = rational_mod(f[i], p).get_si();
            return c;
        };
        std::vector<long> qc = to_mod(q), zc = to_mod(zr);
        auto horner = [&](const std::vector<long>& c, long r) {
            long v = 0;
            for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = (v * r + c[i]) % pl;
            return v;
        };
        bool prime_used = false;
        for (long r = 0; r < pl; ++r) {
            if (horner(qc, r) != 0) continue;  // not a root of q mod p
            long zm = horner(zc, r);
            if (zm == 0) continue;
            prime_used = true;
            if (legendre(Integer(zm), p) == -1) return SquareStatus::NonSquare;
        }
        if (prime_used) ++passes;
    }
    return SquareStatus::ProbablySquare;
}

ResidueResult residue_at(const BrauerElement& e, const P1Place& place, int trials) {
    if (place.is_infinity()) {
        Rational rep(1);
        for (const auto& s : e.symbols()) {
            long va = -s.a().degree(), vb = -s.b().degree();
            Rational term(1);
            if ((va % 2 != 0) && (vb % 2 != 0)) term = -term;
            // lc(a)^vb * lc(b)^(-va), exponents mod 2
            if (vb % 2 != 0) term *= s.a().lc();
            if (va % 2 != 0) term *= s.b().lc();
            rep *= term;
        }
        SquareStatus st = is_rational_square(rep) ? SquareStatus::Square : SquareStatus::NonSquare;
        return {place, Poly(rep), st};
    }
    const Poly& q = place.poly();
    Poly rep(Rational(1));
    for (const auto& s : e.symbols()) {
        auto [va, ua] = strip_factor(s.a(), q);
        auto [vb, ub] = strip_factor(s.b(), q);
        Poly term(Rational((va % 2) && (vb % 2) ? -1 : 1));
        if (vb % 2) term = mod_q(term * ua, q);
        if (va % 2) term = mod_q(term * inv_mod_q(ub, q), q);
        rep = mod_q(rep * term, q);
    }
    SquareStatus st = is_square_in_kq(rep, q, trials);
    return {place, rep, st};
}

namespace {

void collect_entry_places(const BrauerElement& e, std::set<P1Place>& out) {
    for (const auto& s : e.symbols()) {
        for (const Poly* entry : {&s.a(), &s.b()}) {
            if (entry->is_constant()) continue;
            for (const auto& [h, mult] : factor_poly(*entry).factors)
                out.insert(P1Place::finite_unchecked(h));
        }
    }
}

}  // namespace

bool residue_profile_equal(const BrauerElement& e1, const BrauerElement& e2,
                           const std::vector<P1Place>& places, int trials) {
    BrauerElement d = (e1 + e2).reduced();
    std::set<P1Place> all(places.begin(), places.end());
    collect_entry_places(d, all);
    for (const P1Place& v : all)
        if (!residue_at(d, v, trials).possibly_trivial()) return false;
    return true;
}

namespace {

// Rewrite an entry's f-part through y^2 = c f: a factor d | f equals
// c * (f/d) modulo squares in k(C). Keep whichever side has smaller degree.
Poly canonical_f_rewrite(const Poly& entry, const HyperCurve& curve) {
    if (entry.is_constant()) return entry;
    Poly d(Rational(1));
    for (const auto& [h, mult] : factor_poly(entry).factors)
        if (mult % 2 && divides(h, curve.f())) d = d * h;
    if (d.is_constant()) return entry;
    Poly cof = divexact(curve.f(), d) * curve.c();
    bool swap = cof.degree() < d.degree() || (cof.degree() == d.degree() && cof < d);
    if (!swap) return entry;
    // entry = u * d (squarefree); replace d by c*(f/d)
    return divexact(entry, d) * cof;
}

BrauerElement rewrite_element(const BrauerElement& e, const HyperCurve& curve) {
    std::vector<QuaternionSymbol> syms;
    for (const auto& s : e.symbols())
        syms.emplace_back(canonical_f_rewrite(s.a(), curve), canonical_f_rewrite(s.b(), curve));
    return BrauerElement(std::move(syms));
}

// multiply one entry of every symbol by c*f (one curve relation per symbol);
// the symbol is symmetric, so both sides are tried as separate variants
BrauerElement cf_rewrite_b(const BrauerElement& e, const HyperCurve& curve) {
    std::vector<QuaternionSymbol> syms;
    for (const auto& s : e.symbols()) syms.push_back(curve_square_rewrite(s, curve));
    return BrauerElement(std::move(syms));
}

BrauerElement cf_rewrite_a(const BrauerElement& e, const HyperCurve& curve) {
    std::vector<QuaternionSymbol> syms;
    for (const auto& s : e.symbols())
        syms.emplace_back(s.a() * curve.cf(), s.b());
    return BrauerElement(std::move(syms));
}

// invariant profile of evaluated symbols over a bounded support: 2, infinity,
// and the odd primes up to 1e5 dividing some entry value. Entry values carry
// remainder-sequence coefficients, so their full support is not computable at
// reasonable cost; this is the secondary guard behind the exact residue
// certificates and a bounded support suffices.
std::optional<std::map<Place, HalfInvariant>> eval_profile(const BrauerElement& d,
                                                           const Rational& x0) {
    std::vector<std::pair<Rational, Rational>> vals;
    for (const auto& s : d.symbols()) {
        Rational av = s.a().eval(x0), bv = s.b().eval(x0);
        if (av == 0 || bv == 0) return std::nullopt;
        vals.emplace_back(av, bv);
    }
    std::set<Place> support{Place::real(), Place::finite(Integer(2))};
    for (const auto& [av, bv] : vals)
        for (const Rational* v : {&av, &bv}) {
            Integer n = v->get_num() * v->get_den();
            if (n < 0) n = -n;
            for (long p = 3; p <= 100000 && Integer(p) * p <= n; p += 2)
                while (n % p == 0) {
                    support.insert(Place::finite(Integer(p)));
                    n /= p;
                }
            if (n > 1 && n <= Integer("1000000000000000000"))
                for (const auto& [p, e] : factor(n).primes) support.insert(Place::finite(p));
        }
    std::map<Place, HalfInvariant> out;
    for (const Place& v : support) {
        HalfInvariant inv;
        for (const auto& [av, bv] : vals) inv += hilbert(av, bv, v);
        if (!inv.is_zero()) out[v] = inv;
    }
    return out;
}

bool evaluation_difference_constant(const BrauerElement& d) {
    const int wanted = 5;
    int have = 0;
    std::optional<std::map<Place, HalfInvariant>> first;
    for (long n = 2; have < wanted && n < 200; ++n) {
        auto prof = eval_profile(d, Rational(n * n + n + 1));
        if (!prof) continue;
        if (!first)
            first = prof;
        else if (*prof != *first)
            return false;
        ++have;
    }
    return have == wanted;
}

}  // namespace

bool class_equal_mod_constants(const BrauerElement& e1, const BrauerElement& e2,
                               const HyperCurve& curve) {
    // each variant applies the curve relation differently; any one of them
    // exhibiting a trivial P^1 residue profile certifies a constant difference
    const BrauerElement variants[6][2] = {
        {e1, e2},
        {rewrite_element(e1, curve), rewrite_element(e2, curve)},
        {e1, cf_rewrite_b(e2, curve)},
        {e1, cf_rewrite_a(e2, curve)},
        {cf_rewrite_b(e1, curve), e2},
        {cf_rewrite_a(e1, curve), e2},
    };
    for (const auto& [a, b] : variants) {
        BrauerElement d = (a + b).reduced();
        if (d.is_trivial_multiset()) return true;
        if (!residue_profile_equal(d, BrauerElement(), {P1Place::infinity()})) continue;
        if (evaluation_difference_constant(d)) return true;
    }
    return false;
}

}  // namespace hypbr
