#include "hypbr/polyfactor.hpp"

#include <algorithm>
#include <random>

namespace hypbr {

namespace {

// Integer polynomials as coefficient vectors, low degree first. All modular
// arithmetic below keeps coefficients in [0, m).
using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zmod(const ZPoly& a, const Integer& m) {
    ZPoly r(a);
    for (auto& c : r) {
        c %= m;
        if (c < 0) c += m;
    }
    ztrim(r);
    return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly r(std::max(a.size(), b.size()), Integer(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % m;
    ztrim(r);
    return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly r(std::max(a.size(), b.size()), Integer(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) {
        r[i] = (r[i] - b[i]) % m;
        if (r[i] < 0) r[i] += m;
    }
    ztrim(r);
    return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % m;
    ztrim(r);
    return r;
}

// division by b with invertible leading coefficient mod m
std::pair<ZPoly, ZPoly> zdivrem(const ZPoly& a, const ZPoly& b, const Integer& m) {
    Integer lci = mod_inverse(b.back(), m);
    ZPoly q, r(a);
    ztrim(r);
    int db = zdeg(b);
    if (zdeg(r) >= db) q.assign(zdeg(r) - db + 1, Integer(0));
    while (zdeg(r) >= db) {
        int k = zdeg(r) - db;
        Integer c = r.back() * lci % m;
        q[k] = c;
        for (size_t i = 0; i < b.size(); ++i) {
            r[k + i] = (r[k + i] - c * b[i]) % m;
            if (r[k + i] < 0) r[k + i] += m;
        }
        ztrim(r);
    }
    ztrim(q);
    return {q, r};
}

ZPoly zmonic(const ZPoly& a, const Integer& p) {
    if (a.empty()) return a;
    Integer inv = mod_inverse(a.back(), p);
    ZPoly r(a);
    for (auto& c : r) c = c * inv % p;
    return r;
}

ZPoly zgcd(ZPoly a, ZPoly b, const Integer& p) {
    a = zmod(a, p);
    b = zmod(b, p);
    while (!b.empty()) {
        ZPoly r = zdivrem(a, b, p).second;
        a = b;
        b = r;
    }
    return a.empty() ? a : zmonic(a, p);
}

ZPoly zderiv(const ZPoly& a, const Integer& m) {
    if (a.size() <= 1) return {};
    ZPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Integer(static_cast<long>(i)) % m;
    ztrim(r);
    return r;
}

ZPoly zpowmod(const ZPoly& base, Integer e, const ZPoly& mod_poly, const Integer& p) {
    ZPoly result{Integer(1)};
    ZPoly b = zdivrem(base, mod_poly, p).second;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            result = zdivrem(zmul(result, b, p), mod_poly, p).second;
        b = zdivrem(zmul(b, b, p), mod_poly, p).second;
        e >>= 1;
    }
    return result;
}

// --- Cantor-Zassenhaus over F_p (p odd) -------------------------------------

void equal_degree_split(const ZPoly& u, int d, const Integer& p, std::mt19937_64& rng,
                        std::vector<ZPoly>& out) {
    if (zdeg(u) == d) {
        out.push_back(u);
        return;
    }
    Integer card = 1;
    for (int i = 0; i < d; ++i) card *= p;
    Integer e = (card - 1) / 2;
    for (;;) {
        ZPoly r(zdeg(u), Integer(0));
        for (auto& c : r) c = Integer(static_cast<unsigned long>(rng() % 1000000007)) % p;
        ztrim(r);
        if (r.empty()) continue;
        ZPoly w = zpowmod(r, e, u, p);
        ZPoly w1 = zsub(w, ZPoly{Integer(1)}, p);
        if (w1.empty()) continue;
        ZPoly g = zgcd(w1, u, p);
        if (zdeg(g) > 0 && zdeg(g) < zdeg(u)) {
            equal_degree_split(g, d, p, rng, out);
            equal_degree_split(zdivrem(u, g, p).first, d, p, rng, out);
            return;
        }
    }
}

std::vector<ZPoly> factor_mod_p(const ZPoly& f_in, const Integer& p) {
    // f squarefree mod p; returns monic irreducible factors
    std::mt19937_64 rng(0x5eed5eed1234ULL);
    ZPoly f = zmonic(zmod(f_in, p), p);
    std::vector<std::pair<ZPoly, int>> dd;  // (product of irreducibles of degree d, d)
    ZPoly g = f;
    ZPoly h{Integer(0), Integer(1)};  // x
    int d = 0;
    while (zdeg(g) > 0 && 2 * (d + 1) <= zdeg(g)) {
        ++d;
        h = zpowmod(h, p, g, p);
        ZPoly hx = zsub(h, ZPoly{Integer(0), Integer(1)}, p);
        if (hx.empty()) {
            // x^(p^d) = x mod g: every remaining factor has degree exactly d
            dd.emplace_back(g, d);
            g = ZPoly{Integer(1)};
            break;
        }
        ZPoly gd = zgcd(hx, g, p);
        if (zdeg(gd) > 0) {
            dd.emplace_back(gd, d);
            g = zdivrem(g, gd, p).first;
            h = zdivrem(h, g, p).second;
        }
    }
    if (zdeg(g) > 0) dd.emplace_back(g, zdeg(g));
    std::vector<ZPoly> irreducibles;
    for (auto& [u, deg_d] : dd) equal_degree_split(u, deg_d, p, rng, irreducibles);
    return irreducibles;
}

// --- Hensel lifting ----------------------------------------------------------

struct HenselPair {
    ZPoly g, h, s, t;  // f = g*h, s*g + t*h = 1 (mod m); h monic
};

// one quadratic step: modulus m -> m^2 (results reduced mod m2)
HenselPair hensel_step(const ZPoly& f, const HenselPair& in, const Integer& m) {
    Integer m2 = m * m;
    const ZPoly &g = in.g, &h = in.h, &s = in.s, &t = in.t;
    ZPoly e = zsub(zmod(f, m2), zmul(g, h, m2), m2);
    auto [q, r] = zdivrem(zmul(s, e, m2), h, m2);
    ZPoly g1 = zadd(zadd(g, zmul(t, e, m2), m2), zmul(q, g, m2), m2);
    ZPoly h1 = zadd(h, r, m2);
    ZPoly b = zsub(zadd(zmul(s, g1, m2), zmul(t, h1, m2), m2), ZPoly{Integer(1)}, m2);
    auto [c, dpoly] = zdivrem(zmul(s, b, m2), h1, m2);
    ZPoly s1 = zsub(s, dpoly, m2);
    ZPoly t1 = zsub(zsub(t, zmul(t, b, m2), m2), zmul(c, g1, m2), m2);
    return {g1, h1, s1, t1};
}

// Bezout mod p for coprime a, b: s*a + t*b = 1
std::pair<ZPoly, ZPoly> zbezout(const ZPoly& a, const ZPoly& b, const Integer& p) {
    ZPoly r0 = zmod(a, p), r1 = zmod(b, p);
    ZPoly s0{Integer(1)}, s1, t0, t1{Integer(1)};
    while (!r1.empty()) {
        auto [q, r] = zdivrem(r0, r1, p);
        r0 = r1;
        r1 = r;
        ZPoly s2 = zsub(s0, zmul(q, s1, p), p);
        ZPoly t2 = zsub(t0, zmul(q, t1, p), p);
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    Integer inv = mod_inverse(r0.empty() ? Integer(1) : r0[0], p);
    ZPoly s, t;
    for (auto& c : s0) s.push_back(c * inv % p);
    for (auto& c : t0) t.push_back(c * inv % p);
    ztrim(s);
    ztrim(t);
    return {s, t};
}

// lift f = lc(f) * prod(monic factors) from mod p to mod p^2^j >= target
void multifactor_hensel(const ZPoly& f, const std::vector<ZPoly>& factors, const Integer& p,
                        const Integer& target, std::vector<ZPoly>& out) {
    if (factors.size() == 1) {
        // the lifted factor is f made monic mod target
        ZPoly fm = zmod(f, target);
        Integer inv = mod_inverse(fm.back(), target);
        for (auto& c : fm) c = c * inv % target;
        out.push_back(fm);
        return;
    }
    size_t half = factors.size() / 2;
    ZPoly g0{f.back() % p};  // carries lc
    for (size_t i = 0; i < half; ++i) g0 = zmul(g0, factors[i], p);
    ZPoly h0{Integer(1)};
    for (size_t i = half; i < factors.size(); ++i) h0 = zmul(h0, factors[i], p);
    auto [s0, t0] = zbezout(g0, h0, p);
    HenselPair pair{g0, h0, s0, t0};
    Integer m = p;
    while (m < target) {
        pair = hensel_step(f, pair, m);
        m = m * m;
    }
    std::vector<ZPoly> left(factors.begin(), factors.begin() + half);
    std::vector<ZPoly> right(factors.begin() + half, factors.end());
    multifactor_hensel(zmod(pair.g, target), left, p, target, out);
    multifactor_hensel(zmod(pair.h, target), right, p, target, out);
}

// --- Zassenhaus --------------------------------------------------------------

Integer balanced(const Integer& c, const Integer& m) {
    Integer r = c % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

ZPoly poly_to_zpoly(const Poly& a) {
    // a must have integer coefficients
    ZPoly r;
    r.reserve(a.degree() + 1);
    for (int i = 0; i <= a.degree(); ++i) {
        if (a[i].get_den() != 1) throw std::logic_error("poly_to_zpoly: non-integer");
        r.push_back(a[i].get_num());
    }
    return r;
}

Poly primitive_integer_poly(const Poly& f) {
    // f nonzero with rational coefficients -> primitive integer poly, lc > 0
    Rational cont = f.content();
    return f / cont;
}

// factor a primitive squarefree integer polynomial with positive lc
std::vector<Poly> factor_squarefree_primitive(const Poly& F) {
    int n = F.degree();
    if (n == 1) return {F.monic()};
    ZPoly Fz = poly_to_zpoly(F);

    // pick an odd prime keeping F squarefree mod p, preferring few factors
    static const long kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                   43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    Integer best_p = 0;
    std::vector<ZPoly> best_factors;
    int good_found = 0;
    for (long pl : kPrimes) {
        Integer p(pl);
        if (Fz.back() % p == 0) continue;
        ZPoly fp = zmod(Fz, p);
        if (zdeg(fp) != n) continue;
        ZPoly der = zderiv(fp, p);
        if (der.empty()) continue;
        if (zdeg(zgcd(fp, der, p)) != 0) continue;
        auto factors = factor_mod_p(Fz, p);
        if (best_factors.empty() || factors.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(factors);
        }
        if (++good_found >= 3 || best_factors.size() == 1) break;
    }
    if (best_p == 0) throw std::logic_error("factor: no good prime found");
    if (best_factors.size() == 1) return {F.monic()};

    std::sort(best_factors.begin(), best_factors.end());

    // Landau-Mignotte: any integer factor of F has |coeff| <= 2^n * ||F||_2;
    // search candidates lc(F)*prod(subset), so allow the extra lc factor.
    Integer norm2 = 0;
    for (const auto& c : Fz) norm2 += c * c;
    Integer bound;
    mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
    bound += 1;
    Integer lcF = Fz.back();
    bound *= Integer(1) << n;
    Integer lcabs = lcF < 0 ? -lcF : lcF;
    bound *= lcabs;
    Integer target = best_p;
    while (target <= 2 * bound) target *= target;

    std::vector<ZPoly> lifted;
    multifactor_hensel(Fz, best_factors, best_p, target, lifted);

    // subset recombination
    std::vector<int> remaining(lifted.size());
    for (size_t i = 0; i < lifted.size(); ++i) remaining[i] = static_cast<int>(i);
    Poly rest = F;
    std::vector<Poly> result;

    auto try_subset = [&](const std::vector<int>& subset) -> bool {
        ZPoly prod{rest.lc().get_num()};
        for (int idx : subset) prod = zmul(prod, lifted[idx], target);
        Poly cand;
        {
            std::vector<Rational> v;
            v.reserve(prod.size());
            for (const auto& c : prod) v.emplace_back(balanced(c, target));
            cand = Poly(std::move(v));
        }
        if (cand.is_zero()) return false;
        cand = primitive_integer_poly(cand);
        if (cand.degree() < 1) return false;
        auto [q, r] = divrem(rest, cand);
        if (!r.is_zero()) return false;
        result.push_back(cand.monic());
        rest = primitive_integer_poly(q);
        return true;
    };

    size_t s = 1;
    while (2 * s <= remaining.size()) {
        bool found = false;
        std::vector<int> idx(s);
        // iterate s-subsets of remaining in lexicographic order
        std::vector<size_t> pos(s);
        for (size_t i = 0; i < s; ++i) pos[i] = i;
        for (;;) {
            for (size_t i = 0; i < s; ++i) idx[i] = remaining[pos[i]];
            if (try_subset(idx)) {
                std::vector<int> keep;
                for (size_t i = 0, j = 0; i < remaining.size(); ++i) {
                    if (j < s && pos[j] == i)
                        ++j;
                    else
                        keep.push_back(remaining[i]);
                }
                remaining = keep;
                found = true;
                break;
            }
            // next combination
            size_t k = s;
            while (k > 0 && pos[k - 1] == remaining.size() - s + (k - 1)) --k;
            if (k == 0) break;
            ++pos[k - 1];
            for (size_t i = k; i < s; ++i) pos[i] = pos[i - 1] + 1;
        }
        if (!found) ++s;
    }
    if (rest.degree() > 0) result.push_back(rest.monic());
    return result;
}

// Yun's squarefree decomposition of a monic polynomial over Q
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
    std::vector<std::pair<Poly, int>> out;
    Poly u = gcd(f, f.derivative());
    if (u.degree() == 0) {
        out.emplace_back(f.monic(), 1);
        return out;
    }
    Poly v = divexact(f, u).monic();
    Poly w = divexact(f.derivative(), u);
    int i = 1;
    while (v.degree() > 0) {
        Poly z = w - v.derivative();
        Poly h = z.is_zero() ? v : gcd(v, z);
        if (h.degree() > 0) out.emplace_back(h.monic(), i);
        v = divexact(v, h).monic();
        if (!z.is_zero()) w = divexact(z, h);
        ++i;
    }
    return out;
}

}  // namespace

Poly PolyFactorization::reassemble() const {
    Poly r(content);
    for (const auto& [q, e] : factors)
        for (int i = 0; i < e; ++i) r = r * q;
    return r;
}

PolyFactorization factor_poly(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("factor_poly: zero");
    PolyFactorization out;
    out.content = f.is_constant() ? f.constant_value() : f.lc();
    if (f.degree() < 1) return out;
    Poly fm = f.monic();
    for (const auto& [part, mult] : squarefree_decomposition(fm)) {
        Poly prim = primitive_integer_poly(part);
        for (const Poly& q : factor_squarefree_primitive(prim))
            out.factors.emplace_back(q, mult);
    }
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

Poly square_class_rep(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("square_class_rep: zero");
    PolyFactorization fac = factor_poly(f);
    Poly r(Rational(squarefree_part(fac.content)));
    for (const auto& [q, e] : fac.factors)
        if (e % 2) r = r * q;
    return r;
}

Poly odd_exponent_part(const Poly& f) {
    if (f.degree() < 1) throw std::domain_error("odd_exponent_part: constant");
    Poly r(Rational(1));
    for (const auto& [part, mult] : squarefree_decomposition(f.monic()))
        if (mult % 2) r = r * part;
    return r;
}

}  // namespace hypbr
