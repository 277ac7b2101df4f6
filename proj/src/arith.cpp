#include "hypbr/arith.hpp"

#include <algorithm>
#include <map>

namespace hypbr {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_rational_square(const Rational& q) {
    if (q < 0) return false;
    if (q == 0) return true;
    return mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(q.get_den().get_mpz_t());
}

namespace {

bool miller_rabin_witness(const Integer& n, const Integer& a) {
    // returns true if a witnesses compositeness of odd n > 2
    Integer d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    Integer x = mod_pow(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 0; i + 1 < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    static const long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (long p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // this base set is a proven deterministic test below 3.317e24
    for (long a : small)
        if (miller_rabin_witness(n, Integer(a))) return false;
    return true;
}

namespace {

Integer pollard_rho(const Integer& n) {
    // Brent's variant with deterministic restarts; n odd composite, no small factors
    for (Integer c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        Integer ys = y, q = 1;
        const long m = 64;
        long r = 1;
        while (d == 1) {
            x = y;
            for (long i = 0; i < r; ++i) y = (y * y + c) % n;
            long k = 0;
            while (k < r && d == 1) {
                ys = y;
                long lim = std::min(m, r - k);
                for (long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    Integer diff = x - y;
                    if (diff < 0) diff = -diff;
                    q = q * diff % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                Integer diff = x - ys;
                if (diff < 0) diff = -diff;
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (d != n) return d;
    }
}

void factor_into(Integer n, std::map<Integer, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

IntFactorization factor(const Integer& n) {
    if (n == 0) throw std::domain_error("factor: zero");
    IntFactorization f;
    Integer m = n;
    if (m < 0) {
        f.sign = -1;
        m = -m;
    }
    std::map<Integer, int> acc;
    for (long p = 2; p <= 1000000 && Integer(p) * p <= m; p == 2 ? p = 3 : p += 2) {
        while (m % p == 0) {
            ++acc[Integer(p)];
            m /= p;
        }
    }
    if (m > 1) factor_into(m, acc);
    f.primes.assign(acc.begin(), acc.end());
    return f;
}

long valuation(const Integer& n, const Integer& p) {
    if (n == 0) throw std::domain_error("valuation: zero argument");
    Integer rest;
    return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

long valuation(const Rational& q, const Integer& p) {
    if (q == 0) throw std::domain_error("valuation: zero argument");
    long v = 0;
    if (q.get_num() != 0) v += valuation(Integer(q.get_num()), p);
    v -= valuation(Integer(q.get_den()), p);
    return v;
}

int legendre(const Integer& a, const Integer& p) {
    if (p == 2 || !is_prime(p)) throw std::domain_error("legendre: p must be an odd prime");
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

Integer squarefree_part_int(const Integer& n) {
    if (n == 0) throw std::domain_error("squarefree_part: zero");
    IntFactorization f = factor(n);
    Integer d = f.sign;
    for (const auto& [p, e] : f.primes)
        if (e % 2) d *= p;
    return d;
}

Integer squarefree_part(const Rational& q) {
    if (q == 0) throw std::domain_error("squarefree_part: zero");
    // num/den ~ num*den modulo squares
    return squarefree_part_int(Integer(q.get_num() * q.get_den()));
}

Integer strip_square_divisors(const Rational& q) {
    if (q == 0) throw std::domain_error("strip_square_divisors: zero");
    Integer n = q.get_num() * q.get_den();
    Integer d = 1;
    if (n < 0) {
        d = -1;
        n = -n;
    }
    for (long p = 2; p <= 100000 && Integer(p) * p <= n; p == 2 ? p = 3 : p += 2) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e % 2) d *= p;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) return d;
    // small enough leftovers factor quickly and exactly
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) return d * squarefree_part_int(n);
    return d * n;
}

Place Place::finite(const Integer& p) {
    if (!is_prime(p)) throw std::domain_error("Place: not a prime: " + p.get_str());
    Place v;
    v.real_ = false;
    v.p_ = p;
    return v;
}

Place Place::real() {
    Place v;
    v.real_ = true;
    return v;
}

const Integer& Place::prime() const {
    if (real_) throw std::domain_error("Place: real place has no prime");
    return p_;
}

bool Place::operator==(const Place& o) const {
    return real_ == o.real_ && (real_ || p_ == o.p_);
}

bool Place::operator<(const Place& o) const {
    if (real_ != o.real_) return !real_;  // finite < real
    if (real_) return false;
    return p_ < o.p_;
}

std::string Place::str() const { return real_ ? "inf" : p_.get_str(); }

bool is_local_square(const Rational& q, const Place& v) {
    if (q == 0) throw std::domain_error("is_local_square: zero");
    if (v.is_real()) return q > 0;
    const Integer& p = v.prime();
    long val = valuation(q, p);
    if (val % 2) return false;
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(std::abs(val)));
    Rational unit = val >= 0 ? Rational(q / Rational(pk)) : Rational(q * Rational(pk));
    if (p == 2) {
        Integer u = rational_mod(unit, Integer(8));
        return u == 1;
    }
    Integer u = rational_mod(unit, p);
    return legendre(u, p) == 1;
}

Integer mod_pow(Integer base, Integer exp, const Integer& mod) {
    if (mod == 0) throw std::domain_error("mod_pow: zero modulus");
    Integer r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

Integer mod_inverse(const Integer& a, const Integer& mod) {
    Integer r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()))
        throw ZeroDivisorError("mod_inverse: not invertible mod " + mod.get_str());
    return r;
}

Integer rational_mod(const Rational& q, const Integer& m) {
    Integer num = q.get_num() % m;
    if (num < 0) num += m;
    Integer den = q.get_den() % m;
    return num * mod_inverse(den, m) % m;
}

}  // namespace hypbr
