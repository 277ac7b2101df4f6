#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypbr {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when an operation requires a unit / nonzero value and gets none.
struct ZeroDivisorError : std::domain_error {
    using std::domain_error::domain_error;
};

Rational make_rational(const Integer& num, const Integer& den);

bool is_rational_square(const Rational& q);

/// Deterministic Miller-Rabin; proven correct for n < 3.317e24, which covers
/// every integer this project produces.
bool is_prime(const Integer& n);

struct IntFactorization {
    int sign = 1;  // -1 or +1
    std::vector<std::pair<Integer, int>> primes;  // ascending, exponents >= 1
};

/// Factor a nonzero integer. Trial division to 1e6, then Brent-Pollard rho.
IntFactorization factor(const Integer& n);

/// v_p(q) for nonzero q.
long valuation(const Rational& q, const Integer& p);
long valuation(const Integer& n, const Integer& p);

/// Legendre symbol (a/p), p an odd prime.
int legendre(const Integer& a, const Integer& p);

/// The squarefree integer d with q/d a rational square; represents the class
/// of q in Q^x / Q^x2.
Integer squarefree_part(const Rational& q);
Integer squarefree_part_int(const Integer& n);

/// Class-preserving square stripping without full factorization: removes
/// square divisors found by trial division and perfect-square/64-bit
/// checks. The result represents the class of q but is only guaranteed
/// squarefree when the leftover cofactor is small; large semiprime square
/// divisors may survive.
Integer strip_square_divisors(const Rational& q);

/// A place of Q: a finite prime or the real place.
class Place {
public:
    Place() = default;  // the real place
    static Place finite(const Integer& p);
    static Place real();

    bool is_real() const { return real_; }
    bool is_finite() const { return !real_; }
    const Integer& prime() const;

    bool operator==(const Place& o) const;
    bool operator!=(const Place& o) const { return !(*this == o); }
    bool operator<(const Place& o) const;  // finite primes ascending, then oo

    std::string str() const;  // "2", "17", "inf"

private:
    bool real_ = true;
    Integer p_;
};

/// true iff q is a square in the completion at the place.
bool is_local_square(const Rational& q, const Place& v);

// modular helpers
Integer mod_pow(Integer base, Integer exp, const Integer& mod);
Integer mod_inverse(const Integer& a, const Integer& mod);
/// a/b mod m for b invertible mod m.
Integer rational_mod(const Rational& q, const Integer& m);

}  // namespace hypbr
