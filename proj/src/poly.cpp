#include "hypbr/poly.hpp"

#include <cctype>
#include <sstream>

namespace hypbr {

Poly::Poly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return monomial(1); }

Poly Poly::monomial(int deg, const Rational& c) {
    if (c == 0) return Poly();
    std::vector<Rational> v(deg + 1, Rational(0));
    v[deg] = c;
    return Poly(std::move(v));
}

Poly Poly::from_ints(std::vector<long> coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (long x : coeffs) v.emplace_back(x);
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::constant_value() const {
    if (!is_constant()) throw std::domain_error("Poly: not constant");
    return c_.empty() ? Rational(0) : c_[0];
}

const Rational& Poly::operator[](int i) const {
    static const Rational zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

const Rational& Poly::lc() const {
    if (c_.empty()) throw std::domain_error("Poly: lc of zero");
    return c_.back();
}

Poly Poly::operator-() const {
    std::vector<Rational> v(c_);
    for (auto& x : v) x = -x;
    return Poly(std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(v));
}

Poly Poly::operator*(const Rational& s) const {
    if (s == 0) return Poly();
    std::vector<Rational> v(c_);
    for (auto& x : v) x *= s;
    return Poly(std::move(v));
}

Poly Poly::operator/(const Rational& s) const {
    if (s == 0) throw std::domain_error("Poly: division by zero scalar");
    std::vector<Rational> v(c_);
    for (auto& x : v) x /= s;
    return Poly(std::move(v));
}

bool Poly::operator<(const Poly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (int i = degree(); i >= 0; --i)
        if ((*this)[i] != o[i]) return (*this)[i] < o[i];
    return false;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(v));
}

Rational Poly::eval(const Rational& x0) const {
    Rational r(0);
    for (int i = degree(); i >= 0; --i) r = r * x0 + c_[i];
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) throw std::domain_error("Poly: monic of zero");
    return *this / lc();
}

Poly Poly::shift_mul_x(int k) const {
    if (is_zero()) return Poly();
    std::vector<Rational> v(c_.size() + k, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
    return Poly(std::move(v));
}

Rational Poly::content() const {
    if (is_zero()) return Rational(0);
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& c : c_) {
        if (c == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational cont = make_rational(num_gcd, den_lcm);
    if (lc() < 0) cont = -cont;
    return cont;
}

std::string Poly::str(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0 || a != 1) {
            os << a.get_str();
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("divrem: zero divisor");
    Poly q, r = a;
    int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        Rational coef = r.lc() / b.lc();
        int k = r.degree() - db;
        Poly t = Poly::monomial(k, coef);
        q = q + t;
        r = r - t * b;
    }
    return {q, r};
}

Poly divexact(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("divexact: not divisible");
    return q;
}

bool divides(const Poly& d, const Poly& a) {
    if (a.is_zero()) return true;
    if (d.degree() > a.degree()) return false;
    return divrem(a, d).second.is_zero();
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd: both zero");
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly r = divrem(u, v).second;
        u = v;
        v = r;
    }
    return u.monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("ext_gcd: both zero");
    Poly r0 = a, r1 = b;
    Poly s0(Rational(1)), s1, t0, t1(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = r1;
        r1 = r;
        Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    Rational l = r0.lc();
    return {r0 / l, s0 / l, t0 / l};
}

Rational resultant(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("resultant: zero argument");
    int da = a.degree(), db = b.degree();
    if (da == 0) {
        Rational r(1);
        for (int i = 0; i < db; ++i) r *= a.constant_value();
        return r;
    }
    if (db == 0) {
        Rational r(1);
        for (int i = 0; i < da; ++i) r *= b.constant_value();
        return r;
    }
    // Res(a,b) = (-1)^(da*db) lc(b)^(da-dr) Res(b,r) with r = a mod b
    Poly r = divrem(a, b).second;
    if (r.is_zero()) return Rational(0);
    int dr = r.degree();
    Rational scale(1);
    for (int i = 0; i < da - dr; ++i) scale *= b.lc();
    Rational sign((da * db) % 2 ? -1 : 1);
    return sign * scale * resultant(b, r);
}

Rational discriminant(const Poly& f) {
    if (f.degree() < 1) throw std::domain_error("discriminant: degree < 1");
    int d = f.degree();
    Rational res = resultant(f, f.derivative());
    Rational sign((d * (d - 1) / 2) % 2 ? -1 : 1);
    return sign * res / f.lc();
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    return gcd(f, f.derivative()).degree() == 0;
}

// --- parsing --------------------------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    char var;  // 0 = not yet fixed

    explicit Parser(const std::string& text, char v) : s(text), var(v) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("parse_poly: " + why + " at position " +
                                    std::to_string(i) + " in '" + s + "'");
    }

    Poly parse_expr() {
        Poly acc = parse_term();
        for (;;) {
            skip_ws();
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    Poly parse_term() {
        Poly acc = parse_power();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                acc = acc * parse_power();
                continue;
            }
            // implicit product: `2x`, `3(x+1)`, `x(x-1)`
            if (i < s.size() && (s[i] == '(' || is_var_char(s[i]))) {
                acc = acc * parse_power();
                continue;
            }
            return acc;
        }
    }

    bool is_var_char(char c) const {
        if (var != 0) return c == var;
        return c == 'x' || c == 't';
    }

    Poly parse_power() {
        Poly base = parse_atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            long e = parse_uint();
            Poly r(Rational(1));
            for (long k = 0; k < e; ++k) r = r * base;
            return r;
        }
        return base;
    }

    Poly parse_atom() {
        skip_ws();
        if (i >= s.size()) fail("unexpected end of input");
        if (eat('-')) return -parse_power();
        if (eat('+')) return parse_power();
        if (eat('(')) {
            Poly inner = parse_expr();
            if (!eat(')')) fail("missing ')'");
            return inner;
        }
        char c = s[i];
        if (is_var_char(c)) {
            if (var == 0) var = c;
            ++i;
            return Poly::x();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = parse_int();
            skip_ws();
            if (eat('/')) {
                skip_ws();
                Integer den = parse_int();
                if (den == 0) fail("zero denominator");
                return Poly(make_rational(num, den));
            }
            return Poly(Rational(num));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Integer parse_int() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected an integer");
        return Integer(s.substr(start, i - start));
    }

    long parse_uint() {
        Integer n = parse_int();
        if (n < 0 || n > 64) fail("exponent out of range");
        return n.get_si();
    }
};

}  // namespace

Poly parse_poly(const std::string& text, char var) {
    Parser p(text, var);
    Poly r = p.parse_expr();
    p.skip_ws();
    if (p.i != text.size()) p.fail("trailing input");
    return r;
}

// --- rational functions ----------------------------------------------------

RationalFunction::RationalFunction(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = gcd(num, den);
    num = divexact(num, g);
    den = divexact(den, g);
    Rational l = den.lc();
    num_ = num / l;
    den_ = den / l;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

std::string RationalFunction::str(char var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace hypbr
