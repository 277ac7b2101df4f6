#include "hypbr/localpoints.hpp"

#include "hypbr/polyfactor.hpp"

namespace hypbr {

namespace {

std::vector<Rational> rational_roots(const Poly& f) {
    std::vector<Rational> roots;
    for (const auto& [q, e] : factor_poly(f).factors)
        if (q.degree() == 1) roots.push_back(-q[0]);
    return roots;
}

std::optional<LocalPoint> affine_at(const HyperCurve& curve, const Place& v, const Rational& x0) {
    Rational y2 = curve.c() * curve.f().eval(x0);
    if (y2 == 0) return std::nullopt;
    if (!is_local_square(y2, v)) return std::nullopt;
    return LocalPoint{v, x0, PointKind::Affine, Poly(), 0};
}

}  // namespace

std::vector<LocalPoint> find_points(const HyperCurve& curve, const Place& place, int effort,
                                    int count) {
    std::vector<LocalPoint> found;
    auto push = [&](const LocalPoint& pt) {
        for (const auto& q : found)
            if (q.x0 == pt.x0) return;
        found.push_back(pt);
    };

    // rational Weierstrass points first: they lie on C over every completion
    for (const Rational& r : rational_roots(curve.f())) {
        if (static_cast<int>(found.size()) >= count) return found;
        push(LocalPoint{place, r, PointKind::Weierstrass,
                        Poly(std::vector<Rational>{-r, Rational(1)}), 0});
    }

    if (place.is_real()) {
        for (long denom : {1L, 2L}) {
            for (long m = 0; m <= 64 * effort; ++m) {
                for (long sign : {1L, -1L}) {
                    if (m == 0 && sign < 0) continue;
                    if (static_cast<int>(found.size()) >= count) return found;
                    auto pt = affine_at(curve, place, Rational(sign * m, denom));
                    if (pt) push(*pt);
                }
            }
        }
        return found;
    }

    const Integer& p = place.prime();
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(effort));
    Integer pj(1);
    for (int j = 0; j <= effort; ++j) {
        for (Integer m = 0; m < pk; ++m) {
            if (j > 0 && m % p == 0) continue;  // not reduced
            if (static_cast<int>(found.size()) >= count) return found;
            auto pt = affine_at(curve, place, make_rational(m, pj));
            if (pt) push(*pt);
        }
        pj *= p;
    }
    return found;
}

std::optional<LocalPoint> find_point(const HyperCurve& curve, const Place& place, int effort) {
    auto pts = find_points(curve, place, effort, 1);
    if (pts.empty()) return std::nullopt;
    return pts.front();
}

std::vector<LocalPoint> weierstrass_points_over(const HyperCurve& curve, const Place& place,
                                                int effort) {
    std::vector<LocalPoint> out;
    for (const Rational& r : rational_roots(curve.f()))
        out.push_back(LocalPoint{place, r, PointKind::Weierstrass,
                                 Poly(std::vector<Rational>{-r, Rational(1)}), 0});
    if (place.is_real()) return out;

    const Integer& p = place.prime();
    Integer p_eff;
    mpz_pow_ui(p_eff.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(effort));
    for (const auto& [q, e] : factor_poly(curve.f()).factors) {
        if (q.degree() < 2) continue;
        bool bad = false;
        for (int i = 0; i <= q.degree() && !bad; ++i)
            if (q[i].get_den() % p == 0) bad = true;
        if (bad) continue;
        Poly qd = q.derivative();
        std::vector<Integer> roots;
        // Hensel: x with v(q(x)) > 2 v(q'(x)) = 2t lifts to a root in Z_p.
        // t = 0 is a scan mod p; larger t only where the scan stays small.
        for (int t = 0; t <= 2; ++t) {
            Integer M = p;
            for (int i = 0; i < 2 * t; ++i) M *= p;
            if (M > 4096) break;
            for (Integer r = 0; r < M; ++r) {
                Rational qv = q.eval(Rational(r));
                if (qv == 0) continue;  // exact rational root, reported above
                if (valuation(qv, p) < 2 * t + 1) continue;
                Rational dv = qd.eval(Rational(r));
                if (dv == 0 || valuation(dv, p) != t) continue;
                // exact Newton, truncated each step to keep numbers small
                Rational x(r);
                Integer trunc = p_eff * M * M;
                for (int it = 0; it < effort + 4; ++it) {
                    Rational fx = q.eval(x);
                    if (fx == 0) break;
                    if (valuation(fx, p) >= effort + 2 * t + 1) break;
                    x = Rational(rational_mod(x - fx / qd.eval(x), trunc));
                }
                roots.push_back(rational_mod(x, p_eff));
            }
        }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        for (const Integer& x : roots)
            out.push_back(LocalPoint{place, Rational(x), PointKind::Weierstrass, q, effort});
    }
    return out;
}

}  // namespace hypbr
