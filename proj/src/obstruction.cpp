#include "hypbr/obstruction.hpp"

#include <algorithm>

namespace hypbr {

std::vector<Place> bad_places(const HyperCurve& curve) {
    Rational d = Rational(4) * curve.c() * curve.c() * discriminant(curve.f());
    std::vector<Place> out;
    for (const auto& [p, e] : factor(Integer(d.get_num() * d.get_den())).primes)
        if (e >= 2) out.push_back(Place::finite(p));
    out.push_back(Place::real());
    return out;
}

std::vector<std::pair<Rational, Rational>> evaluate_symbols_at(const BrauerElement& e,
                                                               const LocalPoint& point,
                                                               const HyperCurve& curve) {
    std::vector<std::pair<Rational, Rational>> vals;
    for (const auto& s : e.symbols()) {
        Rational pair_vals[2];
        const Poly* entries[2] = {&s.a(), &s.b()};
        for (int i = 0; i < 2; ++i) {
            const Poly& entry = *entries[i];
            bool substituted = false;
            if (point.kind == PointKind::Weierstrass && !entry.is_constant() &&
                divides(point.branch, entry)) {
                // entry = u * d (squarefree); d = c*(f/d) modulo squares on C
                Poly u = divexact(entry, point.branch);
                Poly fd = divexact(curve.f(), point.branch);
                Rational uv = u.eval(point.x0);
                Rational fdv = fd.eval(point.x0);
                if (uv == 0 || fdv == 0)
                    throw EntryVanishesError("evaluate_at: cofactor vanishes at x0 = " +
                                             point.x0.get_str());
                pair_vals[i] = uv * curve.c() * fdv;
                substituted = true;
            }
            if (!substituted) {
                Rational v = entry.eval(point.x0);
                if (v == 0)
                    throw EntryVanishesError("evaluate_at: entry " + entry.str() +
                                             " vanishes at x0 = " + point.x0.get_str());
                pair_vals[i] = v;
            }
        }
        vals.emplace_back(pair_vals[0], pair_vals[1]);
    }

    // truncated Weierstrass points: every evaluated entry must sit well inside
    // the precision radius, otherwise its square class is not determined
    if (point.kind == PointKind::Weierstrass && point.precision > 0) {
        const Integer& p = point.place.prime();
        for (const auto& [av, bv] : vals)
            for (const Rational& v : {av, bv})
                if (2 * valuation(v, p) + 2 >= point.precision)
                    throw EntryVanishesError("evaluate_at: value too close to 0 for precision");
    }
    return vals;
}

HalfInvariant evaluate_at(const BrauerElement& e, const LocalPoint& point,
                          const HyperCurve& curve) {
    HalfInvariant inv;
    for (const auto& [av, bv] : evaluate_symbols_at(e, point, curve))
        inv += hilbert(av, bv, point.place);
    return inv;
}

HalfInvariant ObstructionReport::at(const Place& v) const {
    for (const auto& pe : per_place)
        if (pe.place == v) return pe.invariant;
    return HalfInvariant::zero();
}

namespace {

PlaceEvaluation evaluate_with_retry(const HyperCurve& curve, const BrauerElement& e,
                                    const Place& v, const std::vector<LocalPoint>& candidates) {
    const int retry_budget = 10;
    int tried = 0;
    for (const LocalPoint& pt : candidates) {
        if (++tried > retry_budget) break;
        try {
            PlaceEvaluation pe;
            pe.place = v;
            pe.point = pt;
            pe.entries = evaluate_symbols_at(e, pt, curve);
            HalfInvariant inv;
            for (const auto& [av, bv] : pe.entries) inv += hilbert(av, bv, v);
            pe.invariant = inv;
            return pe;
        } catch (const EntryVanishesError&) {
            continue;
        }
    }
    throw LocalPointFailure("no usable local point at " + v.str());
}

}  // namespace

ObstructionReport bm_sum(const HyperCurve& curve, const BrauerElement& e,
                         const AdelicSample& sample) {
    {
        std::vector<Place> bad = bad_places(curve);
        std::sort(bad.begin(), bad.end());
        std::vector<Place> keys;
        for (const auto& [v, pt] : sample) keys.push_back(v);
        if (keys != bad)
            throw std::domain_error("bm_sum: sample places must be exactly the bad set");
    }
    ObstructionReport rep;
    rep.c = curve.c();
    rep.f = curve.f();
    for (const auto& [v, pt] : sample) {
        PlaceEvaluation pe;
        pe.place = v;
        pe.point = pt;
        pe.entries = evaluate_symbols_at(e, pt, curve);
        for (const auto& [av, bv] : pe.entries) pe.invariant += hilbert(av, bv, v);
        rep.per_place.push_back(pe);
        rep.total += pe.invariant;
    }
    return rep;
}

ObstructionReport bm_sum_auto(const HyperCurve& curve, const BrauerElement& e, int effort,
                              int resamples) {
    ObstructionReport rep;
    rep.c = curve.c();
    rep.f = curve.f();
    for (const Place& v : bad_places(curve)) {
        std::vector<LocalPoint> pts;
        for (int eff = effort; eff <= effort + 4 && static_cast<int>(pts.size()) < resamples + 2;
             eff += 2)
            pts = find_points(curve, v, eff, resamples + 2);
        if (pts.empty()) throw LocalPointFailure("no local point found at " + v.str());
        PlaceEvaluation pe = evaluate_with_retry(curve, e, v, pts);
        // resample: the invariant must not depend on the chosen point
        int used = 1;
        for (const LocalPoint& alt : pts) {
            if (used >= resamples) break;
            if (alt.x0 == pe.point.x0) continue;
            try {
                HalfInvariant inv2;
                for (const auto& [av, bv] : evaluate_symbols_at(e, alt, curve))
                    inv2 += hilbert(av, bv, v);
                ++used;
                if (inv2 != pe.invariant) pe.stable = false;
            } catch (const EntryVanishesError&) {
                continue;
            }
        }
        pe.samples = used;
        rep.stable = rep.stable && pe.stable;
        rep.per_place.push_back(pe);
        rep.total += pe.invariant;
    }
    return rep;
}

ObstructionReport ct_pairing(const HyperCurve& curve, const EtaleElement& ell, int effort,
                             int resamples) {
    if (!is_unramified(curve, ell))
        throw std::domain_error("ct_pairing: gamma'(ell) is ramified (ell not in L_c)");
    BrauerElement e = gamma_prime(curve, ell);
    ObstructionReport rep = bm_sum_auto(curve, e, effort, resamples);
    rep.ell_rep = ell.rep();
    return rep;
}

HyperCurve twist_curve(const Integer& c) {
    Poly f = parse_poly("(x^2+1)*(x^2+17)*(x^2-17)");
    return HyperCurve(Rational(c), f);
}

EtaleElement twist_ell(const HyperCurve& curve) {
    EtaleAlgebraPtr alg = curve_algebra(curve);
    std::vector<std::pair<Poly, Poly>> comps;
    Poly target = parse_poly("x^2-17");
    for (const auto& [q, e] : alg->factors())
        comps.emplace_back(q, Poly(Rational(q == target ? -1 : 1)));
    return crt_assemble(alg, comps);
}

HalfInvariant twist_formula(const Integer& c) {
    if (c == 0) throw std::domain_error("twist_formula: c = 0");
    IntFactorization fac = factor(c);
    for (const auto& [p, e] : fac.primes)
        if (e > 1) throw std::domain_error("twist_formula: c not squarefree");
    int count = 0;
    for (const auto& [p, e] : fac.primes) {
        if (p == 2) continue;
        if (legendre(Integer(17), p) == -1 && legendre(Integer(-1), p) == -1) ++count;
    }
    // count/2 + (sign(c)-1)/4 in Q/Z; each term is 0 or 1/2
    bool nontrivial = (count % 2 != 0) != (c < 0);
    return nontrivial ? HalfInvariant::half() : HalfInvariant::zero();
}

HalfInvariant epsilon_law(const Integer& c, const Place& v) {
    if (c == 0) throw std::domain_error("epsilon_law: c = 0");
    if (v.is_real()) return c < 0 ? HalfInvariant::half() : HalfInvariant::zero();
    const Integer& p = v.prime();
    if (p == 2) {
        // by the 2-adic square class of c: nontrivial for 3, 6, 7, 14
        long v2 = valuation(c, Integer(2));
        Integer u = c >> static_cast<unsigned long>(v2);
        Integer um = u % 8;
        if (um < 0) um += 8;
        bool nontrivial = (um == 3 || um == 7);
        return nontrivial ? HalfInvariant::half() : HalfInvariant::zero();
    }
    if (c % p == 0 && legendre(Integer(-1), p) == -1 && legendre(Integer(-17), p) == -1)
        return HalfInvariant::half();
    return HalfInvariant::zero();
}

std::vector<TwistFamilyRow> twist_family(const Integer& cmin, const Integer& cmax, int effort) {
    std::vector<TwistFamilyRow> rows;
    for (Integer c = cmin; c <= cmax; ++c) {
        if (c == 0) continue;
        bool squarefree = true;
        for (const auto& [p, e] : factor(c).primes)
            if (e > 1) squarefree = false;
        if (!squarefree) continue;

        TwistFamilyRow row;
        row.c = c;
        HyperCurve curve = twist_curve(c);
        ObstructionReport rep = ct_pairing(curve, twist_ell(curve), effort);
        row.direct = rep.total;
        row.stable = rep.stable;
        row.formula = twist_formula(c);
        for (const Place& v : bad_places(curve)) row.law_sum += epsilon_law(c, v);
        row.agree = row.direct == row.formula && row.formula == row.law_sum && row.stable;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace hypbr
