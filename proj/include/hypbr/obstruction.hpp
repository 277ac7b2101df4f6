#pragma once

#include "hypbr/gamma.hpp"
#include "hypbr/localpoints.hpp"

namespace hypbr {

struct EntryVanishesError : std::domain_error {
    using std::domain_error::domain_error;
};
struct LocalPointFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One local point per place; the keys are exactly the bad set of the curve.
using AdelicSample = std::map<Place, LocalPoint>;

/// The real place together with every prime appearing to multiplicity >= 2
/// in 4 c^2 disc(f).
std::vector<Place> bad_places(const HyperCurve& curve);

/// The symbols of e evaluated at the point, as constant symbols over Q.
/// Weierstrass points use the curve relation: an entry divisible by the
/// branch factor d has d replaced by c * (f/d) before evaluating.
std::vector<std::pair<Rational, Rational>> evaluate_symbols_at(const BrauerElement& e,
                                                               const LocalPoint& point,
                                                               const HyperCurve& curve);

/// Sum of local Hilbert symbols of the evaluated entries at the point's place.
HalfInvariant evaluate_at(const BrauerElement& e, const LocalPoint& point,
                          const HyperCurve& curve);

struct PlaceEvaluation {
    Place place;
    LocalPoint point;
    HalfInvariant invariant;
    std::vector<std::pair<Rational, Rational>> entries;  // evaluated symbols
    bool stable = true;   // resampled values agreed
    int samples = 1;
};

struct ObstructionReport {
    Rational c;
    Poly f;
    Poly ell_rep;
    std::vector<PlaceEvaluation> per_place;
    HalfInvariant total;
    bool stable = true;

    HalfInvariant at(const Place& v) const;
};

/// Brauer-Manin sum of e over a prepared adelic sample.
ObstructionReport bm_sum(const HyperCurve& curve, const BrauerElement& e,
                         const AdelicSample& sample);

/// Same, but find the points (resampling each place `resamples` times to
/// check stability, retrying when an entry vanishes at a candidate point).
ObstructionReport bm_sum_auto(const HyperCurve& curve, const BrauerElement& e, int effort = 4,
                              int resamples = 3);

/// The Cassels-Tate pairing value <Pic^1, d(ell)>: assemble local points over
/// the bad set, evaluate gamma'(ell) and sum the local invariants.
ObstructionReport ct_pairing(const HyperCurve& curve, const EtaleElement& ell, int effort = 4,
                             int resamples = 3);

/// The twist family y^2 = c (x^2+1)(x^2+17)(x^2-17).
HyperCurve twist_curve(const Integer& c);
/// Its distinguished class: ell = (1, 1, -1) across the three quadratic
/// factors, with gamma'(ell) = (-1, x^2-17) modulo constants.
EtaleElement twist_ell(const HyperCurve& curve);

/// Closed-form pairing value for the twist family:
/// #{p | c odd prime with (17/p) = (-1/p) = -1} / 2 + (sign(c)-1)/4 in Q/Z.
HalfInvariant twist_formula(const Integer& c);

/// Per-place law for the twist family: odd p gives 1/2 iff
/// (-1/p) = (-17/p) = -1 and p | c; p = 2 by c mod 8; infinity by sign(c).
HalfInvariant epsilon_law(const Integer& c, const Place& v);

struct TwistFamilyRow {
    Integer c;
    HalfInvariant direct;       // ct_pairing total
    HalfInvariant formula;      // twist_formula
    HalfInvariant law_sum;      // sum of epsilon_law over the bad set
    bool stable = true;
    bool agree = true;          // all three equal
};

/// Run the family for every squarefree c in [cmin, cmax] \ {0}; disagreement
/// is reported per row, never suppressed.
std::vector<TwistFamilyRow> twist_family(const Integer& cmin, const Integer& cmax,
                                         int effort = 4);

}  // namespace hypbr
