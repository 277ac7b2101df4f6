#pragma once

#include <optional>

#include "hypbr/curve.hpp"

namespace hypbr {

enum class PointKind { Affine, Weierstrass };

/// A point of C over the completion at `place`, represented by an exact
/// rational x-coordinate. Affine: c*f(x0) is a nonzero local square, so a
/// y-coordinate exists in the completion and the point is exact. Weierstrass:
/// x0 is a root of `branch` (exactly when branch is linear; a Hensel
/// truncation to `precision` digits otherwise).
struct LocalPoint {
    Place place;
    Rational x0;
    PointKind kind = PointKind::Affine;
    Poly branch;       // Weierstrass only: the irreducible factor of f killed at x0
    int precision = 0; // Weierstrass truncations: x0 = root mod p^precision

    bool is_exact_root() const { return kind == PointKind::Weierstrass && branch.degree() == 1; }
};

/// Deterministic search for local points. Candidates at a finite prime are
/// m / p^j for 0 <= m < p^effort, 0 <= j <= effort in (j, m) order; at the
/// real place, integers then half-integers by absolute value. Rational roots
/// of f are offered as Weierstrass candidates first. NotFound (nullopt) is
/// not a proof of local insolubility.
std::optional<LocalPoint> find_point(const HyperCurve& curve, const Place& place, int effort = 3);

/// The first `count` distinct points in search order (used for resampling).
std::vector<LocalPoint> find_points(const HyperCurve& curve, const Place& place, int effort,
                                    int count);

/// Weierstrass points over the completion: rational roots of f everywhere,
/// plus Hensel lifts of simple roots of f mod p (reported as truncations mod
/// p^effort) at finite places.
std::vector<LocalPoint> weierstrass_points_over(const HyperCurve& curve, const Place& place,
                                                int effort = 6);

}  // namespace hypbr
