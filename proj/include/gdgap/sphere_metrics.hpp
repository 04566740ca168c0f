#pragma once

#include "gdgap/tetrahedron.hpp"

namespace gdgap {

/// Circumcenter and the squared radii/distances of the configuration.
/// d2 is measured from the circumcenter to the insphere center
/// (c1, c2, r), the incenter of the solid.  Only squared quantities are
/// stored; R and d themselves are generally irrational.
struct Metrics {
    Point3 o;
    Scalar R2, d2, r;
};

/// Exact sign verdict for d^2 <= (R+r)(R-3r).  Writing
/// S = R^2 - d^2 - 3 r^2, the inequality is S >= 2rR, and
///   S^2 - 4 r^2 R^2 = ((R+r)(R-3r) - d^2) * ((R-r)(R+3r) - d^2),
/// so it holds exactly when both S >= 0 and the squared gap are
/// nonnegative -- no square roots required.
struct Verdict {
    Scalar squared_gap;    // S^2 - 4 r^2 R^2
    int linear_side_sign;  // sign of S
    bool satisfied;
    bool equality;
};

/// The circumcenter projects onto the circumcenter of the base
/// triangle; the height is the linear solution of |o-x|^2 = |o-w|^2.
Point3 circumcenter3(const Tetrahedron& tet);

Metrics metrics(const Tetrahedron& tet);

Verdict gd_verdict(const Metrics& m);

inline Scalar squared_gap(const Metrics& m) {
    Scalar s = m.R2 - m.d2 - Scalar(3) * m.r * m.r;
    return s * s - Scalar(4) * m.r * m.r * m.R2;
}

}  // namespace gdgap
