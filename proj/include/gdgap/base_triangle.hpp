#pragma once

#include <utility>

#include "gdgap/geometry.hpp"

namespace gdgap {

/// Twice the signed areas of the basic triangle and the three
/// sub-triangles cut off by the tangent point:
///   a0 = 2 area(x,y,z), ax = 2 area(c,y,z), ay = 2 area(x,c,z),
///   az = 2 area(x,y,c).  They satisfy ax + ay + az = a0 exactly.
struct AreaSet {
    Scalar a0, ax, ay, az;
};

/// A = ax*ay*az and B = |x|^2 ax + |y|^2 ay + |z|^2 az - |c|^2 a0.
/// A/B is the squared critical inradius; B > 0 for any interior c.
struct CriticalPair {
    Scalar A, B;
};

struct BarycentricWeights {
    Scalar tx, ty, tz;
};

/// The full input of the apex construction: counterclockwise base
/// vertices, an interior tangent point, and a positive inradius.
/// Validation covers orientation, interiority of c and r > 0; whether
/// r is below the critical radius is classified separately so tangent
/// points and the coplanarity determinant stay usable at criticality.
struct BaseConfig {
    Point2 x, y, z, c;
    Scalar r;
    long long field_k = 0;  // shared radicand of all inputs (0 = rational)

    static BaseConfig make(Point2 x, Point2 y, Point2 z, Point2 c, Scalar r);
};

enum class RadiusRegime { subcritical, critical, supercritical };

Scalar twice_area(const Point2& p, const Point2& q, const Point2& s);
AreaSet area_set(const BaseConfig& cfg);
CriticalPair critical_pair(const BaseConfig& cfg);

/// A/B, the square of the largest admissible inradius.
Scalar critical_inradius_sq(const BaseConfig& cfg);
RadiusRegime classify_radius(const BaseConfig& cfg);

/// Exact circumcenter of a nondegenerate triangle.
Point2 circumcenter2(const Point2& x, const Point2& y, const Point2& z);

/// Barycentric incenter (|y-z| x + |z-x| y + |x-y| z) / perimeter.
/// The three side lengths must be representable in the ambient field.
Point2 incenter2(const Point2& x, const Point2& y, const Point2& z, long long ambient_k = 0);

BarycentricWeights barycentric_weights(const BaseConfig& cfg);

}  // namespace gdgap
