#pragma once

#include <array>

#include "gdgap/base_triangle.hpp"

namespace gdgap {

/// Insphere tangent points on the three lateral faces; X is opposite
/// vertex x (it lies on the face through y, z and the apex), and so on.
struct TangentPoints {
    Point3 X, Y, Z;
};

/// Plane through three points, stored as n . p = d with n an exact
/// cross-product normal (never unit length).
struct Plane {
    Point3 n;
    Scalar d;
};

struct Tetrahedron {
    Point3 x, y, z;  // base vertices, x3 = 0
    Point3 w;        // apex
    Point3 inc;      // insphere center (c1, c2, r)
    Scalar r;
};

/// Each tangent point is the mirror image of the base tangent point
/// (c1, c2, 0) across the plane spanned by the corresponding base edge
/// and the insphere center; well defined for every r > 0, including the
/// critical radius.
TangentPoints tangent_points(const BaseConfig& cfg);

Plane plane_through(const Point3& p, const Point3& q, const Point3& s);

/// The three lateral face planes: {x,y,Z}, {y,z,X}, {z,x,Y}.
std::array<Plane, 3> lateral_planes(const BaseConfig& cfg, const TangentPoints& tp);

/// Directions of the pairwise intersections of the lateral planes;
/// at the critical radius all three are parallel.
std::array<Point3, 3> lateral_edge_directions(const BaseConfig& cfg);

/// Apex as the common point of the three lateral planes (exact Cramer
/// solve).  Throws degeneracy_error at the critical radius (the planes
/// meet in parallel lines and the solid degenerates to a semi-infinite
/// triangular prism) and for supercritical r (the intersection would
/// fall below the base plane).
Point3 apex(const BaseConfig& cfg);

/// Closed form 2 r A / (A - B r^2) for the apex height; agrees with
/// apex(cfg).x3 and with 2 r rc^2/(rc^2 - r^2) where rc^2 = A/B.
Scalar apex_height(const BaseConfig& cfg);

Tetrahedron build_tetrahedron(const BaseConfig& cfg);

/// 4x4 determinant with rows (X|1), (Y|1), (Z|1), (inc|1); zero exactly
/// when the tangent points and the insphere center are coplanar, i.e.
/// when r is critical.
Scalar criticality_coplanarity(const BaseConfig& cfg);

/// Squared distance from a point to a plane, as the exact quotient
/// (n.p - d)^2 / |n|^2.
Scalar point_plane_dist_sq(const Plane& pl, const Point3& p);

}  // namespace gdgap
