#include "gdgap/tetrahedron.hpp"

namespace gdgap {

namespace {

Point3 reflect_across(const Point3& p, const Point3& q1, const Point3& q2, const Point3& q3) {
    Point3 n = cross(q2 - q1, q3 - q1);
    Scalar nn = norm2(n);
    if (nn.is_zero()) throw input_error("tangent points: degenerate edge");
    Scalar t = dot(n, p - q1);
    return p - (Scalar(2) * t / nn) * n;
}

Scalar det3(const Point3& r1, const Point3& r2, const Point3& r3) {
    return r1.x1 * (r2.x2 * r3.x3 - r2.x3 * r3.x2)
         - r1.x2 * (r2.x1 * r3.x3 - r2.x3 * r3.x1)
         + r1.x3 * (r2.x1 * r3.x2 - r2.x2 * r3.x1);
}

}  // namespace

TangentPoints tangent_points(const BaseConfig& cfg) {
    Point3 inc{cfg.c.x1, cfg.c.x2, cfg.r};
    Point3 p0 = lift(cfg.c);
    return {reflect_across(p0, lift(cfg.y), lift(cfg.z), inc),
            reflect_across(p0, lift(cfg.z), lift(cfg.x), inc),
            reflect_across(p0, lift(cfg.x), lift(cfg.y), inc)};
}

Plane plane_through(const Point3& p, const Point3& q, const Point3& s) {
    Point3 n = cross(q - p, s - p);
    return {n, dot(n, p)};
}

std::array<Plane, 3> lateral_planes(const BaseConfig& cfg, const TangentPoints& tp) {
    return {plane_through(lift(cfg.x), lift(cfg.y), tp.Z),
            plane_through(lift(cfg.y), lift(cfg.z), tp.X),
            plane_through(lift(cfg.z), lift(cfg.x), tp.Y)};
}

std::array<Point3, 3> lateral_edge_directions(const BaseConfig& cfg) {
    auto pl = lateral_planes(cfg, tangent_points(cfg));
    return {cross(pl[0].n, pl[1].n), cross(pl[1].n, pl[2].n), cross(pl[2].n, pl[0].n)};
}

Point3 apex(const BaseConfig& cfg) {
    switch (classify_radius(cfg)) {
        case RadiusRegime::critical:
            throw degeneracy_error(
                "apex: r equals the critical inradius; the tetrahedron degenerates to a "
                "semi-infinite triangular prism");
        case RadiusRegime::supercritical:
            throw degeneracy_error(
                "apex: r exceeds the critical inradius; the tangent planes meet below the base");
        case RadiusRegime::subcritical:
            break;
    }
    auto pl = lateral_planes(cfg, tangent_points(cfg));
    Scalar d = det3(pl[0].n, pl[1].n, pl[2].n);
    if (d.is_zero()) throw check_error("apex: singular system for subcritical r");
    auto col_replaced = [&](int i) {
        Point3 r1 = pl[0].n, r2 = pl[1].n, r3 = pl[2].n;
        auto set = [&](Point3& row, const Scalar& v) {
            if (i == 0) row.x1 = v;
            else if (i == 1) row.x2 = v;
            else row.x3 = v;
        };
        set(r1, pl[0].d);
        set(r2, pl[1].d);
        set(r3, pl[2].d);
        return det3(r1, r2, r3);
    };
    Point3 w{col_replaced(0) / d, col_replaced(1) / d, col_replaced(2) / d};
    if (!(w.x3 == apex_height(cfg)))
        throw check_error("apex: plane intersection disagrees with the closed-form height");
    return w;
}

Scalar apex_height(const BaseConfig& cfg) {
    CriticalPair ab = critical_pair(cfg);
    Scalar den = ab.A - ab.B * cfg.r * cfg.r;
    if (den.is_zero())
        throw degeneracy_error("apex height: pole at the critical inradius (prism limit)");
    return Scalar(2) * cfg.r * ab.A / den;
}

Tetrahedron build_tetrahedron(const BaseConfig& cfg) {
    return {lift(cfg.x), lift(cfg.y), lift(cfg.z), apex(cfg),
            Point3{cfg.c.x1, cfg.c.x2, cfg.r}, cfg.r};
}

Scalar criticality_coplanarity(const BaseConfig& cfg) {
    TangentPoints tp = tangent_points(cfg);
    Point3 inc{cfg.c.x1, cfg.c.x2, cfg.r};
    const Point3 rows[4] = {tp.X, tp.Y, tp.Z, inc};
    // expand along the all-ones column
    Scalar total(0);
    for (int i = 0; i < 4; ++i) {
        const Point3* sub[3];
        int n = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) sub[n++] = &rows[j];
        Scalar minor = det3(*sub[0], *sub[1], *sub[2]);
        total += ((i % 2 == 0) ? Scalar(-1) : Scalar(1)) * minor;
    }
    return total;
}

Scalar point_plane_dist_sq(const Plane& pl, const Point3& p) {
    Scalar t = dot(pl.n, p) - pl.d;
    return t * t / norm2(pl.n);
}

}  // namespace gdgap
