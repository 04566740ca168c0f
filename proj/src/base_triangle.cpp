#include "gdgap/base_triangle.hpp"

#include <initializer_list>

namespace gdgap {

Scalar twice_area(const Point2& p, const Point2& q, const Point2& s) {
    return p.x1 * q.x2 + q.x1 * s.x2 + s.x1 * p.x2
         - q.x1 * p.x2 - s.x1 * q.x2 - p.x1 * s.x2;
}

namespace {
long long config_radicand(std::initializer_list<Scalar> values) {
    long long k = 0;
    for (const Scalar& v : values) {
        if (v.radicand() == 0) continue;
        if (k == 0) k = v.radicand();
        else if (k != v.radicand())
            throw input_error("config: mixed radicands in coordinates");
    }
    return k;
}
}  // namespace

BaseConfig BaseConfig::make(Point2 x, Point2 y, Point2 z, Point2 c, Scalar r) {
    BaseConfig cfg{std::move(x), std::move(y), std::move(z), std::move(c), std::move(r)};
    cfg.field_k = config_radicand({cfg.x.x1, cfg.x.x2, cfg.y.x1, cfg.y.x2, cfg.z.x1, cfg.z.x2,
                                   cfg.c.x1, cfg.c.x2, cfg.r});
    Scalar a0 = twice_area(cfg.x, cfg.y, cfg.z);
    if (a0.is_zero()) throw input_error("config: base vertices are collinear");
    if (a0.sign() < 0)
        throw input_error("config: base vertices are clockwise; swap two vertices");
    AreaSet areas = area_set(cfg);
    if (areas.ax.sign() <= 0) throw input_error("config: tangent point not interior: a_x <= 0");
    if (areas.ay.sign() <= 0) throw input_error("config: tangent point not interior: a_y <= 0");
    if (areas.az.sign() <= 0) throw input_error("config: tangent point not interior: a_z <= 0");
    if (cfg.r.sign() <= 0) throw input_error("config: inradius must be positive");
    return cfg;
}

AreaSet area_set(const BaseConfig& cfg) {
    return {twice_area(cfg.x, cfg.y, cfg.z), twice_area(cfg.c, cfg.y, cfg.z),
            twice_area(cfg.x, cfg.c, cfg.z), twice_area(cfg.x, cfg.y, cfg.c)};
}

CriticalPair critical_pair(const BaseConfig& cfg) {
    AreaSet a = area_set(cfg);
    Scalar A = a.ax * a.ay * a.az;
    Scalar B = norm2(cfg.x) * a.ax + norm2(cfg.y) * a.ay + norm2(cfg.z) * a.az
             - norm2(cfg.c) * a.a0;
    return {A, B};
}

Scalar critical_inradius_sq(const BaseConfig& cfg) {
    CriticalPair ab = critical_pair(cfg);
    return ab.A / ab.B;
}

RadiusRegime classify_radius(const BaseConfig& cfg) {
    int c = compare(cfg.r * cfg.r, critical_inradius_sq(cfg));
    if (c < 0) return RadiusRegime::subcritical;
    if (c == 0) return RadiusRegime::critical;
    return RadiusRegime::supercritical;
}

Point2 circumcenter2(const Point2& x, const Point2& y, const Point2& z) {
    Scalar a0 = twice_area(x, y, z);
    if (a0.is_zero()) throw input_error("circumcenter: collinear vertices");
    Scalar nx = norm2(x), ny = norm2(y), nz = norm2(z);
    Scalar o1 = (nx * (y.x2 - z.x2) + ny * (z.x2 - x.x2) + nz * (x.x2 - y.x2)) / (Scalar(2) * a0);
    Scalar o2 = (nx * (z.x1 - y.x1) + ny * (x.x1 - z.x1) + nz * (y.x1 - x.x1)) / (Scalar(2) * a0);
    return {o1, o2};
}

Point2 incenter2(const Point2& x, const Point2& y, const Point2& z, long long ambient_k) {
    auto side = [&](const Point2& p, const Point2& q) {
        auto len = exact_sqrt(norm2(p - q), ambient_k);
        if (!len)
            throw input_error("incenter: side length |" + (p - q).x1.str() + "," +
                              (p - q).x2.str() + "| not representable in the field");
        return *len;
    };
    Scalar la = side(y, z), lb = side(z, x), lc = side(x, y);
    Scalar per = la + lb + lc;
    return {(la * x.x1 + lb * y.x1 + lc * z.x1) / per, (la * x.x2 + lb * y.x2 + lc * z.x2) / per};
}

BarycentricWeights barycentric_weights(const BaseConfig& cfg) {
    AreaSet a = area_set(cfg);
    return {a.ax / a.a0, a.ay / a.a0, a.az / a.a0};
}

}  // namespace gdgap
