#include "gdgap/sphere_metrics.hpp"

namespace gdgap {

Point3 circumcenter3(const Tetrahedron& tet) {
    if (tet.w.x3.is_zero()) throw degeneracy_error("circumcenter: apex lies in the base plane");
    Point2 base_o = circumcenter2({tet.x.x1, tet.x.x2}, {tet.y.x1, tet.y.x2},
                                  {tet.z.x1, tet.z.x2});
    // |o - w|^2 = |o - x|^2 with o = (o1, o2, o3), x in the base plane
    Scalar dx = (base_o.x1 - tet.w.x1) * (base_o.x1 - tet.w.x1)
              + (base_o.x2 - tet.w.x2) * (base_o.x2 - tet.w.x2) + tet.w.x3 * tet.w.x3
              - (base_o.x1 - tet.x.x1) * (base_o.x1 - tet.x.x1)
              - (base_o.x2 - tet.x.x2) * (base_o.x2 - tet.x.x2);
    Scalar o3 = dx / (Scalar(2) * tet.w.x3);
    Point3 o{base_o.x1, base_o.x2, o3};
    Scalar R2 = norm2(o - tet.x);
    if (!(norm2(o - tet.y) == R2) || !(norm2(o - tet.z) == R2) || !(norm2(o - tet.w) == R2))
        throw check_error("circumcenter: equidistance failed");
    return o;
}

Metrics metrics(const Tetrahedron& tet) {
    Point3 o = circumcenter3(tet);
    return {o, norm2(o - tet.x), norm2(o - tet.inc), tet.r};
}

Verdict gd_verdict(const Metrics& m) {
    if (m.r.sign() <= 0) throw input_error("verdict: r must be positive");
    Scalar s = m.R2 - m.d2 - Scalar(3) * m.r * m.r;
    Scalar g = s * s - Scalar(4) * m.r * m.r * m.R2;
    int ls = s.sign();
    int gs = g.sign();
    bool satisfied = ls >= 0 && gs >= 0;
    return {g, ls, satisfied, satisfied && gs == 0};
}

}  // namespace gdgap
