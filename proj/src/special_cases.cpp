#include "gdgap/special_cases.hpp"

namespace gdgap {

std::pair<Scalar, Scalar> g_pair(const Point2& x, const Point2& y, const Point2& z) {
    const Scalar &x1 = x.x1, &x2 = x.x2, &y1 = y.x1, &y2 = y.x2, &z1 = z.x1, &z2 = z.x2;
    const Scalar two(2), three(3);
    Scalar g1 = (x1 * x1 + three * x2 * x2) * (z2 - y2)
              + (y1 * y1 + three * y2 * y2) * (x2 - z2)
              + (z1 * z1 + three * z2 * z2) * (y2 - x2)
              + two * x1 * x2 * (z1 - y1) + two * y1 * y2 * (x1 - z1) + two * z1 * z2 * (y1 - x1);
    Scalar g2 = (x2 * x2 + three * x1 * x1) * (y1 - z1)
              + (y2 * y2 + three * y1 * y1) * (z1 - x1)
              + (z2 * z2 + three * z1 * z1) * (x1 - y1)
              + two * x1 * x2 * (y2 - z2) + two * y1 * y2 * (z2 - x2) + two * z1 * z2 * (x2 - y2);
    return {g1, g2};
}

Scalar special_case_a(const BaseConfig& cfg) {
    Point2 o = circumcenter2(cfg.x, cfg.y, cfg.z);
    if (!(cfg.c == o)) throw input_error("special case (a) requires c = circumcenter");
    if (classify_radius(cfg) != RadiusRegime::subcritical)
        throw degeneracy_error("special case (a): inradius is not subcritical");

    auto [g1, g2] = g_pair(cfg.x, cfg.y, cfg.z);
    Scalar lxy = norm2(cfg.x - cfg.y), lyz = norm2(cfg.y - cfg.z), lzx = norm2(cfg.z - cfg.x);
    Scalar a0 = twice_area(cfg.x, cfg.y, cfg.z);
    CriticalPair ab = critical_pair(cfg);
    Scalar r2 = cfg.r * cfg.r;
    Scalar a0_5 = a0 * a0 * a0 * a0 * a0;
    // fourth powers of the side lengths are squares of the squared lengths
    Scalar value = r2 * lxy * lxy * lyz * lyz * lzx * lzx * (g1 * g1 + g2 * g2)
                 / (Scalar(64) * a0_5 * (ab.A - ab.B * r2));

    auto [v1, v2] = closed_form_v(cfg);
    Scalar eight_a0_sq = Scalar(8) * a0 * a0;
    if (!(v1 * eight_a0_sq == lxy * lyz * lzx * g1) ||
        !(v2 * eight_a0_sq == lxy * lyz * lzx * g2))
        throw check_error("special case (a): g-factorization of the v pair failed");
    return value;
}

Scalar special_case_b(const BaseConfig& cfg) {
    Point2 i = incenter2(cfg.x, cfg.y, cfg.z, cfg.field_k);
    if (!(cfg.c == i)) throw input_error("special case (b) requires c = incenter");
    if (classify_radius(cfg) != RadiusRegime::subcritical)
        throw degeneracy_error("special case (b): inradius is not subcritical");

    Point2 o = circumcenter2(cfg.x, cfg.y, cfg.z);
    Scalar a0 = twice_area(cfg.x, cfg.y, cfg.z);
    CriticalPair ab = critical_pair(cfg);
    Scalar r2 = cfg.r * cfg.r;
    Scalar value = Scalar(16) * a0 * r2 * r2 * r2 * norm2(cfg.c - o) / (ab.A - ab.B * r2);

    auto [v1, v2] = closed_form_v(cfg);
    if (!v1.is_zero() || !v2.is_zero())
        throw check_error("special case (b): v pair does not vanish at the incenter");
    return value;
}

EquilateralReport equilateral_gap(const Scalar& l2, const Scalar& r) {
    if (l2.sign() <= 0) throw input_error("equilateral: l2 must be positive");
    if (r.sign() <= 0) throw input_error("equilateral: r must be positive");
    Scalar r2 = r * r;
    Scalar pole = l2 - Scalar(12) * r2;
    int pc = pole.sign();
    if (pc == 0)
        throw degeneracy_error("equilateral: r is critical (r^2 = l2/12, prism limit)");
    if (pc < 0) throw degeneracy_error("equilateral: r is supercritical (r^2 > l2/12)");

    Scalar w3 = Scalar(2) * l2 * r / pole;
    if (!(w3 - Scalar(2) * r == Scalar(12) * r2 / l2 * w3))
        throw check_error("equilateral: height relation w3 - 2r = 12 r^2 w3 / l2 failed");
    Scalar R = (w3 * w3 + l2 / Scalar(3)) / (Scalar(2) * w3);
    if (!(w3 * (Scalar(2) * R - w3) == l2 / Scalar(3)))
        throw check_error("equilateral: circumradius relation w3 (2R - w3) = l2/3 failed");
    Scalar offset = R + r - w3;  // signed distance, d^2 = offset^2 in every regime
    Scalar d2 = offset * offset;

    Scalar s = R * R - d2 - Scalar(3) * r2;
    Scalar g = s * s - Scalar(4) * r2 * R * R;
    if (!g.is_zero()) throw check_error("equilateral: squared gap is not exactly zero");
    if (s.sign() < 0) throw check_error("equilateral: linear side is negative");

    int reg = compare(r2, l2 / Scalar(24));
    EquilateralRegime regime = reg < 0   ? EquilateralRegime::below_regular
                               : reg == 0 ? EquilateralRegime::regular
                                          : EquilateralRegime::above_regular;
    // consistency of the regime with the sign of R + r - w3
    if ((regime == EquilateralRegime::below_regular && offset.sign() <= 0) ||
        (regime == EquilateralRegime::regular && !offset.is_zero()) ||
        (regime == EquilateralRegime::above_regular && offset.sign() >= 0))
        throw check_error("equilateral: regime disagrees with the sign of R + r - w3");
    return {w3, R, d2, g, s.sign(), regime};
}

Rational planar_critical_sq(const Rational& p) {
    if (p.sign() <= 0 || (Rational(1) - p).sign() <= 0)
        throw input_error("planar: p must lie strictly between 0 and 1");
    return p * (Rational(1) - p);
}

namespace {

struct P2 {
    Rational x, y;
};

P2 reflect_across_line(const P2& q, const P2& s, const P2& t) {
    Rational dx = t.x - s.x, dy = t.y - s.y;
    Rational nn = dx * dx + dy * dy;
    Rational proj = ((q.x - s.x) * dx + (q.y - s.y) * dy) / nn;
    P2 foot{s.x + proj * dx, s.y + proj * dy};
    return {Rational(2) * foot.x - q.x, Rational(2) * foot.y - q.y};
}

}  // namespace

Rational planar_apex_height(const Rational& p, const Rational& r) {
    planar_critical_sq(p);  // validates p
    if (r.sign() <= 0) throw input_error("planar: r must be positive");
    P2 A{Rational(0), Rational(0)}, B{Rational(1), Rational(0)}, K{p, r}, T{p, Rational(0)};
    // the second tangent line from each endpoint passes through the
    // mirror image of the base tangency point across the endpoint-center line
    P2 A2 = reflect_across_line(T, A, K);
    P2 B2 = reflect_across_line(T, B, K);
    // intersect line(A, A2) with line(B, B2)
    Rational dax = A2.x - A.x, day = A2.y - A.y;
    Rational dbx = B2.x - B.x, dby = B2.y - B.y;
    Rational det = dax * (-dby) + dbx * day;
    if (det.is_zero())
        throw degeneracy_error("planar: tangent lines are parallel (critical inradius)");
    Rational t = ((B.x - A.x) * (-dby) + dbx * (B.y - A.y)) / det;
    return A.y + t * day;
}

Rational planar_height_closed_form(const Rational& p, const Rational& r) {
    Rational pq = planar_critical_sq(p);
    Rational den = pq - r * r;
    if (den.is_zero())
        throw degeneracy_error("planar: pole at the critical inradius");
    return Rational(2) * r * pq / den;
}

std::pair<Scalar, Scalar> pech_identity(const Scalar& a, const Scalar& b, const Scalar& c) {
    Scalar P = a * a * a - a * a * b - a * b * b + b * b * b - a * a * c + Scalar(3) * a * b * c
             - b * b * c - a * c * c - b * c * c + c * c * c;
    Scalar S = ((a + b - c) * square(a - b) + (b + c - a) * square(b - c) +
                (c + a - b) * square(c - a)) / Scalar(2);
    return {P, S};
}

PechReport pech_euler(const Scalar& a, const Scalar& b, const Scalar& c, long long ambient_k) {
    if (a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0)
        throw input_error("pech: sides must be positive");
    if ((a + b - c).sign() <= 0 || (b + c - a).sign() <= 0 || (c + a - b).sign() <= 0)
        throw input_error("pech: degenerate triangle");
    long long k = ambient_k;
    for (const Scalar* s : {&a, &b, &c}) {
        if (s->radicand() == 0) continue;
        if (k == 0) k = s->radicand();
        else if (k != s->radicand()) throw input_error("pech: mixed radicands");
    }

    auto [P, S] = pech_identity(a, b, c);
    if (!(P == S)) throw check_error("pech: the half-sum-of-squares identity failed");
    PechReport rep;
    rep.identity_value = P;

    Scalar sixteenK2 = (a + b + c) * (a + b - c) * (a - b + c) * (-a + b + c);
    auto fourK = exact_sqrt(sixteenK2, k);
    if (!fourK) return rep;  // area not representable; identity-only report

    rep.heronian = true;
    rep.K = *fourK / Scalar(4);
    rep.r = Scalar(2) * rep.K / (a + b + c);
    rep.R = a * b * c / (Scalar(4) * rep.K);
    rep.euler_margin_sign = (rep.R - Scalar(2) * rep.r).sign();
    if (rep.euler_margin_sign < 0) throw check_error("pech: R < 2r");

    // coordinate cross-check: base |x-y| = c on the axis, apex above
    Point2 px{Scalar(0), Scalar(0)}, py{c, Scalar(0)};
    Scalar z1 = (b * b + c * c - a * a) / (Scalar(2) * c);
    Scalar z2 = Scalar(2) * rep.K / c;
    Point2 pz{z1, z2};
    Point2 o = circumcenter2(px, py, pz);
    Point2 i = incenter2(px, py, pz, k);
    if (!(i.x2 == rep.r)) throw check_error("pech: coordinate inradius disagrees");
    if (!(norm2(o - px) == rep.R * rep.R)) throw check_error("pech: coordinate circumradius disagrees");
    rep.d2 = norm2(o - i);
    if (!(rep.d2 == rep.R * (rep.R - Scalar(2) * rep.r)))
        throw check_error("pech: d^2 != R(R - 2r)");
    return rep;
}

}  // namespace gdgap
