#include "gdgap/certificate.hpp"

namespace gdgap {

std::pair<Scalar, Scalar> u_pair(const BaseConfig& cfg) {
    Scalar a0 = twice_area(cfg.x, cfg.y, cfg.z);
    Point2 o = circumcenter2(cfg.x, cfg.y, cfg.z);
    return {Scalar(4) * a0 * (cfg.c.x1 - o.x1), Scalar(4) * a0 * (cfg.c.x2 - o.x2)};
}

BaseConfig with_radius(const BaseConfig& cfg, Scalar r) {
    return BaseConfig::make(cfg.x, cfg.y, cfg.z, cfg.c, std::move(r));
}

Metrics pipeline_metrics(const BaseConfig& cfg) { return metrics(build_tetrahedron(cfg)); }

Scalar pipeline_gap(const BaseConfig& cfg) { return squared_gap(pipeline_metrics(cfg)); }

namespace {

// Largest power-of-two rational q with q^2 strictly below the critical square.
Rational subcritical_base(const Scalar& rc2) {
    Rational q(1);
    while (compare(Scalar(q * q), rc2) >= 0) q = q / Rational(2);
    while (compare(Scalar(q * Rational(2) * q * Rational(2)), rc2) < 0) q = q * Rational(2);
    return q;
}

Scalar numerator_at(const BaseConfig& cfg, const CriticalPair& ab, const Scalar& a0,
                    const Rational& r) {
    Scalar rr{r};
    Scalar g = pipeline_gap(with_radius(cfg, rr));
    return g * a0 * (ab.A - ab.B * rr * rr) / (rr * rr);
}

QuarticCoefficients interpolate(const BaseConfig& cfg, const CriticalPair& ab, const Scalar& a0,
                                const Rational& q, int i0) {
    Scalar s[3], n[3];
    for (int j = 0; j < 3; ++j) {
        Rational r = q * Rational(i0 + j, i0 + j + 3);
        s[j] = Scalar(r * r);
        n[j] = numerator_at(cfg, ab, a0, r);
    }
    // Cramer on the Vandermonde system alpha s^2 + beta s + gamma = n
    auto det = [](const Scalar m[3][3]) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
             - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
             + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    Scalar M[3][3];
    for (int j = 0; j < 3; ++j) {
        M[j][0] = s[j] * s[j];
        M[j][1] = s[j];
        M[j][2] = Scalar(1);
    }
    Scalar d = det(M);
    QuarticCoefficients out;
    for (int col = 0; col < 3; ++col) {
        Scalar Mc[3][3];
        for (int j = 0; j < 3; ++j)
            for (int cix = 0; cix < 3; ++cix) Mc[j][cix] = (cix == col) ? n[j] : M[j][cix];
        Scalar value = det(Mc) / d;
        (col == 0 ? out.alpha : col == 1 ? out.beta : out.gamma) = value;
    }
    return out;
}

}  // namespace

QuarticCoefficients quartic_coefficients(const BaseConfig& cfg) {
    CriticalPair ab = critical_pair(cfg);
    Scalar a0 = twice_area(cfg.x, cfg.y, cfg.z);
    Rational q = subcritical_base(ab.A / ab.B);
    QuarticCoefficients first = interpolate(cfg, ab, a0, q, 1);
    QuarticCoefficients second = interpolate(cfg, ab, a0, q, 4);
    if (!(first.alpha == second.alpha) || !(first.beta == second.beta) ||
        !(first.gamma == second.gamma))
        throw check_error("quartic coefficients depend on the probe set");
    auto [u1, u2] = u_pair(cfg);
    if (!(first.alpha == u1 * u1 + u2 * u2))
        throw check_error("quartic leading coefficient differs from u1^2 + u2^2");
    return first;
}

VPair v_pair(const BaseConfig& cfg) {
    auto [u1, u2] = u_pair(cfg);
    QuarticCoefficients qc = quartic_coefficients(cfg);
    if (qc.alpha.is_zero())
        throw input_error("v recovery requires c distinct from the circumcenter (alpha = 0)");
    Scalar disc = Scalar(4) * qc.alpha * qc.gamma - qc.beta * qc.beta;
    auto dis = exact_sqrt(disc, cfg.field_k);
    if (!dis)
        throw check_error("4*alpha*gamma - beta^2 is not a perfect square in the field");
    auto [av1, av2] = closed_form_v(cfg);
    int orient = (u1 * av2 - u2 * av1).sign();
    Scalar e = orient < 0 ? -*dis : *dis;
    Scalar two_alpha = Scalar(2) * qc.alpha;
    Scalar v1 = (u1 * qc.beta - u2 * e) / two_alpha;
    Scalar v2 = (u2 * qc.beta + u1 * e) / two_alpha;
    // defining identity at a fourth probe value
    Rational q = subcritical_base(critical_inradius_sq(cfg));
    Scalar s = Scalar(q * Rational(7, 10) * q * Rational(7, 10));
    Scalar left = square(u1 * s + v1) + square(u2 * s + v2);
    Scalar right = qc.alpha * s * s + qc.beta * s + qc.gamma;
    if (!(left == right)) throw check_error("recovered v pair fails the quartic identity");
    return {v1, v2, *dis};
}

std::pair<Scalar, Scalar> closed_form_v(const BaseConfig& cfg) {
    const Scalar &x1 = cfg.x.x1, &x2 = cfg.x.x2;
    const Scalar &y1 = cfg.y.x1, &y2 = cfg.y.x2;
    const Scalar &z1 = cfg.z.x1, &z2 = cfg.z.x2;
    const Scalar &c1 = cfg.c.x1, &c2 = cfg.c.x2;
    Scalar a0 = twice_area(cfg.x, cfg.y, cfg.z);
    Point2 o = circumcenter2(cfg.x, cfg.y, cfg.z);
    const Scalar two(2), three(3);

    Scalar v1 = c1 * (c1 * c1 + c2 * c2) * a0 - two * c1 * c1 * a0 * o.x1
        + y1 * z1 * (y2 - z2) * (c1 * c1 - x1 * x1 - square(c2 - x2))
        + z1 * x1 * (z2 - x2) * (c1 * c1 - y1 * y1 - square(c2 - y2))
        + x1 * y1 * (x2 - y2) * (c1 * c1 - z1 * z1 - square(c2 - z2))
        + c1 * c1 * (x2 * x2 * (z2 - y2) + y2 * y2 * (x2 - z2) + z2 * z2 * (y2 - x2))
        + c2 * c2 * (x1 * x1 * (z2 - y2) + y1 * y1 * (x2 - z2) + z1 * z1 * (y2 - x2))
        + x1 * x1 * (y2 - z2) * (c1 * (y1 + z1) + c2 * (y2 + z2) - y2 * z2)
        + y1 * y1 * (z2 - x2) * (c1 * (z1 + x1) + c2 * (z2 + x2) - z2 * x2)
        + z1 * z1 * (x2 - y2) * (c1 * (x1 + y1) + c2 * (x2 + y2) - x2 * y2)
        + two * c1 * c2 * (x1 * x2 * (y2 - z2) + y1 * y2 * (z2 - x2) + z1 * z2 * (x2 - y2))
        + two * c1 * c2 * (x1 * (z2 * z2 - y2 * y2) + y1 * (x2 * x2 - z2 * z2) + z1 * (y2 * y2 - x2 * x2))
        + c1 * (x1 * x2 * (z2 * z2 - y2 * y2) + y1 * y2 * (x2 * x2 - z2 * z2) + z1 * z2 * (y2 * y2 - x2 * x2))
        + three * c1 * (x1 * y2 * z2 * (y2 - z2) + x2 * y1 * z2 * (z2 - x2) + x2 * y2 * z1 * (x2 - y2));

    Scalar v2 = c2 * (c1 * c1 + c2 * c2) * a0 - two * c2 * c2 * a0 * o.x2
        + y2 * z2 * (y1 - z1) * (square(c1 - x1) - c2 * c2 + x2 * x2)
        + x2 * z2 * (z1 - x1) * (square(c1 - y1) - c2 * c2 + y2 * y2)
        + x2 * y2 * (x1 - y1) * (square(c1 - z1) - c2 * c2 + z2 * z2)
        + c1 * c1 * (x2 * x2 * (y1 - z1) + y2 * y2 * (z1 - x1) + z2 * z2 * (x1 - y1))
        + c2 * c2 * (x1 * x1 * (y1 - z1) + y1 * y1 * (z1 - x1) + z1 * z1 * (x1 - y1))
        + x2 * x2 * (z1 - y1) * (c1 * (y1 + z1) + c2 * (y2 + z2) - y1 * z1)
        + y2 * y2 * (x1 - z1) * (c1 * (z1 + x1) + c2 * (z2 + x2) - z1 * x1)
        + z2 * z2 * (y1 - x1) * (c1 * (x1 + y1) + c2 * (x2 + y2) - x1 * y1)
        + two * c1 * c2 * (x1 * x2 * (z1 - y1) + y1 * y2 * (x1 - z1) + z1 * z2 * (y1 - x1))
        + two * c1 * c2 * (x2 * (y1 * y1 - z1 * z1) + y2 * (z1 * z1 - x1 * x1) + z2 * (x1 * x1 - y1 * y1))
        + c2 * (x1 * x2 * (y1 * y1 - z1 * z1) + y1 * y2 * (z1 * z1 - x1 * x1) + z1 * z2 * (x1 * x1 - y1 * y1))
        + three * c2 * (x1 * x1 * (y2 * z1 - y1 * z2) + y1 * y1 * (x1 * z2 - x2 * z1) + z1 * z1 * (x2 * y1 - x1 * y2));

    return {v1, v2};
}

GapCertificate certificate(const BaseConfig& cfg) {
    if (classify_radius(cfg) != RadiusRegime::subcritical)
        throw degeneracy_error("certificate: inradius is not subcritical");
    AreaSet areas = area_set(cfg);
    CriticalPair ab = critical_pair(cfg);
    auto [u1, u2] = u_pair(cfg);
    QuarticCoefficients qc = quartic_coefficients(cfg);

    Scalar v1, v2, dis;
    if (qc.alpha.is_zero()) {
        // c at the circumcenter: the quartic is constant and the
        // closed-form polynomials supply the pair directly
        std::tie(v1, v2) = closed_form_v(cfg);
        dis = Scalar(0);
        if (!(v1 * v1 + v2 * v2 == qc.gamma) ||
            !((Scalar(2) * (u1 * v1 + u2 * v2)) == qc.beta))
            throw check_error("closed-form v pair disagrees with the interpolated quartic");
    } else {
        VPair vp = v_pair(cfg);
        v1 = vp.v1;
        v2 = vp.v2;
        dis = vp.dis;
    }

    Scalar lhs = pipeline_gap(cfg);
    Scalar r2 = cfg.r * cfg.r;
    Scalar den = areas.a0 * (ab.A - ab.B * r2);
    if (den.sign() <= 0) throw check_error("certificate: nonpositive denominator");
    Scalar rhs = r2 * (square(u1 * r2 + v1) + square(u2 * r2 + v2)) / den;
    if (!(lhs == rhs)) throw check_error("certificate: lhs and rhs of the representation differ");
    if (!(dis * dis == Scalar(4) * qc.alpha * qc.gamma - qc.beta * qc.beta))
        throw check_error("certificate: dis^2 != 4*alpha*gamma - beta^2");
    return {u1, u2, v1, v2, areas.a0, ab.A, ab.B, qc.alpha, qc.beta, qc.gamma, dis, lhs, rhs};
}

}  // namespace gdgap
