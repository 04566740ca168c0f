#pragma once

#include <utility>

#include "gdgap/sphere_metrics.hpp"

namespace gdgap {

/// The two-term representation of the inequality gap,
///   (R^2-d^2-3r^2)^2 - (2rR)^2
///     = r^2 * ((u1 r^2 + v1)^2 + (u2 r^2 + v2)^2) / (a0 (A - B r^2)),
/// with every quantity a function of the base triangle and tangent
/// point alone.  lhs is computed through the apex/circumsphere
/// pipeline, rhs from the coefficients; the constructor verifies they
/// agree exactly.
struct GapCertificate {
    Scalar u1, u2, v1, v2;
    Scalar a0, A, B;
    Scalar alpha, beta, gamma;  // numerator quartic in r: alpha r^4 + beta r^2 + gamma
    Scalar dis;                 // sqrt(4 alpha gamma - beta^2), exact
    Scalar lhs, rhs;
};

struct QuarticCoefficients {
    Scalar alpha, beta, gamma;
};

struct VPair {
    Scalar v1, v2, dis;
};

/// u1 = 4 a0 (c1 - o1), u2 = 4 a0 (c2 - o2); r-independent, vanishing
/// exactly when c is the circumcenter.
std::pair<Scalar, Scalar> u_pair(const BaseConfig& cfg);

/// Copy of cfg with a different inradius (revalidated).
BaseConfig with_radius(const BaseConfig& cfg, Scalar r);

/// Full pipeline at cfg.r: tangent points -> apex -> circumsphere.
Metrics pipeline_metrics(const BaseConfig& cfg);

/// (R^2-d^2-3r^2)^2 - 4 r^2 R^2 at cfg.r, through the pipeline.
Scalar pipeline_gap(const BaseConfig& cfg);

/// Coefficients of N(r) = gap * a0 (A - B r^2) / r^2, an even quartic
/// in r, recovered by exact interpolation at three subcritical probe
/// radii and re-verified against a disjoint probe set.
QuarticCoefficients quartic_coefficients(const BaseConfig& cfg);

/// Recovers (v1, v2) from the quartic: with alpha = u1^2 + u2^2 and
/// dis = sqrt(4 alpha gamma - beta^2),
///   v1 = (u1 beta -+ u2 dis) / (2 alpha), v2 = (u2 beta +- u1 dis) / (2 alpha).
/// The quartic pins the pair only up to reflection; the orientation
/// comes from the sign of u1 v2 - u2 v1 of the closed-form polynomials.
/// Requires alpha != 0 (c away from the circumcenter).
VPair v_pair(const BaseConfig& cfg);

/// Direct evaluation of the closed-form degree-five polynomials for
/// v1, v2 in their sum-of-products arrangement.  Agrees with v_pair
/// exactly on every valid config.
std::pair<Scalar, Scalar> closed_form_v(const BaseConfig& cfg);

/// Builds the certificate and verifies every invariant exactly:
/// alpha = u1^2+u2^2, dis^2 = 4 alpha gamma - beta^2, positive
/// denominator, and lhs == rhs.  Throws check_error on any mismatch.
GapCertificate certificate(const BaseConfig& cfg);

}  // namespace gdgap
