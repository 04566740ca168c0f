#pragma once

#include "gdgap/certificate.hpp"

namespace gdgap {

/// Cubic factor pair of the circumcenter special case: when c is the
/// circumcenter, v_i = |x-y|^2 |y-z|^2 |z-x|^2 g_i / (8 a0^2).
std::pair<Scalar, Scalar> g_pair(const Point2& x, const Point2& y, const Point2& z);

/// Gap for c = circumcenter (requires an acute base so c is interior):
///   r^2 |x-y|^4 |y-z|^4 |z-x|^4 (g1^2 + g2^2) / (64 a0^5 (A - B r^2)).
/// Also asserts the g-factorization of the v pair.
Scalar special_case_a(const BaseConfig& cfg);

/// Gap for c = incenter (sides must be representable in the field):
///   16 a0 r^6 ((c1-o1)^2 + (c2-o2)^2) / (A - B r^2); the v pair is zero.
Scalar special_case_b(const BaseConfig& cfg);

enum class EquilateralRegime { below_regular, regular, above_regular };

/// Equilateral base touched at its center, parametrized by the squared
/// side l2 and the inradius r with r^2 < l2/12.  The gap is exactly
/// zero; w3 = 2 l2 r / (l2 - 12 r^2), R = (w3^2 + l2/3) / (2 w3),
/// d^2 = (R + r - w3)^2, with the regime read off against the regular
/// inradius r_reg^2 = l2/24 (d = 0 and w3 = R + r exactly there).
struct EquilateralReport {
    Scalar w3, R, d2;
    Scalar squared_gap;    // exactly zero
    int linear_side_sign;  // sign of R^2 - d^2 - 3 r^2, nonnegative
    EquilateralRegime regime;
};

EquilateralReport equilateral_gap(const Scalar& l2, const Scalar& r);

/// Planar analogue on the segment [0,1] with interior division point p:
/// the squared critical inradius is p(1-p).
Rational planar_critical_sq(const Rational& p);

/// Apex ordinate of the triangle cut out by the two non-horizontal
/// tangent lines from (0,0) and (1,0) to the circle centered (p, r),
/// built by reflecting the base tangency point across the point-center
/// lines.  Has its pole exactly at r^2 = p(1-p).
Rational planar_apex_height(const Rational& p, const Rational& r);

/// 2 r p(1-p) / (p(1-p) - r^2), the closed form the construction obeys.
Rational planar_height_closed_form(const Rational& p, const Rational& r);

/// P(a,b,c) = a^3-a^2b-ab^2+b^3-a^2c+3abc-b^2c-ac^2-bc^2+c^3 and its
/// half-sum-of-squares rewriting; the two are identical for all inputs.
std::pair<Scalar, Scalar> pech_identity(const Scalar& a, const Scalar& b, const Scalar& c);

/// Triangle-side report: verifies the identity, and when 16 K^2 is a
/// perfect square in the field also computes K, r = 2K/(a+b+c),
/// R = abc/(4K) and checks R >= 2r plus d^2 = R(R-2r) against an
/// explicit coordinate construction.
struct PechReport {
    Scalar identity_value;
    bool heronian = false;
    Scalar K, r, R, d2;
    int euler_margin_sign = 0;  // sign of R - 2r
};

PechReport pech_euler(const Scalar& a, const Scalar& b, const Scalar& c, long long ambient_k = 0);

}  // namespace gdgap
