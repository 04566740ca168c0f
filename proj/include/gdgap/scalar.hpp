#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "gdgap/rational.hpp"

namespace gdgap {

/// Element of the active exact field: either a plain rational or
/// a + b*sqrt(k) with square-free k > 1.  The representation is kept
/// unique by collapsing b == 0 back to the rational form, so equality
/// is a plain componentwise check.  Radicands never mix: combining
/// elements of Q(sqrt(2)) and Q(sqrt(3)) is an error, while rationals
/// promote into either.
class Scalar {
public:
    Scalar() = default;  // zero
    Scalar(long n) : a_(n) {}                    // NOLINT: implicit by design
    Scalar(Rational a) : a_(std::move(a)) {}     // NOLINT: implicit by design
    Scalar(Rational a, Rational b, long long k);

    /// b * sqrt(k)
    static Scalar root_term(Rational b, long long k) { return Scalar(Rational(0), std::move(b), k); }

    bool is_rational() const { return k_ == 0; }
    long long radicand() const { return k_; }
    const Rational& base() const { return a_; }    // the a of a + b*sqrt(k)
    const Rational& coeff() const { return b_; }   // the b

    /// The rational value; requires is_rational().
    const Rational& rat() const;

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    /// Exact sign via case analysis on a, b and comparison of a^2 with k*b^2.
    int sign() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& l, const Scalar& r);
    friend Scalar operator-(const Scalar& l, const Scalar& r);
    friend Scalar operator*(const Scalar& l, const Scalar& r);
    friend Scalar operator/(const Scalar& l, const Scalar& r);
    Scalar& operator+=(const Scalar& r) { return *this = *this + r; }
    Scalar& operator-=(const Scalar& r) { return *this = *this - r; }
    Scalar& operator*=(const Scalar& r) { return *this = *this * r; }
    Scalar& operator/=(const Scalar& r) { return *this = *this / r; }

    friend bool operator==(const Scalar& l, const Scalar& r) {
        return l.k_ == r.k_ && l.a_ == r.a_ && l.b_ == r.b_;
    }

    /// Canonical literal: "p/q", or "a+b*sqrt(k)" / "a-b*sqrt(k)" / "b*sqrt(k)".
    std::string str() const;
    double to_double() const;

    /// Grammar (whitespace-insensitive): a rational "p" / "p/q", or an
    /// extension literal "[A][+|-][B*]sqrt(k)" where A, B are rationals,
    /// e.g. "-1/2+1*sqrt(2)", "3*sqrt(5)", "sqrt(3)", "1-sqrt(2)".
    static Scalar parse(std::string_view text);

private:
    Rational a_, b_;
    long long k_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

inline Scalar square(const Scalar& s) { return s * s; }
inline int compare(const Scalar& l, const Scalar& r) { return (l - r).sign(); }

/// Shared radicand of two operands (0 if both rational); throws on a mix
/// of two distinct extensions.
long long reconcile_radicand(const Scalar& l, const Scalar& r);

/// Exact square root inside Q(sqrt(ambient_k)) (ambient_k = 0 for plain
/// rationals).  Returns the nonnegative root when s is a perfect square
/// of a field element, empty otherwise.  Negative input is a caller error.
std::optional<Scalar> exact_sqrt(const Scalar& s, long long ambient_k);

/// Rejects k <= 0 and k with a square factor (including perfect squares).
bool is_square_free(long long k);

}  // namespace gdgap
