#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "gdgap/errors.hpp"

namespace gdgap {

/// Arbitrary-precision rational, always in canonical form:
/// gcd(|num|, den) = 1 and den > 0.  Backed by GMP; every constructor
/// re-canonicalizes, and GMP keeps arithmetic results canonical.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}                // NOLINT: implicit by design
    Rational(long n, long d);
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(mpq_class q);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(static_cast<mpq_class>(-q_)); }

    friend Rational operator+(const Rational& l, const Rational& r) {
        return Rational(static_cast<mpq_class>(l.q_ + r.q_));
    }
    friend Rational operator-(const Rational& l, const Rational& r) {
        return Rational(static_cast<mpq_class>(l.q_ - r.q_));
    }
    friend Rational operator*(const Rational& l, const Rational& r) {
        return Rational(static_cast<mpq_class>(l.q_ * r.q_));
    }
    friend Rational operator/(const Rational& l, const Rational& r);

    Rational& operator+=(const Rational& r) { return *this = *this + r; }
    Rational& operator-=(const Rational& r) { return *this = *this - r; }
    Rational& operator*=(const Rational& r) { return *this = *this * r; }
    Rational& operator/=(const Rational& r) { return *this = *this / r; }

    friend bool operator==(const Rational& l, const Rational& r) { return l.q_ == r.q_; }
    friend std::strong_ordering operator<=>(const Rational& l, const Rational& r) {
        int c = cmp(l.q_, r.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// "p" when the denominator is 1, "p/q" otherwise.
    std::string str() const;
    double to_double() const { return q_.get_d(); }

    /// Accepts "p" or "p/q" with optional leading sign; q > 0 required.
    static Rational parse(std::string_view text);

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exact square root: the nonnegative t with t*t == s when both numerator
/// and denominator are perfect squares, empty otherwise.  Negative input
/// is a caller error.
std::optional<Rational> exact_sqrt(const Rational& s);

}  // namespace gdgap
