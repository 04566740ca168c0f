#include "gdgap/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace gdgap {

bool is_square_free(long long k) {
    if (k <= 1) return false;
    for (long long d = 2; d * d <= k; ++d) {
        if (k % (d * d) == 0) return false;
        while (k % d == 0) k /= d;
    }
    return true;
}

Scalar::Scalar(Rational a, Rational b, long long k) : a_(std::move(a)), b_(std::move(b)), k_(k) {
    if (b_.is_zero()) {
        k_ = 0;
        return;
    }
    if (!is_square_free(k_))
        throw input_error("scalar: radicand must be a square-free integer > 1, got " +
                          std::to_string(k));
}

const Rational& Scalar::rat() const {
    if (!is_rational()) throw input_error("scalar: not a rational value: " + str());
    return a_;
}

long long reconcile_radicand(const Scalar& l, const Scalar& r) {
    if (l.radicand() == 0) return r.radicand();
    if (r.radicand() == 0 || r.radicand() == l.radicand()) return l.radicand();
    throw input_error("scalar: mixed radicands sqrt(" + std::to_string(l.radicand()) +
                      ") and sqrt(" + std::to_string(r.radicand()) + ")");
}

int Scalar::sign() const {
    if (b_.is_zero()) return a_.sign();
    if (a_.is_zero()) return b_.sign();
    int sa = a_.sign(), sb = b_.sign();
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against k*b^2
    int cmp2 = (a_ * a_ - Rational(k_, 1) * b_ * b_).sign();
    if (cmp2 == 0) return 0;  // unreachable for square-free k, kept for safety
    return cmp2 > 0 ? sa : sb;
}

Scalar Scalar::operator-() const {
    Scalar out;
    out.a_ = -a_;
    out.b_ = -b_;
    out.k_ = k_;
    return out;
}

namespace {
Scalar make(Rational a, Rational b, long long k) {
    Scalar out;
    if (b.is_zero()) return Scalar(std::move(a));
    return Scalar(std::move(a), std::move(b), k);
}
}  // namespace

Scalar operator+(const Scalar& l, const Scalar& r) {
    long long k = reconcile_radicand(l, r);
    return make(l.a_ + r.a_, l.b_ + r.b_, k);
}

Scalar operator-(const Scalar& l, const Scalar& r) {
    long long k = reconcile_radicand(l, r);
    return make(l.a_ - r.a_, l.b_ - r.b_, k);
}

Scalar operator*(const Scalar& l, const Scalar& r) {
    long long k = reconcile_radicand(l, r);
    Rational kk(k, 1);
    return make(l.a_ * r.a_ + kk * l.b_ * r.b_, l.a_ * r.b_ + l.b_ * r.a_, k);
}

Scalar operator/(const Scalar& l, const Scalar& r) {
    long long k = reconcile_radicand(l, r);
    if (r.is_zero()) throw input_error("scalar: division by zero");
    // conjugate norm a^2 - k b^2 vanishes only at zero (k square-free)
    Rational kk(k, 1);
    Rational n = r.a_ * r.a_ - kk * r.b_ * r.b_;
    return make((l.a_ * r.a_ - kk * l.b_ * r.b_) / n, (l.b_ * r.a_ - l.a_ * r.b_) / n, k);
}

std::string Scalar::str() const {
    if (is_rational()) return a_.str();
    std::string out;
    if (!a_.is_zero()) {
        out = a_.str();
        out += (b_.sign() > 0) ? "+" : "-";
        Rational babs = b_.sign() > 0 ? b_ : -b_;
        out += babs.str();
    } else {
        out = b_.str();
    }
    out += "*sqrt(" + std::to_string(k_) + ")";
    return out;
}

double Scalar::to_double() const {
    double v = a_.to_double();
    if (k_ != 0) v += b_.to_double() * std::sqrt(static_cast<double>(k_));
    return v;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar Scalar::parse(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw input_error("scalar: empty literal");

    auto pos = s.find("sqrt(");
    if (pos == std::string::npos) return Scalar(Rational::parse(s));

    if (s.back() != ')')
        throw input_error("scalar: malformed literal '" + s + "'");
    std::string kstr = s.substr(pos + 5, s.size() - pos - 6);
    if (kstr.empty() || kstr.find_first_not_of("0123456789") != std::string::npos)
        throw input_error("scalar: malformed radicand in '" + s + "'");
    long long k = 0;
    try {
        k = std::stoll(kstr);
    } catch (const std::exception&) {
        throw input_error("scalar: radicand out of range in '" + s + "'");
    }
    if (!is_square_free(k))
        throw input_error("scalar: radicand must be a square-free integer > 1, got " + kstr);

    std::string prefix = s.substr(0, pos);
    Rational a(0), b(1);
    bool b_negative = false;
    if (!prefix.empty() && prefix.back() == '*') {
        prefix.pop_back();
        // trailing rational token is the coefficient
        size_t i = prefix.size();
        while (i > 0 && (std::isdigit(static_cast<unsigned char>(prefix[i - 1])) || prefix[i - 1] == '/'))
            --i;
        if (i == prefix.size()) throw input_error("scalar: malformed literal '" + s + "'");
        std::string btok = prefix.substr(i);
        prefix.resize(i);
        if (!prefix.empty() && (prefix.back() == '+' || prefix.back() == '-')) {
            if (prefix.size() == 1) {  // leading sign belongs to b
                b_negative = prefix.back() == '-';
                prefix.clear();
            } else {
                b_negative = prefix.back() == '-';
                prefix.pop_back();
            }
        }
        b = Rational::parse(btok);
    } else if (!prefix.empty()) {
        // forms "A+", "A-", "+", "-"
        if (prefix.back() == '+' || prefix.back() == '-') {
            b_negative = prefix.back() == '-';
            prefix.pop_back();
        } else {
            throw input_error("scalar: malformed literal '" + s + "'");
        }
    }
    if (!prefix.empty()) a = Rational::parse(prefix);
    if (b_negative) b = -b;
    if (b.is_zero()) throw input_error("scalar: zero sqrt coefficient in '" + s + "'");
    return Scalar(std::move(a), std::move(b), k);
}

std::optional<Scalar> exact_sqrt(const Scalar& s, long long ambient_k) {
    if (ambient_k != 0 && !is_square_free(ambient_k))
        throw input_error("exact_sqrt: bad ambient radicand " + std::to_string(ambient_k));
    if (s.radicand() != 0) {
        if (ambient_k == 0) ambient_k = s.radicand();  // the value pins its field
        else if (ambient_k != s.radicand())
            throw input_error("exact_sqrt: value lies outside the ambient field");
    }
    if (s.sign() < 0) throw input_error("exact_sqrt: negative input");
    if (s.is_zero()) return Scalar(0);

    if (s.is_rational()) {
        if (auto t = exact_sqrt(s.rat())) return Scalar(*t);
        if (ambient_k != 0) {
            // a = m^2 * k  =>  sqrt(a) = m*sqrt(k)
            if (auto m = exact_sqrt(s.rat() / Rational(ambient_k, 1)))
                return Scalar::root_term(*m, ambient_k);
        }
        return std::nullopt;
    }

    // (c + d*sqrt(k))^2 = a + b*sqrt(k):  c^2 + k d^2 = a, 2cd = b.
    // c^2 and k d^2 are the roots of t^2 - a t + k (b/2)^2 = 0 whose
    // discriminant a^2 - k b^2 must be a perfect rational square.
    const long long k = s.radicand();
    const Rational& a = s.base();
    const Rational& b = s.coeff();
    Rational disc = a * a - Rational(k, 1) * b * b;
    if (disc.sign() < 0) return std::nullopt;
    auto s0 = exact_sqrt(disc);
    if (!s0) return std::nullopt;
    for (const Rational& c2 : {(a + *s0) / Rational(2), (a - *s0) / Rational(2)}) {
        if (c2.sign() <= 0) continue;
        auto c = exact_sqrt(c2);
        if (!c) continue;
        Rational d = b / (Rational(2) * *c);
        Scalar root(*c, d, k);
        if (root * root == s) return root.sign() >= 0 ? root : -root;
    }
    return std::nullopt;
}

}  // namespace gdgap
