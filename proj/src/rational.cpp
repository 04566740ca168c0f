#include "gdgap/rational.hpp"

#include <cctype>
#include <ostream>

namespace gdgap {

Rational::Rational(long n, long d) {
    if (d == 0) throw input_error("rational: zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw input_error("rational: zero denominator");
    q_ = mpq_class(n);
    q_ /= mpq_class(d);
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) throw input_error("rational: zero denominator");
    q_.canonicalize();
}

Rational operator/(const Rational& l, const Rational& r) {
    if (r.is_zero()) throw input_error("rational: division by zero");
    return Rational(static_cast<mpq_class>(l.q_ / r.q_));
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational Rational::parse(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw input_error("rational: empty literal");

    auto is_int = [](std::string_view t, bool allow_sign) {
        size_t i = 0;
        if (allow_sign && (t[0] == '+' || t[0] == '-')) i = 1;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };

    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int(s, true)) throw input_error("rational: malformed literal '" + s + "'");
        return Rational(mpz_class(s), mpz_class(1));
    }
    std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    if (!is_int(ns, true) || !is_int(ds, false))
        throw input_error("rational: malformed literal '" + s + "'");
    mpz_class d(ds);
    if (d == 0) throw input_error("rational: zero denominator in '" + s + "'");
    return Rational(mpz_class(ns), d);
}

std::optional<Rational> exact_sqrt(const Rational& s) {
    if (s.sign() < 0) throw input_error("exact_sqrt: negative input");
    if (s.is_zero()) return Rational(0);
    if (!mpz_perfect_square_p(s.num().get_mpz_t()) ||
        !mpz_perfect_square_p(s.den().get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), s.num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), s.den().get_mpz_t());
    return Rational(rn, rd);
}

}  // namespace gdgap
