#include "pivmat/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace pivmat {

namespace {

mpq_class canonical(mpz_class num, mpz_class den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    mpq_class q(std::move(num));
    q.get_den() = std::move(den);
    q.canonicalize();  // lowest terms, positive denominator
    return q;
}

}  // namespace

Rational::Rational(long num, long den)
    : v_(canonical(mpz_class(num), mpz_class(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den)
    : v_(canonical(num, den)) {}

Rational Rational::from_double(double v) {
    return Rational(mpq_class(v), raw_tag{});  // mpq_set_d is exact and canonical
}

Rational Rational::abs() const {
    return Rational(mpq_class(::abs(v_)), raw_tag{});
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-v_), raw_tag{});
}

Rational& Rational::operator+=(const Rational& o) { v_ += o.v_; return *this; }
Rational& Rational::operator-=(const Rational& o) { v_ -= o.v_; return *this; }
Rational& Rational::operator*=(const Rational& o) { v_ *= o.v_; return *this; }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.v_;
}

bool abs_less(const Rational& a, const Rational& b) {
    return a.abs() < b.abs();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// mantissa := digits | digits '.' digits | '.' digits
// Yields integer digit string plus the count of fractional digits.
bool split_mantissa(std::string_view s, std::string& digits, long& frac_digits) {
    auto dot = s.find('.');
    if (dot == std::string_view::npos) {
        if (!all_digits(s)) return false;
        digits = std::string(s);
        frac_digits = 0;
        return true;
    }
    std::string_view intpart = s.substr(0, dot);
    std::string_view fracpart = s.substr(dot + 1);
    if (fracpart.empty()) return false;
    if (!intpart.empty() && !all_digits(intpart)) return false;
    if (!all_digits(fracpart)) return false;
    digits = std::string(intpart) + std::string(fracpart);
    if (digits.empty()) return false;
    frac_digits = static_cast<long>(fracpart.size());
    return true;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view token) {
    if (token.empty()) return std::nullopt;

    bool negative = false;
    if (token.front() == '+' || token.front() == '-') {
        negative = token.front() == '-';
        token.remove_prefix(1);
        if (token.empty()) return std::nullopt;
    }

    // quotient form: digits '/' digits
    if (auto slash = token.find('/'); slash != std::string_view::npos) {
        std::string_view num = token.substr(0, slash);
        std::string_view den = token.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return std::nullopt;
        mpz_class n(std::string(num), 10);
        mpz_class d(std::string(den), 10);
        if (sgn(d) == 0) return std::nullopt;
        if (negative) n = -n;
        return Rational(n, d);
    }

    // decimal/integer form with optional exponent
    long exponent = 0;
    if (auto e = token.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp = token.substr(e + 1);
        token = token.substr(0, e);
        bool exp_neg = false;
        if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
            exp_neg = exp.front() == '-';
            exp.remove_prefix(1);
        }
        if (!all_digits(exp) || exp.size() > 4) return std::nullopt;  // |exp| <= 9999
        exponent = std::strtol(std::string(exp).c_str(), nullptr, 10);
        if (exp_neg) exponent = -exponent;
    }

    std::string digits;
    long frac_digits = 0;
    if (!split_mantissa(token, digits, frac_digits)) return std::nullopt;

    mpz_class n(digits, 10);
    if (negative) n = -n;
    long shift = exponent - frac_digits;
    mpz_class d(1);
    if (shift > 0) {
        mpz_class ten(10), scale;
        mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(shift));
        n *= scale;
    } else if (shift < 0) {
        mpz_class ten(10);
        mpz_pow_ui(d.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-shift));
    }
    return Rational(n, d);
}

}  // namespace pivmat
