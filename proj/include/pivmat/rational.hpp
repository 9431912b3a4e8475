#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace pivmat {

/// Exact arbitrary-precision rational. Always canonical: lowest terms,
/// denominator positive, zero stored as 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    explicit Rational(long n) : v_(static_cast<signed long>(n)) {}

    /// normalize(num, den): reduces by gcd and makes the denominator
    /// positive. Throws std::domain_error when den == 0.
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);

    /// Exact value of a binary double (every finite double is rational).
    static Rational from_double(double v);

    /// Parses one scalar token: integer ("7"), decimal ("3.25", "1e-5",
    /// converted exactly), or quotient ("-5/2"). Returns nullopt on
    /// malformed input; callers attach source positions.
    static std::optional<Rational> parse(std::string_view token);

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    Rational abs() const;

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    /// "p/q" in lowest terms; integers print without "/1".
    std::string to_string() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws std::domain_error on /0

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
    struct raw_tag {};
    Rational(mpq_class v, raw_tag) : v_(std::move(v)) {}

    mpq_class v_;  // invariant: canonical
};

/// |a| < |b|, exact.
bool abs_less(const Rational& a, const Rational& b);

}  // namespace pivmat
