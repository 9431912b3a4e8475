#pragma once

#include <charconv>
#include <cmath>
#include <concepts>
#include <optional>
#include <string>
#include <string_view>

#include "pivmat/rational.hpp"

namespace pivmat {

inline constexpr double kDefaultZeroTolerance = 1e-12;

/// The arithmetic contract engines and strategies are generic over: a scalar
/// type plus the zero test and magnitude ordering that gate pivot candidates.
template <class A>
concept ArithModel = requires(const A a, const typename A::Scalar& s,
                              std::string_view t) {
    typename A::Scalar;
    { a.is_zero(s) } -> std::convertible_to<bool>;
    { a.abs_less(s, s) } -> std::convertible_to<bool>;
    { a.from_fraction(1L, 2L) } -> std::same_as<typename A::Scalar>;
    { a.parse_token(t) } -> std::same_as<std::optional<typename A::Scalar>>;
    { a.format(s) } -> std::same_as<std::string>;
};

/// Exact rational arithmetic. Zero means zero.
struct ExactArith {
    using Scalar = Rational;
    static constexpr bool exact = true;

    bool is_zero(const Scalar& s) const { return s.is_zero(); }
    bool abs_less(const Scalar& a, const Scalar& b) const { return pivmat::abs_less(a, b); }
    Scalar from_fraction(long num, long den) const { return Rational(num, den); }
    std::optional<Scalar> parse_token(std::string_view t) const { return Rational::parse(t); }
    std::string format(const Scalar& s) const { return s.to_string(); }
    static constexpr const char* name() { return "exact"; }
};

/// Binary double arithmetic with an explicit zero tolerance. The tolerance is
/// run configuration, carried here rather than in each value.
struct FloatArith {
    using Scalar = double;
    static constexpr bool exact = false;

    double zero_tolerance = kDefaultZeroTolerance;

    bool is_zero(double v) const { return std::fabs(v) <= zero_tolerance; }
    bool abs_less(double a, double b) const { return std::fabs(a) < std::fabs(b); }
    double from_fraction(long num, long den) const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    std::optional<double> parse_token(std::string_view t) const {
        // One grammar for both modes: validate as a rational first. Decimal
        // tokens then re-read through from_chars, which rounds to nearest
        // (mpq_get_d truncates), so formatted output re-parses bit-exactly.
        auto q = Rational::parse(t);
        if (!q) return std::nullopt;
        if (t.find('/') == std::string_view::npos) {
            double v = 0.0;
            auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
            if (ec == std::errc{} && end == t.data() + t.size()) return v;
        }
        return q->to_double();
    }
    std::string format(double v) const {
        char buf[32];
        auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);  // shortest round-trip
        return std::string(buf, end);
    }
    static constexpr const char* name() { return "float"; }
};

inline Rational abs_of(const Rational& q) { return q.abs(); }
inline double abs_of(double v) { return std::fabs(v); }

}  // namespace pivmat
