#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hookbound {

using BigInt = mpz_class;

/// Exact rational number, always stored reduced with a positive denominator.
///
/// Used for the parameters (alpha, beta, epsilon, ...) that enter threshold
/// comparisons, so that floors, fractional parts and "count >= 2 alpha"
/// tests are exact.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& numerator, const BigInt& denominator);
    explicit Rational(const mpq_class& value);

    /// Parses "p/q" or "p". Throws ParseError on malformed input or q == 0.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_integer() const { return value_.get_den() == 1; }
    /// Largest integer <= value.
    BigInt floor() const;
    /// value - floor(value), in [0, 1).
    Rational fractional_part() const;
    double to_double() const { return value_.get_d(); }
    /// Natural log; requires value > 0.
    double log() const;

    std::string to_string() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

/// ln of a positive big integer, via the top 53 bits and the bit count.
double log_big(const BigInt& value);

}  // namespace hookbound
