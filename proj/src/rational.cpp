#include "hookbound/rational.hpp"

#include <cctype>
#include <cmath>

#include "hookbound/errors.hpp"

namespace hookbound {

namespace {

bool is_integer_literal(std::string_view text) {
    if (text.empty()) return false;
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) return false;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
}

BigInt parse_integer(std::string_view text) {
    std::string s(text);
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return BigInt(s, 10);
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(BigInt(static_cast<long>(value)), BigInt(1)) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    BigInt num = parse_integer(num_text);
    BigInt den = 1;
    if (slash != std::string_view::npos) {
        const auto den_text = text.substr(slash + 1);
        if (!is_integer_literal(den_text)) {
            throw ParseError("malformed rational '" + std::string(text) + "'");
        }
        den = parse_integer(den_text);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

BigInt Rational::floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rational Rational::fractional_part() const { return *this - Rational(floor(), 1); }

double Rational::log() const { return log_big(value_.get_num()) - log_big(value_.get_den()); }

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
Rational operator/(const Rational& a, const Rational& b) {
    if (b.value_ == 0) throw DomainError("division by zero rational");
    return Rational(mpq_class(a.value_ / b.value_));
}
Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

double log_big(const BigInt& value) {
    if (value <= 0) throw DomainError("log of a non-positive integer");
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

}  // namespace hookbound
