#include "symprod/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace symprod {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw std::invalid_argument("not an integer literal");
    }
    mpz_class z(std::string(s), 10);
    return negative ? mpz_class(-z) : z;
}

} // namespace

Rational::Rational(std::int64_t value)
{
    // mpz has no int64 constructor on every platform; go through strings only
    // when the value does not fit a long.
    if (value >= std::numeric_limits<long>::min() && value <= std::numeric_limits<long>::max()) {
        value_ = mpq_class(static_cast<long>(value));
    } else {
        value_ = mpq_class(mpz_class(std::to_string(value), 10));
    }
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(mpz_class(std::to_string(num), 10), mpz_class(std::to_string(den), 10))
{
}

Rational::Rational(const mpz_class& value) : value_(value) {}

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    try {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            return Rational(parse_integer(text));
        }
        const auto den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) {
            throw std::invalid_argument("bad denominator");
        }
        return Rational(parse_integer(text.substr(0, slash)), mpz_class(std::string(den_text), 10));
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid rational literal '" + std::string(text) + "'");
    }
}

std::int64_t Rational::to_int64() const
{
    if (!is_integer()) {
        throw std::domain_error("rational " + to_string() + " is not an integer");
    }
    const mpz_class& n = numerator();
    if (!n.fits_slong_p()) {
        throw std::overflow_error("integer " + n.get_str() + " does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(n.get_si());
}

Rational Rational::pow(std::int64_t exponent) const
{
    if (exponent < 0) {
        if (is_zero()) {
            throw std::domain_error("zero raised to a negative power");
        }
        Rational inv;
        inv.value_ = 1 / value_;
        return inv.pow(-exponent);
    }
    Rational result(1);
    Rational base = *this;
    auto e = static_cast<std::uint64_t>(exponent);
    while (e != 0) {
        if (e & 1U) {
            result *= base;
        }
        e >>= 1U;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

Rational Rational::abs() const
{
    Rational r;
    r.value_ = ::abs(value_);
    return r;
}

std::string Rational::to_string() const { return value_.get_str(); }

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const
{
    Rational r;
    r.value_ = -value_;
    return r;
}

bool Rational::is_canonical() const
{
    if (sgn(value_.get_den()) <= 0) {
        return false;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return g == 1 || (value_.get_num() == 0 && value_.get_den() == 1);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

} // namespace symprod
