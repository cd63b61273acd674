#include "symprod/laurent_poly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "symprod/errors.hpp"

namespace symprod {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("monomial exponent overflow");
    }
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("monomial exponent overflow");
    }
    return r;
}

void append_power(std::vector<std::string>& factors, const char* name, std::int64_t e)
{
    if (e == 0) {
        return;
    }
    if (e == 1) {
        factors.emplace_back(name);
    } else {
        factors.push_back(std::string(name) + "^" + std::to_string(e));
    }
}

Rational power_of(const Rational& value, std::int64_t e, const char* name)
{
    if (e < 0 && value.is_zero()) {
        throw domain_error(std::string("cannot substitute 0 for ") + name
                           + ", which occurs with a negative exponent");
    }
    return value.pow(e);
}

} // namespace

Monomial Monomial::scaled(std::int64_t r) const
{
    return {checked_mul(y, r), checked_mul(x, r), checked_mul(z, r)};
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    return {checked_add(a.y, b.y), checked_add(a.x, b.x), checked_add(a.z, b.z)};
}

LaurentPoly::LaurentPoly(const Rational& constant)
{
    if (!constant.is_zero()) {
        terms_.emplace(Monomial{}, constant);
    }
}

LaurentPoly::LaurentPoly(std::int64_t constant) : LaurentPoly(Rational(constant)) {}

LaurentPoly LaurentPoly::term(const Monomial& m, const Rational& c)
{
    LaurentPoly p;
    p.add_term(m, c);
    return p;
}

bool LaurentPoly::is_one() const
{
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second.is_one();
}

bool LaurentPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational LaurentPoly::coefficient(const Monomial& m) const
{
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs)
{
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, c);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs)
{
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, -c);
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs)
{
    *this = *this * rhs;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) {
        c *= rhs;
    }
    return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly out = *this;
    for (auto& [m, c] : out.terms_) {
        c = -c;
    }
    return out;
}

LaurentPoly LaurentPoly::pow(std::int64_t e) const
{
    if (e < 0) {
        if (!is_monomial()) {
            throw precondition_error("negative power of a non-monomial Laurent polynomial");
        }
        const auto& [m, c] = *terms_.begin();
        return term(m.scaled(e), c.pow(e));
    }
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (e != 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

bool LaurentPoly::is_normalized() const
{
    for (const auto& [m, c] : terms_) {
        if (c.is_zero() || !c.is_canonical()) {
            return false;
        }
    }
    return true;
}

std::string monomial_to_string(const Monomial& m)
{
    std::vector<std::string> factors;
    append_power(factors, "y", m.y);
    append_power(factors, "x", m.x);
    append_power(factors, "z", m.z);
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i != 0) {
            out += '*';
        }
        out += factors[i];
    }
    return out;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) {
                os << '-';
            }
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const Rational mag = c.abs();
        const std::string mono = monomial_to_string(m);
        if (mono.empty()) {
            os << mag;
        } else if (mag.is_one()) {
            os << mono;
        } else {
            os << mag << '*' << mono;
        }
    }
    return os.str();
}

LaurentPoly substitute_powers(const LaurentPoly& p, std::int64_t r)
{
    if (r <= 0) {
        throw precondition_error("substitute_powers requires r >= 1, got " + std::to_string(r));
    }
    LaurentPoly out;
    for (const auto& [m, c] : p.terms()) {
        out.add_term(m.scaled(r), c);
    }
    return out;
}

LaurentPoly evaluate(const LaurentPoly& p, const Assignment& assignment)
{
    LaurentPoly out;
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        Rational coeff = c;
        if (assignment.y) {
            coeff *= power_of(*assignment.y, m.y, "y");
            rest.y = 0;
        }
        if (assignment.x) {
            coeff *= power_of(*assignment.x, m.x, "x");
            rest.x = 0;
        }
        if (assignment.z) {
            coeff *= power_of(*assignment.z, m.z, "z");
            rest.z = 0;
        }
        out.add_term(rest, coeff);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

} // namespace symprod
