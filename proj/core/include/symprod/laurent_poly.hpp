#ifndef SYMPROD_LAURENT_POLY_HPP
#define SYMPROD_LAURENT_POLY_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "symprod/rational.hpp"

namespace symprod {

/// Exponent triple of a monomial y^ey x^ex z^ez. Exponent arithmetic is
/// checked: overflow throws std::overflow_error.
struct Monomial {
    std::int64_t y = 0;
    std::int64_t x = 0;
    std::int64_t z = 0;

    bool is_one() const { return y == 0 && x == 0 && z == 0; }
    Monomial scaled(std::int64_t r) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Partial assignment of rational values to the variables y, x, z.
struct Assignment {
    std::optional<Rational> y;
    std::optional<Rational> x;
    std::optional<Rational> z;
};

/// Sparse Laurent polynomial in y, x, z with exact rational coefficients.
/// Zero coefficients are never stored, so equality is structural.
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    LaurentPoly() = default;
    LaurentPoly(const Rational& constant); // NOLINT(google-explicit-constructor)
    LaurentPoly(std::int64_t constant);    // NOLINT(google-explicit-constructor)

    static LaurentPoly term(const Monomial& m, const Rational& c = Rational(1));
    static LaurentPoly y(std::int64_t e = 1) { return term({e, 0, 0}); }
    static LaurentPoly x(std::int64_t e = 1) { return term({0, e, 0}); }
    static LaurentPoly z(std::int64_t e = 1) { return term({0, 0, e}); }

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;

    /// Coefficient of m (zero if absent).
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const { return coefficient({}); }

    /// Adds c·m to the polynomial, deleting the term if it cancels.
    void add_term(const Monomial& m, const Rational& c);

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const Rational& rhs);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
    LaurentPoly operator-() const;

    /// Monomial power; non-monomials are rejected with precondition_error
    /// when the exponent is negative.
    LaurentPoly pow(std::int64_t e) const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// True when no zero coefficient is stored and every coefficient is in
    /// lowest terms.
    bool is_normalized() const;

    /// Canonical text: terms ascending in (e_y, e_x, e_z), e.g. "1 - y*x^2".
    std::string to_string() const;

private:
    TermMap terms_;
};

/// Replaces every exponent triple e by r·e (the Adams-type substitution
/// y -> y^r, x -> x^r, z -> z^r). Rejects r <= 0.
LaurentPoly substitute_powers(const LaurentPoly& p, std::int64_t r);

/// Substitutes the assigned variables. A zero value for a variable that
/// occurs with a negative exponent throws domain_error.
LaurentPoly evaluate(const LaurentPoly& p, const Assignment& assignment);

/// Renders a single monomial without coefficient ("y*x^-1"), or "" for 1.
std::string monomial_to_string(const Monomial& m);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

} // namespace symprod

#endif
