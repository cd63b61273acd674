#ifndef SYMPROD_TRUNC_SERIES_HPP
#define SYMPROD_TRUNC_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "symprod/laurent_poly.hpp"

namespace symprod {

/// Power series in t truncated after t^order, with LaurentPoly
/// coefficients. Binary operations truncate to the smaller order, and every
/// stored coefficient equals the coefficient of the untruncated result.
class TruncSeries {
public:
    /// The zero series of the given order.
    explicit TruncSeries(std::size_t order);
    /// Coefficients c_0, c_1, ...; missing ones are zero, extra ones dropped.
    TruncSeries(std::size_t order, std::vector<LaurentPoly> coeffs);

    static TruncSeries constant(std::size_t order, const LaurentPoly& c);
    static TruncSeries one(std::size_t order) { return constant(order, LaurentPoly(1)); }
    /// c·t^k truncated at order.
    static TruncSeries monomial(std::size_t order, const LaurentPoly& c, std::size_t k);

    std::size_t order() const { return coeffs_.size() - 1; }
    const LaurentPoly& operator[](std::size_t n) const { return coeffs_.at(n); }
    const std::vector<LaurentPoly>& coefficients() const { return coeffs_; }

    TruncSeries truncated(std::size_t order) const;

    TruncSeries& operator+=(const TruncSeries& rhs);
    TruncSeries& operator-=(const TruncSeries& rhs);
    TruncSeries& operator*=(const TruncSeries& rhs);

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(TruncSeries a, const LaurentPoly& c);
    friend TruncSeries operator*(const LaurentPoly& c, TruncSeries a) { return std::move(a) * c; }

    /// Applies f to every coefficient.
    TruncSeries map(const std::function<LaurentPoly(const LaurentPoly&)>& f) const;

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

    /// One-line rendering in ascending powers of t, e.g. "1 + (1 + y)*t".
    std::string to_string() const;

private:
    std::vector<LaurentPoly> coeffs_;
};

/// exp(a); requires a zero constant term.
TruncSeries series_exp(const TruncSeries& a);

/// log(a); requires constant term 1. The result has zero constant term.
TruncSeries series_log(const TruncSeries& a);

/// 1/a; requires constant term 1.
TruncSeries series_inverse(const TruncSeries& a);

/// a^e for any integer e; requires constant term 1.
TruncSeries series_pow_int(const TruncSeries& a, std::int64_t e);

/// Expansion of (1 - w·t)^(-e) truncated at order, for a monomial w.
/// The coefficient of t^n is the rising factorial e(e+1)...(e+n-1)/n! times
/// w^n, which terminates after |e| terms when e < 0.
TruncSeries geometric_factor(const LaurentPoly& w, std::int64_t e, std::size_t order);

std::ostream& operator<<(std::ostream& os, const TruncSeries& s);

} // namespace symprod

#endif
