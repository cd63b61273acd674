#include "symprod/trunc_series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "symprod/errors.hpp"

namespace symprod {

TruncSeries::TruncSeries(std::size_t order) : coeffs_(order + 1) {}

TruncSeries::TruncSeries(std::size_t order, std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs))
{
    coeffs_.resize(order + 1);
}

TruncSeries TruncSeries::constant(std::size_t order, const LaurentPoly& c)
{
    TruncSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncSeries TruncSeries::monomial(std::size_t order, const LaurentPoly& c, std::size_t k)
{
    TruncSeries s(order);
    if (k <= order) {
        s.coeffs_[k] = c;
    }
    return s;
}

TruncSeries TruncSeries::truncated(std::size_t order) const
{
    return TruncSeries(std::min(order, this->order()),
                       std::vector<LaurentPoly>(coeffs_.begin(),
                                                coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1)));
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs)
{
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        coeffs_[n] += rhs.coeffs_[n];
    }
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs)
{
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        coeffs_[n] -= rhs.coeffs_[n];
    }
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
{
    const std::size_t order = std::min(a.order(), b.order());
    TruncSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (!b.coeffs_[j].is_zero()) {
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    return out;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& rhs)
{
    *this = *this * rhs;
    return *this;
}

TruncSeries operator*(TruncSeries a, const LaurentPoly& c)
{
    for (auto& coeff : a.coeffs_) {
        coeff *= c;
    }
    return a;
}

TruncSeries TruncSeries::map(const std::function<LaurentPoly(const LaurentPoly&)>& f) const
{
    std::vector<LaurentPoly> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        out.push_back(f(c));
    }
    return TruncSeries(order(), std::move(out));
}

std::string TruncSeries::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        const LaurentPoly& c = coeffs_[n];
        if (c.is_zero()) {
            continue;
        }
        std::string tpow;
        if (n == 1) {
            tpow = "t";
        } else if (n > 1) {
            tpow = "t^" + std::to_string(n);
        }
        std::string body;
        bool negative = false;
        if (tpow.empty()) {
            body = c.to_string();
            if (body.front() == '-' && c.is_monomial()) {
                negative = true;
                body.erase(0, 1);
            }
        } else if (c.is_monomial()) {
            const auto& [m, coeff] = *c.terms().begin();
            negative = coeff.sign() < 0;
            const Rational mag = coeff.abs();
            const std::string mono = monomial_to_string(m);
            if (mono.empty()) {
                body = mag.is_one() ? tpow : mag.to_string() + "*" + tpow;
            } else {
                body = (mag.is_one() ? mono : mag.to_string() + "*" + mono) + "*" + tpow;
            }
        } else {
            body = "(" + c.to_string() + ")*" + tpow;
        }
        if (first) {
            os << (negative ? "-" : "") << body;
        } else {
            os << (negative ? " - " : " + ") << body;
        }
        first = false;
    }
    return first ? "0" : os.str();
}

TruncSeries series_exp(const TruncSeries& a)
{
    if (!a[0].is_zero()) {
        throw precondition_error("series_exp requires a zero constant term");
    }
    // E' = a' E, so n E_n = sum_{k=1}^{n} k a_k E_{n-k}.
    const std::size_t order = a.order();
    std::vector<LaurentPoly> e(order + 1);
    e[0] = LaurentPoly(1);
    for (std::size_t n = 1; n <= order; ++n) {
        LaurentPoly acc;
        for (std::size_t k = 1; k <= n; ++k) {
            if (!a[k].is_zero() && !e[n - k].is_zero()) {
                acc += a[k] * e[n - k] * Rational(static_cast<std::int64_t>(k));
            }
        }
        e[n] = acc * Rational(1, static_cast<std::int64_t>(n));
    }
    return TruncSeries(order, std::move(e));
}

TruncSeries series_log(const TruncSeries& a)
{
    if (!a[0].is_one()) {
        throw precondition_error("series_log requires constant term 1");
    }
    // L' = a'/a, so n L_n = n a_n - sum_{k=1}^{n-1} k L_k a_{n-k}.
    const std::size_t order = a.order();
    std::vector<LaurentPoly> l(order + 1);
    for (std::size_t n = 1; n <= order; ++n) {
        LaurentPoly acc = a[n] * Rational(static_cast<std::int64_t>(n));
        for (std::size_t k = 1; k < n; ++k) {
            if (!l[k].is_zero() && !a[n - k].is_zero()) {
                acc -= l[k] * a[n - k] * Rational(static_cast<std::int64_t>(k));
            }
        }
        l[n] = acc * Rational(1, static_cast<std::int64_t>(n));
    }
    return TruncSeries(order, std::move(l));
}

TruncSeries series_inverse(const TruncSeries& a)
{
    if (!a[0].is_one()) {
        throw precondition_error("series_inverse requires constant term 1");
    }
    const std::size_t order = a.order();
    std::vector<LaurentPoly> b(order + 1);
    b[0] = LaurentPoly(1);
    for (std::size_t n = 1; n <= order; ++n) {
        LaurentPoly acc;
        for (std::size_t k = 1; k <= n; ++k) {
            if (!a[k].is_zero() && !b[n - k].is_zero()) {
                acc -= a[k] * b[n - k];
            }
        }
        b[n] = std::move(acc);
    }
    return TruncSeries(order, std::move(b));
}

TruncSeries series_pow_int(const TruncSeries& a, std::int64_t e)
{
    if (!a[0].is_one()) {
        throw precondition_error("series_pow_int requires constant term 1");
    }
    TruncSeries base = e < 0 ? series_inverse(a) : a;
    auto k = static_cast<std::uint64_t>(e < 0 ? -e : e);
    TruncSeries result = TruncSeries::one(a.order());
    while (k != 0) {
        if (k & 1U) {
            result *= base;
        }
        k >>= 1U;
        if (k != 0) {
            base *= base;
        }
    }
    return result;
}

TruncSeries geometric_factor(const LaurentPoly& w, std::int64_t e, std::size_t order)
{
    if (!w.is_monomial()) {
        throw precondition_error("geometric_factor requires a monomial, got " + w.to_string());
    }
    std::vector<LaurentPoly> c(order + 1);
    Rational binom(1);
    LaurentPoly wn(1);
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) {
            binom *= Rational(e + static_cast<std::int64_t>(n) - 1, static_cast<std::int64_t>(n));
            wn *= w;
        }
        if (binom.is_zero()) {
            break;
        }
        c[n] = wn * binom;
    }
    return TruncSeries(order, std::move(c));
}

std::ostream& operator<<(std::ostream& os, const TruncSeries& s) { return os << s.to_string(); }

} // namespace symprod
