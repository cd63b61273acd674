#include "symprod/macdonald.hpp"

#include <functional>
#include <vector>

#include "symprod/errors.hpp"

namespace symprod {

namespace {

std::int64_t parity_sign(std::int64_t k) { return (k & 1) != 0 ? -1 : 1; }

// Product of geometric factors over a table of (monomial, exponent) pairs.
TruncSeries product_of_factors(const std::map<Monomial, std::int64_t>& exponents, std::size_t order)
{
    TruncSeries out = TruncSeries::one(order);
    for (const auto& [m, e] : exponents) {
        if (e != 0) {
            out *= geometric_factor(LaurentPoly::term(m), e, order);
        }
    }
    return out;
}

// exp(sum_{r=1}^{order} psi_r(base) t^r / r).
TruncSeries adams_exponential(const LaurentPoly& base, std::size_t order)
{
    std::vector<LaurentPoly> terms(order + 1);
    for (std::size_t r = 1; r <= order; ++r) {
        terms[r] = substitute_powers(base, static_cast<std::int64_t>(r)) * Rational(1, static_cast<std::int64_t>(r));
    }
    return series_exp(TruncSeries(order, std::move(terms)));
}

std::int64_t integral_exponent(const Rational& c)
{
    if (!c.is_integer()) {
        throw identity_violation("non-integral coefficient " + c.to_string() + " in an E-polynomial");
    }
    return c.to_int64();
}

} // namespace

TriGradedDims dims_from_hodge(const HodgeNumbers& h)
{
    return TriGradedDims(h.entries().begin(), h.entries().end());
}

TruncSeries sym_hodge_series(const HodgeNumbers& h, std::size_t order)
{
    std::map<Monomial, std::int64_t> exponents;
    for (const auto& [d, value] : h.entries()) {
        exponents[{d.p, d.q, d.k}] += parity_sign(d.k) * value;
    }
    return product_of_factors(exponents, order);
}

HodgeNumbers sym_hodge_numbers(const HodgeNumbers& h, std::size_t n)
{
    const TruncSeries s = sym_hodge_series(h, n);
    HodgeNumbers out;
    for (const auto& [m, c] : s[n].terms()) {
        const Rational value = c * Rational(parity_sign(m.z));
        if (!value.is_integer() || value.sign() < 0) {
            throw identity_violation("extracted Hodge number " + value.to_string() + " at (" + std::to_string(m.y)
                                     + "," + std::to_string(m.x) + "," + std::to_string(m.z)
                                     + ") is not a nonnegative integer");
        }
        out.set({m.y, m.x, m.z}, value.to_int64());
    }
    return out;
}

TruncSeries e_series(const HodgeNumbers& h, std::size_t order, SeriesForm form)
{
    const LaurentPoly e = e_polynomial(h);
    if (form == SeriesForm::exponential) {
        return adams_exponential(e, order);
    }
    std::map<Monomial, std::int64_t> exponents;
    for (const auto& [m, c] : e.terms()) {
        exponents[m] = integral_exponent(c);
    }
    return product_of_factors(exponents, order);
}

TruncSeries chi_y_series(const HodgeNumbers& h, std::size_t order, SeriesForm form)
{
    const LaurentPoly chi = chi_y(h);
    if (form == SeriesForm::exponential) {
        return adams_exponential(chi, order);
    }
    std::map<Monomial, std::int64_t> exponents;
    for (const auto& [m, c] : chi.terms()) {
        exponents[m] = integral_exponent(c);
    }
    return product_of_factors(exponents, order);
}

TriGradedDims prop22_dimensions(const TriGradedDims& d, std::size_t n)
{
    // Basis labels in a fixed order; a basis element of the right-hand side
    // is a weakly increasing label sequence of length n in which odd labels
    // do not repeat.
    struct Label {
        Tridegree degree;
        bool odd;
    };
    std::vector<Label> labels;
    for (const auto& [deg, dim] : d) {
        if (dim < 0) {
            throw precondition_error("negative dimension in TriGradedDims");
        }
        for (std::int64_t j = 0; j < dim; ++j) {
            labels.push_back({deg, deg.odd()});
        }
    }

    TriGradedDims out;
    std::function<void(std::size_t, std::size_t, Tridegree)> choose = [&](std::size_t start, std::size_t left,
                                                                          Tridegree total) {
        if (left == 0) {
            ++out[total];
            return;
        }
        for (std::size_t i = start; i < labels.size(); ++i) {
            // An even label may be chosen again; an odd one only once.
            choose(labels[i].odd ? i + 1 : i, left - 1, total + labels[i].degree);
        }
    };
    choose(0, n, Tridegree{});
    return out;
}

} // namespace symprod
