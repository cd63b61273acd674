#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "symprod/errors.hpp"
#include "symprod/macdonald.hpp"

using namespace symprod;

namespace {

LaurentPoly Y(std::int64_t e = 1) { return LaurentPoly::y(e); }
LaurentPoly X(std::int64_t e = 1) { return LaurentPoly::x(e); }
LaurentPoly Z(std::int64_t e = 1) { return LaurentPoly::z(e); }

const HodgeNumbers p1 = HodgeNumbers::from_entries({{{0, 0, 0}, 1}, {{1, 1, 2}, 1}});

Rational binomial(std::int64_t n, std::int64_t k)
{
    Rational out(1);
    for (std::int64_t i = 0; i < k; ++i) {
        out = out * Rational(n - i) / Rational(i + 1);
    }
    return out;
}

} // namespace

TEST_CASE("symmetric product series")
{
    CHECK(sym_hodge_series(HodgeNumbers::from_entries({{{0, 0, 0}, 1}}), 3) == TruncSeries(3, {1, 1, 1, 1}));
    CHECK(sym_hodge_series(HodgeNumbers::from_entries({{{0, 0, 1}, 1}}), 3) == TruncSeries(3, {1, -Z()}));
    const LaurentPoly w = Y() * X() * Z(2);
    CHECK(sym_hodge_series(p1, 2) == TruncSeries(2, {1, 1 + w, 1 + w + w * w}));
    CHECK(sym_hodge_series(HodgeNumbers(), 4) == TruncSeries::one(4));
}

TEST_CASE("hodge numbers of symmetric products")
{
    CHECK(sym_hodge_numbers(p1, 2) == HodgeNumbers::from_entries({{{0, 0, 0}, 1}, {{1, 1, 2}, 1}, {{2, 2, 4}, 1}}));
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const HodgeNumbers h = testing::random_hodge(rng);
        CHECK(sym_hodge_numbers(h, 0) == HodgeNumbers::from_entries({{{0, 0, 0}, 1}}));
        CHECK(sym_hodge_numbers(h, 1) == h);
    }
}

TEST_CASE("projective spaces from the projective line")
{
    // 1/((1-t)(1-w t)) has t^n coefficient 1 + w + ... + w^n, w = y x z^2.
    for (std::size_t n = 2; n <= 4; ++n) {
        HodgeNumbers expected;
        for (std::int64_t p = 0; p <= static_cast<std::int64_t>(n); ++p) {
            expected.set({p, p, 2 * p}, 1);
        }
        CHECK(sym_hodge_numbers(p1, n) == expected);
    }
}

TEST_CASE("e-series in both forms")
{
    CHECK(e_series(p1, 2, SeriesForm::product) == TruncSeries(2, {1, 1 + Y() * X(), 1 + Y() * X() + Y(2) * X(2)}));
    CHECK(e_series(p1, 2, SeriesForm::exponential) == e_series(p1, 2, SeriesForm::product));
    CHECK(e_series(HodgeNumbers(), 3, SeriesForm::product) == TruncSeries::one(3));
    CHECK(e_series(HodgeNumbers(), 3, SeriesForm::exponential) == TruncSeries::one(3));

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const HodgeNumbers h = testing::random_hodge(rng);
        CHECK(e_series(h, 6, SeriesForm::product) == e_series(h, 6, SeriesForm::exponential));
    }
}

TEST_CASE("chi_y series")
{
    CHECK(chi_y_series(p1, 3, SeriesForm::product)
          == TruncSeries(3, {1, 1 + Y(), 1 + Y() + Y(2), 1 + Y() + Y(2) + Y(3)}));
    CHECK(chi_y_series(HodgeNumbers(), 2, SeriesForm::exponential) == TruncSeries::one(2));
    const HodgeNumbers three = HodgeNumbers::from_entries({{{0, 0, 0}, 1}, {{0, 0, 2}, 2}});
    const TruncSeries at_one =
        chi_y_series(three, 2, SeriesForm::product).map([](const LaurentPoly& c) { return evaluate(c, {.y = Rational(1)}); });
    CHECK(at_one == TruncSeries(2, {1, 3, 6}));

    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const HodgeNumbers h = testing::random_hodge(rng);
        const TruncSeries product = chi_y_series(h, 5, SeriesForm::product);
        CHECK(product == chi_y_series(h, 5, SeriesForm::exponential));
        const TruncSeries specialized = sym_hodge_series(h, 5).map(
            [](const LaurentPoly& c) { return evaluate(c, {.x = Rational(1), .z = Rational(1)}); });
        CHECK(product == specialized);
    }
}

TEST_CASE("chi_y at y = 1 counts symmetric algebra dimensions for even data")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        HodgeNumbers h;
        std::int64_t chi = 0;
        const HodgeNumbers source = testing::random_hodge(rng);
        for (const auto& [d, value] : source.entries()) {
            h.set({d.p, d.q, 2 * d.k}, value);
        }
        for (const auto& [d, value] : h.entries()) {
            chi += value;
        }
        const TruncSeries s = chi_y_series(h, 5, SeriesForm::product);
        for (std::size_t n = 0; n <= 5; ++n) {
            const auto at_one = evaluate(s[n], {.y = Rational(1)});
            CHECK(at_one == LaurentPoly(binomial(chi + static_cast<std::int64_t>(n) - 1, static_cast<std::int64_t>(n))));
        }
    }
}

TEST_CASE("coefficient extraction round trip")
{
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        const HodgeNumbers h = testing::random_hodge(rng);
        for (std::size_t n = 0; n <= 4; ++n) {
            CHECK(full_polynomial(sym_hodge_numbers(h, n)) == sym_hodge_series(h, n)[n]);
        }
    }
}

TEST_CASE("multiplicativity under disjoint union")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const HodgeNumbers a = testing::random_hodge(rng);
        const HodgeNumbers b = testing::random_hodge(rng);
        HodgeNumbers sum = a;
        for (const auto& [d, value] : b.entries()) {
            sum.set(d, a.at(d) + value);
        }
        CHECK(sym_hodge_series(sum, 5) == sym_hodge_series(a, 5) * sym_hodge_series(b, 5));
    }
}

TEST_CASE("sym-wedge dimension count")
{
    CHECK(prop22_dimensions({{{0, 0, 1}, 1}}, 2).empty());
    CHECK(prop22_dimensions({{{0, 0, 0}, 1}}, 3) == TriGradedDims{{{0, 0, 0}, 1}});
    CHECK(prop22_dimensions({{{0, 0, 0}, 1}, {{1, 1, 2}, 1}}, 2)
          == TriGradedDims{{{0, 0, 0}, 1}, {{1, 1, 2}, 1}, {{2, 2, 4}, 1}});
    CHECK(prop22_dimensions({{{0, 0, 1}, 3}}, 2) == TriGradedDims{{{0, 0, 2}, 3}});
    CHECK(prop22_dimensions({{{0, 0, 0}, 3}}, 2) == TriGradedDims{{{0, 0, 0}, 6}});

    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 80; ++trial) {
        const HodgeNumbers h = testing::random_hodge(rng);
        for (std::size_t n = 0; n <= 4; ++n) {
            CHECK(prop22_dimensions(dims_from_hodge(h), n) == dims_from_hodge(sym_hodge_numbers(h, n)));
        }
    }
}
