#include <doctest.h>

#include "test_support.hpp"

#include <random>

#include "symprod/errors.hpp"
#include "symprod/signature.hpp"

using namespace symprod;

namespace {

GradedPairing line(std::int64_t value)
{
    return GradedPairing({{0, 1}}, {{0, testing::mat({{Rational(value)}})}});
}

GradedPairing pair(std::int64_t degree, std::vector<std::vector<Rational>> b)
{
    const std::size_t r = b.size();
    const std::size_t s = b.empty() ? 0 : b.front().size();
    return GradedPairing({{degree, r}, {-degree, s}}, {{degree, testing::mat(b)}});
}

const GradedPairing odd_pair = pair(1, {{1}});
const GradedPairing degenerate({{0, 2}}, {{0, testing::mat({{1, 0}, {0, 0}})}});

std::vector<std::int64_t> brute_row(const GradedPairing& phi, std::size_t max_n)
{
    std::vector<std::int64_t> out;
    for (std::size_t n = 0; n <= max_n; ++n) {
        out.push_back(brute_signature(phi, n));
    }
    return out;
}

// Dense oracle: the full tensor-power Gram matrix of phi^n on the flat
// lexicographic basis, compressed through the dense e_1 projector.
Matrix dense_gram(const GradedPairing& phi, std::size_t n)
{
    const auto labels = phi.labels();
    const GradedSpace v = phi.space();
    const TensorPowerBasis basis(labels.size(), n, OracleConfig{});
    Matrix g(basis.size(), basis.size());
    for (std::size_t a = 0; a < basis.size(); ++a) {
        const auto va = basis.decode(a);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const auto wb = basis.decode(b);
            Rational value(1);
            std::int64_t exponent = 0;
            for (std::size_t i = 0; i < n; ++i) {
                value *= phi.pair(labels[va[i]], labels[wb[i]]);
                for (std::size_t j = i + 1; j < n; ++j) {
                    exponent += labels[wb[i]].degree * labels[va[j]].degree;
                }
            }
            g(a, b) = (exponent % 2 != 0) ? -value : value;
        }
    }
    const Matrix e1 = projector_matrix(v, n, Character::trivial);
    const auto lambdas = enumerate_lambda(phi, n);
    Matrix columns(basis.size(), lambdas.size());
    for (std::size_t m = 0; m < lambdas.size(); ++m) {
        std::vector<std::size_t> slots;
        for (const auto& label : lambdas[m].expanded()) {
            slots.push_back(static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin()));
        }
        const std::size_t code = basis.encode(slots);
        for (std::size_t r = 0; r < basis.size(); ++r) {
            columns(r, m) = e1(r, code);
        }
    }
    return columns.transpose() * g * columns;
}

} // namespace

TEST_CASE("pairing invariants")
{
    const auto pos = pairing_invariants(line(1));
    CHECK(pos.rho == std::map<std::int64_t, std::size_t>{{0, 1}});
    CHECK(pos.sigma == 1);
    CHECK(pos.chi == 1);

    const auto zero = pairing_invariants(line(0));
    CHECK(zero.rho.at(0) == 0);
    CHECK(zero.sigma == 0);
    CHECK(zero.chi == 0);

    const auto odd = pairing_invariants(odd_pair);
    CHECK(odd.rho == std::map<std::int64_t, std::size_t>{{-1, 1}, {1, 1}});
    CHECK(odd.sigma == 0);
    CHECK(odd.chi == -2);
}

TEST_CASE("graded symmetry of derived blocks")
{
    const GradedPairing phi = pair(1, {{1, 2}, {3, 4}});
    CHECK(phi.block(-1) == Rational(-1) * phi.block(1).transpose());
    const GradedPairing psi = pair(2, {{1, 2}});
    CHECK(psi.block(-2) == psi.block(2).transpose());
    CHECK(phi.pair({1, 0}, {-1, 1}) == Rational(2));
    CHECK(phi.pair({-1, 1}, {1, 0}) == Rational(-2));
    CHECK(phi.pair({1, 0}, {1, 0}).is_zero());
}

TEST_CASE("closed-form series")
{
    CHECK(hz_series(line(1), 3) == TruncSeries(3, {1, 1, 1, 1}));
    CHECK(hz_series(line(-1), 3) == TruncSeries(3, {1, -1, 1, -1}));
    CHECK(hz_series(odd_pair, 4) == TruncSeries(4, {1, 0, -1}));
    CHECK(hz_series(pair(2, {{1}}), 4) == TruncSeries(4, {1, 0, 1, 0, 1}));
    PairingInvariants broken;
    broken.sigma = 1;
    broken.chi = 0;
    CHECK_THROWS_AS(hz_series(broken, 3), identity_violation);
}

TEST_CASE("lambda enumeration")
{
    const auto one = enumerate_lambda(line(1), 3);
    REQUIRE(one.size() == 1);
    CHECK(one.front().mu == std::map<PairingLabel, std::size_t>{{{0, 0}, 3}});
    const auto two = enumerate_lambda(odd_pair, 2);
    REQUIRE(two.size() == 1);
    CHECK(two.front().to_string() == "{(-1,0):1 (1,0):1}");
    CHECK(enumerate_lambda(odd_pair, 3).empty());
    CHECK(enumerate_lambda(odd_pair, 0).size() == 1);

    const GradedPairing mixed = direct_sum(pair(2, {{1}}), direct_sum(pair(1, {{1}}), line(1)));
    const auto lambdas = enumerate_lambda(mixed, 4);
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        CHECK(lambdas[i].size() == 4);
        CHECK(lambdas[i].weight() == 0);
        for (const auto& [label, m] : lambdas[i].mu) {
            CHECK((label.degree % 2 == 0 || m <= 1));
        }
        if (i > 0) {
            CHECK(lambdas[i - 1].expanded() < lambdas[i].expanded());
        }
    }
    CHECK_THROWS_AS(enumerate_lambda(GradedPairing({{0, 30}}, {}), 4, OracleConfig{100}), bound_exceeded);
}

TEST_CASE("induced gram examples")
{
    const Matrix positive = induced_gram(line(1), 2);
    REQUIRE(positive.rows() == 1);
    CHECK(positive(0, 0).sign() > 0);
    const Matrix negative_line = induced_gram(line(-1), 2);
    CHECK(negative_line(0, 0).sign() > 0);
    const Matrix odd = induced_gram(odd_pair, 2);
    REQUIRE(odd.rows() == 1);
    CHECK(odd(0, 0).sign() < 0);
    CHECK_THROWS_AS(induced_gram(GradedPairing({{0, 11}}, {}), 4), bound_exceeded);
}

TEST_CASE("induced gram matches the dense projector oracle")
{
    const std::vector<GradedPairing> cases{
        odd_pair, degenerate, pair(1, {{1, -1}, {0, 1}}), pair(2, {{0, 1}, {1, 1}}),
        direct_sum(pair(1, {{1}}), line(-1)), direct_sum(pair(1, {{0, 1}}), pair(2, {{-1}}))};
    for (const auto& phi : cases) {
        for (std::size_t n = 0; n <= 3; ++n) {
            CHECK(induced_gram(phi, n) == dense_gram(phi, n));
        }
    }
}

TEST_CASE("brute-force signatures")
{
    CHECK(brute_row(line(1), 4) == std::vector<std::int64_t>{1, 1, 1, 1, 1});
    CHECK(brute_row(line(-1), 4) == std::vector<std::int64_t>{1, -1, 1, -1, 1});
    CHECK(brute_row(odd_pair, 4) == std::vector<std::int64_t>{1, 0, -1, 0, 0});
    CHECK(brute_row(pair(2, {{1}}), 4) == std::vector<std::int64_t>{1, 0, 1, 0, 1});
    CHECK(brute_signature(degenerate, 2) == 1);
}

TEST_CASE("hyperbolic dropping needs the normal form")
{
    const GradedPairing crossed = pair(1, {{0, 1}, {1, 0}});
    CHECK(brute_signature(crossed, 2) == -2);
    CHECK(hyperbolic_signature(crossed, 2) == 0);
    const GradedPairing normal = good_basis(crossed);
    CHECK(normal.block(1) == Matrix::identity(2));
    CHECK(hyperbolic_signature(normal, 2) == -2);
}

TEST_CASE("normal form shape")
{
    const GradedPairing phi = direct_sum(pair(1, {{1, 1}, {1, 1}}), GradedPairing({{0, 2}}, {{0, testing::mat({{0, 1}, {1, 0}})}}));
    const GradedPairing normal = good_basis(phi);
    CHECK(normal.block(1) == testing::mat({{1, 0}, {0, 0}}));
    const Matrix b0 = normal.block(0);
    CHECK(b0(0, 1).is_zero());
    CHECK(pairing_invariants(normal).sigma == pairing_invariants(phi).sigma);
    CHECK(pairing_invariants(normal).rho == pairing_invariants(phi).rho);
}

TEST_CASE("library agreement, small")
{
    const auto library = pairing_library(40, 3);
    CHECK(library.size() > 400);
    for (const auto& phi : library) {
        const auto hz = hz_coefficients(phi, 3);
        const GradedPairing normal = good_basis(phi);
        for (std::size_t n = 0; n <= 3; ++n) {
            const std::int64_t brute = brute_signature(phi, n);
            CHECK(brute == hz[n]);
            CHECK(brute_signature(normal, n) == brute);
            CHECK(hyperbolic_signature(normal, n) == brute);
            CHECK(enumerate_lambda(phi, n).size() == isotypic_dims(phi.space(), n, Character::trivial).dim(std::int64_t{0}));
        }
    }
}

TEST_CASE("e_1 is self-adjoint")
{
    const std::vector<GradedPairing> cases{odd_pair, degenerate, pair(1, {{1, -1}, {1, 0}}),
                                           direct_sum(pair(2, {{1}}), line(-1)),
                                           direct_sum(pair(1, {{1}}), line(1))};
    for (const auto& phi : cases) {
        for (std::size_t n = 0; n <= 3; ++n) {
            CHECK(e1_self_adjoint_check(phi, n));
        }
    }
}

TEST_CASE("closed form is additive under direct sums")
{
    const auto library = pairing_library(0);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const auto& a = library[rng() % library.size()];
        const auto& b = library[rng() % library.size()];
        CHECK(hz_series(direct_sum(a, b), 6) == hz_series(a, 6) * hz_series(b, 6));
    }
}

TEST_CASE("pairing documents")
{
    const GradedPairing phi = parse_pairing(R"({"dims":{"1":1,"-1":1},"blocks":[{"i":1,"matrix":[["1/2"]]}]})");
    CHECK(phi.block(1) == testing::mat({{Rational(1, 2)}}));
    CHECK(parse_pairing(pairing_to_json(phi).dump()) == phi);
    CHECK(parse_pairing(R"({"dims":{}})").total_dim() == 0);
    CHECK_THROWS_AS(parse_pairing(R"({"dims":{"1":1,"-1":1},"blocks":[{"i":-1,"matrix":[["1"]]}]})"), parse_error);
    CHECK_THROWS_AS(parse_pairing(R"({"dims":{"0":2},"blocks":[{"i":0,"matrix":[["1","1"],["0","1"]]}]})"),
                    parse_error);
    CHECK_THROWS_AS(parse_pairing(R"({"dims":{"0":2},"blocks":[{"i":0,"matrix":[["1"]]}]})"), parse_error);
    CHECK_THROWS_AS(parse_pairing(R"({"dims":{"x":2}})"), parse_error);
    CHECK_THROWS_AS(parse_pairing(R"({"dims":{"0":-2}})"), parse_error);
    CHECK_THROWS_AS(parse_pairing(R"({"dims":{"0":1},"blocks":[{"i":0,"matrix":[["a"]]}]})"), parse_error);
    CHECK_THROWS_AS(parse_pairing(R"({"blocks":[]})"), parse_error);
    CHECK_THROWS_AS(GradedPairing({{0, 1}}, {{-1, Matrix(0, 0)}}), precondition_error);
}
