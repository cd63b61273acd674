// Acceptance runner: one PASS/FAIL line per criterion. Every comparison is
// exact; the time budgets are part of each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cli.hpp"
#include "test_support.hpp"
#include "symprod/macdonald.hpp"
#include "symprod/signature.hpp"

using namespace symprod;

namespace {

struct Outcome {
    bool passed = true;
    std::size_t cases = 0;
    std::string detail;

    void check(bool ok, const std::string& what)
    {
        ++cases;
        if (!ok && passed) {
            passed = false;
            detail = what;
        }
    }
    void absorb(const std::vector<CheckReport>& reports)
    {
        for (const auto& r : reports) {
            cases += r.cases;
            if (!r.passed && passed) {
                passed = false;
                detail = r.name + ": " + r.counterexample;
            }
        }
    }
};

bool report(int id, const char* title, double budget_seconds, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o = body();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && seconds >= budget_seconds && o.passed) {
        o.passed = false;
        o.detail = "over the " + std::to_string(budget_seconds) + " s budget";
    }
    std::printf("criterion %d %s: %s cases=%zu time=%.2fs%s%s\n", id, title, o.passed ? "PASS" : "FAIL", o.cases,
                seconds, o.passed ? "" : " first-failure=", o.passed ? "" : o.detail.c_str());
    std::fflush(stdout);
    return o.passed;
}

std::vector<std::int64_t> brute_row(const GradedPairing& phi, std::size_t max_n)
{
    std::vector<std::int64_t> out;
    for (std::size_t n = 0; n <= max_n; ++n) {
        out.push_back(brute_signature(phi, n));
    }
    return out;
}

GradedPairing one_block(std::int64_t degree, std::int64_t value)
{
    if (degree == 0) {
        return GradedPairing({{0, 1}}, {{0, testing::mat({{Rational(value)}})}});
    }
    return GradedPairing({{degree, 1}, {-degree, 1}}, {{degree, testing::mat({{Rational(value)}})}});
}

} // namespace

int main()
{
    bool all = true;

    all &= report(1, "e-series product vs exponential form", 5.0, [] {
        Outcome o;
        std::mt19937_64 rng(0);
        for (int trial = 0; trial < 64; ++trial) {
            const HodgeNumbers h = testing::random_hodge(rng);
            o.check(e_series(h, 6, SeriesForm::product) == e_series(h, 6, SeriesForm::exponential),
                    hodge_to_json(h).dump());
        }
        return o;
    });

    all &= report(2, "sym-hodge vs sym-wedge count vs projector ranks", 30.0, [] {
        Outcome o;
        std::mt19937_64 rng(1);
        for (int trial = 0; trial < 64; ++trial) {
            const HodgeNumbers h = testing::random_hodge(rng);
            for (std::size_t n = 0; n <= 4; ++n) {
                o.check(dims_from_hodge(sym_hodge_numbers(h, n)) == prop22_dimensions(dims_from_hodge(h), n),
                        hodge_to_json(h).dump() + " n=" + std::to_string(n));
            }
        }
        o.absorb(cli::prop22_suite(3, OracleConfig{}));
        return o;
    });

    all &= report(3, "projective line chain", 0.0, [] {
        Outcome o;
        const HodgeNumbers p1 = HodgeNumbers::from_entries({{{0, 0, 0}, 1}, {{1, 1, 2}, 1}});
        for (std::size_t n = 2; n <= 4; ++n) {
            HodgeNumbers expected;
            for (std::int64_t p = 0; p <= static_cast<std::int64_t>(n); ++p) {
                expected.set({p, p, 2 * p}, 1);
            }
            o.check(sym_hodge_numbers(p1, n) == expected, "n=" + std::to_string(n));
        }
        return o;
    });

    all &= report(4, "brute signatures vs closed form", 60.0, [] {
        Outcome o;
        o.check(brute_row(one_block(0, 1), 4) == std::vector<std::int64_t>{1, 1, 1, 1, 1}, "positive line");
        o.check(brute_row(one_block(0, -1), 4) == std::vector<std::int64_t>{1, -1, 1, -1, 1}, "negative line");
        o.check(brute_row(one_block(1, 1), 4) == std::vector<std::int64_t>{1, 0, -1, 0, 0}, "odd pair");
        o.check(brute_row(one_block(2, 1), 4) == std::vector<std::int64_t>{1, 0, 1, 0, 1}, "even pair");
        for (const auto& phi : pairing_library(1000, 0)) {
            const auto hz = hz_coefficients(phi, 4);
            for (std::size_t n = 0; n <= 4; ++n) {
                o.check(brute_signature(phi, n) == hz[n], pairing_to_json(phi).dump() + " n=" + std::to_string(n));
            }
        }
        return o;
    });

    all &= report(5, "sign identities and chain-map property", 10.0, [] {
        Outcome o;
        o.absorb(cli::signs_suite(4, OracleConfig{}));
        return o;
    });

    all &= report(6, "kunneth on random complexes", 10.0, [] {
        Outcome o;
        o.absorb(cli::kunneth_suite(3, 0, OracleConfig{}));
        return o;
    });

    all &= report(7, "pairing invariants and hyperbolic dropping", 0.0, [] {
        Outcome o;
        for (const auto& phi : pairing_library(1000, 0)) {
            const std::string name = pairing_to_json(phi).dump();
            PairingInvariants inv;
            try {
                inv = pairing_invariants(phi);
            } catch (const std::exception& e) {
                o.check(false, name + ": " + e.what());
                continue;
            }
            for (const auto& [i, rho] : inv.rho) {
                o.check(inv.rho.contains(-i) && inv.rho.at(-i) == rho, name);
            }
            o.check((inv.sigma + inv.chi) % 2 == 0 && (inv.sigma - inv.chi) % 2 == 0, name);
            const GradedPairing normal = good_basis(phi);
            for (std::size_t n = 0; n <= 4; ++n) {
                const std::int64_t brute = brute_signature(phi, n);
                o.check(brute_signature(normal, n) == brute && hyperbolic_signature(normal, n) == brute,
                        name + " n=" + std::to_string(n));
            }
        }
        return o;
    });

    return all ? 0 : 1;
}
