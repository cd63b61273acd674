#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "cli.hpp"
#include "symprod/errors.hpp"
#include "symprod/hodge_numbers.hpp"
#include "symprod/macdonald.hpp"
#include "symprod/signature.hpp"

namespace symprod::cli {

namespace {

std::string dims_to_string(const TriGradedDims& d)
{
    std::string out = "{";
    for (const auto& [deg, r] : d) {
        out += (out.size() == 1 ? "" : " ") + std::string("(") + std::to_string(deg.p) + "," + std::to_string(deg.q)
               + "," + std::to_string(deg.k) + "):" + std::to_string(r);
    }
    return out + "}";
}

std::string complex_to_string(const FiniteComplex& k)
{
    std::string out = "dims{";
    for (const auto& [p, r] : k.dims()) {
        out += (out.size() == 5 ? "" : " ") + std::to_string(p) + ":" + std::to_string(r);
    }
    out += "}";
    for (const auto& [p, r] : k.dims()) {
        if (k.dim(p + 1) != 0) {
            out += " d" + std::to_string(p) + "=" + k.differential(p).to_string();
        }
    }
    return out;
}

void require_n(std::size_t max_n, std::size_t limit, const std::string& suite)
{
    if (max_n > limit) {
        throw precondition_error("suite " + suite + " accepts --max-n up to " + std::to_string(limit));
    }
}

} // namespace

std::vector<FiniteComplex> small_complexes()
{
    std::vector<FiniteComplex> out;
    for (std::int64_t base : {0, 1}) {
        for (std::size_t a = 0; a <= 2; ++a) {
            for (std::size_t c = 0; c <= 2; ++c) {
                std::size_t count = 1;
                for (std::size_t e = 0; e < a * c; ++e) {
                    count *= 3;
                }
                for (std::size_t code = 0; code < count; ++code) {
                    Matrix d(c, a);
                    std::size_t rest = code;
                    for (std::size_t r = 0; r < c; ++r) {
                        for (std::size_t s = 0; s < a; ++s) {
                            d(r, s) = Rational(static_cast<std::int64_t>(rest % 3) - 1);
                            rest /= 3;
                        }
                    }
                    out.emplace_back(std::map<std::int64_t, std::size_t>{{base, a}, {base + 1, c}},
                                     std::map<std::int64_t, Matrix>{{base, d}});
                }
            }
        }
    }
    return out;
}

std::vector<CheckReport> signs_suite(std::size_t max_n, const OracleConfig& config)
{
    require_n(max_n, signs_max_n, "signs");
    CheckReport cocycle{"cocycle", 0, true, {}};
    CheckReport prop15{"prop15-sign-cancellation", 0, true, {}};
    for (std::size_t n = 1; n <= max_n; ++n) {
        cocycle.merge(verify_cocycle(n));
        prop15.merge(verify_prop15_identity(n));
    }

    const std::size_t small_n = std::min<std::size_t>(max_n, 3);
    CheckReport composition{"action-composition", 0, true, {}};
    const std::vector<GradedSpace> spaces{
        GradedSpace::from_degrees({{0, 2}}), GradedSpace::from_degrees({{1, 2}}),
        GradedSpace::from_degrees({{0, 1}, {1, 1}}), GradedSpace::from_degrees({{-1, 1}, {0, 1}, {2, 1}})};
    for (const auto& v : spaces) {
        for (std::size_t n = 1; n <= small_n; ++n) {
            composition.merge(verify_action_composition(v, n, config));
        }
    }

    CheckReport chain{"chain-map", 0, true, {}};
    for (const auto& k : small_complexes()) {
        for (std::size_t n = 1; n <= small_n; ++n) {
            for (const auto& sigma : Permutation::all(n)) {
                chain.record(chain_map_check(k, n, sigma, config),
                             complex_to_string(k) + " n=" + std::to_string(n) + " sigma=" + sigma.to_string());
            }
        }
    }
    return {cocycle, prop15, composition, chain};
}

std::vector<CheckReport> kunneth_suite(std::size_t max_n, std::uint64_t seed, const OracleConfig& config)
{
    require_n(max_n, sweep_max_n, "kunneth");
    CheckReport report{"kunneth", 0, true, {}};
    if (max_n == 0) {
        return {report};
    }
    std::mt19937_64 rng(seed);
    const std::size_t tuple_max = std::min<std::size_t>(max_n, 3);
    for (std::size_t t = 0; t < 100; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng() % tuple_max);
        std::vector<FiniteComplex> ks;
        std::string description = "tuple " + std::to_string(t) + ":";
        for (std::size_t i = 0; i < n; ++i) {
            ks.push_back(random_complex(rng, 2, 3));
            description += " [" + complex_to_string(ks.back()) + "]";
        }
        report.record(kunneth_check(ks, config), description);
    }
    return {report};
}

std::vector<CheckReport> prop22_suite(std::size_t max_n, const OracleConfig& config)
{
    require_n(max_n, sweep_max_n, "prop22");
    CheckReport vs_oracle{"prop22-vs-isotypic", 0, true, {}};
    CheckReport vs_series{"prop22-vs-sym-hodge", 0, true, {}};
    CheckReport sign_part{"sign-isotypic", 0, true, {}};
    const std::vector<Tridegree> degrees{{0, 0, 0}, {0, 0, 1}, {1, 0, 1}, {1, 1, 2}};

    // All dimension vectors on `degrees` with total dimension at most 3.
    std::vector<TriGradedDims> spaces;
    std::vector<std::int64_t> dims(degrees.size(), 0);
    auto recurse = [&](auto&& self, std::size_t pos, std::int64_t left) -> void {
        if (pos == degrees.size()) {
            TriGradedDims d;
            for (std::size_t i = 0; i < degrees.size(); ++i) {
                if (dims[i] != 0) {
                    d[degrees[i]] = dims[i];
                }
            }
            spaces.push_back(std::move(d));
            return;
        }
        for (std::int64_t r = 0; r <= left; ++r) {
            dims[pos] = r;
            self(self, pos + 1, left - r);
        }
        dims[pos] = 0;
    };
    recurse(recurse, 0, 3);

    for (const auto& d : spaces) {
        const GradedSpace v = GradedSpace::from_dims(d);
        std::vector<std::pair<Tridegree, std::int64_t>> entries(d.begin(), d.end());
        const HodgeNumbers h = HodgeNumbers::from_entries(entries);
        TriGradedDims shifted;
        for (const auto& [deg, r] : d) {
            shifted[{deg.p, deg.q, deg.k + 1}] = r;
        }
        for (std::size_t n = 0; n <= max_n; ++n) {
            const std::string where = dims_to_string(d) + " n=" + std::to_string(n);
            const TriGradedDims counted = prop22_dimensions(d, n);
            vs_oracle.record(isotypic_dims(v, n, Character::trivial, config) == GradedSpace::from_dims(counted),
                             where);
            vs_series.record(dims_from_hodge(sym_hodge_numbers(h, n)) == counted, where);

            // The sign-isotypic part is the invariant count with the parity
            // of every label flipped; shifting k by one flips it, and the
            // total degree moves by n.
            TriGradedDims expected;
            for (const auto& [deg, r] : prop22_dimensions(shifted, n)) {
                expected[{deg.p, deg.q, deg.k - static_cast<std::int64_t>(n)}] = r;
            }
            sign_part.record(isotypic_dims(v, n, Character::sign, config) == GradedSpace::from_dims(expected), where);
        }
    }
    return {vs_oracle, vs_series, sign_part};
}

std::vector<CheckReport> theorem2_suite(std::size_t max_n, std::uint64_t seed, const OracleConfig& config)
{
    require_n(max_n, sweep_max_n, "theorem2");
    CheckReport closed{"theorem2-brute-vs-closed", 0, true, {}};
    CheckReport rho{"rho-symmetry", 0, true, {}};
    CheckReport parity{"sigma-chi-parity", 0, true, {}};
    CheckReport hyperbolic{"hyperbolic-dropping", 0, true, {}};
    CheckReport lambda_count{"lambda-count", 0, true, {}};
    CheckReport self_adjoint{"e1-self-adjoint", 0, true, {}};
    CheckReport additivity{"hz-additivity", 0, true, {}};

    const auto library = pairing_library(1000, seed);
    std::map<std::map<std::int64_t, std::size_t>, std::map<std::size_t, std::size_t>> invariant_dims;
    for (const auto& phi : library) {
        const std::string name = pairing_to_json(phi).dump();
        PairingInvariants inv;
        try {
            inv = pairing_invariants(phi);
            rho.record(true, name);
        } catch (const identity_violation& e) {
            rho.record(false, name + ": " + e.what());
            continue;
        }
        parity.record(((inv.sigma - inv.chi) & 1) == 0, name);

        const auto hz = hz_coefficients(phi, max_n);
        const GradedPairing normal = good_basis(phi);
        for (std::size_t n = 0; n <= max_n; ++n) {
            const std::string where = name + " n=" + std::to_string(n);
            const std::int64_t brute = brute_signature(phi, n, config);
            closed.record(brute == hz[n], where + " brute=" + std::to_string(brute) + " closed=" + std::to_string(hz[n]));
            const std::int64_t normal_brute = brute_signature(normal, n, config);
            const std::int64_t dropped = hyperbolic_signature(normal, n, config);
            hyperbolic.record(brute == normal_brute && normal_brute == dropped,
                              where + " brute=" + std::to_string(brute) + " normal=" + std::to_string(normal_brute)
                                  + " dropped=" + std::to_string(dropped));
            if (n <= 3) {
                auto& cached = invariant_dims[phi.dims()];
                if (!cached.contains(n)) {
                    cached[n] = isotypic_dims(phi.space(), n, Character::trivial, config).dim(std::int64_t{0});
                }
                lambda_count.record(enumerate_lambda(phi, n, config).size() == cached[n], where);
                if (phi.total_dim() <= 3) {
                    self_adjoint.record(e1_self_adjoint_check(phi, n, config), where);
                }
            }
        }
    }

    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < 200; ++k) {
        const auto& a = library[rng() % library.size()];
        const auto& b = library[rng() % library.size()];
        additivity.record(hz_series(direct_sum(a, b), 6) == hz_series(a, 6) * hz_series(b, 6),
                          pairing_to_json(a).dump() + " + " + pairing_to_json(b).dump());
    }
    return {closed, rho, parity, hyperbolic, lambda_count, self_adjoint, additivity};
}

std::vector<CheckReport> run_suite(const std::string& suite, std::size_t max_n, std::uint64_t seed,
                                   const OracleConfig& config)
{
    if (suite == "signs") {
        return signs_suite(max_n, config);
    }
    if (suite == "kunneth") {
        return kunneth_suite(max_n, seed, config);
    }
    if (suite == "prop22") {
        return prop22_suite(max_n, config);
    }
    if (suite == "theorem2") {
        return theorem2_suite(max_n, seed, config);
    }
    if (suite == "all") {
        require_n(max_n, sweep_max_n, "all");
        std::vector<CheckReport> out;
        for (const char* name : {"signs", "kunneth", "prop22", "theorem2"}) {
            auto part = run_suite(name, max_n, seed, config);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw precondition_error("unknown suite \"" + suite + "\" (expected signs, kunneth, prop22, theorem2 or all)");
}

} // namespace symprod::cli
