#ifndef SYMPROD_SIGNATURE_HPP
#define SYMPROD_SIGNATURE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "symprod/matrix.hpp"
#include "symprod/tensor_oracle.hpp"
#include "symprod/trunc_series.hpp"

namespace symprod {

/// Basis vector v_{i,j} of a graded space: degree i, 0-based index j.
struct PairingLabel {
    std::int64_t degree = 0;
    std::size_t index = 0;

    friend auto operator<=>(const PairingLabel&, const PairingLabel&) = default;
};

/// Graded-symmetric bilinear form on a finite graded space V. Blocks are
/// stored for i >= 0 only; B_{-i} = (-1)^i B_i^T.
class GradedPairing {
public:
    GradedPairing() = default;
    /// Throws precondition_error on a negative block degree, a block whose
    /// shape is not dim(i) x dim(-i), or a non-symmetric B_0.
    GradedPairing(std::map<std::int64_t, std::size_t> dims, std::map<std::int64_t, Matrix> blocks);

    const std::map<std::int64_t, std::size_t>& dims() const { return dims_; }
    std::size_t dim(std::int64_t i) const;
    std::size_t total_dim() const;
    /// B_i for any i, a zero matrix when nothing is stored.
    Matrix block(std::int64_t i) const;
    const std::map<std::int64_t, Matrix>& stored_blocks() const { return blocks_; }
    /// Basis labels ordered by degree, then index.
    std::vector<PairingLabel> labels() const;
    /// phi(v_a, v_b).
    Rational pair(const PairingLabel& a, const PairingLabel& b) const;
    /// The underlying space, graded by k = i.
    GradedSpace space() const;

    friend bool operator==(const GradedPairing&, const GradedPairing&) = default;

private:
    std::map<std::int64_t, std::size_t> dims_;
    std::map<std::int64_t, Matrix> blocks_;
};

/// Document form: {"dims": {"i": r}, "blocks": [{"i": i, "matrix": [["p/q"]]}]}.
/// Throws parse_error on malformed input, negative block degrees, shape
/// mismatches, or a non-symmetric degree-0 block.
GradedPairing pairing_from_json(const nlohmann::json& document);
GradedPairing parse_pairing(std::string_view document);
nlohmann::json pairing_to_json(const GradedPairing& phi);

struct PairingInvariants {
    /// rho_i for every i with dim(i) * dim(-i) > 0.
    std::map<std::int64_t, std::size_t> rho;
    std::int64_t sigma = 0;
    std::int64_t chi = 0;
};

/// Ranks of the blocks, signature of B_0, chi = sum (-1)^i rho_i. Throws
/// identity_violation if rho_i != rho_{-i}.
PairingInvariants pairing_invariants(const GradedPairing& phi);

/// (1+t)^((sigma-chi)/2) / (1-t)^((sigma+chi)/2) up to t^order. Throws
/// identity_violation when sigma - chi is odd.
TruncSeries hz_series(const PairingInvariants& inv, std::size_t order);
TruncSeries hz_series(const GradedPairing& phi, std::size_t order);
/// Integer coefficients of hz_series.
std::vector<std::int64_t> hz_coefficients(const GradedPairing& phi, std::size_t order);

/// Multiplicities mu_{i,j} of the basis vectors in v^mu.
struct LambdaIndex {
    std::map<PairingLabel, std::size_t> mu;

    std::size_t size() const;
    std::int64_t weight() const;
    /// Weakly increasing list of labels with multiplicity.
    std::vector<PairingLabel> expanded() const;
    /// The swap mu'_{i,j} = mu_{-i,j}.
    LambdaIndex involution() const;
    /// e.g. "{(-1,0):1 (1,0):1}", "{}" when n = 0.
    std::string to_string() const;

    friend bool operator==(const LambdaIndex&, const LambdaIndex&) = default;
};

/// All mu with |mu| = n, weight 0 and odd-degree multiplicities at most 1,
/// in lexicographic order of their expanded label lists. Throws
/// bound_exceeded when more than config.dim_bound indices arise.
std::vector<LambdaIndex> enumerate_lambda(const GradedPairing& phi, std::size_t n, const OracleConfig& config = {});

/// Gram matrix of phi^n on the basis e_1(v^mu), mu from enumerate_lambda.
/// Throws bound_exceeded if the n-th tensor power of V is larger than
/// config.dim_bound, identity_violation if the result is not symmetric.
Matrix induced_gram(const GradedPairing& phi, std::size_t n, const OracleConfig& config = {});

/// Signature of induced_gram.
std::int64_t brute_signature(const GradedPairing& phi, std::size_t n, const OracleConfig& config = {});

/// Signature of induced_gram restricted to the mu fixed by the involution.
/// Equals brute_signature when phi is in normal form (see good_basis).
std::int64_t hyperbolic_signature(const GradedPairing& phi, std::size_t n, const OracleConfig& config = {});

/// Change of basis after which B_i = [[I, 0], [0, 0]] for i > 0 and B_0 is
/// diagonal, so v_{i,j} pairs only with v_{-i,j}.
GradedPairing good_basis(const GradedPairing& phi);

/// Orthogonal direct sum, with the basis of a before that of b in each degree.
GradedPairing direct_sum(const GradedPairing& a, const GradedPairing& b);

/// Gram(e_1 u, e_1 w) == Gram(u, e_1 w) on the whole degree-0 part of the
/// n-th tensor power, as matrices.
bool e1_self_adjoint_check(const GradedPairing& phi, std::size_t n, const OracleConfig& config = {});

/// Test library of pairings on degrees |i| <= 2 with dims <= 2 and entries
/// in {-1, 0, 1}:
///   - every single-degree-pair family (B_0 alone, the (1,-1) pair alone,
///     the (2,-2) pair alone),
///   - every combination with dims <= 1 in each degree,
///   - `random_count` seeded direct sums of one family of each kind.
std::vector<GradedPairing> pairing_library(std::size_t random_count = 1000, std::uint64_t seed = 0);

} // namespace symprod

#endif
