#ifndef SYMPROD_TENSOR_ORACLE_HPP
#define SYMPROD_TENSOR_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "symprod/macdonald.hpp"
#include "symprod/matrix.hpp"
#include "symprod/permutation.hpp"
#include "symprod/tridegree.hpp"

namespace symprod {

/// Guard for brute-force constructions on tensor powers.
struct OracleConfig {
    std::size_t dim_bound = 10000;
};

/// Finite-dimensional graded vector space with implicit basis labels
/// (degree, index). Basis order is by degree, then index.
struct GradedSpace {
    std::map<Tridegree, std::size_t> dims;

    /// A space graded by k alone.
    static GradedSpace from_degrees(const std::map<std::int64_t, std::size_t>& by_k);
    static GradedSpace from_dims(const TriGradedDims& d);

    std::size_t total_dim() const;
    std::size_t dim(const Tridegree& d) const;
    std::size_t dim(std::int64_t k) const { return dim(Tridegree{0, 0, k}); }
    /// Degree of every basis element, in basis order.
    std::vector<Tridegree> basis_degrees() const;
    TriGradedDims to_dims() const;
    /// Same space with zero-dimensional pieces removed.
    GradedSpace normalized() const;

    friend bool operator==(const GradedSpace& a, const GradedSpace& b);
};

/// Basis of the n-fold tensor power of a space with `labels` basis
/// elements, ordered lexicographically in slot labels.
class TensorPowerBasis {
public:
    TensorPowerBasis(std::size_t labels, std::size_t n, const OracleConfig& config);

    std::size_t size() const { return size_; }
    std::size_t slots() const { return n_; }
    std::vector<std::size_t> decode(std::size_t index) const;
    std::size_t encode(std::span<const std::size_t> slots) const;

private:
    std::size_t labels_;
    std::size_t n_;
    std::size_t size_;
};

/// Monomial matrix with one signed entry per column: column e has
/// sign[e] in row target[e].
struct SignedPermutationMatrix {
    std::vector<std::size_t> target;
    std::vector<int> sign;

    std::size_t size() const { return target.size(); }
    Matrix to_dense() const;
    SignedPermutationMatrix inverse() const;
    friend SignedPermutationMatrix operator*(const SignedPermutationMatrix& a, const SignedPermutationMatrix& b);
    friend bool operator==(const SignedPermutationMatrix&, const SignedPermutationMatrix&) = default;
};

/// Result of rearranging one tensor basis element.
struct SignedSlots {
    std::vector<std::size_t> slots;
    int sign = 1;
};

/// The contravariant action sigma^# on one basis element: slot i of the
/// result holds factor sigma(i) of the input, with the Koszul sign of that
/// rearrangement for the given slot degrees.
SignedSlots act_on_slots(const Permutation& sigma, std::span<const std::size_t> slots,
                         std::span<const std::int64_t> slot_degrees);

/// Matrix of sigma^# on the n-th tensor power of V. Composition is
/// contravariant: action(tau) * action(sigma) == action(sigma * tau).
SignedPermutationMatrix tensor_action(const GradedSpace& v, std::size_t n, const Permutation& sigma,
                                      const OracleConfig& config = {});

/// The covariant action sigma_# = (sigma^#)^-1.
SignedPermutationMatrix covariant_action(const GradedSpace& v, std::size_t n, const Permutation& sigma,
                                         const OracleConfig& config = {});

enum class Character { trivial, sign };

/// Dense (1/n!) sum_sigma chi(sigma) sigma^# on the n-th tensor power.
Matrix projector_matrix(const GradedSpace& v, std::size_t n, Character character, const OracleConfig& config = {});

/// Rank of the trivial (resp. sign) isotypic projector, per total degree.
/// The projector preserves the span of every orbit of basis elements, so
/// the rank is accumulated orbit by orbit.
GradedSpace isotypic_dims(const GradedSpace& v, std::size_t n, Character character, const OracleConfig& config = {});

/// Invariant-part dimensions agree with the Sym ⊗ Λ count, degree by degree.
bool prop22_check(const GradedSpace& v, std::size_t n, const OracleConfig& config = {});

/// Bounded cochain complex of finite-dimensional rational spaces, graded by
/// a single integer. d(p) maps degree p to degree p+1.
class FiniteComplex {
public:
    FiniteComplex() = default;
    /// Validates shapes and d(p+1) d(p) = 0 (precondition_error otherwise).
    FiniteComplex(std::map<std::int64_t, std::size_t> dims, std::map<std::int64_t, Matrix> differentials);

    const std::map<std::int64_t, std::size_t>& dims() const { return dims_; }
    std::size_t dim(std::int64_t p) const;
    /// Zero matrix of the right shape when no differential is stored.
    Matrix differential(std::int64_t p) const;
    GradedSpace space() const;
    std::size_t total_dim() const;

private:
    std::map<std::int64_t, std::size_t> dims_;
    std::map<std::int64_t, Matrix> d_;
};

/// Basis element labels (degree, index) of a complex, in basis order.
struct ComplexLabel {
    std::int64_t degree;
    std::size_t index;
};
std::vector<ComplexLabel> complex_labels(const FiniteComplex& k);

/// Differential of the tensor complex on the full lexicographic basis of
/// the tensor product, with the sign (-1)^{p_1+...+p_{i-1}} on d_i.
Matrix tensor_differential(std::span<const FiniteComplex> ks, const OracleConfig& config = {});

/// The tensor complex grouped by total degree; within a degree the basis
/// keeps lexicographic order. Throws identity_violation if d^2 != 0.
FiniteComplex tensor_complex(std::span<const FiniteComplex> ks, const OracleConfig& config = {});

/// dim H^p = dim K^p - rank d(p) - rank d(p-1), as a space graded by k.
GradedSpace cohomology(const FiniteComplex& k);

/// H(⊗ K_i) has the dimensions of ⊗ H(K_i), degree by degree.
bool kunneth_check(std::span<const FiniteComplex> ks, const OracleConfig& config = {});

/// sigma^# commutes with the differential of the n-fold tensor complex of k.
bool chain_map_check(const FiniteComplex& k, std::size_t n, const Permutation& sigma, const OracleConfig& config = {});

/// Random complex with dims in [0, max_dim] on a run of at most max_degrees
/// consecutive degrees, small rational differentials, and d^2 = 0 built in.
FiniteComplex random_complex(std::mt19937_64& rng, std::size_t max_dim = 2, std::size_t max_degrees = 3);

/// Outcome of an exhaustive or randomized identity check.
struct CheckReport {
    std::string name;
    std::size_t cases = 0;
    bool passed = true;
    std::string counterexample;

    void record(bool ok, const std::string& description);
    void merge(const CheckReport& other);
};

/// For all sigma, tau in S_n and all parity vectors p:
/// s(sigma*tau, p) = s(sigma, p) s(tau, p∘sigma) with s = rearrangement_sign.
CheckReport verify_cocycle(std::size_t n);

/// For all sigma in S_n and parity vectors p, q:
///   A + B + C = D + E (mod 2), with A, C, E the rearrangement signs of
///   sigma on p + q, q and p, and B, D the interchange exponents
///   sum_{i>j} p_i q_j on the permuted and original factors.
CheckReport verify_prop15_identity(std::size_t n);

/// Matrix-level composition law tau^# sigma^# = (sigma tau)^# on the n-th
/// tensor power of v, over all pairs.
CheckReport verify_action_composition(const GradedSpace& v, std::size_t n, const OracleConfig& config = {});

} // namespace symprod

#endif
