#ifndef SYMPROD_PERMUTATION_HPP
#define SYMPROD_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace symprod {

/// Bijection of {0, ..., n-1}. Composition is right-to-left:
/// (a * b)(i) = a(b(i)).
class Permutation {
public:
    Permutation() = default;
    /// Throws precondition_error unless images is a bijection of 0..n-1.
    explicit Permutation(std::vector<std::size_t> images);

    static Permutation identity(std::size_t n);
    /// Swap of positions i and j (0-based).
    static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);
    /// All n! permutations in lexicographic order of their image arrays.
    static std::vector<Permutation> all(std::size_t n);

    std::size_t size() const { return images_.size(); }
    std::size_t operator()(std::size_t i) const { return images_[i]; }
    const std::vector<std::size_t>& images() const { return images_; }

    Permutation inverse() const;
    /// Sign character, +1 or -1.
    int sign() const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;

    /// One-based image list, e.g. "[2 1 3]".
    std::string to_string() const;

private:
    std::vector<std::size_t> images_;
};

/// nu(sigma, p) = sum over i < j with sigma(j) < sigma(i) of p_i p_j, taken
/// mod 2. Only the parities of p matter.
int nu_parity(const Permutation& sigma, std::span<const std::int64_t> p);

/// (-1)^nu(sigma, p). Throws precondition_error on a length mismatch.
int nu_sign(const Permutation& sigma, std::span<const std::int64_t> p);

/// Koszul sign of the rearrangement m_1 ⊗ ... ⊗ m_n -> m_sigma(1) ⊗ ... ⊗
/// m_sigma(n) for factor degrees p: nu evaluated on the rearranged degree
/// vector p∘sigma. Satisfies the cocycle law
///   s(sigma*tau, p) = s(sigma, p) · s(tau, p∘sigma).
int rearrangement_sign(const Permutation& sigma, std::span<const std::int64_t> p);

/// (p∘sigma)_i = p_{sigma(i)}.
std::vector<std::int64_t> compose_degrees(std::span<const std::int64_t> p, const Permutation& sigma);

} // namespace symprod

#endif
