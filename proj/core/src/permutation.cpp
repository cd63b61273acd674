#include "symprod/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symprod/errors.hpp"

namespace symprod {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size(), false);
    for (auto v : images_) {
        if (v >= images_.size() || seen[v]) {
            throw precondition_error("permutation images are not a bijection");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n)
{
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{0});
    return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j)
{
    Permutation p = identity(n);
    if (i >= n || j >= n) {
        throw precondition_error("transposition index out of range");
    }
    std::swap(p.images_[i], p.images_[j]);
    return p;
}

std::vector<Permutation> Permutation::all(std::size_t n)
{
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{0});
    std::vector<Permutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

Permutation Permutation::inverse() const
{
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        inv[images_[i]] = i;
    }
    return Permutation(std::move(inv));
}

int Permutation::sign() const
{
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        for (std::size_t j = i + 1; j < images_.size(); ++j) {
            inversions += images_[j] < images_[i] ? 1 : 0;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
    if (a.size() != b.size()) {
        throw precondition_error("composing permutations of different sizes");
    }
    std::vector<std::size_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a.images_[b.images_[i]];
    }
    return Permutation(std::move(out));
}

std::string Permutation::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < images_.size(); ++i) {
        os << (i == 0 ? "" : " ") << images_[i] + 1;
    }
    os << ']';
    return os.str();
}

int nu_parity(const Permutation& sigma, std::span<const std::int64_t> p)
{
    if (p.size() != sigma.size()) {
        throw precondition_error("degree vector length does not match permutation size");
    }
    int parity = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if ((p[i] & 1) == 0) {
            continue;
        }
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if ((p[j] & 1) != 0 && sigma(j) < sigma(i)) {
                parity ^= 1;
            }
        }
    }
    return parity;
}

int nu_sign(const Permutation& sigma, std::span<const std::int64_t> p)
{
    return nu_parity(sigma, p) == 0 ? 1 : -1;
}

std::vector<std::int64_t> compose_degrees(std::span<const std::int64_t> p, const Permutation& sigma)
{
    if (p.size() != sigma.size()) {
        throw precondition_error("degree vector length does not match permutation size");
    }
    std::vector<std::int64_t> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] = p[sigma(i)];
    }
    return out;
}

int rearrangement_sign(const Permutation& sigma, std::span<const std::int64_t> p)
{
    return nu_sign(sigma, compose_degrees(p, sigma));
}

} // namespace symprod
