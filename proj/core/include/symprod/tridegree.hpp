#ifndef SYMPROD_TRIDEGREE_HPP
#define SYMPROD_TRIDEGREE_HPP

#include <compare>
#include <cstdint>

namespace symprod {

/// Hodge type (p, q) together with cohomological degree k. Only k enters
/// sign rules; p and q are carried along and add under tensor products.
struct Tridegree {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t k = 0;

    bool odd() const { return (k & 1) != 0; }

    friend Tridegree operator+(const Tridegree& a, const Tridegree& b)
    {
        return {a.p + b.p, a.q + b.q, a.k + b.k};
    }
    friend auto operator<=>(const Tridegree&, const Tridegree&) = default;
};

} // namespace symprod

#endif
