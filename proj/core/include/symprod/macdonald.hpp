#ifndef SYMPROD_MACDONALD_HPP
#define SYMPROD_MACDONALD_HPP

#include <cstddef>
#include <cstdint>
#include <map>

#include "symprod/hodge_numbers.hpp"
#include "symprod/trunc_series.hpp"
#include "symprod/tridegree.hpp"

namespace symprod {

/// Dimensions of a tri-graded vector space; the parity of k decides whether
/// a piece is even or odd. Zero entries are allowed but never produced by
/// this module.
using TriGradedDims = std::map<Tridegree, std::int64_t>;

TriGradedDims dims_from_hodge(const HodgeNumbers& h);

enum class SeriesForm { product, exponential };

/// sum_n (sum h^{p,q,k}(S^n) y^p x^q (-z)^k) t^n as the product over the
/// support of (1 - y^p x^q z^k t)^(-(-1)^k h^{p,q,k}), truncated at order.
TruncSeries sym_hodge_series(const HodgeNumbers& h, std::size_t order);

/// Hodge numbers of the n-th symmetric product, read off the t^n coefficient
/// by undoing the (-z)^k sign. Throws identity_violation if a value comes
/// out negative or fractional.
HodgeNumbers sym_hodge_numbers(const HodgeNumbers& h, std::size_t n);

/// Generating series of E-polynomials of symmetric products.
TruncSeries e_series(const HodgeNumbers& h, std::size_t order, SeriesForm form);

/// Generating series of chi_{-y} genera of symmetric products.
TruncSeries chi_y_series(const HodgeNumbers& h, std::size_t order, SeriesForm form);

/// Dimensions of the degree-n part of Sym(V_even) ⊗ Λ(V_odd), counted
/// directly: multisets of even basis labels times strict subsets of odd
/// basis labels, degrees adding.
TriGradedDims prop22_dimensions(const TriGradedDims& d, std::size_t n);

} // namespace symprod

#endif
