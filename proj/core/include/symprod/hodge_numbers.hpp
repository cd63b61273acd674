#ifndef SYMPROD_HODGE_NUMBERS_HPP
#define SYMPROD_HODGE_NUMBERS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "symprod/laurent_poly.hpp"
#include "symprod/tridegree.hpp"

namespace symprod {

/// Finite table of Hodge numbers h^{p,q,k} of a bounded complex. Only
/// strictly positive entries are stored.
///
/// The table is the whole input: nothing here computes Hodge numbers from
/// geometry. Compactly supported numbers h_c^{p,q,k} use the same type; the
/// caller simply supplies that table instead.
class HodgeNumbers {
public:
    using EntryMap = std::map<Tridegree, std::int64_t>;

    HodgeNumbers() = default;

    /// Rejects duplicate keys and non-positive values with parse_error.
    static HodgeNumbers from_entries(const std::vector<std::pair<Tridegree, std::int64_t>>& entries);

    const EntryMap& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::int64_t at(const Tridegree& d) const;

    /// Sets h at d; zero erases, negative values throw precondition_error.
    void set(const Tridegree& d, std::int64_t h);

    friend bool operator==(const HodgeNumbers&, const HodgeNumbers&) = default;

private:
    EntryMap entries_;
};

/// Parses `{"entries": [{"p":..,"q":..,"k":..,"h":..}, ...]}`.
HodgeNumbers parse_hodge(std::string_view document);
HodgeNumbers hodge_from_json(const nlohmann::json& document);

/// The same document schema, entries in canonical (p, q, k) order.
nlohmann::json hodge_to_json(const HodgeNumbers& h);

/// Aligned text table, one row per entry: "p q k h".
std::string render_hodge_table(const HodgeNumbers& h);

/// e^{p,q} = sum_k (-1)^k h^{p,q,k}, as sum_{p,q} e^{p,q} y^p x^q.
LaurentPoly e_polynomial(const HodgeNumbers& h);

/// chi_{-y} = sum_p f^p y^p with f^p = sum_q e^{p,q}.
LaurentPoly chi_y(const HodgeNumbers& h);

/// sum h^{p,q,k} y^p x^q (-z)^k.
LaurentPoly full_polynomial(const HodgeNumbers& h);

} // namespace symprod

#endif
