#include "symprod/hodge_numbers.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <vector>

#include "symprod/errors.hpp"

namespace symprod {

namespace {

int parity_sign(std::int64_t k) { return (k & 1) != 0 ? -1 : 1; }

std::int64_t require_int(const nlohmann::json& entry, const char* key, std::size_t index)
{
    const auto it = entry.find(key);
    if (it == entry.end()) {
        throw parse_error("entry " + std::to_string(index) + ": missing key \"" + key + "\"");
    }
    if (!it->is_number_integer()) {
        throw parse_error("entry " + std::to_string(index) + ": \"" + key + "\" must be an integer");
    }
    return it->get<std::int64_t>();
}

} // namespace

HodgeNumbers HodgeNumbers::from_entries(const std::vector<std::pair<Tridegree, std::int64_t>>& entries)
{
    HodgeNumbers h;
    for (const auto& [d, value] : entries) {
        if (value <= 0) {
            throw parse_error("Hodge number at (" + std::to_string(d.p) + "," + std::to_string(d.q) + ","
                              + std::to_string(d.k) + ") must be positive, got " + std::to_string(value));
        }
        if (!h.entries_.emplace(d, value).second) {
            throw parse_error("duplicate Hodge number key (" + std::to_string(d.p) + "," + std::to_string(d.q)
                              + "," + std::to_string(d.k) + ")");
        }
    }
    return h;
}

std::int64_t HodgeNumbers::at(const Tridegree& d) const
{
    const auto it = entries_.find(d);
    return it == entries_.end() ? 0 : it->second;
}

void HodgeNumbers::set(const Tridegree& d, std::int64_t h)
{
    if (h < 0) {
        throw precondition_error("Hodge numbers are nonnegative");
    }
    if (h == 0) {
        entries_.erase(d);
    } else {
        entries_[d] = h;
    }
}

HodgeNumbers hodge_from_json(const nlohmann::json& document)
{
    if (!document.is_object()) {
        throw parse_error("Hodge document must be a JSON object");
    }
    const auto it = document.find("entries");
    if (it == document.end() || !it->is_array()) {
        throw parse_error("Hodge document needs an \"entries\" array");
    }
    std::vector<std::pair<Tridegree, std::int64_t>> entries;
    std::size_t index = 0;
    for (const auto& entry : *it) {
        if (!entry.is_object()) {
            throw parse_error("entry " + std::to_string(index) + " is not an object");
        }
        const Tridegree d{require_int(entry, "p", index), require_int(entry, "q", index),
                          require_int(entry, "k", index)};
        entries.emplace_back(d, require_int(entry, "h", index));
        ++index;
    }
    return HodgeNumbers::from_entries(entries);
}

HodgeNumbers parse_hodge(std::string_view document)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("malformed JSON: ") + e.what());
    }
    return hodge_from_json(j);
}

nlohmann::json hodge_to_json(const HodgeNumbers& h)
{
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [d, value] : h.entries()) {
        entries.push_back({{"p", d.p}, {"q", d.q}, {"k", d.k}, {"h", value}});
    }
    return {{"entries", entries}};
}

std::string render_hodge_table(const HodgeNumbers& h)
{
    std::vector<std::vector<std::string>> rows{{"p", "q", "k", "h"}};
    for (const auto& [d, value] : h.entries()) {
        rows.push_back({std::to_string(d.p), std::to_string(d.q), std::to_string(d.k), std::to_string(value)});
    }
    std::vector<std::size_t> width(4, 0);
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < 4; ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    std::ostringstream os;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < 4; ++c) {
            os << (c == 0 ? "" : "  ") << std::setw(static_cast<int>(width[c])) << row[c];
        }
        os << '\n';
    }
    return os.str();
}

LaurentPoly e_polynomial(const HodgeNumbers& h)
{
    LaurentPoly e;
    for (const auto& [d, value] : h.entries()) {
        e.add_term({d.p, d.q, 0}, Rational(parity_sign(d.k) * value));
    }
    return e;
}

LaurentPoly chi_y(const HodgeNumbers& h)
{
    LaurentPoly chi;
    for (const auto& [d, value] : h.entries()) {
        chi.add_term({d.p, 0, 0}, Rational(parity_sign(d.k) * value));
    }
    return chi;
}

LaurentPoly full_polynomial(const HodgeNumbers& h)
{
    LaurentPoly f;
    for (const auto& [d, value] : h.entries()) {
        f.add_term({d.p, d.q, d.k}, Rational(parity_sign(d.k) * value));
    }
    return f;
}

} // namespace symprod
