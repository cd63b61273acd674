#include "symprod/signature.hpp"

#include <charconv>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "symprod/errors.hpp"

namespace symprod {

namespace {

int parity_sign(std::int64_t i) { return (i & 1) != 0 ? -1 : 1; }

Rational factorial(std::size_t n)
{
    Rational f(1);
    for (std::size_t i = 2; i <= n; ++i) {
        f *= Rational(static_cast<std::int64_t>(i));
    }
    return f;
}

} // namespace

// ---------------------------------------------------------------------------
// GradedPairing

GradedPairing::GradedPairing(std::map<std::int64_t, std::size_t> dims, std::map<std::int64_t, Matrix> blocks)
    : dims_(std::move(dims)), blocks_(std::move(blocks))
{
    for (auto it = dims_.begin(); it != dims_.end();) {
        it = it->second == 0 ? dims_.erase(it) : std::next(it);
    }
    for (const auto& [i, b] : blocks_) {
        if (i < 0) {
            throw precondition_error("block for negative degree " + std::to_string(i)
                                     + " is determined by graded symmetry");
        }
        if (b.rows() != dim(i) || b.cols() != dim(-i)) {
            throw precondition_error("block " + std::to_string(i) + " has shape " + std::to_string(b.rows()) + "x"
                                     + std::to_string(b.cols()) + ", expected " + std::to_string(dim(i)) + "x"
                                     + std::to_string(dim(-i)));
        }
        if (i == 0 && !b.is_symmetric()) {
            throw precondition_error("block 0 must be symmetric");
        }
    }
}

std::size_t GradedPairing::dim(std::int64_t i) const
{
    const auto it = dims_.find(i);
    return it == dims_.end() ? 0 : it->second;
}

std::size_t GradedPairing::total_dim() const
{
    std::size_t total = 0;
    for (const auto& [i, r] : dims_) {
        total += r;
    }
    return total;
}

Matrix GradedPairing::block(std::int64_t i) const
{
    const auto it = blocks_.find(i < 0 ? -i : i);
    if (it == blocks_.end()) {
        return Matrix(dim(i), dim(-i));
    }
    if (i >= 0) {
        return it->second;
    }
    return Rational(parity_sign(i)) * it->second.transpose();
}

std::vector<PairingLabel> GradedPairing::labels() const
{
    std::vector<PairingLabel> out;
    for (const auto& [i, r] : dims_) {
        for (std::size_t j = 0; j < r; ++j) {
            out.push_back({i, j});
        }
    }
    return out;
}

Rational GradedPairing::pair(const PairingLabel& a, const PairingLabel& b) const
{
    if (a.degree + b.degree != 0 || a.index >= dim(a.degree) || b.index >= dim(b.degree)) {
        return Rational(0);
    }
    const auto it = blocks_.find(a.degree < 0 ? -a.degree : a.degree);
    if (it == blocks_.end()) {
        return Rational(0);
    }
    if (a.degree >= 0) {
        return it->second(a.index, b.index);
    }
    return Rational(parity_sign(a.degree)) * it->second(b.index, a.index);
}

GradedSpace GradedPairing::space() const { return GradedSpace::from_degrees(dims_); }

// ---------------------------------------------------------------------------
// Documents

namespace {

std::int64_t parse_degree_key(const std::string& key)
{
    std::int64_t value = 0;
    const char* first = key.data();
    const char* last = key.data() + key.size();
    if (first != last && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
        throw parse_error("dims key \"" + key + "\" is not an integer degree");
    }
    return value;
}

Rational parse_entry(const nlohmann::json& entry, std::int64_t block)
{
    if (entry.is_string()) {
        try {
            return Rational::parse(entry.get<std::string>());
        } catch (const std::exception& e) {
            throw parse_error("block " + std::to_string(block) + ": bad rational \"" + entry.get<std::string>()
                              + "\"");
        }
    }
    if (entry.is_number_integer()) {
        return Rational(entry.get<std::int64_t>());
    }
    throw parse_error("block " + std::to_string(block) + ": entries must be rationals written as strings");
}

} // namespace

GradedPairing pairing_from_json(const nlohmann::json& document)
{
    if (!document.is_object()) {
        throw parse_error("pairing document must be a JSON object");
    }
    std::map<std::int64_t, std::size_t> dims;
    if (const auto it = document.find("dims"); it != document.end()) {
        if (!it->is_object()) {
            throw parse_error("\"dims\" must be an object mapping degrees to dimensions");
        }
        for (const auto& [key, value] : it->items()) {
            if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
                throw parse_error("dims[\"" + key + "\"] must be a nonnegative integer");
            }
            if (!dims.emplace(parse_degree_key(key), value.get<std::size_t>()).second) {
                throw parse_error("duplicate degree in dims: \"" + key + "\"");
            }
        }
    } else {
        throw parse_error("pairing document needs a \"dims\" object");
    }

    std::map<std::int64_t, Matrix> blocks;
    if (const auto it = document.find("blocks"); it != document.end()) {
        if (!it->is_array()) {
            throw parse_error("\"blocks\" must be an array");
        }
        for (const auto& entry : *it) {
            if (!entry.is_object() || !entry.contains("i") || !entry["i"].is_number_integer()) {
                throw parse_error("every block needs an integer \"i\"");
            }
            const auto i = entry["i"].get<std::int64_t>();
            if (i < 0) {
                throw parse_error("block for negative degree " + std::to_string(i)
                                  + " is not accepted; it follows from graded symmetry");
            }
            const auto m = entry.find("matrix");
            if (m == entry.end() || !m->is_array()) {
                throw parse_error("block " + std::to_string(i) + " needs a \"matrix\" array");
            }
            std::vector<std::vector<Rational>> rows;
            for (const auto& row : *m) {
                if (!row.is_array()) {
                    throw parse_error("block " + std::to_string(i) + ": matrix rows must be arrays");
                }
                std::vector<Rational> values;
                for (const auto& x : row) {
                    values.push_back(parse_entry(x, i));
                }
                if (!rows.empty() && values.size() != rows.front().size()) {
                    throw parse_error("block " + std::to_string(i) + ": ragged matrix");
                }
                rows.push_back(std::move(values));
            }
            const auto at = [&](std::int64_t d) {
                const auto f = dims.find(d);
                return f == dims.end() ? std::size_t{0} : f->second;
            };
            Matrix matrix = rows.empty() ? Matrix(at(i), at(-i)) : Matrix(rows);
            if (rows.empty() && at(i) != 0 && at(-i) != 0) {
                throw parse_error("block " + std::to_string(i) + ": empty matrix for a nonzero block shape");
            }
            if (!blocks.emplace(i, std::move(matrix)).second) {
                throw parse_error("duplicate block for degree " + std::to_string(i));
            }
        }
    }
    try {
        return GradedPairing(std::move(dims), std::move(blocks));
    } catch (const precondition_error& e) {
        throw parse_error(e.what());
    }
}

GradedPairing parse_pairing(std::string_view document)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("malformed JSON: ") + e.what());
    }
    return pairing_from_json(j);
}

nlohmann::json pairing_to_json(const GradedPairing& phi)
{
    nlohmann::json dims = nlohmann::json::object();
    for (const auto& [i, r] : phi.dims()) {
        dims[std::to_string(i)] = r;
    }
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& [i, b] : phi.stored_blocks()) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t r = 0; r < b.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t c = 0; c < b.cols(); ++c) {
                row.push_back(b(r, c).to_string());
            }
            rows.push_back(std::move(row));
        }
        blocks.push_back({{"i", i}, {"matrix", std::move(rows)}});
    }
    return {{"dims", dims}, {"blocks", blocks}};
}

// ---------------------------------------------------------------------------
// Invariants and the closed form

PairingInvariants pairing_invariants(const GradedPairing& phi)
{
    PairingInvariants inv;
    for (const auto& [i, r] : phi.dims()) {
        if (phi.dim(-i) != 0) {
            inv.rho[i] = rank(phi.block(i));
        }
    }
    for (const auto& [i, rho] : inv.rho) {
        if (inv.rho.at(-i) != rho) {
            throw identity_violation("rho_" + std::to_string(i) + " = " + std::to_string(rho) + " but rho_"
                                     + std::to_string(-i) + " = " + std::to_string(inv.rho.at(-i)));
        }
        inv.chi += parity_sign(i) * static_cast<std::int64_t>(rho);
    }
    if (phi.dim(0) != 0) {
        inv.sigma = inertia(phi.block(0)).signature();
    }
    return inv;
}

TruncSeries hz_series(const PairingInvariants& inv, std::size_t order)
{
    if (((inv.sigma - inv.chi) & 1) != 0) {
        throw identity_violation("sigma = " + std::to_string(inv.sigma) + " and chi = " + std::to_string(inv.chi)
                                 + " have different parity");
    }
    const std::int64_t plus = (inv.sigma - inv.chi) / 2;
    const std::int64_t minus = (inv.sigma + inv.chi) / 2;
    const TruncSeries one_plus_t(order, {LaurentPoly(1), LaurentPoly(1)});
    return series_pow_int(one_plus_t, plus) * geometric_factor(LaurentPoly(1), minus, order);
}

TruncSeries hz_series(const GradedPairing& phi, std::size_t order)
{
    return hz_series(pairing_invariants(phi), order);
}

std::vector<std::int64_t> hz_coefficients(const GradedPairing& phi, std::size_t order)
{
    const TruncSeries s = hz_series(phi, order);
    std::vector<std::int64_t> out;
    for (const auto& c : s.coefficients()) {
        out.push_back(c.constant_term().to_int64());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Lambda indices

std::size_t LambdaIndex::size() const
{
    std::size_t n = 0;
    for (const auto& [label, m] : mu) {
        n += m;
    }
    return n;
}

std::int64_t LambdaIndex::weight() const
{
    std::int64_t w = 0;
    for (const auto& [label, m] : mu) {
        w += label.degree * static_cast<std::int64_t>(m);
    }
    return w;
}

std::vector<PairingLabel> LambdaIndex::expanded() const
{
    std::vector<PairingLabel> out;
    for (const auto& [label, m] : mu) {
        out.insert(out.end(), m, label);
    }
    return out;
}

LambdaIndex LambdaIndex::involution() const
{
    LambdaIndex out;
    for (const auto& [label, m] : mu) {
        out.mu[{-label.degree, label.index}] = m;
    }
    return out;
}

std::string LambdaIndex::to_string() const
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [label, m] : mu) {
        os << (first ? "" : " ") << '(' << label.degree << ',' << label.index << "):" << m;
        first = false;
    }
    os << '}';
    return os.str();
}

std::vector<LambdaIndex> enumerate_lambda(const GradedPairing& phi, std::size_t n, const OracleConfig& config)
{
    const auto labels = phi.labels();
    std::vector<LambdaIndex> out;
    std::vector<std::size_t> mult(labels.size(), 0);

    // Labels in increasing order; the first label takes its largest
    // multiplicity first so expanded lists come out lexicographically.
    auto recurse = [&](auto&& self, std::size_t pos, std::size_t remaining, std::int64_t weight) -> void {
        if (pos == labels.size()) {
            if (remaining == 0 && weight == 0) {
                LambdaIndex mu;
                for (std::size_t l = 0; l < labels.size(); ++l) {
                    if (mult[l] != 0) {
                        mu.mu[labels[l]] = mult[l];
                    }
                }
                out.push_back(std::move(mu));
                if (out.size() > config.dim_bound) {
                    throw bound_exceeded("more than " + std::to_string(config.dim_bound) + " lambda indices");
                }
            }
            return;
        }
        const bool odd = (labels[pos].degree & 1) != 0;
        const std::size_t top = odd ? std::min<std::size_t>(1, remaining) : remaining;
        for (std::size_t m = top + 1; m-- > 0;) {
            mult[pos] = m;
            self(self, pos + 1, remaining - m, weight + labels[pos].degree * static_cast<std::int64_t>(m));
        }
        mult[pos] = 0;
    };
    recurse(recurse, 0, n, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Induced pairing on the invariant part

namespace {

/// phi^n(v_1 ⊗ ... ⊗ v_n, w_1 ⊗ ... ⊗ w_n) on basis tuples given by label
/// positions, including the interchange sign.
class TensorPairing {
public:
    TensorPairing(const GradedPairing& phi, std::size_t n, const OracleConfig& config)
        : labels_(phi.labels()), basis_(labels_.size(), n, config), partners_(labels_.size())
    {
        for (std::size_t a = 0; a < labels_.size(); ++a) {
            degrees_.push_back(labels_[a].degree);
            for (std::size_t b = 0; b < labels_.size(); ++b) {
                Rational value = phi.pair(labels_[a], labels_[b]);
                if (!value.is_zero()) {
                    partners_[a].emplace_back(b, std::move(value));
                }
            }
        }
    }

    const std::vector<PairingLabel>& labels() const { return labels_; }
    const TensorPowerBasis& basis() const { return basis_; }
    const std::vector<std::int64_t>& degrees() const { return degrees_; }

    std::vector<std::int64_t> slot_degrees(std::span<const std::size_t> slots) const
    {
        std::vector<std::int64_t> out;
        for (auto s : slots) {
            out.push_back(degrees_[s]);
        }
        return out;
    }

    /// Calls f(code of w, phi^n(v, w)) for every w with phi^n(v, w) != 0.
    template <class F>
    void for_each_partner(std::span<const std::size_t> v, F&& f) const
    {
        std::vector<std::size_t> w(v.size());
        auto recurse = [&](auto&& self, std::size_t i, Rational value, std::int64_t w_before,
                           std::int64_t exponent) -> void {
            if (i == v.size()) {
                f(basis_.encode(w), (exponent & 1) != 0 ? -value : value);
                return;
            }
            for (const auto& [b, c] : partners_[v[i]]) {
                w[i] = b;
                // Interchange sign: deg(w_k) deg(v_i) for every k < i.
                self(self, i + 1, value * c, w_before + degrees_[b], exponent + w_before * degrees_[v[i]]);
            }
        };
        recurse(recurse, 0, Rational(1), 0, 0);
    }

    Rational value(std::span<const std::size_t> v, std::span<const std::size_t> w) const
    {
        Rational out(1);
        std::int64_t exponent = 0;
        std::int64_t w_before = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Rational c = phi_value(v[i], w[i]);
            if (c.is_zero()) {
                return Rational(0);
            }
            out *= c;
            exponent += w_before * degrees_[v[i]];
            w_before += degrees_[w[i]];
        }
        return (exponent & 1) != 0 ? -out : out;
    }

private:
    Rational phi_value(std::size_t a, std::size_t b) const
    {
        for (const auto& [p, c] : partners_[a]) {
            if (p == b) {
                return c;
            }
        }
        return Rational(0);
    }

    std::vector<PairingLabel> labels_;
    TensorPowerBasis basis_;
    std::vector<std::int64_t> degrees_;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> partners_;
};

/// e_1 applied to a basis tuple, as code -> coefficient.
std::map<std::size_t, Rational> symmetrize(const TensorPairing& tp, std::span<const std::size_t> slots,
                                           const std::vector<Permutation>& perms)
{
    std::map<std::size_t, Rational> out;
    const auto degs = tp.slot_degrees(slots);
    const Rational weight = Rational(1) / factorial(slots.size());
    for (const auto& sigma : perms) {
        const auto moved = act_on_slots(sigma, slots, degs);
        out[tp.basis().encode(moved.slots)] += weight * Rational(moved.sign);
    }
    for (auto it = out.begin(); it != out.end();) {
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    }
    return out;
}

std::vector<std::size_t> label_positions(const TensorPairing& tp, const LambdaIndex& mu)
{
    std::vector<std::size_t> out;
    for (const auto& label : mu.expanded()) {
        const auto it = std::lower_bound(tp.labels().begin(), tp.labels().end(), label);
        out.push_back(static_cast<std::size_t>(it - tp.labels().begin()));
    }
    return out;
}

std::int64_t signature_of(const Matrix& gram) { return gram.rows() == 0 ? 0 : inertia(gram).signature(); }

} // namespace

Matrix induced_gram(const GradedPairing& phi, std::size_t n, const OracleConfig& config)
{
    const TensorPairing tp(phi, n, config);
    const auto lambdas = enumerate_lambda(phi, n, config);
    const auto perms = Permutation::all(n);

    std::vector<std::map<std::size_t, Rational>> expansions;
    std::unordered_map<std::size_t, std::pair<std::size_t, Rational>> owner;
    for (std::size_t m = 0; m < lambdas.size(); ++m) {
        expansions.push_back(symmetrize(tp, label_positions(tp, lambdas[m]), perms));
        for (const auto& [code, c] : expansions.back()) {
            owner.emplace(code, std::make_pair(m, c));
        }
    }

    Matrix gram(lambdas.size(), lambdas.size());
    for (std::size_t m = 0; m < lambdas.size(); ++m) {
        for (const auto& [code, c] : expansions[m]) {
            const auto v = tp.basis().decode(code);
            tp.for_each_partner(v, [&](std::size_t w, const Rational& value) {
                const auto it = owner.find(w);
                if (it != owner.end()) {
                    gram(m, it->second.first) += c * it->second.second * value;
                }
            });
        }
    }
    if (!gram.is_symmetric()) {
        throw identity_violation("induced Gram matrix is not symmetric for n = " + std::to_string(n));
    }
    return gram;
}

std::int64_t brute_signature(const GradedPairing& phi, std::size_t n, const OracleConfig& config)
{
    return signature_of(induced_gram(phi, n, config));
}

std::int64_t hyperbolic_signature(const GradedPairing& phi, std::size_t n, const OracleConfig& config)
{
    const auto lambdas = enumerate_lambda(phi, n, config);
    const Matrix gram = induced_gram(phi, n, config);
    std::vector<std::size_t> fixed;
    for (std::size_t m = 0; m < lambdas.size(); ++m) {
        if (lambdas[m].involution() == lambdas[m]) {
            fixed.push_back(m);
        }
    }
    Matrix sub(fixed.size(), fixed.size());
    for (std::size_t r = 0; r < fixed.size(); ++r) {
        for (std::size_t c = 0; c < fixed.size(); ++c) {
            sub(r, c) = gram(fixed[r], fixed[c]);
        }
    }
    return signature_of(sub);
}

bool e1_self_adjoint_check(const GradedPairing& phi, std::size_t n, const OracleConfig& config)
{
    const TensorPairing tp(phi, n, config);
    const auto perms = Permutation::all(n);

    std::vector<std::size_t> zero_codes;
    std::unordered_map<std::size_t, std::size_t> position;
    for (std::size_t code = 0; code < tp.basis().size(); ++code) {
        std::int64_t total = 0;
        for (auto s : tp.basis().decode(code)) {
            total += tp.degrees()[s];
        }
        if (total == 0) {
            position[code] = zero_codes.size();
            zero_codes.push_back(code);
        }
    }
    const std::size_t size = zero_codes.size();
    Matrix gram(size, size);
    Matrix e1(size, size);
    for (std::size_t col = 0; col < size; ++col) {
        const auto v = tp.basis().decode(zero_codes[col]);
        for (std::size_t row = 0; row < size; ++row) {
            gram(row, col) = tp.value(tp.basis().decode(zero_codes[row]), v);
        }
        for (const auto& [code, c] : symmetrize(tp, v, perms)) {
            e1(position.at(code), col) = c;
        }
    }
    const Matrix ge = gram * e1;
    return e1.transpose() * ge == ge;
}

// ---------------------------------------------------------------------------
// Constructions

GradedPairing good_basis(const GradedPairing& phi)
{
    std::map<std::int64_t, Matrix> blocks;
    for (const auto& [i, r] : phi.dims()) {
        if (i < 0 || phi.dim(-i) == 0) {
            continue;
        }
        const Matrix b = phi.block(i);
        if (i == 0) {
            const auto cd = congruence_diagonalize(b);
            blocks.emplace(0, cd.transform * b * cd.transform.transpose());
        } else {
            const auto nf = rank_normal_form(b);
            blocks.emplace(i, nf.row_transform * b * nf.column_transform.transpose());
        }
    }
    return GradedPairing(phi.dims(), std::move(blocks));
}

GradedPairing direct_sum(const GradedPairing& a, const GradedPairing& b)
{
    std::map<std::int64_t, std::size_t> dims = a.dims();
    for (const auto& [i, r] : b.dims()) {
        dims[i] += r;
    }
    std::map<std::int64_t, Matrix> blocks;
    for (const auto& [i, r] : dims) {
        const auto it = dims.find(-i);
        if (i < 0 || it == dims.end()) {
            continue;
        }
        Matrix m(r, it->second);
        const Matrix ba = a.block(i);
        const Matrix bb = b.block(i);
        for (std::size_t x = 0; x < ba.rows(); ++x) {
            for (std::size_t y = 0; y < ba.cols(); ++y) {
                m(x, y) = ba(x, y);
            }
        }
        for (std::size_t x = 0; x < bb.rows(); ++x) {
            for (std::size_t y = 0; y < bb.cols(); ++y) {
                m(ba.rows() + x, ba.cols() + y) = bb(x, y);
            }
        }
        blocks.emplace(i, std::move(m));
    }
    return GradedPairing(std::move(dims), std::move(blocks));
}

namespace {

/// Every r x c matrix with entries in {-1, 0, 1}, optionally symmetric.
std::vector<Matrix> ternary_matrices(std::size_t rows, std::size_t cols, bool symmetric)
{
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = symmetric ? r : 0; c < cols; ++c) {
            cells.emplace_back(r, c);
        }
    }
    std::size_t count = 1;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        count *= 3;
    }
    std::vector<Matrix> out;
    for (std::size_t code = 0; code < count; ++code) {
        Matrix m(rows, cols);
        std::size_t rest = code;
        for (const auto& [r, c] : cells) {
            const Rational value(static_cast<std::int64_t>(rest % 3) - 1);
            rest /= 3;
            m(r, c) = value;
            if (symmetric) {
                m(c, r) = value;
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<GradedPairing> degree_zero_family(std::size_t max_dim)
{
    std::vector<GradedPairing> out;
    for (std::size_t r = 0; r <= max_dim; ++r) {
        for (auto& m : ternary_matrices(r, r, true)) {
            std::map<std::int64_t, Matrix> blocks;
            if (r != 0) {
                blocks.emplace(0, std::move(m));
            }
            out.emplace_back(std::map<std::int64_t, std::size_t>{{0, r}}, std::move(blocks));
        }
    }
    return out;
}

std::vector<GradedPairing> pair_family(std::int64_t degree, std::size_t max_dim)
{
    std::vector<GradedPairing> out;
    for (std::size_t r = 0; r <= max_dim; ++r) {
        for (std::size_t s = 0; s <= max_dim; ++s) {
            for (auto& m : ternary_matrices(r, s, false)) {
                std::map<std::int64_t, Matrix> blocks;
                if (r != 0 && s != 0) {
                    blocks.emplace(degree, std::move(m));
                }
                out.emplace_back(std::map<std::int64_t, std::size_t>{{degree, r}, {-degree, s}}, std::move(blocks));
            }
        }
    }
    return out;
}

} // namespace

std::vector<GradedPairing> pairing_library(std::size_t random_count, std::uint64_t seed)
{
    std::vector<GradedPairing> out;
    std::set<std::string> seen;
    auto add = [&](GradedPairing phi) {
        if (seen.insert(pairing_to_json(phi).dump()).second) {
            out.push_back(std::move(phi));
        }
    };

    const auto zero2 = degree_zero_family(2);
    const auto one2 = pair_family(1, 2);
    const auto two2 = pair_family(2, 2);
    for (const auto* family : {&zero2, &one2, &two2}) {
        for (const auto& phi : *family) {
            add(phi);
        }
    }

    const auto zero1 = degree_zero_family(1);
    const auto one1 = pair_family(1, 1);
    const auto two1 = pair_family(2, 1);
    for (const auto& a : zero1) {
        for (const auto& b : one1) {
            for (const auto& c : two1) {
                add(direct_sum(direct_sum(a, b), c));
            }
        }
    }

    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < random_count; ++k) {
        const auto& a = zero2[rng() % zero2.size()];
        const auto& b = one2[rng() % one2.size()];
        const auto& c = two2[rng() % two2.size()];
        add(direct_sum(direct_sum(a, b), c));
    }
    return out;
}

} // namespace symprod
