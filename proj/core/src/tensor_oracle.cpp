#include "symprod/tensor_oracle.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "symprod/errors.hpp"

namespace symprod {

// ---------------------------------------------------------------------------
// GradedSpace

GradedSpace GradedSpace::from_degrees(const std::map<std::int64_t, std::size_t>& by_k)
{
    GradedSpace v;
    for (const auto& [k, dim] : by_k) {
        v.dims[{0, 0, k}] = dim;
    }
    return v;
}

GradedSpace GradedSpace::from_dims(const TriGradedDims& d)
{
    GradedSpace v;
    for (const auto& [deg, dim] : d) {
        if (dim < 0) {
            throw precondition_error("negative dimension");
        }
        v.dims[deg] = static_cast<std::size_t>(dim);
    }
    return v;
}

std::size_t GradedSpace::total_dim() const
{
    std::size_t total = 0;
    for (const auto& [deg, dim] : dims) {
        total += dim;
    }
    return total;
}

std::size_t GradedSpace::dim(const Tridegree& d) const
{
    const auto it = dims.find(d);
    return it == dims.end() ? 0 : it->second;
}

std::vector<Tridegree> GradedSpace::basis_degrees() const
{
    std::vector<Tridegree> out;
    for (const auto& [deg, dim] : dims) {
        out.insert(out.end(), dim, deg);
    }
    return out;
}

TriGradedDims GradedSpace::to_dims() const
{
    TriGradedDims out;
    for (const auto& [deg, dim] : dims) {
        if (dim != 0) {
            out[deg] = static_cast<std::int64_t>(dim);
        }
    }
    return out;
}

GradedSpace GradedSpace::normalized() const
{
    GradedSpace out;
    for (const auto& [deg, dim] : dims) {
        if (dim != 0) {
            out.dims[deg] = dim;
        }
    }
    return out;
}

bool operator==(const GradedSpace& a, const GradedSpace& b)
{
    return a.normalized().dims == b.normalized().dims;
}

// ---------------------------------------------------------------------------
// Tensor power bases and the signed action

TensorPowerBasis::TensorPowerBasis(std::size_t labels, std::size_t n, const OracleConfig& config)
    : labels_(labels), n_(n), size_(1)
{
    for (std::size_t i = 0; i < n; ++i) {
        if (labels != 0 && size_ > config.dim_bound / labels) {
            throw bound_exceeded("tensor power of dimension " + std::to_string(labels) + "^" + std::to_string(n)
                                 + " exceeds the bound " + std::to_string(config.dim_bound));
        }
        size_ *= labels;
    }
    if (size_ > config.dim_bound) {
        throw bound_exceeded("tensor power exceeds the bound " + std::to_string(config.dim_bound));
    }
}

std::vector<std::size_t> TensorPowerBasis::decode(std::size_t index) const
{
    std::vector<std::size_t> slots(n_);
    for (std::size_t i = n_; i-- > 0;) {
        slots[i] = index % labels_;
        index /= labels_;
    }
    return slots;
}

std::size_t TensorPowerBasis::encode(std::span<const std::size_t> slots) const
{
    std::size_t index = 0;
    for (auto s : slots) {
        index = index * labels_ + s;
    }
    return index;
}

Matrix SignedPermutationMatrix::to_dense() const
{
    Matrix m(size(), size());
    for (std::size_t e = 0; e < size(); ++e) {
        m(target[e], e) = Rational(sign[e]);
    }
    return m;
}

SignedPermutationMatrix SignedPermutationMatrix::inverse() const
{
    SignedPermutationMatrix inv{std::vector<std::size_t>(size()), std::vector<int>(size())};
    for (std::size_t e = 0; e < size(); ++e) {
        inv.target[target[e]] = e;
        inv.sign[target[e]] = sign[e];
    }
    return inv;
}

SignedPermutationMatrix operator*(const SignedPermutationMatrix& a, const SignedPermutationMatrix& b)
{
    if (a.size() != b.size()) {
        throw precondition_error("signed permutation size mismatch");
    }
    SignedPermutationMatrix out{std::vector<std::size_t>(b.size()), std::vector<int>(b.size())};
    for (std::size_t e = 0; e < b.size(); ++e) {
        out.target[e] = a.target[b.target[e]];
        out.sign[e] = a.sign[b.target[e]] * b.sign[e];
    }
    return out;
}

SignedSlots act_on_slots(const Permutation& sigma, std::span<const std::size_t> slots,
                         std::span<const std::int64_t> slot_degrees)
{
    if (slots.size() != sigma.size() || slot_degrees.size() != sigma.size()) {
        throw precondition_error("slot count does not match permutation size");
    }
    SignedSlots out{std::vector<std::size_t>(slots.size()), rearrangement_sign(sigma, slot_degrees)};
    for (std::size_t i = 0; i < slots.size(); ++i) {
        out.slots[i] = slots[sigma(i)];
    }
    return out;
}

namespace {

std::vector<std::int64_t> slot_degrees(const std::vector<Tridegree>& degrees, std::span<const std::size_t> slots)
{
    std::vector<std::int64_t> out(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) {
        out[i] = degrees[slots[i]].k;
    }
    return out;
}

Tridegree total_degree(const std::vector<Tridegree>& degrees, std::span<const std::size_t> slots)
{
    Tridegree total;
    for (auto s : slots) {
        total = total + degrees[s];
    }
    return total;
}

void require_slots(const Permutation& sigma, std::size_t n)
{
    if (sigma.size() != n) {
        throw precondition_error("permutation acts on " + std::to_string(sigma.size()) + " slots, tensor power has "
                                 + std::to_string(n));
    }
}

Rational factorial(std::size_t n)
{
    Rational f(1);
    for (std::size_t i = 2; i <= n; ++i) {
        f *= Rational(static_cast<std::int64_t>(i));
    }
    return f;
}

} // namespace

SignedPermutationMatrix tensor_action(const GradedSpace& v, std::size_t n, const Permutation& sigma,
                                      const OracleConfig& config)
{
    require_slots(sigma, n);
    const auto degrees = v.basis_degrees();
    const TensorPowerBasis basis(degrees.size(), n, config);
    SignedPermutationMatrix out{std::vector<std::size_t>(basis.size()), std::vector<int>(basis.size())};
    for (std::size_t e = 0; e < basis.size(); ++e) {
        const auto slots = basis.decode(e);
        const auto moved = act_on_slots(sigma, slots, slot_degrees(degrees, slots));
        out.target[e] = basis.encode(moved.slots);
        out.sign[e] = moved.sign;
    }
    return out;
}

SignedPermutationMatrix covariant_action(const GradedSpace& v, std::size_t n, const Permutation& sigma,
                                         const OracleConfig& config)
{
    return tensor_action(v, n, sigma, config).inverse();
}

Matrix projector_matrix(const GradedSpace& v, std::size_t n, Character character, const OracleConfig& config)
{
    const auto degrees = v.basis_degrees();
    const TensorPowerBasis basis(degrees.size(), n, config);
    Matrix p(basis.size(), basis.size());
    const Rational weight = Rational(1) / factorial(n);
    for (const auto& sigma : Permutation::all(n)) {
        const int chi = character == Character::sign ? sigma.sign() : 1;
        const auto a = tensor_action(v, n, sigma, config);
        for (std::size_t e = 0; e < a.size(); ++e) {
            p(a.target[e], e) += weight * Rational(chi * a.sign[e]);
        }
    }
    return p;
}

GradedSpace isotypic_dims(const GradedSpace& v, std::size_t n, Character character, const OracleConfig& config)
{
    const auto degrees = v.basis_degrees();
    const TensorPowerBasis basis(degrees.size(), n, config);
    const auto perms = Permutation::all(n);
    const Rational weight = Rational(1) / factorial(n);

    GradedSpace out;
    std::vector<bool> visited(basis.size(), false);
    for (std::size_t e = 0; e < basis.size(); ++e) {
        if (visited[e]) {
            continue;
        }
        const auto slots = basis.decode(e);
        const auto degs = slot_degrees(degrees, slots);

        // Orbit of e, with the image and sign of e under every sigma.
        std::vector<std::size_t> orbit;
        for (const auto& sigma : perms) {
            orbit.push_back(basis.encode(act_on_slots(sigma, slots, degs).slots));
        }
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());

        std::unordered_map<std::size_t, std::size_t> local;
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            local[orbit[i]] = i;
            visited[orbit[i]] = true;
        }
        Matrix block(orbit.size(), orbit.size());
        for (std::size_t col = 0; col < orbit.size(); ++col) {
            const auto col_slots = basis.decode(orbit[col]);
            const auto col_degs = slot_degrees(degrees, col_slots);
            for (const auto& sigma : perms) {
                const int chi = character == Character::sign ? sigma.sign() : 1;
                const auto moved = act_on_slots(sigma, col_slots, col_degs);
                block(local.at(basis.encode(moved.slots)), col) += weight * Rational(chi * moved.sign);
            }
        }
        out.dims[total_degree(degrees, slots)] += rank(block);
    }
    return out.normalized();
}

bool prop22_check(const GradedSpace& v, std::size_t n, const OracleConfig& config)
{
    const GradedSpace brute = isotypic_dims(v, n, Character::trivial, config);
    const GradedSpace counted = GradedSpace::from_dims(prop22_dimensions(v.to_dims(), n));
    return brute == counted;
}

// ---------------------------------------------------------------------------
// Complexes

FiniteComplex::FiniteComplex(std::map<std::int64_t, std::size_t> dims, std::map<std::int64_t, Matrix> differentials)
    : dims_(std::move(dims)), d_(std::move(differentials))
{
    for (auto it = dims_.begin(); it != dims_.end();) {
        it = it->second == 0 ? dims_.erase(it) : std::next(it);
    }
    for (const auto& [p, m] : d_) {
        if (m.rows() != dim(p + 1) || m.cols() != dim(p)) {
            throw precondition_error("differential d(" + std::to_string(p) + ") has shape "
                                     + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected "
                                     + std::to_string(dim(p + 1)) + "x" + std::to_string(dim(p)));
        }
    }
    for (const auto& [p, m] : d_) {
        const auto next = d_.find(p + 1);
        if (next != d_.end() && !(next->second * m).is_zero()) {
            throw precondition_error("d(" + std::to_string(p + 1) + ") d(" + std::to_string(p) + ") != 0");
        }
    }
}

std::size_t FiniteComplex::dim(std::int64_t p) const
{
    const auto it = dims_.find(p);
    return it == dims_.end() ? 0 : it->second;
}

Matrix FiniteComplex::differential(std::int64_t p) const
{
    const auto it = d_.find(p);
    return it == d_.end() ? Matrix(dim(p + 1), dim(p)) : it->second;
}

GradedSpace FiniteComplex::space() const { return GradedSpace::from_degrees(dims_); }

std::size_t FiniteComplex::total_dim() const { return space().total_dim(); }

std::vector<ComplexLabel> complex_labels(const FiniteComplex& k)
{
    std::vector<ComplexLabel> out;
    for (const auto& [p, dim] : k.dims()) {
        for (std::size_t i = 0; i < dim; ++i) {
            out.push_back({p, i});
        }
    }
    return out;
}

namespace {

struct FactorData {
    std::vector<ComplexLabel> labels;
    // Offset of the first basis element of each degree within `labels`.
    std::map<std::int64_t, std::size_t> offset;
    std::map<std::int64_t, Matrix> d;
};

std::vector<FactorData> factor_data(std::span<const FiniteComplex> ks)
{
    std::vector<FactorData> out;
    for (const auto& k : ks) {
        FactorData f;
        f.labels = complex_labels(k);
        for (std::size_t i = 0; i < f.labels.size(); ++i) {
            f.offset.try_emplace(f.labels[i].degree, i);
        }
        for (const auto& [p, dim] : k.dims()) {
            f.d.emplace(p, k.differential(p));
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::size_t mixed_radix_size(const std::vector<FactorData>& fs, const OracleConfig& config)
{
    std::size_t size = 1;
    for (const auto& f : fs) {
        const std::size_t l = f.labels.size();
        if (l != 0 && size > config.dim_bound / l) {
            throw bound_exceeded("tensor complex exceeds the bound " + std::to_string(config.dim_bound));
        }
        size *= l;
    }
    return size;
}

std::vector<std::size_t> decode_mixed(const std::vector<FactorData>& fs, std::size_t index)
{
    std::vector<std::size_t> slots(fs.size());
    for (std::size_t i = fs.size(); i-- > 0;) {
        slots[i] = index % fs[i].labels.size();
        index /= fs[i].labels.size();
    }
    return slots;
}

std::size_t encode_mixed(const std::vector<FactorData>& fs, std::span<const std::size_t> slots)
{
    std::size_t index = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        index = index * fs[i].labels.size() + slots[i];
    }
    return index;
}

} // namespace

Matrix tensor_differential(std::span<const FiniteComplex> ks, const OracleConfig& config)
{
    const auto fs = factor_data(ks);
    const std::size_t size = fs.empty() ? 1 : mixed_radix_size(fs, config);
    Matrix d(size, size);
    if (fs.empty()) {
        return d;
    }
    for (std::size_t e = 0; e < size; ++e) {
        const auto slots = decode_mixed(fs, e);
        std::int64_t preceding = 0; // p_1 + ... + p_{i-1}
        for (std::size_t i = 0; i < fs.size(); ++i) {
            const ComplexLabel& label = fs[i].labels[slots[i]];
            const Rational sign((preceding & 1) != 0 ? -1 : 1);
            const Matrix& di = fs[i].d.at(label.degree);
            const auto next = fs[i].offset.find(label.degree + 1);
            if (next != fs[i].offset.end()) {
                for (std::size_t b = 0; b < di.rows(); ++b) {
                    const Rational& c = di(b, label.index);
                    if (c.is_zero()) {
                        continue;
                    }
                    auto moved = slots;
                    moved[i] = next->second + b;
                    d(encode_mixed(fs, moved), e) += sign * c;
                }
            }
            preceding += label.degree;
        }
    }
    return d;
}

FiniteComplex tensor_complex(std::span<const FiniteComplex> ks, const OracleConfig& config)
{
    if (ks.empty()) {
        return FiniteComplex({{0, 1}}, {});
    }
    const auto fs = factor_data(ks);
    const std::size_t size = mixed_radix_size(fs, config);
    const Matrix flat = tensor_differential(ks, config);

    // Group basis elements by total degree, preserving lexicographic order.
    std::map<std::int64_t, std::vector<std::size_t>> by_degree;
    std::vector<std::size_t> position(size);
    std::vector<std::int64_t> degree_of(size);
    for (std::size_t e = 0; e < size; ++e) {
        const auto slots = decode_mixed(fs, e);
        std::int64_t total = 0;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            total += fs[i].labels[slots[i]].degree;
        }
        auto& bucket = by_degree[total];
        position[e] = bucket.size();
        degree_of[e] = total;
        bucket.push_back(e);
    }

    std::map<std::int64_t, std::size_t> dims;
    for (const auto& [p, elems] : by_degree) {
        dims[p] = elems.size();
    }
    std::map<std::int64_t, Matrix> ds;
    for (const auto& [p, elems] : by_degree) {
        const auto next = by_degree.find(p + 1);
        if (next == by_degree.end()) {
            continue;
        }
        Matrix block(next->second.size(), elems.size());
        for (std::size_t col = 0; col < elems.size(); ++col) {
            for (std::size_t row = 0; row < next->second.size(); ++row) {
                block(row, col) = flat(next->second[row], elems[col]);
            }
        }
        ds.emplace(p, std::move(block));
    }
    for (const auto& [p, m] : ds) {
        const auto next = ds.find(p + 1);
        if (next != ds.end() && !(next->second * m).is_zero()) {
            throw identity_violation("tensor complex differential does not square to zero in degree "
                                     + std::to_string(p));
        }
    }
    return FiniteComplex(std::move(dims), std::move(ds));
}

GradedSpace cohomology(const FiniteComplex& k)
{
    std::map<std::int64_t, std::size_t> h;
    for (const auto& [p, dim] : k.dims()) {
        const std::size_t out_rank = rank(k.differential(p));
        const std::size_t in_rank = k.dim(p - 1) == 0 ? 0 : rank(k.differential(p - 1));
        h[p] = dim - out_rank - in_rank;
    }
    return GradedSpace::from_degrees(h).normalized();
}

bool kunneth_check(std::span<const FiniteComplex> ks, const OracleConfig& config)
{
    const GradedSpace lhs = cohomology(tensor_complex(ks, config));
    std::map<std::int64_t, std::size_t> rhs{{0, 1}};
    for (const auto& k : ks) {
        std::map<std::int64_t, std::size_t> next;
        for (const auto& [d, dim] : cohomology(k).dims) {
            for (const auto& [p, acc] : rhs) {
                next[p + d.k] += acc * dim;
            }
        }
        rhs = std::move(next);
    }
    return lhs == GradedSpace::from_degrees(rhs);
}

bool chain_map_check(const FiniteComplex& k, std::size_t n, const Permutation& sigma, const OracleConfig& config)
{
    const std::vector<FiniteComplex> ks(n, k);
    const Matrix d = tensor_differential(ks, config);
    const auto a = tensor_action(k.space(), n, sigma, config);
    // (d a)(:, e) = sign_e d(:, target_e);  (a d)(target_r, e) = sign_r d(r, e).
    for (std::size_t e = 0; e < a.size(); ++e) {
        for (std::size_t r = 0; r < a.size(); ++r) {
            const Rational lhs = d(a.target[r], a.target[e]) * Rational(a.sign[e]);
            const Rational rhs = d(r, e) * Rational(a.sign[r]);
            if (lhs != rhs) {
                return false;
            }
        }
    }
    return true;
}

FiniteComplex random_complex(std::mt19937_64& rng, std::size_t max_dim, std::size_t max_degrees)
{
    std::uniform_int_distribution<std::int64_t> first_degree(-1, 1);
    const std::size_t most = std::max<std::size_t>(1, max_degrees);
    std::uniform_int_distribution<std::size_t> degree_count(std::min<std::size_t>(2, most), most);
    std::uniform_int_distribution<std::size_t> dim_pick(0, max_dim);
    std::uniform_int_distribution<std::int64_t> numerator(-2, 2);
    std::uniform_int_distribution<std::int64_t> denominator(1, 2);
    auto entry = [&] { return Rational(numerator(rng), denominator(rng)); };

    const std::int64_t lo = first_degree(rng);
    const std::size_t count = degree_count(rng);
    std::map<std::int64_t, std::size_t> dims;
    for (std::size_t i = 0; i < count; ++i) {
        dims[lo + static_cast<std::int64_t>(i)] = dim_pick(rng);
    }
    auto dim = [&](std::int64_t p) {
        const auto it = dims.find(p);
        return it == dims.end() ? std::size_t{0} : it->second;
    };

    std::map<std::int64_t, Matrix> ds;
    Matrix previous; // d(p-1)
    for (std::int64_t p = lo; p + 1 < lo + static_cast<std::int64_t>(count); ++p) {
        Matrix d(dim(p + 1), dim(p));
        if (p == lo || previous.empty()) {
            for (std::size_t r = 0; r < d.rows(); ++r) {
                for (std::size_t c = 0; c < d.cols(); ++c) {
                    d(r, c) = entry();
                }
            }
        } else {
            // Rows of d(p) are combinations of the left null vectors of
            // d(p-1), so d(p) d(p-1) = 0.
            const Matrix left_null = null_space(previous.transpose()); // dim(p) x nullity
            Matrix coeffs(d.rows(), left_null.cols());
            for (std::size_t r = 0; r < coeffs.rows(); ++r) {
                for (std::size_t c = 0; c < coeffs.cols(); ++c) {
                    coeffs(r, c) = entry();
                }
            }
            d = coeffs * left_null.transpose();
        }
        previous = d;
        ds.emplace(p, std::move(d));
    }
    return FiniteComplex(std::move(dims), std::move(ds));
}

// ---------------------------------------------------------------------------
// Exhaustive sign-identity sweeps

void CheckReport::record(bool ok, const std::string& description)
{
    ++cases;
    if (!ok && passed) {
        passed = false;
        counterexample = description;
    }
}

void CheckReport::merge(const CheckReport& other)
{
    cases += other.cases;
    if (!other.passed && passed) {
        passed = false;
        counterexample = other.counterexample;
    }
}

namespace {

std::vector<std::vector<std::int64_t>> parity_vectors(std::size_t n)
{
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::int64_t> p(n);
        for (std::size_t i = 0; i < n; ++i) {
            p[i] = static_cast<std::int64_t>((mask >> i) & 1U);
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::string vec_to_string(std::span<const std::int64_t> v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i == 0 ? "" : ",") << v[i];
    }
    os << ')';
    return os.str();
}

// Exponent parity of the rearrangement sign, i.e. nu on p∘sigma.
int rearrangement_parity(const Permutation& sigma, std::span<const std::int64_t> p)
{
    return nu_parity(sigma, compose_degrees(p, sigma));
}

} // namespace

CheckReport verify_cocycle(std::size_t n)
{
    CheckReport report{"cocycle", 0, true, {}};
    const auto perms = Permutation::all(n);
    const auto vectors = parity_vectors(n);
    for (const auto& sigma : perms) {
        for (const auto& tau : perms) {
            const Permutation st = sigma * tau;
            for (const auto& p : vectors) {
                const int lhs = rearrangement_parity(st, p);
                const int rhs = rearrangement_parity(sigma, p) ^ rearrangement_parity(tau, compose_degrees(p, sigma));
                report.record(lhs == rhs, "sigma=" + sigma.to_string() + " tau=" + tau.to_string()
                                              + " p=" + vec_to_string(p));
            }
        }
    }
    return report;
}

CheckReport verify_prop15_identity(std::size_t n)
{
    CheckReport report{"prop15-sign-cancellation", 0, true, {}};
    const auto vectors = parity_vectors(n);
    for (const auto& sigma : Permutation::all(n)) {
        for (const auto& p : vectors) {
            for (const auto& q : vectors) {
                std::vector<std::int64_t> pq(n);
                for (std::size_t i = 0; i < n; ++i) {
                    pq[i] = p[i] + q[i];
                }
                const int a = rearrangement_parity(sigma, pq);
                int b = 0;
                int d = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0; j < i; ++j) {
                        b ^= static_cast<int>((p[sigma(i)] * q[sigma(j)]) & 1);
                        d ^= static_cast<int>((p[i] * q[j]) & 1);
                    }
                }
                const int c = rearrangement_parity(sigma, q);
                const int e = rearrangement_parity(sigma, p);
                report.record((a ^ b ^ c) == (d ^ e), "sigma=" + sigma.to_string() + " p=" + vec_to_string(p)
                                                          + " q=" + vec_to_string(q));
            }
        }
    }
    return report;
}

CheckReport verify_action_composition(const GradedSpace& v, std::size_t n, const OracleConfig& config)
{
    CheckReport report{"action-composition", 0, true, {}};
    const auto perms = Permutation::all(n);
    std::vector<SignedPermutationMatrix> actions;
    for (const auto& sigma : perms) {
        actions.push_back(tensor_action(v, n, sigma, config));
    }
    for (std::size_t i = 0; i < perms.size(); ++i) {
        for (std::size_t j = 0; j < perms.size(); ++j) {
            const auto composed = tensor_action(v, n, perms[i] * perms[j], config);
            report.record(actions[j] * actions[i] == composed,
                          "sigma=" + perms[i].to_string() + " tau=" + perms[j].to_string());
        }
    }
    return report;
}

} // namespace symprod
