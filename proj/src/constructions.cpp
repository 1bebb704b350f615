#include "qmds/constructions.hpp"

#include <string>

namespace qmds {

namespace {

Elem minus_one_to(const FieldTower& F, std::uint64_t e) { return (e % 2 == 0) ? F.one() : F.neg(F.one()); }

// alpha^q - alpha
Elem trace_gap(const FieldTower& F, Elem alpha) { return F.sub(F.frobenius(alpha), alpha); }

void require_extended_range(unsigned q, unsigned t, std::size_t k) {
    if (t < 1 || t + 1 > q)
        throw std::invalid_argument("t = " + std::to_string(t) + " outside 1..q-1 = 1.." + std::to_string(q - 1));
    if (k < 1 || k > t + 1)
        throw std::invalid_argument("k = " + std::to_string(k) + " outside 1..t+1 = 1.." + std::to_string(t + 1));
    if (is_excluded_extended(q, t, k))
        throw ExcludedParameters("(p, t, d) = (2, q-1, q) is excluded: even q at length q^2+1 with distance q "
                                 "is not covered by the extended construction (open case)");
}

}  // namespace

std::string_view provenance_tag(Provenance p) noexcept {
    switch (p) {
        case Provenance::additive_coset: return "theorem1";
        case Provenance::extended_general: return "prop1-general";
        case Provenance::extended_special: return "prop1-special";
        case Provenance::external: return "external";
    }
    return "external";
}

std::optional<Provenance> parse_provenance(std::string_view tag) noexcept {
    for (auto p : {Provenance::additive_coset, Provenance::extended_general, Provenance::extended_special,
                   Provenance::external})
        if (provenance_tag(p) == tag) return p;
    return std::nullopt;
}

QuantumParams derive_quantum_params(const LinearCode& code, Provenance provenance, bool mds_by_construction) {
    const std::size_t k = code.dimension();
    const std::size_t N = code.length();
    const unsigned q = code.field->q();
    if (!hermitian_self_orthogonal(code).holds)
        throw std::invalid_argument("input code is not Hermitian self-orthogonal");
    if (k == 0) return QuantumParams{N, static_cast<long>(N), 1, q, provenance, true};

    bool mds = false;
    try {
        mds = min_distance_bruteforce(code) == N - k + 1;
    } catch (const CapExceeded&) {
        try {
            mds = is_mds_by_rank(code);
        } catch (const CapExceeded&) {
            if (!mds_by_construction)
                throw std::invalid_argument("MDS property cannot be checked within the enumeration caps");
            mds = true;
        }
    }
    if (!mds) throw std::invalid_argument("input code is not MDS");
    return QuantumParams{N, static_cast<long>(N) - 2 * static_cast<long>(k), k + 1, q, provenance, false};
}

// --- additive ---------------------------------------------------------------

AdditiveCosetConfig make_additive_config(FieldPtr field, unsigned t) {
    const unsigned q = field->q();
    if (t < 1 || t > q)
        throw std::invalid_argument("t = " + std::to_string(t) + " outside 1..q = 1.." + std::to_string(q));
    const Elem alpha = field->generator();
    auto betas = field->subfield_elements();
    return AdditiveCosetConfig{std::move(field), t, alpha, std::move(betas)};
}

std::vector<Elem> additive_points(const AdditiveCosetConfig& cfg) {
    const FieldTower& F = *cfg.field;
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(cfg.t) * F.q());
    for (unsigned i = 0; i < cfg.t; ++i) {
        const Elem shift = F.mul(cfg.betas[i], cfg.alpha);
        for (Elem h : cfg.betas) out.push_back(F.add(h, shift));
    }
    return out;
}

std::optional<std::size_t> additive_coset_of(const AdditiveCosetConfig& cfg, Elem b) {
    const FieldTower& F = *cfg.field;
    for (std::size_t s = 0; s < cfg.t; ++s)
        if (F.in_subfield(F.sub(b, F.mul(cfg.betas[s], cfg.alpha)))) return s;
    return std::nullopt;
}

Elem translate_product(const AdditiveCosetConfig& cfg, Elem tau) {
    const FieldTower& F = *cfg.field;
    if (!F.in_subfield(tau)) throw std::invalid_argument("tau must lie in GF(q)");
    return F.mul(tau, trace_gap(F, cfg.alpha));
}

Elem coset_self_product(const AdditiveCosetConfig& cfg, Elem b) {
    if (!additive_coset_of(cfg, b)) throw std::invalid_argument("b is not an evaluation point");
    return minus_one_to(*cfg.field, cfg.field->q());
}

Elem cross_coset_product(const AdditiveCosetConfig& cfg, Elem b, std::size_t j) {
    const FieldTower& F = *cfg.field;
    const auto s = additive_coset_of(cfg, b);
    if (!s) throw std::invalid_argument("b is not an evaluation point");
    if (j >= cfg.t || j == *s) throw std::invalid_argument("coset index must differ from b's coset and be < t");
    return F.mul(F.sub(cfg.betas[*s], cfg.betas[j]), trace_gap(F, cfg.alpha));
}

Elem additive_node_product(const AdditiveCosetConfig& cfg, std::size_t i) {
    const FieldTower& F = *cfg.field;
    const std::size_t n = static_cast<std::size_t>(cfg.t) * F.q();
    if (i >= n) throw std::invalid_argument("point index out of range");
    const std::size_t s = i / F.q();
    Elem r = F.mul(minus_one_to(F, F.q()), F.pow(trace_gap(F, cfg.alpha), cfg.t - 1));
    for (std::size_t j = 0; j < cfg.t; ++j)
        if (j != s) r = F.mul(r, F.sub(cfg.betas[s], cfg.betas[j]));
    return r;
}

std::size_t additive_max_dimension(unsigned q, unsigned t) noexcept {
    return (static_cast<std::size_t>(t) * q + q - 1) / (q + 1);
}

ConstructionResult construct_additive(FieldPtr field, unsigned t, std::size_t k) {
    const FieldTower& F = *field;
    const auto cfg = make_additive_config(field, t);
    const std::size_t kmax = additive_max_dimension(F.q(), t);
    if (k < 1 || k > kmax)
        throw std::invalid_argument("k = " + std::to_string(k) + " outside 1..floor((tq+q-1)/(q+1)) = 1.." +
                                    std::to_string(kmax));
    auto points = additive_points(cfg);
    const Elem lift = F.pow(trace_gap(F, cfg.alpha), t - 1);
    std::vector<Elem> w(points.size());
    std::vector<Elem> v(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        w[i] = F.inv(additive_node_product(cfg, i));
        v[i] = F.solve_norm(F.mul(w[i], lift));
    }
    const std::size_t n = points.size();
    ConstructionResult out{make_grs(field, std::move(points), std::move(v), k, false),
                           QuantumParams{n, static_cast<long>(n) - 2 * static_cast<long>(k), k + 1, F.q(),
                                         Provenance::additive_coset, false},
                           Witnesses{std::move(w), Poly{}, {}}, t};
    return out;
}

ConstructionResult construct_additive(unsigned q, unsigned t, std::size_t k, std::size_t element_bound) {
    return construct_additive(make_field_for_q(q, element_bound), t, k);
}

// --- multiplicative ---------------------------------------------------------

MultiplicativeCosetConfig make_multiplicative_config(FieldPtr field, unsigned t) {
    const unsigned q = field->q();
    if (t < 1 || t + 1 > q)
        throw std::invalid_argument("t = " + std::to_string(t) + " outside 1..q-1 = 1.." + std::to_string(q - 1));
    std::vector<Elem> betas(t);
    for (unsigned s = 0; s < t; ++s) betas[s] = field->exp(s);
    const Elem theta = field->unit_circle_generator();
    return MultiplicativeCosetConfig{std::move(field), t, theta, std::move(betas)};
}

std::vector<Elem> multiplicative_points(const MultiplicativeCosetConfig& cfg) {
    const FieldTower& F = *cfg.field;
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(cfg.t) * (F.q() + 1) + 1);
    for (Elem beta : cfg.betas) {
        Elem x = beta;
        for (unsigned l = 0; l <= F.q(); ++l) {
            out.push_back(x);
            x = F.mul(x, cfg.theta);
        }
    }
    out.push_back(F.zero());
    return out;
}

Elem zero_node_product(const MultiplicativeCosetConfig& cfg) {
    const FieldTower& F = *cfg.field;
    const std::uint64_t n = static_cast<std::uint64_t>(cfg.t) * (F.q() + 1) + 1;
    Elem r = minus_one_to(F, n - 1 + static_cast<std::uint64_t>(F.q()) * cfg.t);
    for (Elem beta : cfg.betas) r = F.mul(r, F.norm(beta));
    return r;
}

Elem coset_node_product(const MultiplicativeCosetConfig& cfg, std::size_t i) {
    const FieldTower& F = *cfg.field;
    const std::size_t per = F.q() + 1;
    if (i >= per * cfg.t) throw std::invalid_argument("index must name a nonzero point; use zero_node_product");
    const std::size_t r = i / per;
    const Elem a = F.mul(cfg.betas[r], F.pow(cfg.theta, static_cast<std::int64_t>(i % per)));
    Elem out = F.norm(a);
    for (std::size_t s = 0; s < cfg.t; ++s)
        if (s != r) out = F.mul(out, F.sub(F.norm(cfg.betas[r]), F.norm(cfg.betas[s])));
    return out;
}

std::vector<Elem> gamma_vector(const MultiplicativeCosetConfig& cfg) {
    const FieldTower& F = *cfg.field;
    const std::size_t nonzero = static_cast<std::size_t>(cfg.t) * (F.q() + 1);
    std::vector<Elem> gamma(nonzero + 1);
    for (std::size_t i = 0; i < nonzero; ++i) gamma[i] = F.solve_norm(F.neg(F.inv(coset_node_product(cfg, i))));
    gamma[nonzero] = F.solve_norm(F.neg(F.inv(zero_node_product(cfg))));
    return gamma;
}

bool is_excluded_extended(unsigned q, unsigned t, std::size_t k) noexcept {
    return q % 2 == 0 && t + 1 == q && k + 1 == q;
}

Poly choose_multiplier_polynomial(const FieldTower& F, unsigned t, std::size_t k, std::span<const Elem> points) {
    const unsigned q = F.q();
    require_extended_range(q, t, k);
    const std::size_t ell = t + 1 - k;
    Poly m;
    if (t + 1 == q && k + 1 == q) {
        // x^q + x - pi with pi outside GF(q); a^q + a always lies in GF(q).
        const Elem pi = F.generator();
        std::vector<Elem> c(q + 1);
        c[0] = F.neg(pi);
        c[1] = F.one();
        c[q] = F.add(c[q], F.one());
        m = Poly(std::move(c));
    } else if (ell >= 2) {
        m = root_free_monic(F, ell);
    } else if (ell == 1) {
        std::vector<bool> used(F.size(), false);
        for (Elem a : points) used[a.code] = true;
        std::uint32_t c = 0;
        while (c < used.size() && used[c]) ++c;
        if (c == used.size()) throw std::logic_error("evaluation points exhaust the field");
        m = Poly({F.neg(Elem{c}), F.one()});
    } else {
        m = Poly::constant(F.one());
    }
    for (Elem a : points)
        if (eval(F, m, a).is_zero()) throw std::logic_error("multiplier polynomial vanishes at a point");
    return m;
}

ConstructionResult construct_extended(FieldPtr field, unsigned t, std::size_t k) {
    const FieldTower& F = *field;
    require_extended_range(F.q(), t, k);
    const auto cfg = make_multiplicative_config(field, t);
    auto points = multiplicative_points(cfg);
    Poly m = choose_multiplier_polynomial(F, t, k, points);
    auto gamma = gamma_vector(cfg);

    const bool special = (t + 1 == F.q() && k + 1 == F.q());
    const Elem scale = special ? F.solve_norm(F.inv(F.from_int(2))) : F.one();

    const std::size_t n = points.size();
    std::vector<Elem> w(n);
    std::vector<Elem> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = F.inv(i + 1 < n ? coset_node_product(cfg, i) : zero_node_product(cfg));
        v[i] = F.mul(scale, F.mul(eval(F, m, points[i]), gamma[i]));
    }
    const std::size_t N = n + 1;
    ConstructionResult out{
        make_grs(field, std::move(points), std::move(v), k, true),
        QuantumParams{N, static_cast<long>(N) - 2 * static_cast<long>(k), k + 1, F.q(),
                      special ? Provenance::extended_special : Provenance::extended_general, false},
        Witnesses{std::move(w), std::move(m), std::move(gamma)}, t};
    return out;
}

ConstructionResult construct_extended(unsigned q, unsigned t, std::size_t k, std::size_t element_bound) {
    return construct_extended(make_field_for_q(q, element_bound), t, k);
}

ConstructionResult construct_extended_for_distance(unsigned q, unsigned t, std::size_t d,
                                                   std::size_t element_bound) {
    if (!split_prime_power(q)) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    if (d < 2 || d > static_cast<std::size_t>(t) + 2)
        throw std::invalid_argument("d = " + std::to_string(d) + " outside 2..t+2");
    require_extended_range(q, t, d - 1);
    return construct_extended(q, t, d - 1, element_bound);
}

QuantumParams extended_family_params(unsigned q, unsigned t, std::size_t d, std::size_t element_bound) {
    const auto result = construct_extended_for_distance(q, t, d, element_bound);
    return derive_quantum_params(to_linear_code(result.code), result.quantum.provenance, true);
}

}  // namespace qmds
