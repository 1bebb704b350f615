#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "qmds/grs.hpp"

namespace qmds {

/// Parameters that are well-formed but outside what the constructions cover:
/// the extended family at (p, t, k) = (2, q-1, q-1).
class ExcludedParameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Provenance {
    additive_coset,    // length tq GRS family
    extended_general,  // length t(q+1)+2, generic multiplier polynomial
    extended_special,  // length q^2+1, k = q-1, odd q
    external,          // code supplied from outside
};

/// Wire tag: "theorem1", "prop1-general", "prop1-special", "external".
std::string_view provenance_tag(Provenance p) noexcept;
std::optional<Provenance> parse_provenance(std::string_view tag) noexcept;

/// [[n, k, d]]_q.
struct QuantumParams {
    std::size_t n = 0;
    long k = 0;
    std::size_t d = 0;
    unsigned q = 0;
    Provenance provenance = Provenance::external;
    bool degenerate = false;  // derived from a zero-dimensional classical code

    bool singleton_equality() const noexcept {
        return k == static_cast<long>(n) - 2 * static_cast<long>(d) + 2;
    }
    friend bool operator==(const QuantumParams&, const QuantumParams&) = default;
};

/// [N, k] Hermitian self-orthogonal MDS code over GF(q^2) -> [[N, N-2k, k+1]]_q.
/// Self-orthogonality is always re-checked. MDS is checked by enumeration or
/// by k-column ranks when within caps; above both caps the caller must pass
/// mds_by_construction. Throws std::invalid_argument when a check fails.
QuantumParams derive_quantum_params(const LinearCode& code, Provenance provenance,
                                    bool mds_by_construction = false);

struct Witnesses {
    std::vector<Elem> w;      // dual weights from the closed forms
    Poly m;                   // multiplier polynomial (extended family)
    std::vector<Elem> gamma;  // norm roots of -w (extended family)
};

struct ConstructionResult {
    GrsCode code;
    QuantumParams quantum;
    Witnesses witnesses;
    unsigned t = 0;
};

// --- Additive cosets F_q + beta_i alpha, length tq -----------------------

struct AdditiveCosetConfig {
    FieldPtr field;
    unsigned t = 0;
    Elem alpha;               // outside GF(q)
    std::vector<Elem> betas;  // GF(q) in canonical order
};

/// alpha = w, betas = canonical GF(q). Throws unless 1 <= t <= q.
AdditiveCosetConfig make_additive_config(FieldPtr field, unsigned t);

/// Cosets 1..t in order, each listed as beta_i alpha + (canonical GF(q)).
std::vector<Elem> additive_points(const AdditiveCosetConfig& cfg);

/// Index (0-based) of the coset holding b, or nullopt if b is not a point.
std::optional<std::size_t> additive_coset_of(const AdditiveCosetConfig& cfg, Elem b);

/// prod_{h in GF(q)} (tau alpha - h) = tau (alpha^q - alpha). Requires tau in GF(q).
Elem translate_product(const AdditiveCosetConfig& cfg, Elem tau);
/// prod_{h in F_s, h != b} (b - h) = (-1)^q, for b a point of the configuration.
Elem coset_self_product(const AdditiveCosetConfig& cfg, Elem b);
/// prod_{h in F_j} (b - h) = (beta_s - beta_j)(alpha^q - alpha), b in F_s, j != s.
Elem cross_coset_product(const AdditiveCosetConfig& cfg, Elem b, std::size_t j);
/// prod_{j != i} (a_i - a_j) in closed form; i is 0-based.
Elem additive_node_product(const AdditiveCosetConfig& cfg, std::size_t i);

/// Largest k for which GRS_k over the additive points is Hermitian
/// self-orthogonal by the construction: floor((tq + q - 1) / (q + 1)).
std::size_t additive_max_dimension(unsigned q, unsigned t) noexcept;

/// GRS_k(a, v) on the additive points with v_i^(q+1) = w_i (alpha^q - alpha)^(t-1).
ConstructionResult construct_additive(FieldPtr field, unsigned t, std::size_t k);
ConstructionResult construct_additive(unsigned q, unsigned t, std::size_t k,
                                      std::size_t element_bound = kDefaultElementBound);

// --- Multiplicative cosets beta_s <theta> plus zero, length t(q+1)+2 ------

struct MultiplicativeCosetConfig {
    FieldPtr field;
    unsigned t = 0;
    Elem theta;               // primitive (q+1)-th root of unity
    std::vector<Elem> betas;  // beta_s = w^(s-1)
};

/// Throws unless 1 <= t <= q-1.
MultiplicativeCosetConfig make_multiplicative_config(FieldPtr field, unsigned t);

/// beta_1 theta^0..theta^q, ..., beta_t theta^0..theta^q, then 0.
std::vector<Elem> multiplicative_points(const MultiplicativeCosetConfig& cfg);

/// prod_{i < n} (0 - a_i) = (-1)^(n-1+qt) prod_s beta_s^(q+1).
Elem zero_node_product(const MultiplicativeCosetConfig& cfg);
/// prod_{j != i} (a_i - a_j) = a_i^(q+1) prod_{s != r} (beta_r^(q+1) - beta_s^(q+1))
/// for a nonzero point a_i in coset r. i is 0-based; the zero point is rejected.
Elem coset_node_product(const MultiplicativeCosetConfig& cfg, std::size_t i);

/// gamma_i with gamma_i^(q+1) = -w_i, w taken from the closed forms.
std::vector<Elem> gamma_vector(const MultiplicativeCosetConfig& cfg);

/// Monic m with m(a) != 0 on every point, degree t + 1 - k; for
/// (t, k) = (q-1, q-1) and odd p, m = x^q + x - w. Throws ExcludedParameters
/// for (2, q-1, q-1) and std::invalid_argument for out-of-range input.
Poly choose_multiplier_polynomial(const FieldTower& F, unsigned t, std::size_t k,
                                  std::span<const Elem> points);

/// GRS_k(a, v, inf) on the multiplicative points with v_i = m(a_i) gamma_i,
/// scaled by an element of norm 1/2 in the special case.
ConstructionResult construct_extended(FieldPtr field, unsigned t, std::size_t k);
ConstructionResult construct_extended(unsigned q, unsigned t, std::size_t k,
                                      std::size_t element_bound = kDefaultElementBound);

/// Validates (q, t, d) for the extended family and builds the code with k = d - 1.
ConstructionResult construct_extended_for_distance(unsigned q, unsigned t, std::size_t d,
                                                   std::size_t element_bound = kDefaultElementBound);
/// [[t(q+1)+2, t(q+1)-2d+4, d]]_q, backed by an actual construction.
QuantumParams extended_family_params(unsigned q, unsigned t, std::size_t d,
                                     std::size_t element_bound = kDefaultElementBound);

/// Whether (q, t, k) is the (p, t, k) = (2, q-1, q-1) hole of the extended family.
bool is_excluded_extended(unsigned q, unsigned t, std::size_t k) noexcept;

}  // namespace qmds
