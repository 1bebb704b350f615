#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qmds/field.hpp"
#include "qmds/matrix.hpp"
#include "qmds/poly.hpp"

namespace qmds {

/// Thrown when an exhaustive check would exceed its enumeration cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kCodewordCap = 1'000'000;
inline constexpr std::uint64_t kMinorCap = 100'000;

/// GRS_k(a, v), or GRS_k(a, v, inf) when `extended` is set.
struct GrsCode {
    FieldPtr field;
    std::vector<Elem> points;       // a_1..a_n, pairwise distinct
    std::vector<Elem> multipliers;  // v_1..v_n, nonzero
    std::size_t dimension = 0;      // k
    bool extended = false;

    std::size_t n() const noexcept { return points.size(); }
    std::size_t length() const noexcept { return points.size() + (extended ? 1 : 0); }

    friend bool operator==(const GrsCode& a, const GrsCode& b) {
        return *a.field == *b.field && a.points == b.points && a.multipliers == b.multipliers &&
               a.dimension == b.dimension && a.extended == b.extended;
    }
};

/// Validates the GRS invariants; throws std::invalid_argument on violation.
GrsCode make_grs(FieldPtr field, std::vector<Elem> points, std::vector<Elem> multipliers,
                 std::size_t dimension, bool extended);

/// Code given by a full-row-rank generator matrix. k = 0 is allowed.
struct LinearCode {
    FieldPtr field;
    Matrix generator;

    std::size_t dimension() const noexcept { return generator.rows(); }
    std::size_t length() const noexcept { return generator.cols(); }
};

/// Throws std::invalid_argument if the generator is not of full row rank.
LinearCode make_linear_code(FieldPtr field, Matrix generator);

/// Rows v_i a_i^r for r < k; the extended code gets a last column e_k.
Matrix generator_matrix(const GrsCode& code);
LinearCode to_linear_code(const GrsCode& code);

/// (v_1 f(a_1), ..., v_n f(a_n)[, f_{k-1}]). Throws if deg f >= k.
std::vector<Elem> encode(const GrsCode& code, const Poly& f);

/// w_i = prod_{j != i} (a_i - a_j)^{-1}. Throws on repeated points.
std::vector<Elem> dual_weights(const FieldTower& F, std::span<const Elem> points);

/// Spanning rows (w_i a_i^j)_i, j < n - k, of GRS_k(a, 1)^perp.
/// Empty when k = n.
Matrix grs_dual_basis(const FieldTower& F, std::span<const Elem> points, std::size_t k);

/// Spanning rows (w_i a_i^j, -[j = n-k])_i, j <= n - k, of GRS_k(a, 1, inf)^perp.
Matrix extended_grs_dual_basis(const FieldTower& F, std::span<const Elem> points, std::size_t k);

enum class InnerProduct { euclidean, hermitian };

/// Dual code computed by Gaussian elimination. The Hermitian dual is the
/// coordinatewise Frobenius image of the Euclidean dual.
LinearCode nullspace_dual(const LinearCode& code, InnerProduct kind);

/// Whether `word` lies in the row space of `code`'s generator.
bool contains(const LinearCode& code, std::span<const Elem> word);

struct OrthogonalityWitness {
    std::size_t row_a;  // entry (row_a, row_b) of G^(q) G^T is nonzero
    std::size_t row_b;
    Elem value;
};

struct SelfOrthogonality {
    bool holds = true;
    std::optional<OrthogonalityWitness> witness;
};

/// Checks G^(q) G^T = 0 entry by entry, reporting the first nonzero entry.
SelfOrthogonality hermitian_self_orthogonal(const FieldTower& F, const Matrix& generator);
SelfOrthogonality hermitian_self_orthogonal(const LinearCode& code);

/// Whether encode(code, f) is Hermitian-orthogonal to the code, decided by
/// interpolating g with w_i g(a_i) = v_i^(q+1) f^q(a_i) and checking its degree.
/// Requires a non-extended code.
bool hermitian_membership(const GrsCode& code, const Poly& f);

/// Extended counterpart: deg g <= n - k and g_{n-k} = -(f_{k-1})^q.
bool extended_hermitian_membership(const GrsCode& code, const Poly& f);

/// Minimum Hamming weight over nonzero codewords, by enumeration.
/// Throws CapExceeded when Q^k > cap.
std::size_t min_distance_bruteforce(const LinearCode& code, std::uint64_t cap = kCodewordCap);

/// True iff every k-column submatrix of the generator is nonsingular.
/// Throws CapExceeded when C(N, k) > cap.
bool is_mds_by_rank(const LinearCode& code, std::uint64_t cap = kMinorCap);

/// Saturating binomial coefficient.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Unique interpolant of degree <= n - 1. Throws on repeated points or
/// mismatched lengths.
Poly lagrange_interpolate(const FieldTower& F, std::span<const Elem> points, std::span<const Elem> values);

}  // namespace qmds
