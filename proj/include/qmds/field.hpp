#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace qmds {

/// Element of GF(q^2) in canonical encoding: 0 is the zero element and
/// 1 + j stands for w^j, where w is the tower's fixed primitive element.
struct Elem {
    std::uint32_t code = 0;

    constexpr bool is_zero() const noexcept { return code == 0; }
    friend constexpr bool operator==(Elem, Elem) noexcept = default;
    friend constexpr auto operator<=>(Elem, Elem) noexcept = default;
};

inline constexpr std::size_t kDefaultElementBound = std::size_t{1} << 14;

bool is_prime(std::uint64_t n) noexcept;

/// Splits q = p^e. Returns nullopt when q is not a prime power.
std::optional<std::pair<unsigned, unsigned>> split_prime_power(std::uint64_t q) noexcept;

/// GF(q) inside GF(q^2), q = p^e.
///
/// GF(q^2) is built as GF(p)[x]/(modulus) with the lexicographically smallest
/// monic irreducible modulus of degree 2e (constant coefficient varying
/// fastest). The subfield GF(q) is not modelled separately; it is the fixed
/// field of x -> x^q. All arithmetic runs through discrete-log and Zech
/// tables built once at construction; the object is immutable afterwards.
class FieldTower {
public:
    FieldTower(unsigned p, unsigned e, std::size_t element_bound = kDefaultElementBound);

    unsigned characteristic() const noexcept { return p_; }
    unsigned subfield_degree() const noexcept { return e_; }
    unsigned q() const noexcept { return q_; }
    /// Number of elements of GF(q^2).
    std::size_t size() const noexcept { return order_ + 1; }
    /// Modulus coefficients over GF(p), ascending degree, monic.
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

    Elem zero() const noexcept { return Elem{0}; }
    Elem one() const noexcept { return Elem{1}; }
    Elem generator() const noexcept { return Elem{2}; }

    /// w^j for any integer j.
    Elem exp(std::int64_t j) const noexcept;
    /// Discrete log base w. Throws std::domain_error on zero.
    std::uint32_t log(Elem x) const;
    /// Image of the integer c under Z -> GF(p) -> GF(q^2).
    Elem from_int(std::int64_t c) const noexcept;

    bool contains(Elem x) const noexcept { return x.code <= order_; }

    Elem add(Elem x, Elem y) const noexcept;
    Elem neg(Elem x) const noexcept;
    Elem sub(Elem x, Elem y) const noexcept { return add(x, neg(y)); }
    Elem mul(Elem x, Elem y) const noexcept;
    /// Throws std::domain_error on zero.
    Elem inv(Elem x) const;
    Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
    /// x^n; negative n requires x != 0. 0^0 = 1.
    Elem pow(Elem x, std::int64_t n) const;

    /// x -> x^q.
    Elem frobenius(Elem x) const noexcept;
    /// x -> x^(q+1), which lands in GF(q).
    Elem norm(Elem x) const noexcept;
    bool in_subfield(Elem x) const noexcept { return frobenius(x) == x; }

    /// Smallest-log v with v^(q+1) = w. Requires w in GF(q)^*; throws
    /// std::invalid_argument otherwise.
    Elem solve_norm(Elem w) const;
    /// theta = w^(q-1), a primitive (q+1)-th root of unity.
    Elem unit_circle_generator() const noexcept { return exp(static_cast<std::int64_t>(q_) - 1); }

    /// All q^2 elements in canonical encoding order.
    std::vector<Elem> elements() const;
    /// GF(q) as 0, then ascending powers of norm(w).
    std::vector<Elem> subfield_elements() const;

    /// Coordinates over GF(p) in the polynomial basis, packed base p with
    /// the constant coefficient least significant.
    std::uint32_t to_vector(Elem x) const noexcept { return vec_of_[x.code]; }
    Elem from_vector(std::uint32_t v) const { return Elem{code_of_.at(v)}; }

    friend bool operator==(const FieldTower& a, const FieldTower& b) noexcept {
        return a.p_ == b.p_ && a.e_ == b.e_;
    }

private:
    unsigned p_;
    unsigned e_;
    unsigned q_;
    std::uint32_t order_;  // q^2 - 1
    std::vector<unsigned> modulus_;
    std::vector<std::uint32_t> vec_of_;      // code -> packed vector
    std::vector<std::uint32_t> code_of_;     // packed vector -> code
    std::vector<std::uint32_t> one_plus_;    // j -> code of 1 + w^j
    std::uint32_t minus_one_log_;
};

using FieldPtr = std::shared_ptr<const FieldTower>;

FieldPtr make_field(unsigned p, unsigned e, std::size_t element_bound = kDefaultElementBound);
/// Field GF(q^2) for a prime power q. Throws std::invalid_argument otherwise.
FieldPtr make_field_for_q(unsigned q, std::size_t element_bound = kDefaultElementBound);

}  // namespace qmds
