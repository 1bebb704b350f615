#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qmds/field.hpp"

namespace qmds {

/// Polynomial over GF(q^2), coefficient i multiplies x^i. Always stored
/// without trailing zeros; the zero polynomial has no coefficients.
class Poly {
public:
    /// Degree reported for the zero polynomial.
    static constexpr long kZeroDegree = -1;

    Poly() = default;
    explicit Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly constant(Elem c) { return Poly({c}); }
    static Poly monomial(std::size_t deg, Elem c);

    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// Coefficient of x^i; zero beyond the degree.
    Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Elem{}; }
    Elem leading() const noexcept { return c_.empty() ? Elem{} : c_.back(); }
    std::span<const Elem> coeffs() const noexcept { return c_; }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Elem> c_;
};

Poly add(const FieldTower& F, const Poly& f, const Poly& g);
Poly sub(const FieldTower& F, const Poly& f, const Poly& g);
Poly scale(const FieldTower& F, const Poly& f, Elem c);
Poly mul(const FieldTower& F, const Poly& f, const Poly& g);
/// Quotient and remainder; throws std::domain_error when g is zero.
std::pair<Poly, Poly> divmod(const FieldTower& F, const Poly& f, const Poly& g);
Poly mod(const FieldTower& F, const Poly& f, const Poly& g);
/// Monic gcd (zero if both inputs are zero).
Poly gcd(const FieldTower& F, Poly f, Poly g);
/// base^n mod m.
Poly powmod(const FieldTower& F, const Poly& base, std::uint64_t n, const Poly& m);

Elem eval(const FieldTower& F, const Poly& f, Elem x);

/// The polynomial f(x)^q: coefficient f_i^q sits at exponent i*q.
Poly frobenius_poly(const FieldTower& F, const Poly& f);

/// prod_i (x - r_i).
Poly from_roots(const FieldTower& F, std::span<const Elem> roots);

/// Irreducibility over GF(q^2) (Ben-Or test). Constants are not irreducible.
bool is_irreducible(const FieldTower& F, const Poly& f);

/// Monic polynomial of degree `degree` >= 2 with no root in GF(q^2): the
/// first irreducible one when monic polynomials are enumerated with the
/// constant coefficient varying fastest over canonical codes.
/// Throws std::invalid_argument for degree < 2.
Poly root_free_monic(const FieldTower& F, std::size_t degree);

}  // namespace qmds
