#include "qmds/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmds {

Poly Poly::monomial(std::size_t deg, Elem c) {
    std::vector<Elem> v(deg + 1);
    v[deg] = c;
    return Poly(std::move(v));
}

Poly add(const FieldTower& F, const Poly& f, const Poly& g) {
    std::vector<Elem> out(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(f.coeff(i), g.coeff(i));
    return Poly(std::move(out));
}

Poly sub(const FieldTower& F, const Poly& f, const Poly& g) {
    std::vector<Elem> out(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(f.coeff(i), g.coeff(i));
    return Poly(std::move(out));
}

Poly scale(const FieldTower& F, const Poly& f, Elem c) {
    std::vector<Elem> out(f.coeffs().begin(), f.coeffs().end());
    for (auto& x : out) x = F.mul(x, c);
    return Poly(std::move(out));
}

Poly mul(const FieldTower& F, const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    const auto a = f.coeffs();
    const auto b = g.coeffs();
    std::vector<Elem> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
    return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const FieldTower& F, const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    if (f.degree() < g.degree()) return {Poly{}, f};
    std::vector<Elem> r(f.coeffs().begin(), f.coeffs().end());
    const auto gc = g.coeffs();
    const std::size_t dg = gc.size() - 1;
    const Elem lead_inv = F.inv(gc.back());
    std::vector<Elem> quot(r.size() - dg);
    for (std::size_t i = r.size(); i-- > dg;) {
        const Elem c = F.mul(r[i], lead_inv);
        quot[i - dg] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j <= dg; ++j) r[i - dg + j] = F.sub(r[i - dg + j], F.mul(c, gc[j]));
    }
    r.resize(dg);
    return {Poly(std::move(quot)), Poly(std::move(r))};
}

Poly mod(const FieldTower& F, const Poly& f, const Poly& g) { return divmod(F, f, g).second; }

Poly gcd(const FieldTower& F, Poly f, Poly g) {
    while (!g.is_zero()) {
        Poly r = mod(F, f, g);
        f = std::move(g);
        g = std::move(r);
    }
    if (f.is_zero()) return f;
    return scale(F, f, F.inv(f.leading()));
}

Poly powmod(const FieldTower& F, const Poly& base, std::uint64_t n, const Poly& m) {
    Poly result = mod(F, Poly::constant(F.one()), m);
    Poly b = mod(F, base, m);
    while (n > 0) {
        if (n & 1) result = mod(F, mul(F, result, b), m);
        b = mod(F, mul(F, b, b), m);
        n >>= 1;
    }
    return result;
}

Elem eval(const FieldTower& F, const Poly& f, Elem x) {
    Elem acc{};
    const auto c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
    return acc;
}

Poly frobenius_poly(const FieldTower& F, const Poly& f) {
    if (f.is_zero()) return {};
    const auto c = f.coeffs();
    const std::size_t q = F.q();
    std::vector<Elem> out((c.size() - 1) * q + 1);
    for (std::size_t i = 0; i < c.size(); ++i) out[i * q] = F.frobenius(c[i]);
    return Poly(std::move(out));
}

Poly from_roots(const FieldTower& F, std::span<const Elem> roots) {
    Poly out = Poly::constant(F.one());
    for (Elem r : roots) out = mul(F, out, Poly({F.neg(r), F.one()}));
    return out;
}

bool is_irreducible(const FieldTower& F, const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const Poly x = Poly::monomial(1, F.one());
    Poly h = x;
    for (long i = 1; 2 * i <= f.degree(); ++i) {
        h = powmod(F, h, F.size(), f);  // x^(Q^i) mod f
        const Poly g = gcd(F, f, sub(F, h, x));
        if (g.degree() != 0) return false;
    }
    return true;
}

Poly root_free_monic(const FieldTower& F, std::size_t degree) {
    if (degree < 2) throw std::invalid_argument("root-free monic polynomials need degree >= 2");
    const std::uint32_t Q = static_cast<std::uint32_t>(F.size());
    std::vector<Elem> c(degree + 1);
    c[degree] = F.one();
    // Odometer over the lower coefficients, constant term fastest.
    for (;;) {
        Poly cand(c);
        if (is_irreducible(F, cand)) return cand;
        std::size_t i = 0;
        while (i < degree && c[i].code + 1 == Q) c[i++] = Elem{0};
        if (i == degree) break;
        c[i].code += 1;
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace qmds
