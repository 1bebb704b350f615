#include "qmds/field.hpp"

#include <stdexcept>
#include <string>

namespace qmds {

namespace {

// Dense polynomials over GF(p), ascending coefficients. Only used while the
// tower is being built, so nothing here is tuned.
using PrimePoly = std::vector<unsigned>;

void trim(PrimePoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PrimePoly unpack(std::uint32_t packed, unsigned p, unsigned len) {
    PrimePoly f(len);
    for (unsigned i = 0; i < len; ++i) {
        f[i] = packed % p;
        packed /= p;
    }
    return f;
}

std::uint32_t pack(const PrimePoly& f, unsigned p) {
    std::uint32_t v = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) v = v * p + *it;
    return v;
}

unsigned inv_mod(unsigned a, unsigned p) {
    unsigned r = 1;
    for (unsigned i = 0; i + 2 < p; ++i) r = r * a % p;  // a^(p-2)
    return r;
}

// Remainder of f modulo a nonzero polynomial g.
PrimePoly rem(PrimePoly f, PrimePoly g, unsigned p) {
    trim(f);
    trim(g);
    const unsigned lead_inv = inv_mod(g.back(), p);
    while (f.size() >= g.size()) {
        const unsigned c = f.back() * lead_inv % p;
        const std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i)
            f[shift + i] = (f[shift + i] + (p - c) * g[i]) % p;
        trim(f);
    }
    return f;
}

PrimePoly mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m, unsigned p) {
    PrimePoly prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    return rem(std::move(prod), m, p);
}

bool is_one(const PrimePoly& f) { return f.size() == 1 && f[0] == 1; }

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible_over_prime(const PrimePoly& m, unsigned p) {
    const unsigned deg = static_cast<unsigned>(m.size() - 1);
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        std::uint32_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint32_t idx = 0; idx < count; ++idx) {
            PrimePoly g = unpack(idx, p, d);
            g.push_back(1);
            if (rem(m, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

PrimePoly powmod(PrimePoly base, std::uint64_t n, const PrimePoly& m, unsigned p) {
    PrimePoly result{1};
    base = rem(std::move(base), m, p);
    while (n > 0) {
        if (n & 1) result = mulmod(result, base, m, p);
        base = mulmod(base, base, m, p);
        n >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::pair<unsigned, unsigned>> split_prime_power(std::uint64_t q) noexcept {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    unsigned e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    if (q != 1) return std::nullopt;
    return std::pair{static_cast<unsigned>(p), e};
}

FieldTower::FieldTower(unsigned p, unsigned e, std::size_t element_bound) : p_(p), e_(e) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (e == 0) throw std::invalid_argument("extension degree must be at least 1");
    std::uint64_t size = 1;
    for (unsigned i = 0; i < 2 * e; ++i) {
        size *= p;
        if (size > element_bound)
            throw std::invalid_argument("GF(" + std::to_string(p) + "^" + std::to_string(2 * e) +
                                        ") exceeds the element bound " + std::to_string(element_bound));
    }
    q_ = 1;
    for (unsigned i = 0; i < e; ++i) q_ *= p;
    order_ = static_cast<std::uint32_t>(size - 1);
    const unsigned deg = 2 * e;

    // Smallest monic irreducible modulus of degree 2e.
    for (std::uint32_t idx = 0;; ++idx) {
        PrimePoly m = unpack(idx, p, deg);
        m.push_back(1);
        if (is_irreducible_over_prime(m, p)) {
            modulus_ = std::move(m);
            break;
        }
    }

    // Smallest primitive element in packed-vector order.
    const auto factors = prime_factors(order_);
    std::uint32_t gen_packed = 0;
    for (std::uint32_t v = 2; v < size; ++v) {
        PrimePoly g = unpack(v, p, deg);
        trim(g);
        bool primitive = true;
        for (auto r : factors) {
            if (is_one(powmod(g, order_ / r, modulus_, p))) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen_packed = v;
            break;
        }
    }
    if (gen_packed == 0) throw std::logic_error("no primitive element found");

    vec_of_.assign(size, 0);
    code_of_.assign(size, 0);
    PrimePoly gen = unpack(gen_packed, p, deg);
    trim(gen);
    PrimePoly cur{1};
    for (std::uint32_t j = 0; j < order_; ++j) {
        const std::uint32_t packed = pack(cur, p);
        if (j > 0 && packed == 1) throw std::logic_error("generator order check failed");
        vec_of_[j + 1] = packed;
        code_of_[packed] = j + 1;
        cur = mulmod(cur, gen, modulus_, p);
    }
    if (!is_one(cur)) throw std::logic_error("generator order check failed");

    // Zech table: one_plus_[j] = code(1 + w^j), with the constant digit bumped.
    one_plus_.assign(order_, 0);
    for (std::uint32_t j = 0; j < order_; ++j) {
        std::uint32_t packed = vec_of_[j + 1];
        const std::uint32_t low = packed % p;
        packed = packed - low + (low + 1) % p;
        one_plus_[j] = code_of_[packed];
    }
    minus_one_log_ = (p == 2) ? 0 : order_ / 2;
}

Elem FieldTower::exp(std::int64_t j) const noexcept {
    std::int64_t r = j % static_cast<std::int64_t>(order_);
    if (r < 0) r += order_;
    return Elem{static_cast<std::uint32_t>(r) + 1};
}

std::uint32_t FieldTower::log(Elem x) const {
    if (x.is_zero()) throw std::domain_error("discrete log of zero");
    return x.code - 1;
}

Elem FieldTower::from_int(std::int64_t c) const noexcept {
    std::int64_t r = c % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Elem{code_of_[static_cast<std::uint32_t>(r)]};
}

Elem FieldTower::add(Elem x, Elem y) const noexcept {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    const std::uint32_t lx = x.code - 1;
    const std::uint32_t ly = y.code - 1;
    const std::uint32_t d = ly >= lx ? ly - lx : ly + order_ - lx;
    const std::uint32_t z = one_plus_[d];
    if (z == 0) return Elem{0};
    std::uint32_t l = lx + (z - 1);
    if (l >= order_) l -= order_;
    return Elem{l + 1};
}

Elem FieldTower::neg(Elem x) const noexcept {
    if (x.is_zero() || minus_one_log_ == 0) return x;
    std::uint32_t l = x.code - 1 + minus_one_log_;
    if (l >= order_) l -= order_;
    return Elem{l + 1};
}

Elem FieldTower::mul(Elem x, Elem y) const noexcept {
    if (x.is_zero() || y.is_zero()) return Elem{0};
    std::uint32_t l = (x.code - 1) + (y.code - 1);
    if (l >= order_) l -= order_;
    return Elem{l + 1};
}

Elem FieldTower::inv(Elem x) const {
    if (x.is_zero()) throw std::domain_error("inverse of zero");
    const std::uint32_t l = x.code - 1;
    return Elem{(l == 0 ? 0 : order_ - l) + 1};
}

Elem FieldTower::pow(Elem x, std::int64_t n) const {
    if (n == 0) return one();
    if (x.is_zero()) {
        if (n < 0) throw std::domain_error("negative power of zero");
        return x;
    }
    const std::int64_t l = static_cast<std::int64_t>(x.code - 1);
    const std::int64_t m = static_cast<std::int64_t>(order_);
    return exp((l * (n % m)) % m);
}

Elem FieldTower::frobenius(Elem x) const noexcept {
    if (x.is_zero()) return x;
    const std::uint64_t l = static_cast<std::uint64_t>(x.code - 1) * q_ % order_;
    return Elem{static_cast<std::uint32_t>(l) + 1};
}

Elem FieldTower::norm(Elem x) const noexcept {
    if (x.is_zero()) return x;
    const std::uint64_t l = static_cast<std::uint64_t>(x.code - 1) * (q_ + 1) % order_;
    return Elem{static_cast<std::uint32_t>(l) + 1};
}

Elem FieldTower::solve_norm(Elem w) const {
    if (w.is_zero() || !contains(w) || !in_subfield(w))
        throw std::invalid_argument("norm equation needs a nonzero right-hand side in GF(q)");
    // w = norm(w)^j exactly when log(w) = j (q+1).
    return exp((w.code - 1) / (q_ + 1));
}

std::vector<Elem> FieldTower::elements() const {
    std::vector<Elem> out(size());
    for (std::uint32_t c = 0; c < out.size(); ++c) out[c] = Elem{c};
    return out;
}

std::vector<Elem> FieldTower::subfield_elements() const {
    std::vector<Elem> out{zero()};
    for (unsigned j = 0; j + 1 < q_; ++j) out.push_back(exp(static_cast<std::int64_t>(j) * (q_ + 1)));
    return out;
}

FieldPtr make_field(unsigned p, unsigned e, std::size_t element_bound) {
    return std::make_shared<const FieldTower>(p, e, element_bound);
}

FieldPtr make_field_for_q(unsigned q, std::size_t element_bound) {
    auto pe = split_prime_power(q);
    if (!pe) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return make_field(pe->first, pe->second, element_bound);
}

}  // namespace qmds
