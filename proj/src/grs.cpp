#include "qmds/grs.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qmds {

namespace {

void require_distinct(std::span<const Elem> points) {
    std::vector<Elem> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("evaluation points are not pairwise distinct");
}

// Q^k, or nullopt once it passes `limit`.
std::optional<std::uint64_t> bounded_power(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > limit / base) return std::nullopt;
        r *= base;
    }
    return r;
}

// g with w_i g(a_i) = v_i^(q+1) f^q(a_i) for all i.
Poly hermitian_interpolant(const GrsCode& code, const Poly& f) {
    const FieldTower& F = *code.field;
    const auto w = dual_weights(F, code.points);
    std::vector<Elem> values(code.n());
    for (std::size_t i = 0; i < code.n(); ++i) {
        const Elem rhs = F.mul(F.norm(code.multipliers[i]), F.frobenius(eval(F, f, code.points[i])));
        values[i] = F.div(rhs, w[i]);
    }
    return lagrange_interpolate(F, code.points, values);
}

void require_message_degree(const GrsCode& code, const Poly& f) {
    if (f.degree() >= static_cast<long>(code.dimension))
        throw std::invalid_argument("message polynomial degree must be below the code dimension");
}

}  // namespace

GrsCode make_grs(FieldPtr field, std::vector<Elem> points, std::vector<Elem> multipliers,
                 std::size_t dimension, bool extended) {
    if (!field) throw std::invalid_argument("missing field");
    if (points.empty()) throw std::invalid_argument("a GRS code needs at least one evaluation point");
    if (points.size() != multipliers.size())
        throw std::invalid_argument("points and multipliers differ in length");
    for (Elem x : points)
        if (!field->contains(x)) throw std::invalid_argument("evaluation point outside the field");
    for (Elem v : multipliers)
        if (!field->contains(v) || v.is_zero()) throw std::invalid_argument("column multipliers must be nonzero");
    require_distinct(points);
    const std::size_t max_k = points.size() + (extended ? 1 : 0);
    if (dimension < 1 || dimension > max_k)
        throw std::invalid_argument("dimension " + std::to_string(dimension) + " outside 1.." +
                                    std::to_string(max_k));
    return GrsCode{std::move(field), std::move(points), std::move(multipliers), dimension, extended};
}

LinearCode make_linear_code(FieldPtr field, Matrix generator) {
    if (!field) throw std::invalid_argument("missing field");
    if (rank(*field, generator) != generator.rows())
        throw std::invalid_argument("generator matrix is not of full row rank");
    return LinearCode{std::move(field), std::move(generator)};
}

Matrix generator_matrix(const GrsCode& code) {
    const FieldTower& F = *code.field;
    Matrix G(code.dimension, code.length());
    for (std::size_t i = 0; i < code.n(); ++i) {
        Elem x = code.multipliers[i];
        for (std::size_t r = 0; r < code.dimension; ++r) {
            G(r, i) = x;
            x = F.mul(x, code.points[i]);
        }
    }
    if (code.extended) G(code.dimension - 1, code.n()) = F.one();
    return G;
}

LinearCode to_linear_code(const GrsCode& code) { return LinearCode{code.field, generator_matrix(code)}; }

std::vector<Elem> encode(const GrsCode& code, const Poly& f) {
    require_message_degree(code, f);
    const FieldTower& F = *code.field;
    std::vector<Elem> out(code.length());
    for (std::size_t i = 0; i < code.n(); ++i) out[i] = F.mul(code.multipliers[i], eval(F, f, code.points[i]));
    if (code.extended) out.back() = f.coeff(code.dimension - 1);
    return out;
}

std::vector<Elem> dual_weights(const FieldTower& F, std::span<const Elem> points) {
    require_distinct(points);
    std::vector<Elem> w(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        Elem prod = F.one();
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i) prod = F.mul(prod, F.sub(points[i], points[j]));
        w[i] = F.inv(prod);
    }
    return w;
}

Matrix grs_dual_basis(const FieldTower& F, std::span<const Elem> points, std::size_t k) {
    const std::size_t n = points.size();
    if (k < 1 || k > n) throw std::invalid_argument("dual basis needs 1 <= k <= n");
    const auto w = dual_weights(F, points);
    Matrix B(n - k, n);
    for (std::size_t i = 0; i < n; ++i) {
        Elem x = w[i];
        for (std::size_t j = 0; j + k < n; ++j) {
            B(j, i) = x;
            x = F.mul(x, points[i]);
        }
    }
    return B;
}

Matrix extended_grs_dual_basis(const FieldTower& F, std::span<const Elem> points, std::size_t k) {
    const std::size_t n = points.size();
    if (k < 1 || k > n) throw std::invalid_argument("extended dual basis needs 1 <= k <= n");
    const auto w = dual_weights(F, points);
    Matrix B(n - k + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        Elem x = w[i];
        for (std::size_t j = 0; j <= n - k; ++j) {
            B(j, i) = x;
            x = F.mul(x, points[i]);
        }
    }
    B(n - k, n) = F.neg(F.one());
    return B;
}

LinearCode nullspace_dual(const LinearCode& code, InnerProduct kind) {
    const FieldTower& F = *code.field;
    Matrix basis = nullspace(F, code.generator);
    if (kind == InnerProduct::hermitian) basis = frobenius(F, basis);
    return LinearCode{code.field, std::move(basis)};
}

bool contains(const LinearCode& code, std::span<const Elem> word) {
    Matrix w(0, word.size());
    w.append_row(word);
    return row_space_contains(*code.field, code.generator, w);
}

SelfOrthogonality hermitian_self_orthogonal(const FieldTower& F, const Matrix& generator) {
    for (std::size_t a = 0; a < generator.rows(); ++a) {
        const auto ra = generator.row(a);
        for (std::size_t b = 0; b < generator.rows(); ++b) {
            const auto rb = generator.row(b);
            Elem acc{};
            for (std::size_t i = 0; i < ra.size(); ++i) acc = F.add(acc, F.mul(F.frobenius(ra[i]), rb[i]));
            if (!acc.is_zero()) return {false, OrthogonalityWitness{a, b, acc}};
        }
    }
    return {};
}

SelfOrthogonality hermitian_self_orthogonal(const LinearCode& code) {
    return hermitian_self_orthogonal(*code.field, code.generator);
}

bool hermitian_membership(const GrsCode& code, const Poly& f) {
    if (code.extended) throw std::invalid_argument("expected a non-extended GRS code");
    require_message_degree(code, f);
    const Poly g = hermitian_interpolant(code, f);
    return g.degree() <= static_cast<long>(code.n()) - static_cast<long>(code.dimension) - 1;
}

bool extended_hermitian_membership(const GrsCode& code, const Poly& f) {
    if (!code.extended) throw std::invalid_argument("expected an extended GRS code");
    require_message_degree(code, f);
    const FieldTower& F = *code.field;
    const Poly g = hermitian_interpolant(code, f);
    const long top = static_cast<long>(code.n()) - static_cast<long>(code.dimension);
    if (g.degree() > top) return false;
    // top < 0 only when k = n + 1; then g must vanish and so must f_{k-1}.
    const Elem g_top = top < 0 ? Elem{} : g.coeff(static_cast<std::size_t>(top));
    return g_top == F.neg(F.frobenius(f.coeff(code.dimension - 1)));
}

std::size_t min_distance_bruteforce(const LinearCode& code, std::uint64_t cap) {
    const FieldTower& F = *code.field;
    const std::size_t k = code.dimension();
    const std::size_t N = code.length();
    if (k == 0) throw std::invalid_argument("zero-dimensional code has no nonzero codeword");
    if (!bounded_power(F.size(), k, cap))
        throw CapExceeded("q^(2k) codewords exceed the enumeration cap " + std::to_string(cap));

    const Matrix& G = code.generator;
    const std::uint32_t Q = static_cast<std::uint32_t>(F.size());
    std::size_t best = N + 1;
    std::vector<Elem> cw(N);
    std::vector<Elem> digits(k);
    // One representative per projective point: the first nonzero message
    // coordinate is 1. Weight is invariant under scaling.
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::copy(G.row(lead).begin(), G.row(lead).end(), cw.begin());
        std::fill(digits.begin(), digits.end(), Elem{});
        for (;;) {
            const auto w = static_cast<std::size_t>(
                std::count_if(cw.begin(), cw.end(), [](Elem x) { return !x.is_zero(); }));
            best = std::min(best, w);
            // Odometer over digits lead+1..k-1, updating the codeword in place.
            std::size_t s = lead + 1;
            while (s < k && digits[s].code + 1 == Q) {
                const Elem old = digits[s];
                digits[s] = Elem{};
                for (std::size_t i = 0; i < N; ++i) cw[i] = F.sub(cw[i], F.mul(old, G(s, i)));
                ++s;
            }
            if (s >= k) break;
            const Elem old = digits[s];
            digits[s] = Elem{old.code + 1};
            const Elem delta = F.sub(digits[s], old);
            for (std::size_t i = 0; i < N; ++i) cw[i] = F.add(cw[i], F.mul(delta, G(s, i)));
        }
    }
    return best;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    constexpr std::uint64_t kSat = ~std::uint64_t{0};
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        const std::uint64_t num = n - k + i;
        const std::uint64_t g = std::gcd(r, i);
        const std::uint64_t r1 = r / g;
        const std::uint64_t den = i / g;
        const std::uint64_t num1 = num / den;  // den | num * r1 and gcd(r1, den) = 1
        if (r1 > kSat / num1) return kSat;
        r = r1 * num1;
    }
    return r;
}

bool is_mds_by_rank(const LinearCode& code, std::uint64_t cap) {
    const FieldTower& F = *code.field;
    const std::size_t k = code.dimension();
    const std::size_t N = code.length();
    if (k == 0) return true;
    if (binomial(N, k) > cap)
        throw CapExceeded("C(N, k) column subsets exceed the minor cap " + std::to_string(cap));
    std::vector<std::size_t> cols(k);
    std::iota(cols.begin(), cols.end(), 0);
    Matrix sub(k, k);
    for (;;) {
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) sub(r, c) = code.generator(r, cols[c]);
        if (rank(F, sub) != k) return false;
        std::size_t i = k;
        while (i > 0 && cols[i - 1] == N - k + i - 1) --i;
        if (i == 0) break;
        ++cols[i - 1];
        for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
    return true;
}

Poly lagrange_interpolate(const FieldTower& F, std::span<const Elem> points, std::span<const Elem> values) {
    if (points.size() != values.size()) throw std::invalid_argument("points and values differ in length");
    const auto w = dual_weights(F, points);
    const Poly node = from_roots(F, points);
    const std::size_t n = points.size();
    std::vector<Elem> acc(n);
    std::vector<Elem> quot(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Elem c = F.mul(w[i], values[i]);
        if (c.is_zero()) continue;
        // node / (x - a_i) by synthetic division.
        Elem carry{};
        for (std::size_t d = n; d-- > 0;) {
            carry = F.add(F.mul(carry, points[i]), node.coeff(d + 1));
            quot[d] = carry;
        }
        for (std::size_t d = 0; d < n; ++d) acc[d] = F.add(acc[d], F.mul(c, quot[d]));
    }
    return Poly(std::move(acc));
}

}  // namespace qmds
