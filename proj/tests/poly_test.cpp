#include <doctest.h>

#include <random>

#include "qmds/poly.hpp"

using namespace qmds;

namespace {

Poly random_poly(const FieldTower& F, std::mt19937& rng, long max_degree) {
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(F.size() - 1));
    std::vector<Elem> c(static_cast<std::size_t>(max_degree + 1));
    for (auto& x : c) x = Elem{pick(rng)};
    return Poly(std::move(c));
}

bool has_root(const FieldTower& F, const Poly& f) {
    for (Elem a : F.elements())
        if (eval(F, f, a).is_zero()) return true;
    return false;
}

}  // namespace

TEST_CASE("Poly normal form") {
    const auto F = make_field(3, 1);
    const Poly z({Elem{}, Elem{}});
    CHECK(z.is_zero());
    CHECK(z.degree() == Poly::kZeroDegree);
    const Poly f({F->one(), F->generator(), Elem{}});
    CHECK(f.degree() == 1);
    CHECK(f.coeff(5) == Elem{});
    CHECK(Poly::monomial(3, F->one()).degree() == 3);
}

TEST_CASE("arithmetic") {
    const auto F = make_field(3, 1);
    std::mt19937 rng(1);
    for (int i = 0; i < 100; ++i) {
        const Poly f = random_poly(*F, rng, 6);
        const Poly g = random_poly(*F, rng, 3);
        if (g.is_zero()) continue;
        const auto [quot, rem] = divmod(*F, f, g);
        CHECK(rem.degree() < g.degree());
        CHECK(add(*F, mul(*F, quot, g), rem) == f);
        const Elem a = F->exp(i);
        CHECK(eval(*F, mul(*F, f, g), a) == F->mul(eval(*F, f, a), eval(*F, g, a)));
        CHECK(sub(*F, add(*F, f, g), g) == f);
    }
    CHECK_THROWS_AS(divmod(*F, Poly::constant(F->one()), Poly{}), std::domain_error);
}

TEST_CASE("gcd and powmod") {
    const auto F = make_field(2, 1);
    const Elem w = F->generator();
    const std::vector<Elem> r1{F->one(), w};
    const std::vector<Elem> r2{w, F->zero()};
    const Poly f = from_roots(*F, r1);
    const Poly g = from_roots(*F, r2);
    CHECK(gcd(*F, f, g) == from_roots(*F, std::vector<Elem>{w}));
    // x^Q = x in GF(Q)[x]/(f) for any f.
    const Poly x = Poly::monomial(1, F->one());
    const Poly m = root_free_monic(*F, 3);
    CHECK(powmod(*F, x, F->size() * F->size() * F->size(), m) == x);
}

TEST_CASE("frobenius_poly") {
    const auto F = make_field(3, 1);
    const Poly x = Poly::monomial(1, F->one());
    CHECK(frobenius_poly(*F, x) == Poly::monomial(3, F->one()));
    const Elem c = F->generator();
    CHECK(frobenius_poly(*F, Poly::constant(c)) == Poly::constant(F->frobenius(c)));
    std::mt19937 rng(2);
    for (int i = 0; i < 50; ++i) {
        const Poly f = random_poly(*F, rng, 3);
        const Poly fq = frobenius_poly(*F, f);
        for (Elem a : F->elements()) CHECK(eval(*F, fq, a) == F->frobenius(eval(*F, f, a)));
    }
}

TEST_CASE("from_roots reproduces x^(q+1) - 1 over the unit circle") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        const auto F = make_field_for_q(q);
        const Elem theta = F->unit_circle_generator();
        std::vector<Elem> roots;
        for (unsigned l = 0; l <= q; ++l) roots.push_back(F->pow(theta, l));
        std::vector<Elem> expect(q + 2);
        expect[0] = F->neg(F->one());
        expect[q + 1] = F->one();
        CHECK(from_roots(*F, roots) == Poly(expect));
        // Derivative at a root: prod_{l != m} (theta^m - theta^l) = theta^(qm).
        for (unsigned m = 0; m <= q; ++m) {
            Elem prod = F->one();
            for (unsigned l = 0; l <= q; ++l)
                if (l != m) prod = F->mul(prod, F->sub(roots[m], roots[l]));
            CHECK(prod == F->pow(theta, static_cast<std::int64_t>(q) * m));
        }
    }
}

TEST_CASE("root_free_monic") {
    SUBCASE("GF(4), degree 2 is the first rootless monic quadratic") {
        const auto F = make_field(2, 1);
        const Poly m = root_free_monic(*F, 2);
        // Independent search: x^2 + c1 x + c0 with c0 fastest; degree 2 rootless <=> irreducible.
        std::optional<Poly> first;
        for (std::uint32_t c1 = 0; c1 < 4 && !first; ++c1)
            for (std::uint32_t c0 = 0; c0 < 4 && !first; ++c0) {
                const Poly cand({Elem{c0}, Elem{c1}, F->one()});
                if (!has_root(*F, cand)) first = cand;
            }
        REQUIRE(first);
        CHECK(m == *first);
        CHECK(m.degree() == 2);
        CHECK(m.leading() == F->one());
    }
    SUBCASE("GF(9), degree 2: no root at any of the 81 elements") {
        const auto F = make_field(3, 1);
        const Poly m = root_free_monic(*F, 2);
        CHECK(m.degree() == 2);
        CHECK_FALSE(has_root(*F, m));
    }
    SUBCASE("degree 4 over GF(4) has no quadratic factor") {
        const auto F = make_field(2, 1);
        const Poly m = root_free_monic(*F, 4);
        CHECK_FALSE(has_root(*F, m));
        for (std::uint32_t c1 = 0; c1 < 4; ++c1)
            for (std::uint32_t c0 = 0; c0 < 4; ++c0)
                CHECK_FALSE(mod(*F, m, Poly({Elem{c0}, Elem{c1}, F->one()})).is_zero());
    }
    SUBCASE("higher degrees stay rootless") {
        for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
            const auto F = make_field_for_q(q);
            for (std::size_t ell = 2; ell + 2 <= q + 1 && ell <= 7; ++ell) {
                const Poly m = root_free_monic(*F, ell);
                CHECK(m.degree() == static_cast<long>(ell));
                CHECK(is_irreducible(*F, m));
                CHECK_FALSE(has_root(*F, m));
            }
        }
    }
    SUBCASE("degree below 2 is rejected") {
        const auto F = make_field(2, 1);
        CHECK_THROWS_AS(root_free_monic(*F, 1), std::invalid_argument);
        CHECK_THROWS_AS(root_free_monic(*F, 0), std::invalid_argument);
    }
}

TEST_CASE("is_irreducible") {
    const auto F = make_field(3, 1);
    CHECK_FALSE(is_irreducible(*F, Poly::constant(F->one())));
    CHECK(is_irreducible(*F, Poly({F->one(), F->one()})));
    const Poly m = root_free_monic(*F, 2);
    CHECK_FALSE(is_irreducible(*F, mul(*F, m, m)));
    // A product of two rootless quadratics has no root but is reducible.
    const Poly m2 = add(*F, m, Poly::constant(F->one()));
    if (is_irreducible(*F, m2)) CHECK_FALSE(is_irreducible(*F, mul(*F, m, m2)));
}
