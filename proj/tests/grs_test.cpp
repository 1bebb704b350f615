#include <doctest.h>

#include <random>
#include <set>

#include "qmds/constructions.hpp"
#include "qmds/grs.hpp"

using namespace qmds;

namespace {

Elem random_nonzero(const FieldTower& F, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(1, static_cast<std::uint32_t>(F.size() - 1));
    return Elem{pick(rng)};
}

Poly random_poly(const FieldTower& F, std::mt19937& rng, std::size_t coeffs) {
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(F.size() - 1));
    std::vector<Elem> c(coeffs);
    for (auto& x : c) x = Elem{pick(rng)};
    return Poly(std::move(c));
}

std::vector<Elem> first_points(const FieldTower& F, std::size_t n) {
    const auto all = F.elements();
    return {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n)};
}

// Hermitian product <u, v>_H = sum u_i v_i^q, written out directly.
Elem hermitian_dot(const FieldTower& F, std::span<const Elem> u, std::span<const Elem> v) {
    Elem s = F.zero();
    for (std::size_t i = 0; i < u.size(); ++i) s = F.add(s, F.mul(u[i], F.frobenius(v[i])));
    return s;
}

bool same_row_space(const FieldTower& F, const Matrix& a, const Matrix& b) {
    return rank(F, a) == rank(F, b) && row_space_contains(F, a, b) && row_space_contains(F, b, a);
}

}  // namespace

TEST_CASE("make_grs validates its invariants") {
    const auto F = make_field(3, 1);
    const std::vector<Elem> a{F->from_int(0), F->from_int(1), F->from_int(2)};
    const std::vector<Elem> ones(3, F->one());
    CHECK_NOTHROW(make_grs(F, a, ones, 3, false));
    CHECK_NOTHROW(make_grs(F, a, ones, 4, true));
    CHECK_THROWS_AS(make_grs(F, a, ones, 4, false), std::invalid_argument);
    CHECK_THROWS_AS(make_grs(F, a, ones, 0, false), std::invalid_argument);
    CHECK_THROWS_AS(make_grs(F, {a[0], a[0], a[1]}, ones, 1, false), std::invalid_argument);
    CHECK_THROWS_AS(make_grs(F, a, {F->one(), F->zero(), F->one()}, 1, false), std::invalid_argument);
    CHECK_THROWS_AS(make_grs(F, a, {F->one()}, 1, false), std::invalid_argument);
}

TEST_CASE("generator matrix and encoding") {
    const auto F = make_field(3, 1);
    const std::vector<Elem> a{F->from_int(0), F->from_int(1), F->from_int(2)};
    const std::vector<Elem> ones(3, F->one());

    SUBCASE("k = 1 gives the all-ones row") {
        const Matrix G = generator_matrix(make_grs(F, a, ones, 1, false));
        CHECK(G == Matrix::from_rows({ones}));
    }
    SUBCASE("k = 2 over (0, 1, 2)") {
        const Matrix G = generator_matrix(make_grs(F, a, ones, 2, false));
        CHECK(G == Matrix::from_rows({ones, a}));
    }
    SUBCASE("extended code carries e_k in the last column") {
        const Matrix G = generator_matrix(make_grs(F, a, ones, 2, true));
        CHECK(G.cols() == 4);
        CHECK(G(0, 3) == F->zero());
        CHECK(G(1, 3) == F->one());
    }
    SUBCASE("encode") {
        const auto code = make_grs(F, a, {F->exp(1), F->exp(2), F->exp(3)}, 2, true);
        const auto zero = encode(code, Poly{});
        CHECK(zero == std::vector<Elem>(4, F->zero()));
        const auto top = encode(code, Poly::monomial(1, F->one()));
        CHECK(top.back() == F->one());
        for (std::size_t i = 0; i < 3; ++i) CHECK(top[i] == F->mul(code.multipliers[i], a[i]));
        CHECK_THROWS_AS(encode(code, Poly::monomial(2, F->one())), std::invalid_argument);
        // Encoding equals the message row times G.
        const Poly f({F->exp(4), F->exp(6)});
        const Matrix G = generator_matrix(code);
        const auto c = encode(code, f);
        for (std::size_t col = 0; col < 4; ++col)
            CHECK(c[col] == F->add(F->mul(f.coeff(0), G(0, col)), F->mul(f.coeff(1), G(1, col))));
    }
}

TEST_CASE("encode is injective") {
    const auto F = make_field(2, 1);
    std::mt19937 rng(5);
    for (std::size_t k = 1; k <= 3; ++k) {
        std::vector<Elem> v(4);
        for (auto& x : v) x = random_nonzero(*F, rng);
        const auto code = make_grs(F, F->elements(), v, k, false);
        std::set<std::vector<Elem>> words;
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < k; ++i) total *= 4;
        for (std::uint64_t m = 0; m < total; ++m) {
            std::vector<Elem> c(k);
            std::uint64_t r = m;
            for (auto& x : c) {
                x = Elem{static_cast<std::uint32_t>(r % 4)};
                r /= 4;
            }
            words.insert(encode(code, Poly(c)));
        }
        CHECK(words.size() == total);
    }
}

TEST_CASE("dual weights") {
    const auto F = make_field(3, 1);
    CHECK(dual_weights(*F, std::vector<Elem>{F->exp(3)}) == std::vector<Elem>{F->one()});
    const std::vector<Elem> a{F->from_int(0), F->from_int(1), F->from_int(2)};
    const Elem two = F->from_int(2);
    CHECK(dual_weights(*F, a) == std::vector<Elem>{two, two, two});
    CHECK_THROWS_AS(dual_weights(*F, std::vector<Elem>{a[1], a[1]}), std::invalid_argument);
}

TEST_CASE("dual basis of a GRS code") {
    const auto F = make_field(3, 1);
    const std::vector<Elem> a{F->from_int(0), F->from_int(1), F->from_int(2)};
    const Matrix D = grs_dual_basis(*F, a, 1);
    const Elem two = F->from_int(2);
    CHECK(D == Matrix::from_rows({{two, two, two}, {F->zero(), two, F->one()}}));
    const std::vector<Elem> ones(3, F->one());
    for (std::size_t r = 0; r < 2; ++r) CHECK(dot(*F, D.row(r), ones) == F->zero());
    CHECK(grs_dual_basis(*F, a, 3).rows() == 0);
}

TEST_CASE("extended dual basis rows") {
    const auto F = make_field(2, 1);
    const auto a = F->elements();
    const Matrix D = extended_grs_dual_basis(*F, a, 2);
    REQUIRE(D.rows() == 3);
    CHECK(D(0, 4) == F->zero());
    CHECK(D(1, 4) == F->zero());
    CHECK(D(2, 4) == F->neg(F->one()));
}

TEST_CASE("described dual bases span exactly the nullspace duals") {
    for (unsigned q : {2u, 3u}) {
        const auto F = make_field_for_q(q);
        for (std::size_t n = 2; n <= std::min<std::size_t>(10, F->size()); ++n) {
            const auto a = first_points(*F, n);
            const std::vector<Elem> ones(n, F->one());
            for (std::size_t k = 1; k < n; ++k) {
                CAPTURE(q);
                CAPTURE(n);
                CAPTURE(k);
                const auto plain = to_linear_code(make_grs(F, a, ones, k, false));
                CHECK(same_row_space(*F, grs_dual_basis(*F, a, k), nullspace_dual(plain, InnerProduct::euclidean).generator));
                const auto ext = to_linear_code(make_grs(F, a, ones, k, true));
                CHECK(same_row_space(*F, extended_grs_dual_basis(*F, a, k),
                                     nullspace_dual(ext, InnerProduct::euclidean).generator));
            }
        }
    }
}

TEST_CASE("nullspace duals") {
    const auto F = make_field(3, 1);
    std::mt19937 rng(11);
    SUBCASE("the full space has a zero-dimensional dual") {
        const auto a = first_points(*F, 4);
        const auto code = to_linear_code(make_grs(F, a, std::vector<Elem>(4, F->one()), 4, false));
        CHECK(nullspace_dual(code, InnerProduct::euclidean).dimension() == 0);
        CHECK(nullspace_dual(code, InnerProduct::hermitian).dimension() == 0);
    }
    SUBCASE("Hermitian dual two ways") {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Elem> v(6);
            for (auto& x : v) x = random_nonzero(*F, rng);
            const std::size_t k = 1 + static_cast<std::size_t>(trial % 5);
            const auto code = to_linear_code(make_grs(F, first_points(*F, 6), v, k, trial % 2 == 1));
            const auto dual = nullspace_dual(code, InnerProduct::hermitian);
            CHECK(dual.dimension() == code.length() - k);
            // Independent route: Euclidean nullspace of G^(q).
            CHECK(same_row_space(*F, dual.generator, nullspace(*F, frobenius(*F, code.generator))));
            for (std::size_t r = 0; r < dual.dimension(); ++r)
                for (std::size_t s = 0; s < code.dimension(); ++s)
                    CHECK(hermitian_dot(*F, code.generator.row(s), dual.generator.row(r)) == F->zero());
        }
    }
    SUBCASE("contains") {
        const auto code = to_linear_code(make_grs(F, first_points(*F, 5), std::vector<Elem>(5, F->one()), 2, false));
        std::vector<Elem> word(code.generator.row(1).begin(), code.generator.row(1).end());
        CHECK(contains(code, word));
        word[0] = F->add(word[0], F->one());
        CHECK_FALSE(contains(code, word));
    }
}

TEST_CASE("Hermitian self-orthogonality") {
    const auto F = make_field(2, 1);
    SUBCASE("zero-dimensional code") {
        CHECK(hermitian_self_orthogonal(*F, Matrix(0, 5)).holds);
    }
    SUBCASE("the all-ones [5,1,5] code over GF(4) is not self-orthogonal") {
        const Matrix G = Matrix::from_rows({std::vector<Elem>(5, F->one())});
        const auto r = hermitian_self_orthogonal(*F, G);
        CHECK_FALSE(r.holds);
        REQUIRE(r.witness);
        CHECK(r.witness->row_a == 0);
        CHECK(r.witness->row_b == 0);
        CHECK(r.witness->value == F->one());
    }
    SUBCASE("matches the nullspace containment definition") {
        std::mt19937 rng(2);
        const auto F9 = make_field(3, 1);
        int holds = 0;
        for (int trial = 0; trial < 60; ++trial) {
            const auto res = construct_additive(F9, 3, 1 + static_cast<std::size_t>(trial % 2));
            auto code = res.code;
            if (trial % 3 != 0) code.multipliers[static_cast<std::size_t>(trial) % code.n()] = random_nonzero(*F9, rng);
            const auto lin = to_linear_code(code);
            const bool by_def = row_space_contains(*F9, nullspace_dual(lin, InnerProduct::hermitian).generator, lin.generator);
            CHECK(hermitian_self_orthogonal(lin).holds == by_def);
            holds += by_def ? 1 : 0;
        }
        CHECK(holds > 0);
        CHECK(holds < 60);
    }
}

TEST_CASE("membership criteria agree with Hermitian nullspace membership") {
    struct Setup {
        unsigned q;
        std::size_t n, k;
        bool extended;
    };
    std::mt19937 rng(17);
    for (const Setup s : {Setup{3, 4, 2, false}, Setup{3, 5, 2, true}, Setup{2, 4, 1, false}, Setup{2, 3, 1, true},
                          Setup{4, 7, 2, false}, Setup{4, 7, 3, true}}) {
        CAPTURE(s.q);
        CAPTURE(s.extended);
        const auto F = make_field_for_q(s.q);
        int in_dual = 0;
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Elem> pts;
            {
                auto all = F->elements();
                std::shuffle(all.begin(), all.end(), rng);
                pts.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(s.n));
            }
            std::vector<Elem> v(s.n);
            for (auto& x : v) x = random_nonzero(*F, rng);
            // Half the trials use norm-matched multipliers so the dual side is hit too.
            if (trial % 2 == 0) {
                const auto w = dual_weights(*F, pts);
                for (std::size_t i = 0; i < s.n; ++i) {
                    const Elem target = s.extended ? F->neg(w[i]) : w[i];
                    if (F->in_subfield(target)) v[i] = F->solve_norm(target);
                }
            }
            const auto code = make_grs(F, pts, v, s.k, s.extended);
            const auto lin = to_linear_code(code);
            const auto dual = nullspace_dual(lin, InnerProduct::hermitian);
            // Constant messages always land in the dual of a norm-matched code.
            const Poly f = random_poly(*F, rng, trial % 4 == 0 ? 1 : s.k);
            const auto word = encode(code, f);
            const bool oracle = contains(dual, word);
            const bool crit = s.extended ? extended_hermitian_membership(code, f) : hermitian_membership(code, f);
            CHECK(crit == oracle);
            CHECK((s.extended ? extended_hermitian_membership(code, Poly{}) : hermitian_membership(code, Poly{})));
            in_dual += oracle ? 1 : 0;
        }
        CHECK(in_dual > 0);
    }
}

TEST_CASE("brute-force distance of random GRS codes is n-k+1") {
    std::mt19937 rng(23);
    for (unsigned q : {2u, 3u}) {
        const auto F = make_field_for_q(q);
        for (std::size_t n = 2; n <= std::min<std::size_t>(12, F->size()); n += 2)
            for (std::size_t k = 1; k <= std::min<std::size_t>(3, n); ++k) {
                std::vector<Elem> v(n);
                for (auto& x : v) x = random_nonzero(*F, rng);
                const auto a = first_points(*F, n);
                CAPTURE(q);
                CAPTURE(n);
                CAPTURE(k);
                CHECK(min_distance_bruteforce(to_linear_code(make_grs(F, a, v, k, false)), 10'000'000) == n - k + 1);
                if (k <= n)
                    CHECK(min_distance_bruteforce(to_linear_code(make_grs(F, a, v, k, true)), 10'000'000) ==
                          n - k + 2);
            }
    }
    const auto F = make_field(3, 1);
    const auto a = first_points(*F, 9);
    const auto one_row = to_linear_code(make_grs(F, a, std::vector<Elem>(9, F->one()), 1, false));
    CHECK(min_distance_bruteforce(one_row) == 9);
}

TEST_CASE("brute-force distance, larger fields") {
    std::mt19937 rng(29);
    for (unsigned q : {4u, 5u, 7u, 8u, 9u}) {
        const auto F = make_field_for_q(q);
        for (std::size_t k = 1; k <= 2; ++k) {
            const std::size_t n = 12;
            std::vector<Elem> v(n);
            for (auto& x : v) x = random_nonzero(*F, rng);
            const auto a = first_points(*F, n);
            CHECK(min_distance_bruteforce(to_linear_code(make_grs(F, a, v, k, false))) == n - k + 1);
            CHECK(min_distance_bruteforce(to_linear_code(make_grs(F, a, v, k, true))) == n - k + 2);
        }
    }
}

TEST_CASE("distance caps") {
    const auto F = make_field(3, 1);
    const auto code = to_linear_code(make_grs(F, first_points(*F, 9), std::vector<Elem>(9, F->one()), 7, false));
    CHECK_THROWS_AS(min_distance_bruteforce(code), CapExceeded);
    CHECK_THROWS_AS(min_distance_bruteforce(code, 1000), CapExceeded);
    const auto big = to_linear_code(make_grs(make_field_for_q(16), first_points(*make_field_for_q(16), 40),
                                             std::vector<Elem>(40, Elem{1}), 10, false));
    CHECK_THROWS_AS(is_mds_by_rank(big), CapExceeded);
}

TEST_CASE("k-column rank test") {
    const auto F = make_field(3, 1);
    const auto a = first_points(*F, 8);
    const auto code = to_linear_code(make_grs(F, a, std::vector<Elem>(8, F->one()), 3, false));
    CHECK(is_mds_by_rank(code));
    CHECK(is_mds_by_rank(to_linear_code(make_grs(F, a, std::vector<Elem>(8, F->one()), 3, true))));
    Matrix G = code.generator;
    for (std::size_t r = 0; r < G.rows(); ++r) G(r, 1) = G(r, 0);
    CHECK_FALSE(is_mds_by_rank(make_linear_code(F, G)));
    CHECK(min_distance_bruteforce(make_linear_code(F, G)) < 6);
}

TEST_CASE("Hermitian duals of MDS codes are MDS") {
    std::mt19937 rng(31);
    for (unsigned q : {2u, 3u, 4u}) {
        const auto F = make_field_for_q(q);
        const std::size_t n = std::min<std::size_t>(6, F->size());
        for (std::size_t k = 1; k < n; ++k) {
            std::vector<Elem> v(n);
            for (auto& x : v) x = random_nonzero(*F, rng);
            const auto code = to_linear_code(make_grs(F, first_points(*F, n), v, k, false));
            const auto dual = nullspace_dual(code, InnerProduct::hermitian);
            REQUIRE(dual.dimension() == n - k);
            CHECK(is_mds_by_rank(dual));
            if (dual.dimension() <= 3) CHECK(min_distance_bruteforce(dual) == k + 1);
        }
    }
}

TEST_CASE("make_linear_code rejects rank-deficient generators") {
    const auto F = make_field(2, 1);
    const std::vector<Elem> r{F->one(), F->generator()};
    CHECK_THROWS_AS(make_linear_code(F, Matrix::from_rows({r, r})), std::invalid_argument);
    CHECK_THROWS_AS(min_distance_bruteforce(make_linear_code(F, Matrix(0, 3))), std::invalid_argument);
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(30, 15) == 155117520);
    CHECK(binomial(1000, 500) == UINT64_MAX);
}

TEST_CASE("Lagrange interpolation") {
    const auto F = make_field(3, 1);
    std::mt19937 rng(37);
    const std::vector<Elem> one_pt{F->exp(3)};
    const std::vector<Elem> one_val{F->exp(5)};
    CHECK(lagrange_interpolate(*F, one_pt, one_val) == Poly::constant(F->exp(5)));
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
        auto all = F->elements();
        std::shuffle(all.begin(), all.end(), rng);
        const std::vector<Elem> pts(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n));
        const Poly f = random_poly(*F, rng, n);
        std::vector<Elem> vals;
        for (Elem a : pts) vals.push_back(eval(*F, f, a));
        CHECK(lagrange_interpolate(*F, pts, vals) == f);
    }
    CHECK_THROWS_AS(lagrange_interpolate(*F, std::vector<Elem>{F->one(), F->one()},
                                         std::vector<Elem>{F->one(), F->zero()}),
                    std::invalid_argument);
    CHECK_THROWS_AS(lagrange_interpolate(*F, std::vector<Elem>{F->one()}, std::vector<Elem>{}),
                    std::invalid_argument);
}

TEST_CASE("weighted power sums vanish below the top coefficient") {
    // For deg g <= n-k: sum w_i g(a_i) a_i^s = 0 (s <= k-2) and = g_{n-k} (s = k-1).
    std::mt19937 rng(41);
    const auto F = make_field(3, 1);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
        const std::size_t k = 1 + static_cast<std::size_t>(trial) % (n - 1);
        auto all = F->elements();
        std::shuffle(all.begin(), all.end(), rng);
        const std::vector<Elem> pts(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n));
        const auto w = dual_weights(*F, pts);
        const Poly g = random_poly(*F, rng, n - k + 1);
        for (std::size_t s = 0; s < k; ++s) {
            Elem sum = F->zero();
            for (std::size_t i = 0; i < n; ++i)
                sum = F->add(sum, F->mul(F->mul(w[i], eval(*F, g, pts[i])), F->pow(pts[i], static_cast<std::int64_t>(s))));
            CHECK(sum == (s + 1 == k ? g.coeff(n - k) : F->zero()));
        }
    }
}
