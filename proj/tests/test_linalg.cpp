#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pfaut/linalg.hpp"
#include "pfaut/snf.hpp"
#include "test_support.hpp"

using namespace pfaut;
using namespace pfaut::testsupport;

namespace {

const Poly x = Poly::variable();

template <typename T>
std::vector<T> combine(const std::vector<std::vector<T>>& gens, const std::vector<T>& coeffs) {
    std::vector<T> out(gens.front().size());
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < out.size(); ++j) out[j] += coeffs[i] * gens[i][j];
    return out;
}

template <typename Ring>
void check_snf(const Matrix<typename Ring::Elem>& a) {
    const auto snf = smith_normal_form<Ring>(a);
    CHECK(snf.s * snf.diagonal_matrix() * snf.t == a);
    CHECK(snf.s * snf.s_inv == Matrix<typename Ring::Elem>::identity(a.rows()));
    CHECK(snf.t * snf.t_inv == Matrix<typename Ring::Elem>::identity(a.cols()));
    for (size_t i = 0; i + 1 < snf.diagonal.size(); ++i)
        CHECK(Ring::divides(snf.diagonal[i], snf.diagonal[i + 1]));
}

}  // namespace

TEST_CASE("rank over Q") {
    CHECK(rank(MatrixQ::identity(3)) == 3);
    CHECK(rank(MatrixQ(3, 3)) == 0);
    CHECK(rank(matrix_q({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(matrix_q({{1, 2}, {2, 5}})) == 2);
    CHECK(rank(MatrixQ(0, 4)) == 0);
}

TEST_CASE("rank over Q(x)") {
    // [[x, x^2], [1, x]]: second row is the first divided by x.
    MatrixPoly m(2, 2);
    m(0, 0) = x;
    m(0, 1) = x * x;
    m(1, 0) = Poly(1);
    m(1, 1) = x;
    CHECK(rank(m) == 1);

    MatrixPoly id = MatrixPoly::identity(3);
    CHECK(rank(id) == 3);
    m(1, 1) = x + Poly(1);  // determinant x(x+1) - x^2 = x, nonzero
    CHECK(rank(m) == 2);
    CHECK(rank(MatrixPoly(2, 3)) == 0);
}

TEST_CASE("solve over Q") {
    const std::vector<Rational> b{3, -1, Rational(1, 2)};
    CHECK(solve(MatrixQ::identity(3), b) == b);

    const auto under = solve(matrix_q({{1, 2}}), {3});
    REQUIRE(under);
    CHECK(*under == std::vector<Rational>{3, 0});  // free variable fixed to 0

    CHECK_FALSE(solve(matrix_q({{1}, {1}}), {0, 1}));

    std::mt19937 rng(4101);
    std::uniform_int_distribution<int> entry(-4, 4), dim(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        MatrixQ a(dim(rng), dim(rng));
        for (size_t i = 0; i < a.rows(); ++i)
            for (size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
        std::vector<Rational> w(a.cols());
        for (auto& v : w) v = Rational(entry(rng));
        const auto sol = solve(a, matrix_times_column(a, w));
        REQUIRE(sol);  // consistent by construction
        CHECK(matrix_times_column(a, *sol) == matrix_times_column(a, w));
    }
}

TEST_CASE("coordinates in row basis") {
    const MatrixQ f = matrix_q({{1, 1, 0}, {0, 1, 1}});
    const auto c = coordinates_in_rows(f, {2, 3, 1});
    REQUIRE(c);
    CHECK(*c == std::vector<Rational>{2, 1});
    CHECK_FALSE(coordinates_in_rows(f, {0, 0, 1}));
}

TEST_CASE("incremental row spaces") {
    RationalRowSpace q;
    CHECK(q.contains({0, 0}));
    CHECK(q.add({1, 2}));
    CHECK_FALSE(q.add({2, 4}));
    CHECK(q.contains({-3, -6}));
    CHECK_FALSE(q.contains({1, 0}));
    CHECK(q.add({1, 0}));
    CHECK(q.dim() == 2);
    CHECK(q.contains({7, -5}));

    PolyRowSpace p;
    CHECK(p.add({x, x * x}));
    CHECK(p.contains({Poly(1), x}));      // same Q(x)-line
    CHECK_FALSE(p.add({Poly(3), x + x + x}));  // same Q(x)-line again
    CHECK_FALSE(p.contains({Poly(1), Poly(1)}));
    CHECK(p.add({Poly(1), Poly(1)}));
    CHECK(p.dim() == 2);
}

TEST_CASE("smith normal form on pinned examples") {
    const auto d23 = smith_normal_form<IntegerRing>(matrix_z({{2, 0}, {0, 3}}));
    CHECK(d23.diagonal == std::vector<Int>{1, 6});
    check_snf<IntegerRing>(matrix_z({{2, 0}, {0, 3}}));

    const auto id4 = smith_normal_form<IntegerRing>(MatrixZ::identity(4));
    CHECK(id4.diagonal == std::vector<Int>{1, 1, 1, 1});

    const auto a = smith_normal_form<IntegerRing>(matrix_z({{2, 4}, {6, 8}}));
    CHECK(a.diagonal == std::vector<Int>{2, 4});

    MatrixPoly dx(2, 2);
    dx(0, 0) = x;
    dx(1, 1) = x * x;
    const auto px = smith_normal_form<PolynomialRing>(dx);
    REQUIRE(px.diagonal.size() == 2);
    CHECK(px.diagonal[0] == x);
    CHECK(px.diagonal[1] == x * x);
    check_snf<PolynomialRing>(dx);

    CHECK(smith_normal_form<IntegerRing>(MatrixZ(2, 3)).rank == 0);
    CHECK(smith_normal_form<IntegerRing>(MatrixZ(0, 0)).rank == 0);
}

TEST_CASE("smith normal form randomized against the minor-gcd oracle") {
    std::mt19937 rng(4102);
    for (int trial = 0; trial < 60; ++trial) {
        const MatrixZ m = random_z_matrix(rng, 4, 5);
        const auto snf = smith_normal_form<IntegerRing>(m);
        check_snf<IntegerRing>(m);
        const Int det_s = determinant(snf.s), det_t = determinant(snf.t);
        CHECK((det_s == 1 || det_s == -1));
        CHECK((det_t == 1 || det_t == -1));
        for (const auto& d : snf.diagonal) CHECK(d > 0);
        CHECK(snf.diagonal == invariant_factors_oracle(m));
    }
    for (int trial = 0; trial < 30; ++trial) {
        const MatrixPoly m = random_poly_matrix(rng, 3, 2);
        const auto snf = smith_normal_form<PolynomialRing>(m);
        check_snf<PolynomialRing>(m);
        const Poly det_s = determinant(snf.s), det_t = determinant(snf.t);
        CHECK(det_s.degree() == 0);  // nonzero constants
        CHECK(det_t.degree() == 0);
        for (const auto& d : snf.diagonal) CHECK(d.leading() == Rational(1));
        CHECK(snf.diagonal == invariant_factors_oracle(m));
    }
}

TEST_CASE("module membership over Z") {
    const std::vector<std::vector<Int>> g{{2, 0}, {3, 0}};
    const auto c = module_membership<IntegerRing>(g, {1, 0});
    REQUIRE(c);
    CHECK(combine(g, *c) == std::vector<Int>{1, 0});

    CHECK_FALSE(module_membership<IntegerRing>({{2, 0}}, {1, 0}));
    CHECK(module_membership<IntegerRing>({{2, 0}}, {-6, 0}));

    // Empty generator list spans only 0.
    CHECK(module_membership<IntegerRing>({}, {0, 0}));
    CHECK_FALSE(module_membership<IntegerRing>({}, {1, 0}));
}

TEST_CASE("module membership over Q[x]") {
    // [x] is in the Q(x)-span of {[x^2], [x^3]} but not in the Q[x]-module.
    CHECK_FALSE(module_membership<PolynomialRing>({{x * x}, {x * x * x}}, {x}));
    const auto c = module_membership<PolynomialRing>({{x * x}, {x * x * x}}, {x * x * x});
    REQUIRE(c);
    CHECK(combine({{x * x}, {x * x * x}}, *c) == std::vector<Poly>{x * x * x});
}

TEST_CASE("membership matches basis-span growth on random instances") {
    std::mt19937 rng(4103);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::vector<Int>> gens(3, std::vector<Int>(3));
        for (auto& g : gens)
            for (auto& e : g) e = entry(rng);
        std::vector<Int> v(3);
        for (auto& e : v) e = entry(rng);

        auto with_v = gens;
        with_v.push_back(v);
        const auto basis_before = z_basis_from_generators(gens);
        const bool inside = module_membership<IntegerRing>(gens, v).has_value();
        // v lies in the module iff adjoining it leaves the span unchanged,
        // i.e. every basis vector of the bigger module is in the old one.
        bool same_span = true;
        for (const auto& b : z_basis_from_generators(with_v))
            if (!module_membership<IntegerRing>(basis_before, b)) same_span = false;
        CHECK(inside == same_span);
    }
}

TEST_CASE("Z-basis from generators") {
    const auto b1 = z_basis_from_generators({{2, 0}, {3, 0}});
    REQUIRE(b1.size() == 1);
    CHECK((b1[0] == std::vector<Int>{1, 0} || b1[0] == std::vector<Int>{-1, 0}));

    const std::vector<std::vector<Int>> std_basis{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const auto b2 = z_basis_from_generators(std_basis);
    REQUIRE(b2.size() == 3);
    for (const auto& v : b2) CHECK(module_membership<IntegerRing>(std_basis, v));
    for (const auto& v : std_basis) CHECK(module_membership<IntegerRing>(b2, v));

    // Index-2 sublattice {(a,b) : a+b even}.
    const std::vector<std::vector<Int>> g3{{2, 0}, {0, 2}, {1, 1}};
    const auto b3 = z_basis_from_generators(g3);
    REQUIRE(b3.size() == 2);
    for (const auto& v : b3) CHECK(module_membership<IntegerRing>(g3, v));
    for (const auto& v : g3) CHECK(module_membership<IntegerRing>(b3, v));
    CHECK_FALSE(module_membership<IntegerRing>(b3, {1, 0}));

    CHECK(z_basis_from_generators({}).empty());
}

TEST_CASE("solving over the polynomial ring") {
    MatrixPoly a(1, 1);
    a(0, 0) = x;
    const auto s1 = solve_over_polynomial_ring(a, {x * x});
    REQUIRE(s1);
    CHECK(*s1 == std::vector<Poly>{x});
    CHECK_FALSE(solve_over_polynomial_ring(a, {Poly(1)}));

    MatrixPoly b(2, 2);
    b(0, 0) = Poly(1);
    b(0, 1) = x;
    b(1, 1) = Poly(1);
    const std::vector<Poly> rhs{x * x + x, x};
    const auto s2 = solve_over_polynomial_ring(b, rhs);
    REQUIRE(s2);
    CHECK(matrix_times_column(b, *s2) == rhs);
}

TEST_CASE("polynomial solutions respect the degree bound") {
    // Solvable systems A X = b built from a planted small-degree solution;
    // the canonical solution's degree stays within n * max-degree of [A b].
    std::mt19937 rng(4104);
    std::uniform_int_distribution<int> coeff(-3, 3), deg(0, 2), dim(1, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const size_t n = dim(rng);
        MatrixPoly a(n, n);
        std::vector<Poly> planted(n);
        auto rand_poly = [&] {
            std::vector<Rational> cs(deg(rng) + 1);
            for (auto& c : cs) c = Rational(coeff(rng));
            return Poly(std::move(cs));
        };
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) a(i, j) = rand_poly();
        for (auto& p : planted) p = rand_poly();
        const std::vector<Poly> rhs = matrix_times_column(a, planted);

        const auto sol = solve_over_polynomial_ring(a, rhs);
        REQUIRE(sol);
        CHECK(matrix_times_column(a, *sol) == rhs);
        int max_deg = 0;
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) max_deg = std::max(max_deg, a(i, j).degree());
            max_deg = std::max(max_deg, rhs[i].degree());
        }
        for (const auto& p : *sol) CHECK(p.degree() <= static_cast<int>(n) * max_deg);
    }
}

TEST_CASE("strict Z-module chains have length exactly b on the doubling fixture") {
    // <2^b e1> adjoin 2^(b-1) e1, ..., e1: every step strict, length b,
    // meeting the chain bound ceil(r log2 B + (r/2) log2 r) = b at r = 1.
    for (int b = 1; b <= 16; ++b) {
        std::vector<std::vector<Int>> gens{{Int(1) << b, 0}};
        int strict = 0;
        for (int k = b - 1; k >= 0; --k) {
            const std::vector<Int> v{Int(1) << k, 0};
            CHECK_FALSE(module_membership<IntegerRing>(gens, v));
            gens.push_back(v);
            ++strict;
            CHECK(module_membership<IntegerRing>(gens, v));
        }
        CHECK(strict == b);
    }
}

TEST_CASE("random equal-rank Z-chains respect the logarithmic bound") {
    std::mt19937 rng(4105);
    const int bound_entries = 8;  // B
    std::uniform_int_distribution<int> entry(-bound_entries, bound_entries), small(-6, 6);
    for (int trial = 0; trial < 20; ++trial) {
        const size_t r = 2;
        std::vector<std::vector<Int>> gens;
        do {
            gens.assign(r, std::vector<Int>(r));
            for (auto& g : gens)
                for (auto& e : g) e = entry(rng);
        } while (determinant(matrix_z(gens)) == 0);

        const int bound = static_cast<int>(
            std::ceil(r * std::log2(bound_entries) + r / 2.0 * std::log2(r)));
        int strict = 0;
        for (int step = 0; step < 30; ++step) {
            std::vector<Int> v(r);
            for (auto& e : v) e = small(rng);
            if (!module_membership<IntegerRing>(gens, v)) {
                gens.push_back(v);
                ++strict;
            }
        }
        CHECK(strict <= bound);
    }
}

TEST_CASE("random equal-rank Q[x]-chains respect the degree bound") {
    // Strict chains inside the Q(x)-span of a generator matrix A are no
    // longer than degree(D_r(A)), itself at most d * r.
    std::mt19937 rng(4106);
    std::uniform_int_distribution<int> coeff(-2, 2), pdeg(0, 1);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<std::vector<Poly>> gens(2, std::vector<Poly>(2));
        auto rand_poly = [&](int max_deg) {
            std::vector<Rational> cs(pdeg(rng) + max_deg);
            for (auto& c : cs) c = Rational(coeff(rng));
            return Poly(std::move(cs));
        };
        MatrixPoly a(2, 2);
        int d = 0;
        do {
            for (size_t i = 0; i < 2; ++i)
                for (size_t j = 0; j < 2; ++j) {
                    gens[i][j] = rand_poly(2);
                    a(i, j) = gens[i][j];
                    d = std::max(d, gens[i][j].degree());
                }
        } while (determinant(a).is_zero());
        const size_t r = 2;
        const Poly dr = minor_gcd(a, r);
        REQUIRE_FALSE(dr.is_zero());

        const std::vector<std::vector<Poly>> base = gens;
        int strict = 0;
        for (int step = 0; step < 25; ++step) {
            // A Q[x] vector inside the Q(x)-span: a polynomial combination
            // of the original generators with the common factor of its
            // entries stripped.
            std::vector<Poly> v = combine(base, {rand_poly(1), rand_poly(1)});
            Poly g = Poly::gcd(v[0], v[1]);
            if (g.is_zero() || g.degree() < 1) continue;
            for (auto& e : v) e = Poly::divmod(e, g).first;
            if (!module_membership<PolynomialRing>(gens, v)) {
                gens.push_back(v);
                ++strict;
            }
        }
        CHECK(strict <= dr.degree());
        CHECK(dr.degree() <= static_cast<int>(r) * d);
    }
}
