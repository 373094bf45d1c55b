#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <vector>

#include "adjmat/errors.hpp"
#include "adjmat/ints.hpp"
#include "adjmat/matrix.hpp"
#include "adjmat/oracle.hpp"
#include "adjmat/paradj.hpp"
#include "adjmat/polynomial.hpp"
#include "adjmat/precondition.hpp"
#include "adjmat/rng.hpp"

using namespace adjmat;

namespace {

Matrix<Int> example_4x4() {
    return Matrix<Int>::from_rows({{0, 2, -2, 2}, {1, -3, 1, -2}, {3, 0, -3, 0},
                                   {-1, 3, -1, 1}});
}

} // namespace

TEST_CASE("pad_to_power_of_two layout") {
    const Matrix<Int> a =
        Matrix<Int>::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
    const Matrix<Int> p = pad_to_power_of_two(a);
    REQUIRE(p.rows() == 4);
    REQUIRE(p == Matrix<Int>::from_rows({{1, 2, 3, 0},
                                         {4, 5, 6, 0},
                                         {7, 8, 10, 0},
                                         {0, 0, 0, 1}}));
    REQUIRE(det_cofactor(p) == det_cofactor(a));

    // Orders that are already powers of two (and at least 2) pass through.
    REQUIRE(pad_to_power_of_two(example_4x4()) == example_4x4());
    const Matrix<Int> two = Matrix<Int>::from_rows({{1, 2}, {3, 4}});
    REQUIRE(pad_to_power_of_two(two) == two);

    // 1x1 matrices are padded to order 2, 5x5 to order 8.
    const Matrix<Int> one = Matrix<Int>::from_rows({{7}});
    REQUIRE(pad_to_power_of_two(one) ==
            Matrix<Int>::from_rows({{7, 0}, {0, 1}}));
    Rng rng(31);
    const Matrix<Int> five = random_int_matrix(rng, 5, 9);
    const Matrix<Int> p5 = pad_to_power_of_two(five);
    REQUIRE(p5.rows() == 8);
    REQUIRE(block(p5, 0, 0, 5, 5) == five);
    REQUIRE(det_cofactor(p5) == det_cofactor(five));

    REQUIRE_THROWS_AS(
        pad_to_power_of_two(Matrix<Int>(2, 3, std::vector<Int>(6))),
        DimensionError);
}

TEST_CASE("random_unimodular has determinant one") {
    for (std::size_t order : {std::size_t{2}, std::size_t{3}, std::size_t{4},
                              std::size_t{6}, std::size_t{8}}) {
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            const Matrix<Int> u = random_unimodular(order, seed, Int(0));
            REQUIRE(u.rows() == order);
            REQUIRE(det_bareiss(u) == Int(1));
        }
    }
    // The explicit row-operation variant as well.
    for (std::uint64_t seed : {5u, 6u}) {
        const Matrix<Int> u = random_unimodular(4, seed, Int(0), 3, 12);
        REQUIRE(det_bareiss(u) == Int(1));
    }
}

TEST_CASE("random_unimodular determinism and edge cases") {
    const Matrix<Int> a = random_unimodular(5, 99, Int(0));
    const Matrix<Int> b = random_unimodular(5, 99, Int(0));
    REQUIRE(a == b);
    const Matrix<Int> c = random_unimodular(5, 100, Int(0));
    REQUIRE(a != c);

    // Zero row operations yield the identity; order 1 is always identity.
    REQUIRE(random_unimodular(3, 7, Int(0), 2, 0) == identity<Int>(3));
    REQUIRE(random_unimodular(1, 7, Int(0)) == identity<Int>(1));

    REQUIRE_THROWS_AS(random_unimodular(0, 1, Int(0)), DimensionError);
    REQUIRE_THROWS_AS(random_unimodular(3, 1, Int(0), 0), Error);
}

TEST_CASE("random_unimodular over polynomials") {
    const Matrix<Polynomial> u = random_unimodular(4, 11, Polynomial(0));
    REQUIRE(det_bareiss(u) == Polynomial(1));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) REQUIRE(u.at(i, j).degree() <= 0);
}

TEST_CASE("adj_any on an admissible matrix needs no retries") {
    const Matrix<Int> a = example_4x4();
    const AdjAnyResult<Int> res = adj_any(a);
    REQUIRE(res.det == Int(6));
    REQUIRE(res.adj == adj_cofactor(a));
    REQUIRE(res.record.original_order == 4);
    REQUIRE(res.record.padded_order == 4);
    REQUIRE(res.record.attempts == 1);
    REQUIRE(res.record.transform == identity<Int>(4));
    REQUIRE(res.stats.recursion_calls == 4);
}

TEST_CASE("adj_any handles the identity matrix via preconditioning") {
    // Identity has a zero bottom-left block at every level, so the plain
    // run always fails and a unimodular transform must be applied.
    const AdjAnyResult<Int> res = adj_any(identity<Int>(3));
    REQUIRE(res.det == Int(1));
    REQUIRE(res.adj == identity<Int>(3));
    REQUIRE(res.record.original_order == 3);
    REQUIRE(res.record.padded_order == 4);
    REQUIRE(res.record.attempts >= 2);
    REQUIRE(res.record.transform != identity<Int>(4));
    REQUIRE(det_bareiss(res.record.transform) == Int(1));
}

TEST_CASE("adj_any on random odd orders matches the oracles") {
    Rng rng(60601);
    for (std::size_t order : {std::size_t{3}, std::size_t{5}, std::size_t{7}}) {
        for (int k = 0; k < 5; ++k) {
            const Matrix<Int> m = random_int_matrix(rng, order, 9);
            const AdjAnyResult<Int> res = adj_any(m, 16, 7 + k);
            REQUIRE(res.det == det_cofactor(m));
            REQUIRE(res.adj == adj_cofactor(m));
            REQUIRE(res.record.padded_order == (order == 3 ? 4 : 8));
        }
    }
}

TEST_CASE("adjugate recovery identity") {
    // adj(U P) U = adj(P) det(U) = adj(P) for unimodular U, which is what
    // lets a preconditioned run recover the original adjugate.
    Rng rng(8080);
    const Matrix<Int> p = pad_to_power_of_two(random_int_matrix(rng, 3, 9));
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const Matrix<Int> u = random_unimodular(4, seed, Int(0));
        REQUIRE(mat_mul(adj_cofactor(mat_mul(u, p)), u) == adj_cofactor(p));
    }
}

TEST_CASE("adj_any of singular matrices") {
    // Singular inputs are fine: the determinant is zero and the adjugate
    // is still the matrix of signed cofactors.
    const Matrix<Int> rank2 =
        Matrix<Int>::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
    const AdjAnyResult<Int> res = adj_any(rank2, 16);
    REQUIRE(res.det == Int(0));
    REQUIRE(res.adj == adj_cofactor(rank2));
    const Matrix<Int> zero3(3, 3, std::vector<Int>(9));
    REQUIRE(mat_mul(rank2, res.adj) == zero3);
}

TEST_CASE("adj_any of 1x1 matrices") {
    const AdjAnyResult<Int> res = adj_any(Matrix<Int>::from_rows({{5}}));
    REQUIRE(res.det == Int(5));
    REQUIRE(res.adj == Matrix<Int>::from_rows({{1}}));
    REQUIRE(res.record.padded_order == 2);

    const AdjAnyResult<Int> zero = adj_any(Matrix<Int>::from_rows({{0}}));
    REQUIRE(zero.det == Int(0));
    REQUIRE(zero.adj == Matrix<Int>::from_rows({{1}}));
}

TEST_CASE("adj_any over polynomials") {
    const Matrix<Polynomial> m = Matrix<Polynomial>::from_rows(
        {{Polynomial::from_coeffs({Int(0), Int(1)}), Polynomial(1)},
         {Polynomial(1), Polynomial::from_coeffs({Int(0), Int(1)})}});
    const AdjAnyResult<Polynomial> res = adj_any(m);
    REQUIRE(res.det == Polynomial::from_coeffs({Int(-1), Int(0), Int(1)}));
    REQUIRE(res.adj == adj_cofactor(m));
    REQUIRE(res.record.attempts == 1);

    // diag(x, x, x) forces padding and preconditioning retries.
    const Polynomial x = Polynomial::from_coeffs({Int(0), Int(1)});
    std::vector<Polynomial> d(9, Polynomial(0));
    d[0] = x;
    d[4] = x;
    d[8] = x;
    const Matrix<Polynomial> diag(3, 3, std::move(d));
    const AdjAnyResult<Polynomial> pres = adj_any(diag, 16);
    REQUIRE(pres.det == Polynomial::from_coeffs({Int(0), Int(0), Int(0), Int(1)}));
    REQUIRE(pres.adj == adj_cofactor(diag));
    REQUIRE(pres.record.attempts >= 2);
}

TEST_CASE("adj_any retries are deterministic in the seed") {
    const AdjAnyResult<Int> a = adj_any(identity<Int>(3), 8, 1234);
    const AdjAnyResult<Int> b = adj_any(identity<Int>(3), 8, 1234);
    REQUIRE(a.record.attempts == b.record.attempts);
    REQUIRE(a.record.transform == b.record.transform);
    REQUIRE(a.record.seed == 1234);
    REQUIRE(a.det == b.det);
    REQUIRE(a.adj == b.adj);
}

TEST_CASE("adj_any exhausts its retry budget") {
    try {
        (void)adj_any(identity<Int>(9), 0);
        FAIL("expected RetriesExhausted");
    } catch (const RetriesExhausted& e) {
        REQUIRE(e.attempts() == 1);
    }
    REQUIRE_THROWS_AS(adj_any(identity<Int>(3), -1), Error);
    REQUIRE_THROWS_AS(adj_any(Matrix<Int>(2, 3, std::vector<Int>(6))),
                      DimensionError);
}

TEST_CASE("adj_any honors options and trace") {
    ParAdjOptions<Int> opt;
    opt.mode = ExecMode::sequential;
    TraceNode<Int> tr;
    const AdjAnyResult<Int> res = adj_any(example_4x4(), 8, 0, opt, &tr);
    REQUIRE(res.det == Int(6));
    REQUIRE(tr.input == example_4x4());
    REQUIRE(tr.alpha == Int(-2));
    REQUIRE(tr.beta == Int(9));
}

TEST_CASE("larger identities recover with a wider budget") {
    const AdjAnyResult<Int> res = adj_any(identity<Int>(9), 30, 5);
    REQUIRE(res.det == Int(1));
    REQUIRE(res.adj == identity<Int>(9));
    REQUIRE(res.record.padded_order == 16);
    REQUIRE(res.record.attempts >= 2);
}
