#include <catch2/catch_amalgamated.hpp>

#include "adjmat/ints.hpp"
#include "adjmat/matrix.hpp"
#include "adjmat/polynomial.hpp"
#include "adjmat/rng.hpp"

using namespace adjmat;

namespace {

Matrix<Int> example_4x4() {
    return Matrix<Int>::from_rows({{0, 2, -2, 2}, {1, -3, 1, -2}, {3, 0, -3, 0},
                                   {-1, 3, -1, 1}});
}

} // namespace

TEST_CASE("matrix construction and access") {
    const Matrix<Int> m = example_4x4();
    REQUIRE(m.rows() == 4);
    REQUIRE(m.cols() == 4);
    REQUIRE(m.square());
    REQUIRE(m.at(0, 1) == Int(2));
    REQUIRE(m.at(3, 0) == Int(-1));
    REQUIRE(m(2, 2) == Int(-3));
    REQUIRE_THROWS_AS(m.at(4, 0), DimensionError);
    REQUIRE_THROWS_AS(m.at(0, 4), DimensionError);

    REQUIRE_THROWS_AS(Matrix<Int>::from_rows({{1, 2}, {3}}), DimensionError);
    REQUIRE_THROWS_AS(Matrix<Int>::from_rows({}), DimensionError);
    REQUIRE_THROWS_AS(Matrix<Int>(2, 2, {Int(1), Int(2), Int(3)}), DimensionError);
}

TEST_CASE("block split and join round trip") {
    const Matrix<Int> m = example_4x4();
    const auto blk = split_blocks(m);
    REQUIRE(blk.a == Matrix<Int>::from_rows({{0, 2}, {1, -3}}));
    REQUIRE(blk.c == Matrix<Int>::from_rows({{-2, 2}, {1, -2}}));
    REQUIRE(blk.b == Matrix<Int>::from_rows({{3, 0}, {-1, 3}}));
    REQUIRE(blk.d == Matrix<Int>::from_rows({{-3, 0}, {-1, 1}}));
    REQUIRE(join_blocks(blk.a, blk.c, blk.b, blk.d) == m);

    REQUIRE_THROWS_AS(split_blocks(Matrix<Int>::from_rows({{1, 2, 3}, {4, 5, 6},
                                                           {7, 8, 9}})),
                      DimensionError);
    REQUIRE_THROWS_AS(block(m, 3, 3, 2, 2), DimensionError);
}

TEST_CASE("matrix multiplication") {
    // B* times D from the worked 4x4 example
    const Matrix<Int> bstar = Matrix<Int>::from_rows({{3, 0}, {1, 3}});
    const Matrix<Int> d = Matrix<Int>::from_rows({{-3, 0}, {-1, 1}});
    RunStats stats;
    REQUIRE(mat_mul(bstar, d, &stats) == Matrix<Int>::from_rows({{-9, 0}, {-6, 3}}));
    REQUIRE(stats.matmul_count == 1);

    const Matrix<Int> astar = Matrix<Int>::from_rows({{-3, -2}, {-1, 0}});
    const Matrix<Int> c = Matrix<Int>::from_rows({{-2, 2}, {1, -2}});
    REQUIRE(mat_mul(astar, c) == Matrix<Int>::from_rows({{4, -2}, {2, -2}}));

    REQUIRE_THROWS_AS(mat_mul(bstar, Matrix<Int>::from_rows({{1, 2, 3}, {4, 5, 6},
                                                             {7, 8, 9}})),
                      DimensionError);

    SECTION("associativity on random matrices") {
        Rng rng(31);
        for (int t = 0; t < 20; ++t) {
            const auto x = random_int_matrix(rng, 3, 9);
            const auto y = random_int_matrix(rng, 3, 9);
            const auto z = random_int_matrix(rng, 3, 9);
            REQUIRE(mat_mul(mat_mul(x, y), z) == mat_mul(x, mat_mul(y, z)));
        }
    }
}

TEST_CASE("matrix addition, subtraction, scaling") {
    const Matrix<Int> n = Matrix<Int>::from_rows({{-9, 0}, {-6, 3}});
    const Matrix<Int> m = Matrix<Int>::from_rows({{4, -2}, {2, -2}});
    // F = alpha*N - beta*M with alpha = -2, beta = 9
    const Matrix<Int> f = mat_sub(scalar_mul(Int(-2), n), scalar_mul(Int(9), m));
    REQUIRE(f == Matrix<Int>::from_rows({{-18, 18}, {-6, 12}}));
    REQUIRE(mat_add(n, mat_neg(n)) ==
            Matrix<Int>(2, 2, {Int(0), Int(0), Int(0), Int(0)}));
    REQUIRE_THROWS_AS(mat_add(n, Matrix<Int>::from_rows({{1, 2, 3}, {4, 5, 6}})),
                      DimensionError);
}

TEST_CASE("scalar exact division of a matrix") {
    // H = (F* A*) / (alpha * gamma) from the worked example
    const Matrix<Int> fstar_astar =
        Matrix<Int>::from_rows({{-18, -24}, {0, -12}});
    RunStats stats;
    REQUIRE(scalar_exact_div(fstar_astar, Int(-2), &stats) ==
            Matrix<Int>::from_rows({{9, 12}, {0, 6}}));
    REQUIRE(stats.exact_div_count == 4);

    try {
        scalar_exact_div(Matrix<Int>::from_rows({{2, 4}, {6, 3}}), Int(2));
        FAIL("expected NotDivisible");
    } catch (const NotDivisible& e) {
        REQUIRE(e.has_position());
        REQUIRE(e.row() == 1);
        REQUIRE(e.col() == 1);
    }
}

TEST_CASE("identity and scalar-identity predicates") {
    const auto id3 = identity<Int>(3);
    REQUIRE(id3 == identity_like<Int>(3, Int(0)));
    REQUIRE(is_scalar_multiple_of_identity(scalar_mul(Int(6), id3), Int(6)));
    REQUIRE_FALSE(is_scalar_multiple_of_identity(example_4x4(), Int(6)));
    const auto idp = identity_like<Polynomial>(2, Polynomial::parse("x"));
    REQUIRE(idp.at(0, 0) == Polynomial(1));
    REQUIRE(is_zero(idp.at(0, 1)));
}

TEST_CASE("transpose") {
    const Matrix<Int> m = example_4x4();
    REQUIRE(transpose(transpose(m)) == m);
    REQUIRE(transpose(m).at(0, 3) == m.at(3, 0));
    Rng rng(13);
    const auto x = random_int_matrix(rng, 3, 9);
    const auto y = random_int_matrix(rng, 3, 9);
    REQUIRE(transpose(mat_mul(x, y)) == mat_mul(transpose(y), transpose(x)));
}

TEST_CASE("polynomial matrices work the same way") {
    const Polynomial x = Polynomial::parse("x");
    const Matrix<Polynomial> m(2, 2, {x, Polynomial(1), Polynomial(1), x});
    const auto sq = mat_mul(m, m);
    REQUIRE(sq.at(0, 0) == Polynomial::parse("x^2+1"));
    REQUIRE(sq.at(0, 1) == Polynomial::parse("2*x"));
    REQUIRE(scalar_exact_div(scalar_mul(x, m), x) == m);
}

TEST_CASE("matrix formatting") {
    REQUIRE(format_matrix(Matrix<Int>::from_rows({{1, -2}, {3, 4}})) == "1 -2\n3 4");
    const auto lines = format_rows(example_4x4());
    REQUIRE(lines.size() == 4);
    REQUIRE(lines[0] == "0 2 -2 2");
    REQUIRE(lines[3] == "-1 3 -1 1");
}
