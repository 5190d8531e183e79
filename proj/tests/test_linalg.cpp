#include <doctest.h>

#include "sleib/linalg.hpp"

using namespace sleib;

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = static_cast<int>(rows.begin()->size());
    Matrix m(r, c);
    int i = 0;
    for (auto& row : rows) {
        int j = 0;
        for (long v : row) m.at(i, j++) = GaussianRational(v);
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("solve_linear on a nonsingular system") {
    Matrix m = from_rows({{2, 1, -1}, {-3, -1, 2}, {-2, 1, 2}});
    Vec b = {GaussianRational(8), GaussianRational(-11), GaussianRational(-3)};
    Vec x = solve_linear(m, b);
    CHECK(x[0] == GaussianRational(2));
    CHECK(x[1] == GaussianRational(3));
    CHECK(x[2] == GaussianRational(-1));
    CHECK(m.mul(x) == b);
}

TEST_CASE("singular systems throw") {
    Matrix m = from_rows({{1, 2}, {2, 4}});
    Vec b = {GaussianRational(1), GaussianRational(2)};
    CHECK_THROWS_AS(solve_linear(m, b), SingularMatrix);
    CHECK_THROWS_AS(invert(m), SingularMatrix);
}

TEST_CASE("invert over the Gaussian rationals") {
    Matrix m(2, 2);
    m.at(0, 0) = parse_scalar("1+i");
    m.at(0, 1) = parse_scalar("1/2");
    m.at(1, 0) = parse_scalar("-i");
    m.at(1, 1) = parse_scalar("3");
    Matrix inv = invert(m);
    // m * inv == identity, checked column by column
    for (int j = 0; j < 2; ++j) {
        Vec col = {inv.at(0, j), inv.at(1, j)};
        Vec e = m.mul(col);
        for (int i = 0; i < 2; ++i)
            CHECK(e[i] == GaussianRational(i == j ? 1 : 0));
    }
}

TEST_CASE("rank") {
    CHECK(rank(from_rows({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}})) == 2);
    CHECK(rank(from_rows({{0, 0}, {0, 0}})) == 0);
    CHECK(rank(Matrix::identity(4)) == 4);
    CHECK(rank(from_rows({{1, 0}, {0, 1}, {1, 1}})) == 2);
}

TEST_CASE("rank_in_place leaves reduced row echelon form") {
    Matrix m = from_rows({{2, 4, 0}, {1, 2, 1}});
    CHECK(rank_in_place(m) == 2);
    CHECK(m.at(0, 0) == GaussianRational(1));
    CHECK(m.at(0, 1) == GaussianRational(2));
    CHECK(m.at(0, 2) == GaussianRational(0));
    CHECK(m.at(1, 0) == GaussianRational(0));
    CHECK(m.at(1, 1) == GaussianRational(0));
    CHECK(m.at(1, 2) == GaussianRational(1));
}

TEST_CASE("dimension mismatches throw") {
    Matrix m(2, 3);
    CHECK_THROWS_AS(solve_linear(m, Vec(2)), DimensionMismatch);
    CHECK_THROWS_AS(invert(m), DimensionMismatch);
    CHECK_THROWS_AS(m.mul(Vec(2)), DimensionMismatch);
}
