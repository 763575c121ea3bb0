#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "massey/errors.hpp"
#include "massey/linalg.hpp"
#include "oracles/bareiss.hpp"

#include <random>

using namespace massey;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
    return m;
}

oracle::IntMatrix to_int(const Matrix& m) {
    oracle::IntMatrix out(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = std::stol(m(r, c).str());
    return out;
}

}  // namespace

TEST_CASE("scalar serialization is canonical") {
    CHECK(Scalar(2, 4).str() == "1/2");
    CHECK(Scalar(3, -6).str() == "-1/2");
    CHECK(Scalar(4, 2).str() == "2");
    CHECK(Scalar(0, 5).str() == "0");
    CHECK(Scalar::parse("-6/4") == Scalar(-3, 2));
    CHECK(Scalar::parse("+7").str() == "7");
    CHECK_THROWS_AS(Scalar::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse(""), std::invalid_argument);
    CHECK(Scalar::parse("123456789012345678901234567890/3").str() == "41152263004115226300411522630");
}

TEST_CASE("rref examples") {
    auto id = rref(Matrix::identity(2));
    CHECK(id.reduced == Matrix::identity(2));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1});

    auto z = rref(Matrix(3, 3));
    CHECK(z.reduced.is_zero());
    CHECK(z.pivots.empty());

    auto r = rref(Matrix{{2, 4}, {1, 2}});
    CHECK(r.reduced == Matrix{{1, 2}, {0, 0}});
    CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("solve examples") {
    Vector v{Scalar(3), Scalar(-1, 2)};
    CHECK(*solve(Matrix::identity(2), v) == v);
    CHECK_FALSE(solve(Matrix(2, 2), Vector{1, 0}).has_value());
    CHECK(*solve(Matrix{{1, 1}}, Vector{3}) == Vector{3, 0});
    CHECK_THROWS_AS(solve(Matrix{{1, 1}}, Vector{1, 2}), DimensionMismatch);
}

TEST_CASE("kernel examples") {
    CHECK(kernel_basis(Matrix::identity(3)).dim() == 0);
    CHECK(kernel_basis(Matrix(3, 3)).dim() == 3);
    Subspace k = kernel_basis(Matrix{{1, 1}});
    REQUIRE(k.dim() == 1);
    CHECK(k.basis()[0] == Vector{1, -1});
}

TEST_CASE("member and coset_meets examples") {
    Subspace s = Subspace::span(2, std::vector<Vector>{{0, 1}});
    CHECK(member(Vector{0, 0}, s));
    CHECK_FALSE(member(Vector{1, 0}, s));
    CHECK(member(Vector{1, 2}, Subspace::full(2)));
    CHECK_THROWS_AS(member(Vector{1, 2, 3}, s), DimensionMismatch);

    CHECK(coset_meets({Vector{0, 0}, s}, Subspace::zero(2)));
    CHECK_FALSE(coset_meets({Vector{1, 0}, Subspace::zero(2)}, Subspace::zero(2)));
    Subspace diff = Subspace::span(2, std::vector<Vector>{{1, -1}});
    CHECK(coset_meets({Vector{1, 0}, diff}, s));
    CHECK_THROWS_AS(coset_meets({Vector{1, 0, 0}, Subspace::zero(3)}, s), DimensionMismatch);
}

TEST_CASE("rref agrees with the fraction-free oracle on random integer matrices") {
    std::mt19937 rng(20261017);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<int> shape(1, 6);
        const std::size_t rows = shape(rng), cols = shape(rng);
        // Sparse-ish entries so rank deficiency shows up often.
        Matrix m = random_matrix(rng, rows, cols, -3, 3);
        if (trial % 3 == 0 && rows > 1)
            for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * Scalar(2) - m(rows - 2, c);

        auto mine = rref(m);
        auto theirs = oracle::fraction_free_rref(to_int(m));
        REQUIRE(mine.pivots == theirs.pivots);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                Scalar expected = r < theirs.pivots.size() ? Scalar(theirs.scaled[r][c], theirs.denominator) : Scalar(0);
                REQUIRE(mine.reduced(r, c) == expected);
            }
    }
}

TEST_CASE("linear-algebra invariants on random matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> shape(1, 5);
        Matrix a = random_matrix(rng, shape(rng), shape(rng), -2, 2);

        // rref is idempotent and row-equivalent (same row space).
        auto r1 = rref(a);
        CHECK(rref(r1.reduced).reduced == r1.reduced);
        CHECK(Subspace::image(a.transpose()) == Subspace::image(r1.reduced.transpose()));

        Vector b(a.rows());
        std::uniform_int_distribution<int> dist(-3, 3);
        for (auto& x : b) x = dist(rng);
        if (auto x = solve(a, b)) CHECK(a.apply(*x) == b);

        // member agrees with solvability of the basis-matrix system.
        Subspace col = Subspace::image(a);
        CHECK(member(b, col) == solve(a, b).has_value());

        const Subspace ker = kernel_basis(a);
        for (const auto& k : ker.basis()) CHECK(is_zero(a.apply(k)));
        CHECK(kernel_basis(a).dim() + rank(a) == a.cols());
    }
}

TEST_CASE("coset containment") {
    Subspace line = Subspace::span(3, std::vector<Vector>{{1, 1, 0}});
    AffineCoset small{Vector{1, 0, 0}, Subspace::zero(3)};
    AffineCoset big{Vector{0, -1, 0}, line};
    CHECK(small.subset_of(big));
    CHECK_FALSE(big.subset_of(small));
    CHECK(big.canonical().point == Vector{0, -1, 0});
    AffineCoset shifted{Vector{2, 1, 0}, line};
    CHECK(shifted.canonical().point == big.canonical().point);
}
