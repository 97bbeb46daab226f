#include <doctest.h>

#include <random>

#include "weylinv/linalg.hpp"

using namespace weylinv;

namespace {

RationalMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
    RationalMatrix M(rows, cols);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) M.at(i, j) = d(rng);
    return M;
}

}  // namespace

TEST_CASE("rref basics") {
    CHECK(rref(RationalMatrix::identity(3)).rank == 3);
    CHECK(rref(RationalMatrix(2, 5)).rank == 0);
    RationalMatrix M = RationalMatrix::from_rows({{1, 2}, {2, 4}});
    RrefResult r = rref(M);
    CHECK(r.rank == 1);
    CHECK(r.pivot_cols == std::vector<int>{0});
    CHECK(r.reduced.at(0, 0) == 1);
    CHECK(r.reduced.at(0, 1) == 2);
}

TEST_CASE("nullspace basics") {
    CHECK(nullspace(RationalMatrix::identity(2)).empty());
    CHECK(nullspace(RationalMatrix(1, 3)).size() == 3);
    auto basis = nullspace(RationalMatrix::from_rows({{1, -1}}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] == basis[0][1]);
    CHECK(basis[0][0] != 0);
}

TEST_CASE("in_span basics and certificate") {
    RationalMatrix cols = RationalMatrix::from_columns({{1, 0}, {0, 1}});
    SpanResult r = in_span({1, 1}, cols);
    CHECK(r.in_span);
    CHECK(r.coeffs == std::vector<Rat>{1, 1});
    CHECK_FALSE(in_span({1, 0}, RationalMatrix::from_columns({{0, 1}})).in_span);
    CHECK(in_span({}, RationalMatrix(0, 0)).in_span);
    CHECK(in_span({0, 0}, RationalMatrix(2, 0)).in_span);
    CHECK_FALSE(in_span({1, 0}, RationalMatrix(2, 0)).in_span);
}

TEST_CASE("randomized rank/nullspace/in_span properties") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        RationalMatrix M = random_matrix(rng, 3 + rng() % 4, 3 + rng() % 4);
        RrefResult r = rref(M);
        CHECK(r.rank == rref(M.transpose()).rank);
        for (const auto& v : nullspace(M)) {
            for (const Rat& x : M.apply(v)) CHECK(x == 0);
        }
        // a random column combination must be certified in span
        std::vector<Rat> combo(M.rows(), 0);
        std::vector<Rat> weights(M.cols());
        for (int j = 0; j < M.cols(); ++j) weights[j] = int(rng() % 5) - 2;
        for (int i = 0; i < M.rows(); ++i)
            for (int j = 0; j < M.cols(); ++j) combo[i] += M.at(i, j) * weights[j];
        SpanResult sr = in_span(combo, M);
        REQUIRE(sr.in_span);
        std::vector<Rat> check(M.rows(), 0);
        for (int i = 0; i < M.rows(); ++i)
            for (int j = 0; j < M.cols(); ++j) check[i] += M.at(i, j) * sr.coeffs[j];
        CHECK(check == combo);
    }
}

TEST_CASE("SparseReducer rank matches dense rref") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 15; ++trial) {
        int rows = 4 + rng() % 5, cols = 4 + rng() % 5;
        RationalMatrix M = random_matrix(rng, rows, cols);
        SparseReducer red;
        for (int i = 0; i < rows; ++i) {
            std::vector<Rat> row(cols);
            for (int j = 0; j < cols; ++j) row[j] = M.at(i, j);
            red.add(sparse_from_dense(row));
        }
        CHECK(red.rank() == rref(M).rank);
        // every original row is in the span
        for (int i = 0; i < rows; ++i) {
            std::vector<Rat> row(cols);
            for (int j = 0; j < cols; ++j) row[j] = M.at(i, j);
            CHECK(red.contains(sparse_from_dense(row)));
        }
    }
}

TEST_CASE("full_reduce leaves only non-pivot columns") {
    std::mt19937 rng(13);
    SparseReducer red;
    red.add({{0, 1}, {2, 3}});
    red.add({{1, 2}, {2, 1}, {4, 1}});
    auto pivots = red.pivot_cols();
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rat> v(6);
        for (auto& x : v) x = int(rng() % 7) - 3;
        SparseVec r = red.full_reduce(sparse_from_dense(v));
        for (auto& [col, c] : r) {
            CHECK(c != 0);
            for (int p : pivots) CHECK(col != p);
        }
        // residual differs from v by something in the row span
        SparseVec diff = sparse_axpy(sparse_from_dense(v), -1, r);
        CHECK(red.contains(diff));
    }
}

TEST_CASE("sparse_axpy merges exactly") {
    SparseVec v{{0, 1}, {2, 2}};
    SparseVec w{{0, 1}, {1, 5}, {2, -1}};
    SparseVec r = sparse_axpy(v, 2, w);
    CHECK(r == SparseVec{{0, 3}, {1, 10}});
}
