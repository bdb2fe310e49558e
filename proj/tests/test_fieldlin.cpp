#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "crysalite/fieldlin.hpp"

using namespace crysalite;

namespace {

// Rank by enumerating the row space: |span| = p^rank.
std::size_t brute_force_rank(const FpMatrix& m) {
    const std::uint32_t p = m.prime().value();
    std::set<std::vector<std::uint32_t>> span;
    std::vector<std::uint32_t> coeffs(m.rows(), 0);
    while (true) {
        std::vector<std::uint32_t> v(m.cols(), 0);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) v[c] = (v[c] + coeffs[r] * m.at(r, c)) % p;
        span.insert(v);
        std::size_t k = 0;
        while (k < coeffs.size() && ++coeffs[k] == p) coeffs[k++] = 0;
        if (k == coeffs.size()) break;
    }
    std::size_t rank = 0;
    for (std::size_t size = 1; size < span.size(); size *= p) ++rank;
    return rank;
}

FpMatrix random_matrix(Prime p, std::size_t rows, std::size_t cols, std::mt19937& rng, int zero_bias) {
    FpMatrix m(p, rows, cols);
    std::uniform_int_distribution<std::uint32_t> val(0, p.value() - 1);
    std::uniform_int_distribution<int> coin(0, 9);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (coin(rng) >= zero_bias) m.set(r, c, val(rng));
    return m;
}

}  // namespace

TEST_CASE("prime validation") {
    CHECK_NOTHROW(Prime(2));
    CHECK_NOTHROW(Prime(7));
    CHECK_THROWS_AS(Prime(1), std::invalid_argument);
    CHECK_THROWS_AS(Prime(9), std::invalid_argument);
    CHECK_THROWS_AS(Prime(0), std::invalid_argument);
    CHECK(Prime(5).reduce(-1) == 4);
    CHECK(Prime(7).mul(Prime(7).inv(3), 3) == 1);
}

TEST_CASE("rank and kernel examples") {
    const Prime p5(5), p7(7);
    const auto id = FpMatrix::identity(p5, 3);
    CHECK(rank(id) == 3);
    CHECK(kernel_dim(id) == 0);

    const FpMatrix zero(p7, 2, 4);
    CHECK(rank(zero) == 0);
    CHECK(kernel_dim(zero) == 4);

    const FpMatrix dependent(p5, {{1, 2}, {2, 4}});
    CHECK(rank(dependent) == 1);
    CHECK(kernel_dim(dependent) == 1);
    CHECK(brute_force_rank(dependent) == 1);
}

TEST_CASE("empty matrices") {
    const Prime p(3);
    CHECK(rank(FpMatrix(p, 0, 0)) == 0);
    CHECK(rank(FpMatrix(p, 0, 5)) == 0);
    CHECK(kernel_dim(FpMatrix(p, 0, 5)) == 5);
    CHECK(kernel_dim(FpMatrix(p, 4, 0)) == 0);
}

TEST_CASE("entries are reduced to canonical residues") {
    const FpMatrix m(Prime(5), {{-1, 12}, {5, 7}});
    CHECK(m.at(0, 0) == 4);
    CHECK(m.at(0, 1) == 2);
    CHECK(m.at(1, 0) == 0);
    CHECK(m.at(1, 1) == 2);
}

TEST_CASE("row_reduce gives reduced echelon form with first-nonzero pivots") {
    const FpMatrix m(Prime(7), {{0, 2, 4}, {3, 1, 1}, {3, 3, 5}});
    const auto ef = row_reduce(m);
    REQUIRE(ef.pivot_cols == std::vector<std::size_t>{0, 1});
    CHECK(ef.reduced.at(0, 0) == 1);
    CHECK(ef.reduced.at(1, 0) == 0);
    CHECK(ef.reduced.at(0, 1) == 0);
    CHECK(ef.reduced.at(1, 1) == 1);
    CHECK(ef.reduced.at(2, 2) == 0);
    CHECK(row_reduce(m).reduced == ef.reduced);
}

TEST_CASE("property: rank against brute force, transpose, rank-nullity, p = 2 included") {
    std::mt19937 rng(20261017);
    for (std::uint32_t pv : {2u, 3u, 5u}) {
        const Prime p(pv);
        for (int trial = 0; trial < 60; ++trial) {
            std::uniform_int_distribution<std::size_t> dim(0, pv == 5 ? 3 : 4);
            const auto m = random_matrix(p, dim(rng), dim(rng) + 1, rng, trial % 7);
            const auto r = rank(m);
            CHECK(r == brute_force_rank(m));
            CHECK(r == rank(m.transposed()));
            CHECK(r + kernel_dim(m) == m.cols());
            CHECK(r <= std::min(m.rows(), m.cols()));
            CHECK(row_reduce(m).pivot_cols.size() == r);
        }
    }
}

TEST_CASE("property: larger random matrices, transpose symmetry and determinism") {
    std::mt19937 rng(7);
    const Prime p(101);
    for (int trial = 0; trial < 20; ++trial) {
        const auto m = random_matrix(p, 40 + trial, 55 - trial, rng, trial % 9);
        const auto r = rank(m);
        CHECK(r == rank(m.transposed()));
        CHECK(r == rank(m));
        CHECK(r == row_reduce(m).pivot_cols.size());
    }
}

TEST_CASE("sparse rank agrees with dense rank") {
    std::mt19937 rng(99);
    for (std::uint32_t pv : {2u, 3u, 7u, 101u}) {
        const Prime p(pv);
        for (int trial = 0; trial < 40; ++trial) {
            const auto m = random_matrix(p, 1 + trial % 13, 1 + (trial * 7) % 11, rng, 3 + trial % 7);
            CHECK(sparse_rank(p, m.rows(), sparse_columns(m)) == rank(m));
            CHECK(sparse_rank(p, m.cols(), sparse_columns(m.transposed())) == rank(m));
        }
    }
    CHECK(sparse_rank(Prime(5), 3, {}) == 0);
    CHECK(sparse_rank(Prime(5), 3, {{}, {{1, 2}}, {{1, 4}}}) == 1);
    CHECK_THROWS_AS(sparse_rank(Prime(5), 2, {{{2, 1}}}), std::invalid_argument);
}
