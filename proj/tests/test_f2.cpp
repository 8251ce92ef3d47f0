#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "tko/f2.hpp"

using namespace tko;

namespace {

F2Matrix random_matrix(int rows, int cols, std::mt19937& rng, double density = 0.5) {
    F2Matrix a(rows, cols);
    std::bernoulli_distribution bit(density);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (bit(rng)) a.set(r, c, true);
    return a;
}

F2Vector random_vector(int n, std::mt19937& rng) {
    F2Vector v(n);
    std::bernoulli_distribution bit(0.5);
    for (int i = 0; i < n; ++i)
        if (bit(rng)) v.set(i, true);
    return v;
}

}  // namespace

TEST_CASE("vector basics across word boundaries") {
    F2Vector v(130);
    v.set(0, true);
    v.set(64, true);
    v.set(129, true);
    REQUIRE(v.popcount() == 3);
    REQUIRE(v.leading() == 0);
    v.flip(0);
    REQUIRE(v.leading() == 64);
    REQUIRE(v.support() == std::vector<int>{64, 129});
    F2Vector w(130);
    w.set(64, true);
    v ^= w;
    REQUIRE(v.support() == std::vector<int>{129});
    REQUIRE(!v.is_zero());
    v.flip(129);
    REQUIRE(v.is_zero());
    REQUIRE(v.leading() == -1);
}

TEST_CASE("dot product is the mod-2 pairing") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + int(rng() % 100);
        auto a = random_vector(n, rng), b = random_vector(n, rng);
        bool expect = false;
        for (int i = 0; i < n; ++i) expect ^= (a.get(i) && b.get(i));
        REQUIRE(a.dot(b) == expect);
    }
}

TEST_CASE("rank plus nullity equals the number of columns") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = 1 + int(rng() % 12), cols = 1 + int(rng() % 12);
        auto a = random_matrix(rows, cols, rng);
        auto ker = kernel_basis(a);
        REQUIRE(a.rank() + ker.rows() == cols);
        for (int i = 0; i < ker.rows(); ++i) REQUIRE(a.apply(ker.row(i)).is_zero());
        // kernel rows are independent
        REQUIRE(ker.rank() == ker.rows());
    }
}

TEST_CASE("solve finds solutions exactly when they exist") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 120; ++trial) {
        int rows = 1 + int(rng() % 10), cols = 1 + int(rng() % 10);
        auto a = random_matrix(rows, cols, rng);
        // consistent by construction
        auto x = random_vector(cols, rng);
        auto b = a.apply(x);
        auto sol = solve(a, b);
        REQUIRE(sol.has_value());
        REQUIRE(a.apply(*sol) == b);
    }
    // inconsistent system
    F2Matrix a(2, 2);
    a.set(0, 0, true);
    a.set(1, 0, true);  // both rows = e0
    F2Vector b(2);
    b.set(0, true);  // b = (1, 0)
    REQUIRE(!solve(a, b).has_value());
}

TEST_CASE("row reducer yields canonical coset representatives") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        int cols = 2 + int(rng() % 14);
        RowReducer red(cols);
        std::vector<F2Vector> gens;
        for (int i = 0; i < cols / 2 + 1; ++i) {
            auto v = random_vector(cols, rng);
            gens.push_back(v);
            red.add(v);
        }
        // representative is invariant under adding row-space elements
        auto v = random_vector(cols, rng);
        auto rep = red.reduce(v);
        for (int k = 0; k < 5; ++k) {
            F2Vector shifted = v;
            for (const auto& g : gens)
                if (rng() % 2) shifted ^= g;
            REQUIRE(red.reduce(shifted) == rep);
        }
        REQUIRE(red.reduce(rep) == rep);            // idempotent
        REQUIRE(red.contains(red.reduce(v) ^ v));   // v - rep lies in the row space
        // free columns + pivots partition the columns
        REQUIRE(int(red.free_columns().size()) + red.rank() == cols);
    }
}

TEST_CASE("reduce is linear modulo the row space") {
    std::mt19937 rng(23);
    int cols = 16;
    RowReducer red(cols);
    for (int i = 0; i < 6; ++i) red.add(random_vector(cols, rng));
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_vector(cols, rng), b = random_vector(cols, rng);
        REQUIRE(red.reduce(a ^ b) == (red.reduce(a) ^ red.reduce(b)));
    }
}

TEST_CASE("transpose and submatrix") {
    std::mt19937 rng(29);
    auto a = random_matrix(7, 9, rng);
    auto t = a.transposed();
    for (int r = 0; r < 7; ++r)
        for (int c = 0; c < 9; ++c) REQUIRE(a.get(r, c) == t.get(c, r));
    auto sub = a.submatrix_columns({0, 4, 8});
    for (int r = 0; r < 7; ++r) {
        REQUIRE(sub.get(r, 0) == a.get(r, 0));
        REQUIRE(sub.get(r, 1) == a.get(r, 4));
        REQUIRE(sub.get(r, 2) == a.get(r, 8));
    }
    REQUIRE(a.rank() == t.rank());
}
