#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "tko/char_matrix.hpp"
#include "tko/examples.hpp"
#include "tko/pipeline.hpp"

using namespace tko;

namespace {

CharMatrixZ make_z(int n, int m, std::vector<std::vector<long long>> rows) {
    CharMatrixZ L;
    L.n = n;
    L.m = m;
    for (auto& r : rows) {
        std::vector<Integer> row(r.begin(), r.end());
        L.a.push_back(std::move(row));
    }
    return L;
}

SimplicialComplex square_dual() { return validate_complex({{0, 1}, {1, 2}, {2, 3}, {0, 3}}, 4, 2); }

// cofactor-expansion oracle for the Bareiss determinant
Integer det_naive(const std::vector<std::vector<Integer>>& a) {
    int n = int(a.size());
    if (n == 1) return a[0][0];
    Integer d = 0;
    for (int c = 0; c < n; ++c) {
        std::vector<std::vector<Integer>> sub;
        for (int r = 1; r < n; ++r) {
            std::vector<Integer> row;
            for (int cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(a[r][cc]);
            sub.push_back(std::move(row));
        }
        Integer term = a[0][c] * det_naive(sub);
        d += (c % 2 == 0) ? term : -term;
    }
    return d;
}

}  // namespace

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + int(rng() % 5);
        std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
        for (auto& row : a)
            for (auto& v : row) v = entry(rng);
        REQUIRE(det_bareiss(a) == det_naive(a));
    }
}

TEST_CASE("the twisted square lambda is a valid characteristic function") {
    auto K = square_dual();
    auto L = make_z(2, 4, {{0, 1, -1, 1}, {1, 0, 1, -2}});
    REQUIRE_NOTHROW(validate_integral(K, L));
    auto L2 = reduce_mod2(L, K);
    std::vector<std::vector<int>> expect = {{0, 1, 1, 1}, {1, 0, 1, 0}};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 4; ++c) REQUIRE(L2.rows.get(r, c) == (expect[r][c] == 1));
}

TEST_CASE("the product lambda on the square is valid") {
    auto K = square_dual();
    auto L = make_z(2, 4, {{1, 0, 1, 0}, {0, 1, 0, 1}});
    REQUIRE_NOTHROW(validate_integral(K, L));
}

TEST_CASE("a non-unimodular facet minor is reported at the lowest facet") {
    auto K = square_dual();
    auto L = make_z(2, 4, {{1, 0, 1, 0}, {0, 1, 0, 2}});

    // oracle: enumerate all four facet minors; the first failure in sorted
    // facet order is {1,4} with determinant +-2
    std::vector<Face> failing;
    for (const auto& fac : K.facets) {
        std::vector<std::vector<Integer>> minor(2, std::vector<Integer>(2));
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) minor[r][c] = L.a[r][fac[c]];
        Integer d = det_naive(minor);
        if (d != 1 && d != -1) failing.push_back(fac);
    }
    REQUIRE(!failing.empty());
    REQUIRE(failing.front() == Face{0, 3});

    try {
        validate_integral(K, L);
        FAIL("expected SingularAtFacet");
    } catch (const Error& e) {
        REQUIRE(e.code() == errc::singular_at_facet);
        REQUIRE(std::string(e.what()).find("{1,4}") != std::string::npos);
        REQUIRE((std::string(e.what()).find("2") != std::string::npos ||
                 std::string(e.what()).find("-2") != std::string::npos));
    }
}

TEST_CASE("the cube's mod-2 lambda passes the facet-minor check") {
    auto spec = example_cube();
    auto K = validate_complex(spec.facets, spec.m, spec.n);
    REQUIRE_NOTHROW(validate_lambda(spec, K));
}

TEST_CASE("a singular raw mod-2 matrix is rejected") {
    auto K = square_dual();
    F2Matrix raw(2, 4);
    // columns 1 and 2 equal: facet {1,2} minor is singular
    raw.set(0, 0, true);
    raw.set(0, 1, true);
    raw.set(1, 2, true);
    raw.set(1, 3, true);
    try {
        reduce_mod2(raw, K);
        FAIL("expected SingularAtFacetMod2");
    } catch (const Error& e) {
        REQUIRE(e.code() == errc::singular_at_facet_mod2);
    }
}

TEST_CASE("valid integral lambda always reduces mod 2") {
    // unimodularity propagation: odd determinants stay invertible
    for (const auto& e : bundled_examples()) {
        if (e.spec.lambda_mod2) continue;
        auto K = validate_complex(e.spec.facets, e.spec.m, e.spec.n);
        CharMatrixZ L;
        L.n = e.spec.n;
        L.m = e.spec.m;
        for (const auto& row : e.spec.lambda) L.a.emplace_back(row.begin(), row.end());
        validate_integral(K, L);
        REQUIRE_NOTHROW(reduce_mod2(L, K));
    }
}

TEST_CASE("dimension mismatch is rejected") {
    auto K = square_dual();
    auto L = make_z(2, 3, {{1, 0, 1}, {0, 1, 0}});
    REQUIRE_THROWS_AS(validate_integral(K, L), Error);
}
