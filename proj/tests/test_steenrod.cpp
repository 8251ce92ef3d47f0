#include <catch2/catch_amalgamated.hpp>

#include "tko/examples.hpp"
#include "tko/pipeline.hpp"
#include "tko/steenrod.hpp"

using namespace tko;

namespace {

GradedAlgebraF2 build_ring(const ProblemSpec& spec, MonomialOrder order = MonomialOrder::standard) {
    auto K = validate_complex(spec.facets, spec.m, spec.n);
    return GradedAlgebraF2::build(K, validate_lambda(spec, K), order);
}

}  // namespace

TEST_CASE("Sq2 is the cup square on degree-2 classes") {
    auto A = build_ring(example_simplex(2));
    auto v = A.generator(0);
    REQUIRE(sq2_class(A, v) == A.multiply(v, v));
    REQUIRE(!sq2_class(A, v).is_zero());
}

TEST_CASE("square example: Sq2(v2 + v4) = v2^2 + v4^2 = 0") {
    auto A = build_ring(example_square_cp2cp2());
    CohomologyClass x = A.zero_class(2);
    x.coords ^= A.generator(1).coords;
    x.coords ^= A.generator(3).coords;
    REQUIRE(sq2_class(A, x).is_zero());
    // but each summand individually hits the top class
    REQUIRE(!sq2_class(A, A.generator(1)).is_zero());
}

TEST_CASE("cube example: Sq2 v2 = v1 v2 and the operator ranks") {
    auto A = build_ring(example_cube());
    auto v = [&](int i) { return A.generator(i - 1); };
    REQUIRE(sq2_class(A, v(2)) == A.multiply(v(1), v(2)));
    auto op = sq2_operator(A);
    REQUIRE(op.mats[1].rank() == 2);  // v1 -> 0, v2 -> v1v2, v3 -> v1v3
    REQUIRE(op.mats[2].rank() == 0);  // all degree-4 classes map to zero
    REQUIRE(op.mats[0].rank() == 0);
    REQUIRE(sq2_class(A, v(1)).is_zero());
}

TEST_CASE("Sq2 homology dimensions") {
    SECTION("truncated polynomial ring (CP^2)") {
        auto A = build_ring(example_simplex(2));
        auto hom = sq2_homology(A, sq2_operator(A));
        REQUIRE(hom.dims == std::vector<int>{1, 0, 0});
    }
    SECTION("cube") {
        auto A = build_ring(example_cube());
        auto hom = sq2_homology(A, sq2_operator(A));
        REQUIRE(hom.dims == std::vector<int>{1, 1, 1, 1});
    }
    SECTION("zero operator leaves the full dimensions") {
        auto A = build_ring(example_square_product());
        auto op = sq2_operator(A);
        // CP^1 x CP^1 has Sq2 = 0 everywhere: generators square to zero
        for (const auto& mt : op.mats) REQUIRE(mt.is_zero());
        auto hom = sq2_homology(A, op);
        for (int k = 0; k <= A.n(); ++k) REQUIRE(hom.dims[k] == A.dim(2 * k));
    }
}

TEST_CASE("Sq2 composed with Sq2 vanishes on every bundled example") {
    for (const auto& e : bundled_examples()) {
        auto A = build_ring(e.spec);
        auto op = sq2_operator(A);  // internal chain-complex assertion
        for (int k = 0; k + 1 <= A.n(); ++k) {
            // explicit matrix product
            for (int j = 0; j < op.mats[k].cols(); ++j) {
                F2Vector col(op.mats[k].rows());
                for (int r = 0; r < op.mats[k].rows(); ++r) col.set(r, op.mats[k].get(r, j));
                REQUIRE(op.mats[k + 1].apply(col).is_zero());
            }
        }
    }
}

TEST_CASE("Cartan bilinearity on all basis pairs") {
    for (const char* name : {"cube", "square-cp2-cp2", "cp3", "cp1xcp2"}) {
        auto A = build_ring(bundled_example(name));
        for (int d1 = 0; d1 <= A.top_degree(); d1 += 2)
            for (int d2 = 0; d1 + d2 <= A.top_degree(); d2 += 2)
                for (int a = 0; a < A.dim(d1); ++a)
                    for (int b = 0; b < A.dim(d2); ++b) {
                        CohomologyClass x{d1, F2Vector::unit(A.dim(d1), a)};
                        CohomologyClass y{d2, F2Vector::unit(A.dim(d2), b)};
                        auto lhs = sq2_class(A, A.multiply(x, y));
                        auto rhs = A.multiply(sq2_class(A, x), y);
                        rhs.coords ^= A.multiply(x, sq2_class(A, y)).coords;
                        REQUIRE(lhs == rhs);
                    }
    }
}

TEST_CASE("naturality under a different generator choice: equal ranks") {
    for (const char* name : {"cube", "square-cp2-cp2", "cp2xcp2"}) {
        auto fwd = build_ring(bundled_example(name), MonomialOrder::standard);
        auto rev = build_ring(bundled_example(name), MonomialOrder::reversed);
        auto op_f = sq2_operator(fwd), op_r = sq2_operator(rev);
        for (int k = 0; k <= fwd.n(); ++k) REQUIRE(op_f.mats[k].rank() == op_r.mats[k].rank());
    }
}

TEST_CASE("spin verdicts") {
    SECTION("CP^1 x CP^1 is spin") {
        auto A = build_ring(example_square_product());
        auto v = is_spin(A, sq2_operator(A));
        REQUIRE(v.spin);
        REQUIRE(v.wu_class.is_zero());
    }
    SECTION("CP^2 is not spin; the Wu class is the generator") {
        auto A = build_ring(example_simplex(2));
        auto v = is_spin(A, sq2_operator(A));
        REQUIRE(!v.spin);
        REQUIRE(v.wu_class == A.generator(0));
    }
    SECTION("the cube manifold is spin") {
        auto A = build_ring(example_cube());
        auto v = is_spin(A, sq2_operator(A));
        REQUIRE(v.spin);
        REQUIRE(v.wu_class.is_zero());
    }
    SECTION("CP^1 (the 2-sphere) is spin") {
        auto A = build_ring(example_interval());
        auto v = is_spin(A, sq2_operator(A));
        REQUIRE(v.spin);
    }
}

TEST_CASE("Wu consistency: <x v2, top> = <Sq2 x, top> for every basis x") {
    for (const auto& e : bundled_examples()) {
        auto A = build_ring(e.spec);
        auto op = sq2_operator(A);
        auto verdict = is_spin(A, op);
        const int n = A.n();
        CohomologyClass wu = verdict.wu_class;
        for (int a = 0; a < A.dim(2 * n - 2); ++a) {
            CohomologyClass x{2 * n - 2, F2Vector::unit(A.dim(2 * n - 2), a)};
            bool lhs = A.multiply(x, wu).coords.get(0);
            bool rhs = sq2_class(A, x).coords.get(0);
            REQUIRE(lhs == rhs);
        }
    }
}
