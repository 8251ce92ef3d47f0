#include <catch2/catch_amalgamated.hpp>

#include "tko/examples.hpp"
#include "tko/simplicial_complex.hpp"

using namespace tko;

namespace {

SimplicialComplex square_dual() {
    return validate_complex({{0, 1}, {1, 2}, {2, 3}, {0, 3}}, 4, 2);
}

SimplicialComplex octahedron() {
    auto s = example_cube();
    return validate_complex(s.facets, s.m, s.n);
}

// Independent face-count oracle: enumerate every subset of the vertex set
// and test containment in some facet.
std::vector<long long> brute_force_f(const SimplicialComplex& K) {
    std::vector<long long> f(K.n, 0);
    REQUIRE(K.m <= 20);
    for (unsigned mask = 1; mask < (1u << K.m); ++mask) {
        Face sub;
        for (int v = 0; v < K.m; ++v)
            if (mask & (1u << v)) sub.push_back(v);
        if (int(sub.size()) > K.n) continue;
        bool contained = false;
        for (const auto& fac : K.facets) {
            if (std::includes(fac.begin(), fac.end(), sub.begin(), sub.end())) {
                contained = true;
                break;
            }
        }
        if (contained) ++f[sub.size() - 1];
    }
    return f;
}

// Re-expand sum h_i t^(n-i) and compare with (t-1)^n + sum f_i (t-1)^(n-1-i)
// coefficient by coefficient.
void check_h_identity(const FVector& f, const HVector& h, int n) {
    std::vector<Integer> lhs(n + 1, 0);
    auto base = pow_t_minus_1(n);
    for (int j = 0; j <= n; ++j) lhs[j] += base[j];
    for (int i = 0; i < n; ++i) {
        auto term = pow_t_minus_1(n - 1 - i);
        for (std::size_t j = 0; j < term.size(); ++j) lhs[j] += Integer(f.f[i]) * term[j];
    }
    for (int i = 0; i <= n; ++i) REQUIRE(lhs[n - i] == h.h[i]);
}

}  // namespace

TEST_CASE("square dual validates as a 4-cycle") {
    auto K = square_dual();
    REQUIRE(K.m == 4);
    REQUIRE(K.facets.size() == 4);
    REQUIRE(K.faces_by_dim[0].size() == 4);
    REQUIRE(K.faces_by_dim[1].size() == 4);
    REQUIRE(K.is_face({0, 1}));
    REQUIRE(!K.is_face({0, 2}));
}

TEST_CASE("smallest simple polytope: the interval") {
    auto K = validate_complex({{0}, {1}}, 2, 1);
    REQUIRE(K.facets.size() == 2);
    auto f = f_vector(K);
    REQUIRE(f.f == std::vector<long long>{2});
}

TEST_CASE("octahedron validates") {
    auto K = octahedron();
    REQUIRE(K.m == 6);
    REQUIRE(K.facets.size() == 8);
    // antipodal pairs are never cofacial
    REQUIRE(!K.is_face({0, 5}));
    REQUIRE(!K.is_face({1, 3}));
    REQUIRE(!K.is_face({2, 4}));
}

TEST_CASE("validation rejects bad input") {
    using Catch::Matchers::ContainsSubstring;
    auto code = [](auto fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return errc::invalid_argument;
    };
    REQUIRE(code([] { validate_complex({{0, 1}, {2}}, 3, 2); }) == errc::non_pure);
    REQUIRE(code([] { validate_complex({{0, 1}}, 3, 2); }) == errc::unused_vertex);
    REQUIRE(code([] { validate_complex({{0, 7}}, 2, 2); }) == errc::index_out_of_range);
    REQUIRE(code([] { validate_complex({{0, 1}, {0, 1}}, 2, 2); }) == errc::duplicate_facet);
    REQUIRE(code([] { validate_complex({}, 2, 2); }) == errc::empty_facet_list);
}

TEST_CASE("f-vectors of the named examples") {
    REQUIRE(f_vector(octahedron()).f == std::vector<long long>{6, 12, 8});
    REQUIRE(f_vector(square_dual()).f == std::vector<long long>{4, 4});
    auto simplex = validate_complex({{0, 1}, {0, 2}, {1, 2}}, 3, 2);
    REQUIRE(f_vector(simplex).f == std::vector<long long>{3, 3});
}

TEST_CASE("f-vector matches the brute-force subset oracle") {
    for (const auto& e : bundled_examples()) {
        if (e.spec.m > 16) continue;
        auto K = validate_complex(e.spec.facets, e.spec.m, e.spec.n);
        REQUIRE(f_vector(K).f == brute_force_f(K));
    }
}

TEST_CASE("h-vectors of the named examples") {
    auto h_of = [](std::vector<long long> f, int n) {
        FVector fv{std::move(f)};
        return h_vector(fv, n).h;
    };
    REQUIRE(h_of({6, 12, 8}, 3) == std::vector<Integer>{1, 3, 3, 1});
    REQUIRE(h_of({4, 4}, 2) == std::vector<Integer>{1, 2, 1});
    // hand expansion: (t-1)^2 + 3(t-1) + 3 = t^2 + t + 1
    REQUIRE(h_of({3, 3}, 2) == std::vector<Integer>{1, 1, 1});
}

TEST_CASE("h-vector satisfies the defining identity exactly") {
    for (const auto& e : bundled_examples()) {
        auto K = validate_complex(e.spec.facets, e.spec.m, e.spec.n);
        auto f = f_vector(K);
        auto h = h_vector(f, K.n);
        check_h_identity(f, h, K.n);
        // vertex count of the polytope
        Integer sum = 0;
        for (const auto& x : h.h) sum += x;
        REQUIRE(sum == f.f[K.n - 1]);
        // all bundled examples are genuine polytopes
        REQUIRE_NOTHROW(check_sphere_conditions(h));
    }
}

TEST_CASE("non-sphere input fails the sphere conditions") {
    // a single 2-simplex with its faces: h = (1, 0, 0)
    auto K = validate_complex({{0, 1, 2}}, 3, 3);
    auto h = h_vector(f_vector(K), K.n);
    REQUIRE_THROWS_AS(check_sphere_conditions(h), Error);
}

TEST_CASE("negative h entry is rejected") {
    FVector f{{5, 2}};  // pentagon-like vertex count with too few edges
    REQUIRE_THROWS_AS(h_vector(f, 2), Error);
}
