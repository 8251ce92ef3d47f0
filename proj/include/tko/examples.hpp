#pragma once

#include <string>
#include <vector>

#include "tko/problem_spec.hpp"

namespace tko {

// Join of complexes with block-diagonal lambda. Gives the problem data of a
// product of the underlying manifolds, so products of projective spaces and
// Hirzebruch-type examples come for free.
inline ProblemSpec product(const ProblemSpec& a, const ProblemSpec& b) {
    ProblemSpec p;
    p.name = a.name + "x" + b.name;
    p.manifold_mode = a.manifold_mode && b.manifold_mode;
    p.lambda_mod2 = a.lambda_mod2 || b.lambda_mod2;
    p.n = a.n + b.n;
    p.m = a.m + b.m;
    for (const auto& fa : a.facets)
        for (const auto& fb : b.facets) {
            Face f = fa;
            for (int v : fb) f.push_back(v + a.m);
            p.facets.push_back(std::move(f));
        }
    std::sort(p.facets.begin(), p.facets.end());
    auto reduce = [&](long long v) { return p.lambda_mod2 ? ((v % 2) + 2) % 2 : v; };
    for (int r = 0; r < a.n; ++r) {
        std::vector<long long> row(p.m, 0);
        for (int c = 0; c < a.m; ++c) row[c] = reduce(a.lambda[r][c]);
        p.lambda.push_back(std::move(row));
    }
    for (int r = 0; r < b.n; ++r) {
        std::vector<long long> row(p.m, 0);
        for (int c = 0; c < b.m; ++c) row[a.m + c] = reduce(b.lambda[r][c]);
        p.lambda.push_back(std::move(row));
    }
    return p;
}

// P^1 (the interval): K is two points, the manifold is the 2-sphere CP^1.
inline ProblemSpec example_interval() {
    ProblemSpec s;
    s.name = "cp1";
    s.n = 1;
    s.m = 2;
    s.facets = {{0}, {1}};
    s.lambda = {{1, 1}};
    return s;
}

// P^n the n-simplex: K is the boundary complex of a simplex on n+1
// vertices; lambda = [identity | all-ones] gives CP^n.
inline ProblemSpec example_simplex(int n) {
    ProblemSpec s;
    s.name = "cp" + std::to_string(n);
    s.n = n;
    s.m = n + 1;
    for (int drop = 0; drop <= n; ++drop) {
        Face f;
        for (int i = 0; i <= n; ++i)
            if (i != drop) f.push_back(i);
        s.facets.push_back(std::move(f));
    }
    std::sort(s.facets.begin(), s.facets.end());
    for (int r = 0; r < n; ++r) {
        std::vector<long long> row(n + 1, 0);
        row[r] = 1;
        row[n] = 1;
        s.lambda.push_back(std::move(row));
    }
    return s;
}

// The square with the twisted lambda: the connected sum CP^2 # CP^2.
inline ProblemSpec example_square_cp2cp2() {
    ProblemSpec s;
    s.name = "square-cp2-cp2";
    s.n = 2;
    s.m = 4;
    s.facets = {{0, 1}, {0, 3}, {1, 2}, {2, 3}};
    s.lambda = {{0, 1, -1, 1}, {1, 0, 1, -2}};
    return s;
}

// The square with the product lambda: CP^1 x CP^1.
inline ProblemSpec example_square_product() {
    ProblemSpec s;
    s.name = "cp1xcp1";
    s.n = 2;
    s.m = 4;
    s.facets = {{0, 1}, {0, 3}, {1, 2}, {2, 3}};
    s.lambda = {{1, 0, 1, 0}, {0, 1, 0, 1}};
    return s;
}

// The 3-cube with its mod-2 lambda; K is the octahedron with antipodal
// vertex pairs (1,6), (2,4), (3,5).
inline ProblemSpec example_cube() {
    ProblemSpec s;
    s.name = "cube";
    s.lambda_mod2 = true;
    s.n = 3;
    s.m = 6;
    s.facets = {{0, 1, 2}, {0, 1, 4}, {0, 2, 3}, {0, 3, 4}, {1, 2, 5}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}};
    s.lambda = {{1, 0, 0, 0, 0, 1}, {1, 0, 1, 0, 1, 0}, {1, 1, 0, 1, 0, 0}};
    return s;
}

// An m-gon with a default valid mod-2-friendly lambda: columns alternate
// (1,0) and (0,1); odd m gets a final (1,1) column so the wrap-around pair
// stays independent.
inline ProblemSpec example_mgon(int m) {
    if (m < 3) fail(errc::invalid_argument, "m-gon needs m >= 3");
    ProblemSpec s;
    s.name = "mgon" + std::to_string(m);
    s.n = 2;
    s.m = m;
    for (int i = 0; i < m; ++i) {
        Face f = {i, (i + 1) % m};
        std::sort(f.begin(), f.end());
        s.facets.push_back(std::move(f));
    }
    std::sort(s.facets.begin(), s.facets.end());
    s.lambda.assign(2, std::vector<long long>(m, 0));
    for (int i = 0; i < m; ++i) {
        if (i == m - 1 && m % 2 == 1) {
            s.lambda[0][i] = 1;
            s.lambda[1][i] = 1;
        } else {
            s.lambda[i % 2][i] = 1;
        }
    }
    return s;
}

struct NamedExample {
    std::string name;
    std::string description;
    ProblemSpec spec;
};

inline const std::vector<NamedExample>& bundled_examples() {
    static const std::vector<NamedExample> all = [] {
        std::vector<NamedExample> v;
        v.push_back({"cp1", "interval; the 2-sphere CP^1", example_interval()});
        for (int n = 2; n <= 4; ++n)
            v.push_back({"cp" + std::to_string(n), "boundary of the " + std::to_string(n) + "-simplex; CP^" + std::to_string(n),
                         example_simplex(n)});
        v.push_back({"square-cp2-cp2", "square with twisted lambda; CP^2 # CP^2", example_square_cp2cp2()});
        v.push_back({"cp1xcp1", "square with product lambda; CP^1 x CP^1", example_square_product()});
        v.push_back({"mgon5", "pentagon with the default lambda", example_mgon(5)});
        v.push_back({"mgon6", "hexagon with the default lambda", example_mgon(6)});
        v.push_back({"cube", "3-cube with its mod-2 lambda", example_cube()});
        v.push_back({"cp1xcp2", "product of CP^1 and CP^2", product(example_interval(), example_simplex(2))});
        v.push_back({"cp2xcp2", "product of two copies of CP^2", product(example_simplex(2), example_simplex(2))});
        v.push_back({"cp1xcp1xcp1", "threefold product of CP^1",
                     product(example_interval(), product(example_interval(), example_interval()))});
        return v;
    }();
    return all;
}

inline const ProblemSpec& bundled_example(const std::string& name) {
    for (const auto& e : bundled_examples())
        if (e.name == name) return e.spec;
    fail(errc::invalid_argument, "no bundled example named '" + name + "'");
}

}  // namespace tko
