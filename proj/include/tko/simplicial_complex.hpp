#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <set>
#include <string>
#include <vector>

#include "tko/errors.hpp"

namespace tko {

using Integer = boost::multiprecision::cpp_int;

// A face is a sorted list of 0-based vertex indices. I/O is 1-based; the
// translation happens at the parse/print boundary only.
using Face = std::vector<int>;

// The dual complex K of a simple polytope P^n: vertices of K are the facets
// of P, and n of them span a maximal face exactly when the corresponding
// facets of P meet in a vertex. K is pure of dimension n-1.
struct SimplicialComplex {
    int m = 0;  // number of vertices of K
    int n = 0;  // vertices per maximal face
    std::vector<Face> facets;                     // sorted, each sorted, duplicate-free
    std::vector<std::vector<Face>> faces_by_dim;  // faces_by_dim[d]: all d-simplices, sorted

    bool is_face(const Face& f) const {
        if (f.empty()) return true;
        int d = int(f.size()) - 1;
        if (d >= int(faces_by_dim.size())) return false;
        const auto& level = faces_by_dim[d];
        return std::binary_search(level.begin(), level.end(), f);
    }
};

struct FVector {
    std::vector<long long> f;  // f[i] = number of i-simplices of K
};

struct HVector {
    std::vector<Integer> h;  // h[0..n]
};

inline SimplicialComplex validate_complex(std::vector<Face> facet_list, int m, int n) {
    if (facet_list.empty()) fail(errc::empty_facet_list, "facet list is empty");
    if (m < 1 || n < 1) fail(errc::invalid_argument, "need m >= 1 and n >= 1");

    std::vector<bool> used(m, false);
    for (auto& f : facet_list) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (int(f.size()) != n)
            fail(errc::non_pure, "maximal face {" + [&] {
                     std::string s;
                     for (std::size_t i = 0; i < f.size(); ++i)
                         s += (i ? "," : "") + std::to_string(f[i] + 1);
                     return s;
                 }() + "} does not have " + std::to_string(n) + " vertices");
        for (int v : f) {
            if (v < 0 || v >= m)
                fail(errc::index_out_of_range,
                     "vertex " + std::to_string(v + 1) + " outside [1," + std::to_string(m) + "]");
            used[v] = true;
        }
    }
    for (int v = 0; v < m; ++v)
        if (!used[v]) fail(errc::unused_vertex, "vertex " + std::to_string(v + 1) + " lies in no facet");

    std::sort(facet_list.begin(), facet_list.end());
    if (std::adjacent_find(facet_list.begin(), facet_list.end()) != facet_list.end())
        fail(errc::duplicate_facet, "duplicate facet in input");

    SimplicialComplex K;
    K.m = m;
    K.n = n;
    K.facets = std::move(facet_list);

    // Face closure: every nonempty subset of a facet.
    std::vector<std::set<Face>> levels(n);
    for (const auto& fac : K.facets) {
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            Face sub;
            for (int b = 0; b < n; ++b)
                if (mask & (1u << b)) sub.push_back(fac[b]);
            levels[sub.size() - 1].insert(std::move(sub));
        }
    }
    K.faces_by_dim.resize(n);
    for (int d = 0; d < n; ++d) K.faces_by_dim[d].assign(levels[d].begin(), levels[d].end());
    return K;
}

inline FVector f_vector(const SimplicialComplex& K) {
    FVector f;
    f.f.reserve(K.n);
    for (int d = 0; d < K.n; ++d) f.f.push_back((long long)K.faces_by_dim[d].size());
    return f;
}

// Coefficients of (t-1)^k, index = power of t.
inline std::vector<Integer> pow_t_minus_1(int k) {
    std::vector<Integer> c{1};
    for (int i = 0; i < k; ++i) {
        std::vector<Integer> nxt(c.size() + 1, 0);
        for (std::size_t j = 0; j < c.size(); ++j) {
            nxt[j + 1] += c[j];
            nxt[j] -= c[j];
        }
        c = std::move(nxt);
    }
    return c;
}

// Expands (t-1)^n + sum_i f_i (t-1)^(n-1-i) and reads h_i off the t^(n-i)
// coefficient. Exact integer arithmetic throughout.
inline HVector h_vector(const FVector& f, int n) {
    if (int(f.f.size()) != n) fail(errc::invalid_argument, "f-vector length must equal n");
    std::vector<Integer> poly(n + 1, 0);
    {
        auto base = pow_t_minus_1(n);
        for (int j = 0; j <= n; ++j) poly[j] += base[j];
    }
    for (int i = 0; i < n; ++i) {
        auto term = pow_t_minus_1(n - 1 - i);
        for (std::size_t j = 0; j < term.size(); ++j) poly[j] += Integer(f.f[i]) * term[j];
    }
    HVector h;
    h.h.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
        h.h[i] = poly[n - i];
        if (h.h[i] < 0)
            fail(errc::negative_h_entry, "h_" + std::to_string(i) + " is negative; input is not a valid complex");
    }
    return h;
}

// Sphere-only sanity: h_0 = h_n = 1 and the Dehn-Sommerville symmetry
// h_i = h_{n-i}. Only meaningful when K is (claimed to be) a polytopal
// sphere; arbitrary pure complexes can violate it.
inline void check_sphere_conditions(const HVector& h) {
    int n = int(h.h.size()) - 1;
    if (h.h[0] != 1 || h.h[n] != 1)
        fail(errc::not_a_sphere, "h_0 = h_n = 1 fails; complex is not a polytope boundary sphere");
    for (int i = 0; i <= n; ++i)
        if (h.h[i] != h.h[n - i])
            fail(errc::not_a_sphere,
                 "Dehn-Sommerville symmetry fails at h_" + std::to_string(i));
}

}  // namespace tko
