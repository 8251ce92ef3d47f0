#pragma once

#include <string>
#include <vector>

#include "tko/f2.hpp"
#include "tko/simplicial_complex.hpp"

namespace tko {

// Integral characteristic matrix: n rows, m columns, column i = value on the
// i-th vertex of K (equivalently on the facet F_i of P).
struct CharMatrixZ {
    int n = 0, m = 0;
    std::vector<std::vector<Integer>> a;  // a[row][col]

    const Integer& at(int r, int c) const { return a[r][c]; }
};

// Mod-2 reduction with the facet-minor invertibility witness attached.
struct CharMatrixF2 {
    int n = 0, m = 0;
    F2Matrix rows;  // n x m over the 2-element field
};

// Exact integer determinant by fraction-free (Bareiss) elimination.
inline Integer det_bareiss(std::vector<std::vector<Integer>> a) {
    const int n = int(a.size());
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

inline std::string facet_label(const Face& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i] + 1);
    return s + "}";
}

// Checks the direct-summand condition on every maximal face: the n x n minor
// on the facet's columns must be unimodular. Sub-collections of a unimodular
// column set span direct summands, so maximal faces cover all faces.
// Facets are scanned in sorted order, so the lowest failing facet is reported.
inline const CharMatrixZ& validate_integral(const SimplicialComplex& K, const CharMatrixZ& L) {
    if (L.n != K.n || L.m != K.m)
        fail(errc::dimension_mismatch, "characteristic matrix must be " + std::to_string(K.n) + "x" +
                                           std::to_string(K.m));
    for (const auto& fac : K.facets) {
        std::vector<std::vector<Integer>> minor(K.n, std::vector<Integer>(K.n));
        for (int r = 0; r < K.n; ++r)
            for (int c = 0; c < K.n; ++c) minor[r][c] = L.a[r][fac[c]];
        Integer d = det_bareiss(std::move(minor));
        if (d != 1 && d != -1)
            fail(errc::singular_at_facet, "facet " + facet_label(fac) + " has minor determinant " +
                                              d.str() + "; lambda is not a characteristic function");
    }
    return L;
}

inline CharMatrixF2 reduce_rows_mod2(const CharMatrixZ& L) {
    CharMatrixF2 r;
    r.n = L.n;
    r.m = L.m;
    r.rows = F2Matrix(L.n, L.m);
    for (int i = 0; i < L.n; ++i)
        for (int j = 0; j < L.m; ++j)
            if ((L.a[i][j] % 2 + 2) % 2 == 1) r.rows.set(i, j, true);
    return r;
}

namespace detail {
inline void check_facet_minors_mod2(const SimplicialComplex& K, const CharMatrixF2& L2) {
    for (const auto& fac : K.facets) {
        F2Matrix minor(K.n, K.n);
        for (int r = 0; r < K.n; ++r)
            for (int c = 0; c < K.n; ++c) minor.set(r, c, L2.rows.get(r, fac[c]));
        if (minor.rank() != K.n)
            fail(errc::singular_at_facet_mod2,
                 "facet " + facet_label(fac) + " has a singular minor over the 2-element field");
    }
}
}  // namespace detail

// Reduction of a (validated or raw) integral matrix. A valid integral lambda
// has odd facet determinants, so this can only throw on unvalidated input.
inline CharMatrixF2 reduce_mod2(const CharMatrixZ& L, const SimplicialComplex& K) {
    CharMatrixF2 r = reduce_rows_mod2(L);
    detail::check_facet_minors_mod2(K, r);
    return r;
}

// Direct mod-2 input (no integral lift known).
inline CharMatrixF2 reduce_mod2(const F2Matrix& raw, const SimplicialComplex& K) {
    if (raw.rows() != K.n || raw.cols() != K.m)
        fail(errc::dimension_mismatch, "characteristic matrix must be " + std::to_string(K.n) + "x" +
                                           std::to_string(K.m));
    CharMatrixF2 r;
    r.n = K.n;
    r.m = K.m;
    r.rows = raw;
    detail::check_facet_minors_mod2(K, r);
    return r;
}

}  // namespace tko
