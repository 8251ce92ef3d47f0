#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "tko/errors.hpp"

namespace tko {

// Bit-packed vector over the 2-element field.
class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(int size) : size_(size), words_((size + 63) / 64, 0) {}

    static F2Vector unit(int size, int i) {
        F2Vector v(size);
        v.set(i, true);
        return v;
    }

    int size() const { return size_; }

    bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(int i, bool v) {
        if (v)
            words_[i >> 6] |= std::uint64_t{1} << (i & 63);
        else
            words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void flip(int i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool is_zero() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    // Index of the lowest set bit, -1 if zero.
    int leading() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return int(k * 64) + std::countr_zero(words_[k]);
        return -1;
    }

    int popcount() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    F2Vector& operator^=(const F2Vector& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
        return *this;
    }

    friend F2Vector operator^(F2Vector a, const F2Vector& b) {
        a ^= b;
        return a;
    }

    // Parity of the intersection; the standard bilinear form.
    bool dot(const F2Vector& o) const {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & o.words_[k];
        return std::popcount(acc) & 1;
    }

    bool operator==(const F2Vector&) const = default;
    bool operator<(const F2Vector& o) const { return words_ < o.words_; }

    std::vector<int> support() const {
        std::vector<int> s;
        for (int i = 0; i < size_; ++i)
            if (get(i)) s.push_back(i);
        return s;
    }

private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dense row-major matrix over the 2-element field.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(int rows, int cols) : cols_(cols), rows_(rows, F2Vector(cols)) {}

    static F2Matrix identity(int n) {
        F2Matrix a(n, n);
        for (int i = 0; i < n; ++i) a.set(i, i, true);
        return a;
    }

    int rows() const { return int(rows_.size()); }
    int cols() const { return cols_; }

    bool get(int r, int c) const { return rows_[r].get(c); }
    void set(int r, int c, bool v) { rows_[r].set(c, v); }

    F2Vector& row(int r) { return rows_[r]; }
    const F2Vector& row(int r) const { return rows_[r]; }

    void append_row(F2Vector v) {
        if (v.size() != cols_) fail(errc::invalid_argument, "row width mismatch");
        rows_.push_back(std::move(v));
    }

    bool is_zero() const {
        for (const auto& r : rows_)
            if (!r.is_zero()) return false;
        return true;
    }

    // Matrix times column vector; x.size() == cols().
    F2Vector apply(const F2Vector& x) const {
        F2Vector y(rows());
        for (int r = 0; r < rows(); ++r) y.set(r, rows_[r].dot(x));
        return y;
    }

    F2Matrix transposed() const {
        F2Matrix t(cols_, rows());
        for (int r = 0; r < rows(); ++r)
            for (int c = 0; c < cols_; ++c)
                if (get(r, c)) t.set(c, r, true);
        return t;
    }

    F2Matrix submatrix_columns(const std::vector<int>& cols) const {
        F2Matrix s(rows(), int(cols.size()));
        for (int r = 0; r < rows(); ++r)
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (get(r, cols[j])) s.set(r, int(j), true);
        return s;
    }

    int rank() const;

    bool operator==(const F2Matrix&) const = default;

private:
    int cols_ = 0;
    std::vector<F2Vector> rows_;
};

// Incrementally maintained reduced row echelon form of a row space.
// Pivot of a row is its lowest set column; rows are kept mutually reduced,
// so reduce() yields a canonical coset representative.
class RowReducer {
public:
    explicit RowReducer(int cols) : cols_(cols) {}

    int cols() const { return cols_; }
    int rank() const { return int(rows_.size()); }

    // Adds v to the row space. Returns true if the rank grew.
    bool add(F2Vector v) {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (v.get(pivots_[i])) v ^= rows_[i];
        int lead = v.leading();
        if (lead < 0) return false;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i].get(lead)) rows_[i] ^= v;
        // keep rows sorted by pivot column
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, lead);
        return true;
    }

    // Canonical representative of v modulo the row space.
    F2Vector reduce(F2Vector v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (v.get(pivots_[i])) v ^= rows_[i];
        return v;
    }

    bool contains(const F2Vector& v) const { return reduce(v).is_zero(); }

    const std::vector<int>& pivots() const { return pivots_; }
    const std::vector<F2Vector>& rows() const { return rows_; }

    std::vector<int> free_columns() const {
        std::vector<int> free;
        std::size_t p = 0;
        for (int c = 0; c < cols_; ++c) {
            if (p < pivots_.size() && pivots_[p] == c)
                ++p;
            else
                free.push_back(c);
        }
        return free;
    }

private:
    int cols_;
    std::vector<F2Vector> rows_;
    std::vector<int> pivots_;
};

inline int F2Matrix::rank() const {
    RowReducer red(cols_);
    for (const auto& r : rows_) red.add(r);
    return red.rank();
}

// Solves A x = b. Returns std::nullopt if inconsistent; otherwise one solution.
inline std::optional<F2Vector> solve(const F2Matrix& a, const F2Vector& b) {
    const int ncols = a.cols();
    // Gaussian elimination on columns of A: work with the transpose's rows,
    // tracking which combination of x-coordinates produced each reduced row.
    F2Matrix at = a.transposed();  // ncols rows, each of length a.rows()
    std::vector<F2Vector> combo;
    std::vector<F2Vector> rows;
    std::vector<int> pivots;
    for (int c = 0; c < ncols; ++c) {
        F2Vector v = at.row(c);
        F2Vector who = F2Vector::unit(ncols, c);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (v.get(pivots[i])) {
                v ^= rows[i];
                who ^= combo[i];
            }
        if (v.leading() < 0) continue;
        pivots.push_back(v.leading());
        rows.push_back(std::move(v));
        combo.push_back(std::move(who));
    }
    F2Vector r = b;
    F2Vector x(ncols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (r.get(pivots[i])) {
            r ^= rows[i];
            x ^= combo[i];
        }
    if (!r.is_zero()) return std::nullopt;
    return x;
}

// Basis of { x : A x = 0 }, one vector per row of the result.
inline F2Matrix kernel_basis(const F2Matrix& a) {
    RowReducer red(a.cols());
    for (int r = 0; r < a.rows(); ++r) red.add(a.row(r));
    const auto& pivots = red.pivots();
    const auto& rows = red.rows();
    auto free_cols = red.free_columns();
    F2Matrix ker(int(free_cols.size()), a.cols());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        int f = free_cols[j];
        ker.set(int(j), f, true);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (rows[i].get(f)) ker.set(int(j), pivots[i], true);
    }
    return ker;
}

}  // namespace tko
