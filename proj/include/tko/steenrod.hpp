#pragma once

#include <string>
#include <vector>

#include "tko/face_ring.hpp"

namespace tko {

// Sq^2 as a sequence of matrices. mats[k] maps coordinates of H^{2k} to
// coordinates of H^{2k+2}. Since the ring lives in even degrees, Sq^1 = 0
// and Sq^2 Sq^2 = Sq^3 Sq^1 = 0: consecutive matrices compose to zero.
struct Sq2Operator {
    std::vector<F2Matrix> mats;  // index k = 0..n

    const F2Matrix& mat(int degree) const { return mats[degree / 2]; }
};

struct Sq2Homology {
    std::vector<int> dims;  // index k: dim ker(mats[k]) - rank(mats[k-1])
};

struct SpinVerdict {
    bool spin = false;
    CohomologyClass wu_class;  // degree-2 Wu class; zero iff spin
};

// Sq^2 on a class. On the polynomial generators Sq^2 v = v^2 (top square in
// degree 2) and Sq^1 = 0, so the Cartan formula gives, for a monomial mu,
// Sq^2(mu) = sum_i e_i * (v_i * mu) over its exponents e_i, taken mod 2.
// Both ideals are stable under this, so evaluating on canonical
// representatives is well-defined.
inline CohomologyClass sq2_class(const GradedAlgebraF2& A, const CohomologyClass& x) {
    CohomologyClass out = A.zero_class(x.degree + 2);
    if (x.degree + 2 > A.top_degree()) return out;
    const auto& reps = A.basis(x.degree);
    for (int idx : x.coords.support()) {
        const Monomial& mu = reps[idx];
        for (int i = 0; i < A.m(); ++i) {
            if (mu[i] % 2 == 0) continue;
            Monomial prod = mu;
            prod[i] += 1;
            out.coords ^= A.class_of_monomial(prod).coords;
        }
    }
    return out;
}

inline Sq2Operator sq2_operator(const GradedAlgebraF2& A) {
    Sq2Operator op;
    op.mats.resize(A.n() + 1);
    for (int k = 0; k <= A.n(); ++k) {
        int src = A.dim(2 * k), dst = A.dim(2 * k + 2);
        F2Matrix mt(dst, src);  // column j = image of j-th basis vector
        for (int j = 0; j < src; ++j) {
            CohomologyClass img = sq2_class(A, {2 * k, F2Vector::unit(src, j)});
            for (int r = 0; r < dst; ++r)
                if (img.coords.get(r)) mt.set(r, j, true);
        }
        op.mats[k] = std::move(mt);
    }
    // chain-complex sanity: Sq^2 Sq^2 = 0
    for (int k = 0; k + 1 <= A.n(); ++k) {
        const F2Matrix& lo = op.mats[k];
        const F2Matrix& hi = op.mats[k + 1];
        for (int j = 0; j < lo.cols(); ++j) {
            F2Vector col(lo.rows());
            for (int r = 0; r < lo.rows(); ++r) col.set(r, lo.get(r, j));
            if (!hi.apply(col).is_zero())
                fail(errc::chain_complex_violation, "Sq2 composed with Sq2 is nonzero (internal bug)");
        }
    }
    return op;
}

inline Sq2Homology sq2_homology(const GradedAlgebraF2& A, const Sq2Operator& op) {
    Sq2Homology h;
    h.dims.resize(A.n() + 1);
    for (int k = 0; k <= A.n(); ++k) {
        int dim_k = A.dim(2 * k);
        int rank_k = op.mats[k].rank();
        int rank_below = k ? op.mats[k - 1].rank() : 0;
        h.dims[k] = (dim_k - rank_k) - rank_below;
    }
    return h;
}

// Spin test. The manifold is spin iff the top class is not hit by Sq^2 from
// H^{2n-2}; since dim H^{2n} = 1 that means mats[n-1] = 0. Independently,
// the degree-2 Wu class is the unique solution of
//   <x * wu, top> = <Sq^2 x, top>  for all x in H^{2n-2},
// solved through the Poincare pairing; orientability gives wu = w_2, so
// spin <=> wu = 0. Both routes are computed and must agree.
inline SpinVerdict is_spin(const GradedAlgebraF2& A, const Sq2Operator& op) {
    const int n = A.n();
    if (A.dim(2 * n) != 1)
        fail(errc::no_top_class, "top cohomology rank is not 1");
    PairingResult pairing = A.poincare_pairing(n - 1);
    // gram rows: basis of H^{2n-2}; gram cols: basis of H^2
    if (!pairing.nondegenerate)
        fail(errc::pairing_degenerate, "Poincare pairing degenerate; spin test refused");

    const F2Matrix& last = op.mats[n - 1];
    bool top_unhit = last.is_zero();
    F2Vector rhs(last.cols());
    for (int j = 0; j < last.cols(); ++j) rhs.set(j, last.get(0, j));
    auto sol = solve(pairing.gram, rhs);
    if (!sol)
        fail(errc::pairing_degenerate, "Wu-class system unsolvable; pairing data inconsistent");
    F2Vector wu = *sol;

    SpinVerdict v;
    v.spin = top_unhit;
    v.wu_class = {2, wu};
    if (v.spin != v.wu_class.is_zero())
        fail(errc::inconsistent_witness, "spin criterion and Wu class disagree (internal bug)");
    return v;
}

}  // namespace tko
