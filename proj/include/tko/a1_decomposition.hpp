#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "tko/steenrod.hpp"

namespace tko {

// Splitting of the cohomology, as a module over the subalgebra generated by
// Sq^1 and Sq^2, into suspensions of the two indecomposables that occur for
// even-concentrated cohomology:
//   S0 — one class, trivial action;
//   M  — classes x, y two degrees apart with Sq^2 x = y.
// s0_mult[j] counts copies of S0 suspended to degree 2j, m_mult[j] copies
// of M based at degree 2j. The witness bases realize the splitting:
//   H^{2k} = span(C_2k) + span(D_2k) + span(B_2k)
// with C_2k = Sq^2(B_2k-2) elementwise, Sq^2 zero on C and D, and Sq^2
// injective on B.
struct A1Decomposition {
    std::vector<int> s0_mult;
    std::vector<int> m_mult;

    struct DegreeWitness {
        std::vector<F2Vector> C, D, B;
    };
    std::vector<DegreeWitness> witness;  // index = weight k = 0..n

    int total_rank() const {
        int t = 0;
        for (std::size_t j = 0; j < s0_mult.size(); ++j) t += s0_mult[j] + 2 * m_mult[j];
        return t;
    }

    std::string summary() const {
        std::string s;
        for (std::size_t j = 0; j < s0_mult.size(); ++j)
            if (s0_mult[j]) {
                if (!s.empty()) s += ", ";
                s += "Σ^" + std::to_string(2 * j) + " S0 ×" + std::to_string(s0_mult[j]);
            }
        for (std::size_t j = 0; j < m_mult.size(); ++j)
            if (m_mult[j]) {
                if (!s.empty()) s += ", ";
                s += "Σ^" + std::to_string(2 * j) + " M ×" + std::to_string(m_mult[j]);
            }
        return s.empty() ? "0" : s;
    }
};

// Degree-by-degree sweep. In each degree the image basis C is extended to a
// full basis by greedy candidates (unit vectors, in the order given by
// `candidate_order`), then the extension is corrected so that the nonzero
// Sq^2 images of the kept vectors stay linearly independent: a candidate
// whose image is dependent absorbs the matching combination of earlier kept
// vectors, making its own image zero. Kernel vectors land in D, the rest in
// B (stable partition, so reports are deterministic).
inline A1Decomposition decompose(const GradedAlgebraF2& A, const Sq2Operator& op,
                                 const std::vector<std::vector<int>>* candidate_order = nullptr) {
    const int n = A.n();
    A1Decomposition dec;
    dec.s0_mult.assign(n + 1, 0);
    dec.m_mult.assign(n + 1, 0);
    dec.witness.resize(n + 1);

    std::vector<F2Vector> prev_B;  // B of the previous degree
    for (int k = 0; k <= n; ++k) {
        const int dim = A.dim(2 * k);
        auto& wit = dec.witness[k];

        for (const auto& b : prev_B) wit.C.push_back(op.mats[k - 1].apply(b));

        RowReducer span(dim);
        for (const auto& c : wit.C)
            if (!span.add(c)) fail(errc::inconsistent_witness, "image basis C is dependent (internal bug)");

        std::vector<int> order(dim);
        std::iota(order.begin(), order.end(), 0);
        if (candidate_order && k < int(candidate_order->size()) && !(*candidate_order)[k].empty())
            order = (*candidate_order)[k];

        std::vector<F2Vector> extension;
        for (int cand : order) {
            if (span.rank() == dim) break;
            F2Vector u = F2Vector::unit(dim, cand);
            if (span.add(u)) extension.push_back(std::move(u));
        }
        if (span.rank() != dim) fail(errc::inconsistent_witness, "complement extension failed (internal bug)");

        // w-sweep with combination tracking
        std::vector<F2Vector> img_rows, img_combos;
        std::vector<int> img_pivots;
        std::vector<F2Vector> kept_kernel, kept_nonkernel;
        for (const auto& u : extension) {
            F2Vector img = op.mats[k].apply(u);
            F2Vector combo = u;
            for (std::size_t i = 0; i < img_rows.size(); ++i)
                if (img.get(img_pivots[i])) {
                    img ^= img_rows[i];
                    combo ^= img_combos[i];
                }
            if (img.is_zero()) {
                kept_kernel.push_back(std::move(combo));  // w = u + matching combination
            } else {
                kept_nonkernel.push_back(u);  // w = u, image independent
                img_pivots.push_back(img.leading());
                img_rows.push_back(std::move(img));
                img_combos.push_back(combo);
            }
        }
        wit.D = std::move(kept_kernel);
        wit.B = std::move(kept_nonkernel);
        dec.s0_mult[k] = int(wit.D.size());
        dec.m_mult[k] = int(wit.B.size());
        prev_B = wit.B;
    }
    return dec;
}

struct VerifyResult {
    bool ok = true;
    std::string failure;
};

// Re-checks every structural invariant from scratch. The multiplicity
// check against Sq^2-homology dimensions and Sq^2 ranks is a closed-form
// oracle independent of the sweep's basis choices.
inline VerifyResult verify(const A1Decomposition& dec, const GradedAlgebraF2& A, const Sq2Operator& op) {
    auto failed = [](std::string why) { return VerifyResult{false, std::move(why)}; };
    const int n = A.n();
    if (int(dec.witness.size()) != n + 1) return failed("witness has wrong number of degrees");

    Sq2Homology hom = sq2_homology(A, op);
    for (int k = 0; k <= n; ++k) {
        const auto& wit = dec.witness[k];
        int dim = A.dim(2 * k);
        std::string at = " at degree " + std::to_string(2 * k);

        if (dec.s0_mult[k] != int(wit.D.size()) || dec.m_mult[k] != int(wit.B.size()))
            return failed("multiplicities disagree with witness sizes" + at);
        int below = k ? dec.m_mult[k - 1] : 0;
        if (dim != dec.s0_mult[k] + dec.m_mult[k] + below)
            return failed("dim H = |C| + |D| + |B| fails" + at);
        if (dec.s0_mult[k] != hom.dims[k])
            return failed("S0 multiplicity differs from Sq2-homology dimension" + at);
        if (dec.m_mult[k] != op.mats[k].rank())
            return failed("M multiplicity differs from Sq2 rank" + at);

        // C is elementwise the Sq^2 image of the previous B
        if (k == 0) {
            if (!wit.C.empty()) return failed("C nonempty in degree 0");
        } else {
            const auto& prev = dec.witness[k - 1].B;
            if (wit.C.size() != prev.size()) return failed("C size differs from previous B" + at);
            for (std::size_t i = 0; i < prev.size(); ++i)
                if (!(op.mats[k - 1].apply(prev[i]) == wit.C[i]))
                    return failed("C is not the Sq2 image of the previous B" + at);
        }

        // Sq^2 kills C and D
        for (const auto& c : wit.C)
            if (!op.mats[k].apply(c).is_zero()) return failed("Sq2 nonzero on C" + at);
        for (const auto& d : wit.D)
            if (!op.mats[k].apply(d).is_zero()) return failed("Sq2 nonzero on D" + at);

        // Sq^2 restricted to B is injective
        {
            RowReducer images(A.dim(2 * k + 2));
            for (const auto& b : wit.B) {
                F2Vector img = op.mats[k].apply(b);
                if (img.is_zero() || !images.add(img)) return failed("Sq2 not injective on B" + at);
            }
        }

        // C + D + B is a basis
        RowReducer all(dim);
        int count = 0;
        for (const auto* part : {&wit.C, &wit.D, &wit.B})
            for (const auto& v : *part) {
                if (!all.add(v)) return failed("witness vectors dependent" + at);
                ++count;
            }
        if (count != dim) return failed("witness vectors do not span" + at);
    }
    if (dec.total_rank() != A.total_dim()) return failed("total rank mismatch");
    return {};
}

}  // namespace tko
