#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tko/char_matrix.hpp"
#include "tko/examples.hpp"
#include "tko/ext_chart.hpp"
#include "tko/ko_groups.hpp"
#include "tko/problem_spec.hpp"

namespace tko {

struct RunOptions {
    bool trust_sphere = false;
    int max_degree = -1;      // ko table upper degree; default 2n + 8
    int chart_max_stem = -1;  // default 2n + 8
    int chart_max_filt = 8;
};

struct Report {
    ProblemSpec spec;
    SimplicialComplex K;
    CharMatrixF2 lambda2;
    FVector f;
    HVector h;

    GradedAlgebraF2 algebra;
    std::vector<int> dims;  // index k: dim H^{2k}
    std::vector<std::vector<std::string>> basis_names;
    std::vector<std::string> linear_relations;
    std::vector<std::string> nonface_relations;

    Sq2Operator sq2;
    Sq2Homology sq2_hom;
    A1Decomposition dec;

    bool collapse_established = true;
    std::string collapse_reason;
    BigradedChart chart;

    std::optional<SpinVerdict> spin;
    std::string wu_name;

    std::optional<GradedAbelianGroup> ko, KO, KO_co;
    std::vector<std::string> warnings;
};

// Lambda validation joint: integral input gets the unimodular-minor check
// and is then reduced; mod-2 input is checked over the 2-element field only.
inline CharMatrixF2 validate_lambda(const ProblemSpec& spec, const SimplicialComplex& K) {
    if (spec.lambda_mod2) {
        F2Matrix raw(spec.n, spec.m);
        for (int r = 0; r < spec.n; ++r)
            for (int c = 0; c < spec.m; ++c)
                if (spec.lambda[r][c] % 2) raw.set(r, c, true);
        return reduce_mod2(raw, K);
    }
    CharMatrixZ L;
    L.n = spec.n;
    L.m = spec.m;
    L.a.assign(spec.n, std::vector<Integer>(spec.m));
    for (int r = 0; r < spec.n; ++r)
        for (int c = 0; c < spec.m; ++c) L.a[r][c] = spec.lambda[r][c];
    validate_integral(K, L);
    return reduce_mod2(L, K);
}

inline std::string class_name(const GradedAlgebraF2& A, const CohomologyClass& x) {
    std::string s;
    for (int i : x.coords.support()) {
        if (!s.empty()) s += "+";
        s += A.basis_name(x.degree, i);
    }
    return s.empty() ? "0" : s;
}

inline Report run_pipeline(const ProblemSpec& spec, const RunOptions& opts = {}) {
    Report rep;
    rep.spec = spec;
    rep.K = validate_complex(spec.facets, spec.m, spec.n);
    rep.f = f_vector(rep.K);
    rep.h = h_vector(rep.f, rep.K.n);
    if (opts.trust_sphere) check_sphere_conditions(rep.h);
    rep.lambda2 = validate_lambda(spec, rep.K);

    rep.algebra = GradedAlgebraF2::build(rep.K, rep.lambda2);
    const GradedAlgebraF2& A = rep.algebra;
    for (int k = 0; k <= A.n(); ++k) {
        rep.dims.push_back(A.dim(2 * k));
        std::vector<std::string> names;
        for (int i = 0; i < A.dim(2 * k); ++i) names.push_back(A.basis_name(2 * k, i));
        rep.basis_names.push_back(std::move(names));
    }
    rep.linear_relations = A.linear_relations();
    rep.nonface_relations = A.minimal_nonfaces();

    if (opts.trust_sphere) {
        for (int k = 0; k <= A.n(); ++k)
            if (Integer(rep.dims[k]) != rep.h.h[k])
                fail(errc::rank_mismatch, "dim H^" + std::to_string(2 * k) + " = " +
                                              std::to_string(rep.dims[k]) + " but h_" + std::to_string(k) +
                                              " = " + rep.h.h[k].str());
        for (int k = 0; k <= A.n(); ++k)
            if (!A.poincare_pairing(k).nondegenerate)
                fail(errc::pairing_degenerate,
                     "Poincare pairing degenerate in degree " + std::to_string(2 * k));
    } else if (rep.h.h[A.n()] != 1) {
        rep.warnings.push_back("h_n != 1: the complex is not a polytope boundary sphere");
    }

    rep.sq2 = sq2_operator(A);
    rep.sq2_hom = sq2_homology(A, rep.sq2);

    if (spec.manifold_mode) {
        rep.spin = is_spin(A, rep.sq2);
        rep.wu_name = class_name(A, rep.spin->wu_class);
    } else {
        rep.warnings.push_back("singular mode: ring presentation assumed; spin test skipped");
    }

    rep.dec = decompose(A, rep.sq2);
    if (auto v = verify(rep.dec, A, rep.sq2); !v.ok)
        fail(errc::inconsistent_witness, "decomposition failed verification: " + v.failure);

    rep.collapse_established = collapse_established_for(spec.manifold_mode, A.n());
    rep.collapse_reason = spec.manifold_mode
                              ? "manifold input: all differentials vanish"
                              : (rep.collapse_established
                                     ? "singular input of real dimension < 12: no differential has room"
                                     : "singular input of real dimension >= 12: differentials unresolved");

    int max_degree = opts.max_degree >= 0 ? opts.max_degree : 2 * A.n() + 8;
    int max_stem = opts.chart_max_stem >= 0 ? opts.chart_max_stem : 2 * A.n() + 8;
    rep.chart = assemble_e2(rep.dec, max_stem, opts.chart_max_filt, rep.collapse_established);

    if (rep.collapse_established) {
        rep.ko = ko_homology(rep.dec, max_degree);
        rep.KO = ko_to_KO(rep.dec, -8, max_degree);
        rep.KO_co = KO_cohomology(*rep.KO, -8, max_degree);
    } else {
        rep.warnings.push_back(
            "groups not computed: singular-mode input of real dimension >= 12; the chart shows the E2 "
            "page only");
    }
    return rep;
}

}  // namespace tko
