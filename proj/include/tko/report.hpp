#pragma once

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "tko/pipeline.hpp"
#include "tko/render.hpp"

namespace tko {

namespace detail {

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

inline std::string matrix_rows(const F2Matrix& mt) {
    std::string s;
    for (int r = 0; r < mt.rows(); ++r) {
        if (r) s += " ";
        for (int c = 0; c < mt.cols(); ++c) s += mt.get(r, c) ? '1' : '0';
    }
    return mt.rows() == 0 || mt.cols() == 0 ? "(empty)" : s;
}

inline void group_table(std::ostringstream& out, const GradedAbelianGroup& g) {
    out << g.label << ":\n";
    out << "  degree | group        | contributions\n";
    for (const auto& dg : g.groups) {
        std::ostringstream row;
        row << "  " << dg.degree;
        std::string pad(std::max<int>(0, 7 - int(row.str().size() - 2)), ' ');
        out << row.str() << pad << "| ";
        std::string grp = dg.pretty();
        out << grp << std::string(std::max<int>(0, 13 - int(grp.size())), ' ') << "| "
            << join(dg.provenance, "; ") << "\n";
    }
}

}  // namespace detail

// Everything downstream of validation: both runs of the same mod-2 data
// produce identical bytes here, whether lambda arrived integrally or not.
inline std::string results_text(const Report& rep) {
    std::ostringstream out;
    const int n = rep.K.n;

    out << "f-vector: (";
    for (std::size_t i = 0; i < rep.f.f.size(); ++i) out << (i ? ", " : "") << rep.f.f[i];
    out << ")\n";
    out << "h-vector: (";
    for (std::size_t i = 0; i < rep.h.h.size(); ++i) out << (i ? ", " : "") << rep.h.h[i];
    out << ")\n\n";

    out << "cohomology ring over Z/2 (degrees 0.." << 2 * n << "):\n";
    for (int k = 0; k <= n; ++k)
        out << "  H^" << 2 * k << ": dim " << rep.dims[k] << "  basis: "
            << detail::join(rep.basis_names[k], " ") << "\n";
    out << "  linear relations: "
        << (rep.linear_relations.empty() ? "(none)" : detail::join(rep.linear_relations, ", ")) << "\n";
    out << "  face relations:   "
        << (rep.nonface_relations.empty() ? "(none)" : detail::join(rep.nonface_relations, ", ")) << "\n\n";

    out << "Sq2 matrices (H^2k -> H^2k+2):\n";
    for (int k = 0; k < n; ++k)
        out << "  k=" << k << ": rank " << rep.sq2.mats[k].rank() << "  ["
            << detail::matrix_rows(rep.sq2.mats[k]) << "]\n";
    out << "\n";

    out << "A(1)-module decomposition: " << rep.dec.summary() << "\n";
    out << "Sq2-homology dims:";
    for (int d : rep.sq2_hom.dims) out << " " << d;
    out << "\n\n";

    out << "Adams spectral sequence: " << (rep.collapse_established ? "collapses" : "E2 only") << " ("
        << rep.collapse_reason << ")\n";
    if (rep.spin)
        out << "spin: " << (rep.spin->spin ? "yes" : "no") << " (Wu class v2 = " << rep.wu_name << ")\n";
    else
        out << "spin: not computed (singular mode)\n";
    out << "\n";

    if (rep.ko) {
        detail::group_table(out, *rep.ko);
        out << "\n";
        detail::group_table(out, *rep.KO);
        out << "\n";
        detail::group_table(out, *rep.KO_co);
        out << "\n";
        out << "torsion note: all torsion is 2-primary; odd-local homology is torsion-free.\n";
    } else {
        out << "groups: not computed\n" << render_chart_ascii(rep.chart);
    }
    for (const auto& w : rep.warnings) out << "warning: " << w << "\n";
    return out.str();
}

inline std::string to_text(const Report& rep) {
    std::ostringstream out;
    out << "== " << rep.spec.name << " ==\n";
    out << "mode: " << (rep.spec.manifold_mode ? "manifold" : "singular") << "\n";
    out << "n = " << rep.K.n << ", m = " << rep.K.m << "\n";
    out << "facets:";
    for (const auto& f : rep.K.facets) out << " " << facet_label(f);
    out << "\n";
    out << "lambda (mod 2):\n";
    for (int r = 0; r < rep.lambda2.n; ++r) {
        out << " ";
        for (int c = 0; c < rep.lambda2.m; ++c) out << " " << (rep.lambda2.rows.get(r, c) ? 1 : 0);
        out << "\n";
    }
    out << "\n" << results_text(rep);
    return out.str();
}

inline nlohmann::ordered_json groups_json(const GradedAbelianGroup& g) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& dg : g.groups)
        rows.push_back({{"degree", dg.degree},
                        {"free_rank", dg.free_rank},
                        {"two_torsion_rank", dg.two_rank},
                        {"contributions", dg.provenance}});
    return rows;
}

// Stable schema; see README for the field list.
inline nlohmann::ordered_json to_json(const Report& rep) {
    nlohmann::ordered_json j;
    j["name"] = rep.spec.name;
    j["mode"] = rep.spec.manifold_mode ? "manifold" : "singular";
    j["n"] = rep.K.n;
    j["m"] = rep.K.m;
    {
        nlohmann::ordered_json facets = nlohmann::ordered_json::array();
        for (const auto& f : rep.K.facets) {
            std::vector<int> out;
            for (int v : f) out.push_back(v + 1);
            facets.push_back(out);
        }
        j["facets"] = facets;
    }
    {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int r = 0; r < rep.lambda2.n; ++r) {
            std::vector<int> row;
            for (int c = 0; c < rep.lambda2.m; ++c) row.push_back(rep.lambda2.rows.get(r, c) ? 1 : 0);
            rows.push_back(row);
        }
        j["lambda_mod2"] = rows;
    }
    j["f_vector"] = rep.f.f;
    {
        std::vector<std::string> h;
        for (const auto& x : rep.h.h) h.push_back(x.str());
        j["h_vector"] = h;
    }
    {
        nlohmann::ordered_json ring;
        ring["dims"] = rep.dims;
        ring["basis"] = rep.basis_names;
        ring["linear_relations"] = rep.linear_relations;
        ring["face_relations"] = rep.nonface_relations;
        // structure constants: products of canonical basis elements
        nlohmann::ordered_json products = nlohmann::ordered_json::array();
        const auto& A = rep.algebra;
        for (int dj = 2; dj <= A.top_degree(); dj += 2)
            for (int dk = dj; dj + dk <= A.top_degree(); dk += 2)
                for (int a = 0; a < A.dim(dj); ++a)
                    for (int b = (dj == dk ? a : 0); b < A.dim(dk); ++b) {
                        CohomologyClass x{dj, F2Vector::unit(A.dim(dj), a)};
                        CohomologyClass y{dk, F2Vector::unit(A.dim(dk), b)};
                        products.push_back({{"a", A.basis_name(dj, a)},
                                            {"b", A.basis_name(dk, b)},
                                            {"product", class_name(A, A.multiply(x, y))}});
                    }
        ring["products"] = products;
        j["cohomology"] = ring;
    }
    {
        nlohmann::ordered_json mats = nlohmann::ordered_json::array();
        for (int k = 0; k < rep.K.n; ++k) {
            nlohmann::ordered_json mat = nlohmann::ordered_json::array();
            for (int r = 0; r < rep.sq2.mats[k].rows(); ++r) {
                std::vector<int> row;
                for (int c = 0; c < rep.sq2.mats[k].cols(); ++c)
                    row.push_back(rep.sq2.mats[k].get(r, c) ? 1 : 0);
                mat.push_back(row);
            }
            mats.push_back(mat);
        }
        j["sq2_matrices"] = mats;
    }
    j["decomposition"] = {{"s0", rep.dec.s0_mult}, {"m", rep.dec.m_mult}, {"summary", rep.dec.summary()}};
    j["collapse"] = {{"established", rep.collapse_established}, {"reason", rep.collapse_reason}};
    if (rep.spin)
        j["spin"] = {{"computed", true}, {"spin", rep.spin->spin}, {"wu_class", rep.wu_name}};
    else
        j["spin"] = {{"computed", false}};
    if (rep.ko) {
        j["ko_homology"] = groups_json(*rep.ko);
        j["KO_homology"] = groups_json(*rep.KO);
        j["KO_cohomology"] = groups_json(*rep.KO_co);
    }
    j["warnings"] = rep.warnings;
    return j;
}

}  // namespace tko
