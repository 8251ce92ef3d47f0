#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tko/a1_decomposition.hpp"

namespace tko {

// (free rank, Z/2 rank) in one degree, with the contributing summands.
struct DegreeGroup {
    int degree = 0;
    long long free_rank = 0;
    long long two_rank = 0;
    std::vector<std::string> provenance;

    std::string pretty() const {
        if (free_rank == 0 && two_rank == 0) return "0";
        std::string s;
        if (free_rank == 1) s = "Z";
        if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
        if (two_rank) {
            if (!s.empty()) s += " + ";
            s += two_rank == 1 ? "Z/2" : "(Z/2)^" + std::to_string(two_rank);
        }
        return s;
    }
};

struct GradedAbelianGroup {
    std::string label;
    bool periodic = false;  // 8-periodic (b inverted) vs connective
    int min_degree = 0, max_degree = -1;
    std::vector<DegreeGroup> groups;

    const DegreeGroup& at(int d) const {
        if (d < min_degree || d > max_degree) fail(errc::invalid_argument, "degree out of table range");
        return groups[d - min_degree];
    }

    // Connective theories vanish below the table; querying there is not an
    // error, it is the zero group.
    DegreeGroup query(int d) const {
        if (!periodic && d < min_degree)
            return DegreeGroup{d, 0, 0, {"zero: connective theory vanishes in negative degrees"}};
        return at(d);
    }
};

using RankPair = std::pair<long long, long long>;

// Connective pattern of the one-class module: towers in stems 0 and 4 mod 8,
// order-two classes in stems 1 and 2 mod 8, nothing else.
inline RankPair ko_of_s0(long long d) {
    if (d < 0) return {0, 0};
    switch (d % 8) {
        case 0:
        case 4: return {1, 0};
        case 1:
        case 2: return {0, 1};
        default: return {0, 0};
    }
}

// Connective pattern of the two-class module: one tower in every even stem.
inline RankPair ko_of_m(long long d) {
    if (d < 0) return {0, 0};
    return d % 2 == 0 ? RankPair{1, 0} : RankPair{0, 0};
}

// Periodic (b-inverted) patterns over all integer degrees.
inline RankPair KO_of_s0(long long d) {
    switch (((d % 8) + 8) % 8) {
        case 0:
        case 4: return {1, 0};
        case 1:
        case 2: return {0, 1};
        default: return {0, 0};
    }
}

inline RankPair KO_of_m(long long d) { return ((d % 2) + 2) % 2 == 0 ? RankPair{1, 0} : RankPair{0, 0}; }

namespace detail {

template <typename PatS0, typename PatM>
GradedAbelianGroup sum_patterns(const A1Decomposition& dec, int lo, int hi, PatS0 ps0, PatM pm,
                                const std::string& label, bool periodic) {
    GradedAbelianGroup g;
    g.label = label;
    g.periodic = periodic;
    g.min_degree = lo;
    g.max_degree = hi;
    for (int d = lo; d <= hi; ++d) {
        DegreeGroup dg;
        dg.degree = d;
        auto contribute = [&](char type, int j, int count, RankPair r) {
            if (!count || (r.first == 0 && r.second == 0)) return;
            dg.free_rank += count * r.first;
            dg.two_rank += count * r.second;
            std::string who = "Σ^" + std::to_string(2 * j) + (type == 'S' ? " S0" : " M");
            if (count > 1) who += " ×" + std::to_string(count);
            std::string what;
            if (r.first) what = count * r.first == 1 ? "Z" : "Z^" + std::to_string(count * r.first);
            if (r.second) {
                if (!what.empty()) what += " + ";
                what += count * r.second == 1 ? "Z/2" : "(Z/2)^" + std::to_string(count * r.second);
            }
            dg.provenance.push_back(who + ": " + what);
        };
        for (std::size_t j = 0; j < dec.s0_mult.size(); ++j)
            contribute('S', int(j), dec.s0_mult[j], ps0(d - 2 * (long long)j));
        for (std::size_t j = 0; j < dec.m_mult.size(); ++j)
            contribute('M', int(j), dec.m_mult[j], pm(d - 2 * (long long)j));
        g.groups.push_back(std::move(dg));
    }
    return g;
}

}  // namespace detail

// Degreewise sum of the shifted connective patterns. The extension problems
// are resolved by the tower structure: a0-towers give copies of Z (no odd
// torsion exists, so the 2-local towers promote to the integers), a1-classes
// give order-two elements, and no extension mixes distinct summands.
inline GradedAbelianGroup ko_homology(const A1Decomposition& dec, int max_degree,
                                      bool collapse_established = true) {
    if (!collapse_established)
        fail(errc::collapse_not_established,
             "differentials unresolved (singular mode, real dimension >= 12); groups not computed");
    return detail::sum_patterns(dec, 0, max_degree, ko_of_s0, ko_of_m, "ko homology", false);
}

// Inverting the Bott class makes every pattern fully periodic; negative
// degrees become meaningful.
inline GradedAbelianGroup ko_to_KO(const A1Decomposition& dec, int min_degree, int max_degree,
                                   bool collapse_established = true) {
    if (!collapse_established)
        fail(errc::collapse_not_established,
             "differentials unresolved (singular mode, real dimension >= 12); groups not computed");
    return detail::sum_patterns(dec, min_degree, max_degree, KO_of_s0, KO_of_m, "KO homology", true);
}

// Universal-coefficient shift: KO^m = alpha_{m-4} Z + beta_{m-5} Z/2 where
// (alpha_d, beta_d) are the KO-homology ranks. Input must be a periodic
// KO-homology table (free and order-two parts only) spanning at least one
// full period, so periodicity can fold lookups into range.
inline GradedAbelianGroup KO_cohomology(const GradedAbelianGroup& KO_h, int min_degree, int max_degree) {
    if (!KO_h.periodic)
        fail(errc::unsupported_torsion,
             "input must be a periodic KO-homology table; connective or general groups unsupported");
    if (KO_h.max_degree - KO_h.min_degree + 1 < 8)
        fail(errc::invalid_argument, "KO table must span at least 8 degrees");
    auto lookup = [&](long long d) -> const DegreeGroup& {
        long long folded = KO_h.min_degree + ((d - KO_h.min_degree) % 8 + 8) % 8;
        return KO_h.at(int(folded));
    };
    GradedAbelianGroup g;
    g.label = "KO cohomology";
    g.periodic = true;
    g.min_degree = min_degree;
    g.max_degree = max_degree;
    for (int m = min_degree; m <= max_degree; ++m) {
        DegreeGroup dg;
        dg.degree = m;
        dg.free_rank = lookup(m - 4).free_rank;
        dg.two_rank = lookup(m - 5).two_rank;
        if (dg.free_rank)
            dg.provenance.push_back("Hom part from KO_" + std::to_string(m - 4));
        if (dg.two_rank) dg.provenance.push_back("Ext part from KO_" + std::to_string(m - 5));
        g.groups.push_back(std::move(dg));
    }
    return g;
}

}  // namespace tko
