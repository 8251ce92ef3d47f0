#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tko/a1_decomposition.hpp"

namespace tko {

// Monomial in the bigraded algebra Z2[a0, a1, w, b] / (a0 a1, a1^3, a1 w,
// w^2 + a0^2 b), optionally times a module generator:
//   gen = -1 : plain ring element;
//   gen = 0..3 : x, y, z, u with module relations
//     a1 g = 0,  a0 z = w x,  a0 u = w y,  w z = a0 b x,  w u = a0 b y.
// Bidegrees (stem, filtration): a0 (0,1), a1 (1,1), w (4,3), b (8,4),
// x (0,0), y (2,1), z (4,2), u (6,3).
struct ExtMonomial {
    int a0 = 0, a1 = 0, w = 0, b = 0;
    int gen = -1;
    bool zero = false;

    bool operator==(const ExtMonomial&) const = default;
    bool operator<(const ExtMonomial& o) const {
        return std::tie(zero, gen, a0, a1, w, b) < std::tie(o.zero, o.gen, o.a0, o.a1, o.w, o.b);
    }
};

inline int ext_stem(const ExtMonomial& m) {
    static const int gs[4] = {0, 2, 4, 6};
    return m.a1 + 4 * m.w + 8 * m.b + (m.gen >= 0 ? gs[m.gen] : 0);
}

inline int ext_filt(const ExtMonomial& m) {
    static const int gf[4] = {0, 1, 2, 3};
    return m.a0 + m.a1 + 3 * m.w + 4 * m.b + (m.gen >= 0 ? gf[m.gen] : 0);
}

inline std::string ext_name(const ExtMonomial& m) {
    if (m.zero) return "0";
    std::string s;
    auto app = [&](const char* sym, int e) {
        if (!e) return;
        if (!s.empty()) s += "*";
        s += sym;
        if (e > 1) s += "^" + std::to_string(e);
    };
    app("a0", m.a0);
    app("a1", m.a1);
    app("w", m.w);
    app("b", m.b);
    if (m.gen >= 0) {
        static const char* gn[4] = {"x", "y", "z", "u"};
        if (!s.empty()) s += "*";
        s += gn[m.gen];
    }
    return s.empty() ? "1" : s;
}

// One-step rewriting. Rules are numbered so tests can drive them in
// arbitrary applicable order and confirm confluence.
inline constexpr int ext_rule_count = 9;

inline bool ext_rule_applies(const ExtMonomial& m, int rule) {
    if (m.zero) return false;
    switch (rule) {
        case 0: return m.a0 >= 1 && m.a1 >= 1;      // a0 a1 = 0
        case 1: return m.a1 >= 3;                   // a1^3 = 0
        case 2: return m.a1 >= 1 && m.w >= 1;       // a1 w = 0
        case 3: return m.w >= 2;                    // w^2 = a0^2 b
        case 4: return m.a1 >= 1 && m.gen >= 0;     // a1 * generator = 0
        case 5: return m.gen == 2 && m.a0 >= 1;     // a0 z = w x
        case 6: return m.gen == 3 && m.a0 >= 1;     // a0 u = w y
        case 7: return m.gen == 2 && m.w >= 1;      // w z = a0 b x
        case 8: return m.gen == 3 && m.w >= 1;      // w u = a0 b y
    }
    return false;
}

inline ExtMonomial ext_apply_rule(ExtMonomial m, int rule) {
    switch (rule) {
        case 0:
        case 1:
        case 2:
        case 4: m.zero = true; break;
        case 3: m.w -= 2, m.a0 += 2, m.b += 1; break;
        case 5: m.a0 -= 1, m.w += 1, m.gen = 0; break;
        case 6: m.a0 -= 1, m.w += 1, m.gen = 1; break;
        case 7: m.w -= 1, m.a0 += 1, m.b += 1, m.gen = 0; break;
        case 8: m.w -= 1, m.a0 += 1, m.b += 1, m.gen = 1; break;
    }
    return m;
}

inline ExtMonomial ext_reduce(ExtMonomial m) {
    bool again = true;
    while (again && !m.zero) {
        again = false;
        for (int r = 0; r < ext_rule_count; ++r)
            if (ext_rule_applies(m, r)) {
                m = ext_apply_rule(m, r);
                again = true;
                break;
            }
    }
    return m;
}

struct ChartSummand {
    char type = 'S';  // 'S' for S0, 'M' for M
    int shift = 0;    // suspension degree 2j
    int copy = 0;

    std::string label() const {
        return "Σ^" + std::to_string(shift) + (type == 'S' ? " S0" : " M") +
               (copy ? " #" + std::to_string(copy + 1) : "");
    }
};

struct ChartCell {
    int stem = 0, s = 0;
    std::string name;
    int summand = -1;
};

struct ChartTower {
    int stem = 0, base_s = 0;
    std::string symbol;
    int summand = -1;

    bool operator<(const ChartTower& o) const {
        return std::tie(stem, base_s, summand, symbol) < std::tie(o.stem, o.base_s, o.summand, o.symbol);
    }
    bool operator==(const ChartTower&) const = default;
};

// a0-lines go straight up one filtration; a1-lines go one right, one up.
struct ChartLine {
    char type = '0';  // '0' = a0, '1' = a1
    int stem = 0, s = 0;
    std::string from, to;
    int summand = -1;
};

// Differential data model: d_r moves one stem left and r filtrations up.
// Nothing in the pipeline ever produces one; the unresolved state is
// tracked by `collapse_established`.
struct ChartDifferential {
    int from_stem = 0, from_s = 0;
    int to_stem = 0, to_s = 0;
    int r = 0;
};

struct BigradedChart {
    int max_stem = 0, max_filt = 0;
    std::vector<ChartSummand> summands;
    std::map<std::pair<int, int>, std::vector<ChartCell>> cells;
    std::vector<ChartTower> towers;
    std::vector<ChartLine> lines;
    std::vector<ChartDifferential> differentials;
    bool collapse_established = true;
    std::string page_label = "E2 = Einf";

    int count(int stem, int s) const {
        auto it = cells.find({stem, s});
        return it == cells.end() ? 0 : int(it->second.size());
    }

    long long total_cells() const {
        long long t = 0;
        for (const auto& [key, v] : cells) t += (long long)v.size();
        return t;
    }
};

namespace detail {

inline void insert_chart_monomials(BigradedChart& chart, const std::vector<ExtMonomial>& normal_forms,
                                   int stem_shift, int summand) {
    // cells
    for (const auto& nf : normal_forms) {
        int stem = ext_stem(nf) + stem_shift, s = ext_filt(nf);
        if (stem > chart.max_stem || s > chart.max_filt) continue;
        chart.cells[{stem, s}].push_back({stem, s, ext_name(nf), summand});
    }
    // towers and a0-lines: group the a1-free forms by stem; within a stem
    // they form a single a0-chain with contiguous filtrations.
    std::map<int, std::vector<ExtMonomial>> by_stem;
    for (const auto& nf : normal_forms)
        if (nf.a1 == 0) by_stem[ext_stem(nf)].push_back(nf);
    for (auto& [stem, group] : by_stem) {
        std::sort(group.begin(), group.end(),
                  [](const ExtMonomial& a, const ExtMonomial& b) { return ext_filt(a) < ext_filt(b); });
        int shifted = stem + stem_shift;
        if (shifted > chart.max_stem) continue;
        int base = ext_filt(group.front());
        if (base > chart.max_filt) continue;
        chart.towers.push_back({shifted, base, ext_name(group.front()), summand});
        for (std::size_t i = 0; i + 1 < group.size(); ++i) {
            int s = ext_filt(group[i]);
            if (s + 1 > chart.max_filt) break;
            chart.lines.push_back({'0', shifted, s, ext_name(group[i]), ext_name(group[i + 1]), summand});
        }
    }
    // a1-lines
    for (const auto& nf : normal_forms) {
        ExtMonomial next = nf;
        next.a1 += 1;
        next = ext_reduce(next);
        if (next.zero) continue;
        int stem = ext_stem(nf) + stem_shift, s = ext_filt(nf);
        if (stem + 1 > chart.max_stem || s + 1 > chart.max_filt || stem > chart.max_stem ||
            s > chart.max_filt)
            continue;
        chart.lines.push_back({'1', stem, s, ext_name(nf), ext_name(next), summand});
    }
}

inline std::vector<ExtMonomial> ext_normal_forms(int max_stem, int max_filt, bool module_chart) {
    std::set<ExtMonomial> seen;
    std::vector<ExtMonomial> out;
    const int kw = max_stem / 4 + 2, kb = max_stem / 8 + 1;
    const int gen_lo = module_chart ? 0 : -1, gen_hi = module_chart ? 3 : -1;
    for (int gen = gen_lo; gen <= gen_hi; ++gen)
        for (int i = 0; i <= max_filt; ++i)
            for (int j = 0; j <= 3; ++j)
                for (int k = 0; k <= kw; ++k)
                    for (int l = 0; l <= kb; ++l) {
                        ExtMonomial nf = ext_reduce({i, j, k, l, gen});
                        if (nf.zero) continue;
                        if (ext_stem(nf) > max_stem || ext_filt(nf) > max_filt) continue;
                        if (seen.insert(nf).second) out.push_back(nf);
                    }
    return out;
}

inline void sort_chart(BigradedChart& chart) {
    for (auto& [key, v] : chart.cells)
        std::sort(v.begin(), v.end(), [](const ChartCell& a, const ChartCell& b) {
            return std::tie(a.summand, a.name) < std::tie(b.summand, b.name);
        });
    std::sort(chart.towers.begin(), chart.towers.end());
    std::sort(chart.lines.begin(), chart.lines.end(), [](const ChartLine& a, const ChartLine& b) {
        return std::tie(a.stem, a.s, a.type, a.summand, a.from) <
               std::tie(b.stem, b.s, b.type, b.summand, b.from);
    });
}

}  // namespace detail

// Ext chart of the trivial one-class module: monomial basis of
// Z2[a0,a1,w,b] modulo the four relations, within the window.
inline BigradedChart ext_s0(int max_stem, int max_filt) {
    if (max_stem < 0 || max_filt < 0) fail(errc::invalid_argument, "chart bounds must be nonnegative");
    BigradedChart chart;
    chart.max_stem = max_stem;
    chart.max_filt = max_filt;
    detail::insert_chart_monomials(chart, detail::ext_normal_forms(max_stem, max_filt, false), 0, -1);
    detail::sort_chart(chart);
    return chart;
}

// Ext chart of the two-class module: free on x, y, z, u over the S0 chart
// modulo the module relations. Every even stem carries exactly one tower,
// based at filtration stem/2; odd stems are empty.
inline BigradedChart ext_m(int max_stem, int max_filt) {
    if (max_stem < 0 || max_filt < 0) fail(errc::invalid_argument, "chart bounds must be nonnegative");
    BigradedChart chart;
    chart.max_stem = max_stem;
    chart.max_filt = max_filt;
    detail::insert_chart_monomials(chart, detail::ext_normal_forms(max_stem, max_filt, true), 0, -1);
    detail::sort_chart(chart);
    return chart;
}

// Superposition of shifted copies of the two standard charts, one per
// summand of the decomposition.
inline BigradedChart assemble_e2(const A1Decomposition& dec, int max_stem, int max_filt,
                                 bool collapse_established) {
    BigradedChart chart;
    chart.max_stem = max_stem;
    chart.max_filt = max_filt;
    chart.collapse_established = collapse_established;
    chart.page_label = collapse_established ? "E2 = Einf" : "E2 only; differentials unresolved";
    for (std::size_t j = 0; j < dec.s0_mult.size(); ++j)
        for (int c = 0; c < dec.s0_mult[j]; ++c) {
            int id = int(chart.summands.size());
            chart.summands.push_back({'S', int(2 * j), c});
            if (int(2 * j) <= max_stem)
                detail::insert_chart_monomials(
                    chart, detail::ext_normal_forms(max_stem - int(2 * j), max_filt, false), int(2 * j), id);
        }
    for (std::size_t j = 0; j < dec.m_mult.size(); ++j)
        for (int c = 0; c < dec.m_mult[j]; ++c) {
            int id = int(chart.summands.size());
            chart.summands.push_back({'M', int(2 * j), c});
            if (int(2 * j) <= max_stem)
                detail::insert_chart_monomials(
                    chart, detail::ext_normal_forms(max_stem - int(2 * j), max_filt, true), int(2 * j), id);
        }
    detail::sort_chart(chart);
    return chart;
}

// Collapse rule: manifold input always collapses; singular input is only
// covered below real dimension 12, where the one possible differential
// pattern has no room.
inline bool collapse_established_for(bool manifold_mode, int n) {
    return manifold_mode || 2 * n < 12;
}

}  // namespace tko
