#pragma once

#include <sstream>
#include <string>

#include "tko/ext_chart.hpp"

namespace tko {

// Text grid in the layout of standard Adams charts: stems across, filtration
// up the page. One cell is '*', multiple cells print their count, towers
// running past the top of the window get a ':' continuation mark. Vertical
// bars are a0-multiplications, slashes a1-multiplications.
inline std::string render_chart_ascii(const BigradedChart& chart) {
    const int W = 4;  // column width per stem
    const int left = 4;
    const int cols = left + (chart.max_stem + 1) * W;
    std::vector<std::string> grid;  // built top-down later
    auto cell_col = [&](int stem) { return left + stem * W; };

    std::ostringstream out;
    out << chart.page_label << "\n";
    out << "  s\n";

    // continuation row for towers that reach the top of the window
    {
        std::string row(cols, ' ');
        bool any = false;
        for (const auto& t : chart.towers)
            if (t.base_s <= chart.max_filt) {
                row[cell_col(t.stem)] = ':';
                any = true;
            }
        if (any) grid.push_back(row);
    }

    for (int s = chart.max_filt; s >= 0; --s) {
        std::string row(cols, ' ');
        {
            std::string lab = std::to_string(s);
            if (lab.size() > 3) lab = lab.substr(lab.size() - 3);
            for (std::size_t i = 0; i < lab.size(); ++i) row[3 - lab.size() + i] = lab[i];
        }
        for (int stem = 0; stem <= chart.max_stem; ++stem) {
            int c = chart.count(stem, s);
            if (!c) continue;
            row[cell_col(stem)] = c == 1 ? '*' : (c <= 9 ? char('0' + c) : '#');
        }
        grid.push_back(row);
        if (s > 0) {
            std::string conn(cols, ' ');
            for (const auto& l : chart.lines) {
                if (l.s != s - 1) continue;
                if (l.type == '0')
                    conn[cell_col(l.stem)] = '|';
                else if (l.stem + 1 <= chart.max_stem)
                    conn[cell_col(l.stem) + W / 2] = '/';
            }
            grid.push_back(conn);
        }
    }
    for (auto& row : grid) {
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out << row << "\n";
    }
    std::string axis(cols, '-');
    out << axis << "\n";
    std::string labels(cols + 8, ' ');
    for (int stem = 0; stem <= chart.max_stem; ++stem) {
        std::string lab = std::to_string(stem);
        for (std::size_t i = 0; i < lab.size(); ++i) labels[cell_col(stem) + i] = lab[i];
    }
    while (!labels.empty() && labels.back() == ' ') labels.pop_back();
    out << labels << "  t-s\n";
    return out.str();
}

inline std::string render_chart_svg(const BigradedChart& chart) {
    const int cell = 36, margin = 48, r = 4;
    const int width = margin * 2 + (chart.max_stem + 1) * cell;
    const int height = margin * 2 + (chart.max_filt + 1) * cell;
    auto X = [&](int stem) { return margin + stem * cell + cell / 2; };
    auto Y = [&](int s) { return height - margin - s * cell - cell / 2; };
    // offset multiple cells in one bidegree horizontally
    auto off = [&](int index, int total) { return total == 1 ? 0 : (index * 10) - 5 * (total - 1); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<text x=\"" << margin << "\" y=\"" << margin / 2 << "\" font-size=\"14\">" << chart.page_label
        << "</text>\n";
    // axes
    out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin / 4
        << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << margin << "\" y2=\""
        << margin / 2 << "\" stroke=\"black\"/>\n";
    for (int stem = 0; stem <= chart.max_stem; ++stem)
        out << "<text x=\"" << X(stem) << "\" y=\"" << height - margin / 3
            << "\" font-size=\"11\" text-anchor=\"middle\">" << stem << "</text>\n";
    for (int s = 0; s <= chart.max_filt; ++s)
        out << "<text x=\"" << margin / 2 << "\" y=\"" << Y(s) + 4
            << "\" font-size=\"11\" text-anchor=\"middle\">" << s << "</text>\n";
    out << "<text x=\"" << width - margin / 4 << "\" y=\"" << height - margin / 3
        << "\" font-size=\"12\">t-s</text>\n";
    out << "<text x=\"" << margin / 2 << "\" y=\"" << margin / 2 << "\" font-size=\"12\">s</text>\n";

    // lines first so dots overlay them; lines join cell centers (index 0)
    for (const auto& l : chart.lines) {
        int x1 = X(l.stem), y1 = Y(l.s);
        int x2 = l.type == '0' ? X(l.stem) : X(l.stem + 1);
        int y2 = Y(l.s + 1);
        out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
            << "\" stroke=\"#555\"/>\n";
    }
    for (const auto& [key, cells] : chart.cells) {
        auto [stem, s] = key;
        for (std::size_t i = 0; i < cells.size(); ++i)
            out << "<circle cx=\"" << X(stem) + off(int(i), int(cells.size())) << "\" cy=\"" << Y(s)
                << "\" r=\"" << r << "\"><title>" << cells[i].name << "</title></circle>\n";
    }
    // tower continuation marks above the window
    for (const auto& t : chart.towers) {
        if (t.base_s > chart.max_filt) continue;
        int x = X(t.stem), y = Y(chart.max_filt) - 8;
        for (int k = 0; k < 3; ++k)
            out << "<circle cx=\"" << x << "\" cy=\"" << y - 5 * k << "\" r=\"1\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

inline std::string render_chart(const BigradedChart& chart, const std::string& format) {
    if (format == "ascii" || format == "text") return render_chart_ascii(chart);
    if (format == "svg") return render_chart_svg(chart);
    fail(errc::invalid_argument, "chart format must be 'text' or 'svg'");
}

}  // namespace tko
