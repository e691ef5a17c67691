#include "barcode/render.hpp"

#include <algorithm>

#include "barcode/text.hpp"

namespace barcode {

namespace {

std::string rstripped(std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

}  // namespace

std::string ascii_diagram(const BarCode& b) {
    const StarMarking marks = star_marking(b);
    const int n = b.vars();
    const int m = b.columns();

    size_t cell = 4;
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(m));
    for (const Term& t : b.column_terms()) {
        labels.push_back(to_string(t));
        cell = std::max(cell, labels.back().size() + 2);
    }
    size_t prefix = 0;
    for (int r = 0; r < n; ++r)
        prefix = std::max(prefix, var_name(b.ordering().var_at_rank(r)).size());

    std::string out;
    {
        std::string line(prefix, ' ');
        line += " | ";
        std::string cells(static_cast<size_t>(m) * cell, ' ');
        for (int j = 0; j < m; ++j)
            cells.replace(static_cast<size_t>(j) * cell, labels[static_cast<size_t>(j)].size(),
                          labels[static_cast<size_t>(j)]);
        out += rstripped(line + cells) + "\n";
    }

    for (int r = 0; r < n; ++r) {
        std::string name = var_name(b.ordering().var_at_rank(r));
        std::string line = name + std::string(prefix - name.size(), ' ') + " | ";
        std::string cells(static_cast<size_t>(m) * cell, ' ');
        const auto& row = b.row(r);
        for (size_t j = 0; j < row.size(); ++j) {
            const size_t from = static_cast<size_t>(row[j].start) * cell;
            const size_t to = static_cast<size_t>(row[j].end) * cell - 3;
            for (size_t p = from; p <= to; ++p) cells[p] = '-';
            if (marks.contains(r, static_cast<int>(j)))
                cells[static_cast<size_t>(row[j].end) * cell - 2] = '*';
        }
        out += rstripped(line + cells) + "\n";
    }
    return out;
}

std::string svg_diagram(const BarCode& b) {
    const StarMarking marks = star_marking(b);
    const int n = b.vars();
    const int m = b.columns();

    // Fixed geometry; not configurable.
    const int col_w = 90;
    const int row_h = 34;
    const int margin = 24;
    const int label_band = 28;
    const int width = 2 * margin + m * col_w + 30;
    const int height = 2 * margin + label_band + n * row_h;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" font-family=\"monospace\" font-size=\"13\">\n";

    for (int j = 0; j < m; ++j) {
        const int cx = margin + 30 + j * col_w + col_w / 2 - 12;
        svg += "  <text x=\"" + std::to_string(cx) + "\" y=\"" + std::to_string(margin + 14) +
               "\">" + to_string(b.column_terms()[static_cast<size_t>(j)]) + "</text>\n";
    }

    for (int r = 0; r < n; ++r) {
        const int y = margin + label_band + r * row_h + row_h / 2;
        svg += "  <text x=\"4\" y=\"" + std::to_string(y + 5) + "\">" +
               var_name(b.ordering().var_at_rank(r)) + "</text>\n";
        const auto& row = b.row(r);
        for (size_t j = 0; j < row.size(); ++j) {
            const int x1 = margin + 30 + row[j].start * col_w + 4;
            const int x2 = margin + 30 + row[j].end * col_w - 26;
            svg += "  <line x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y) +
                   "\" x2=\"" + std::to_string(x2) + "\" y2=\"" + std::to_string(y) +
                   "\" stroke=\"black\" stroke-width=\"3\"/>\n";
            if (marks.contains(r, static_cast<int>(j)))
                svg += "  <text x=\"" + std::to_string(x2 + 6) + "\" y=\"" +
                       std::to_string(y + 5) + "\">*</text>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace barcode
