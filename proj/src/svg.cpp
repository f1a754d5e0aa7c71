#include "pmd/svg.hpp"

#include <algorithm>
#include <sstream>

namespace pmd {

namespace {

constexpr int kUnit = 40;
constexpr int kMargin = 40;
constexpr int kBarHeight = 12;
constexpr int kBarGap = 8;
constexpr int kLegendLine = 16;

void open_svg(std::ostringstream& ss, int w, int h) {
    ss << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
}

void emit_line(std::ostringstream& ss, int x1, int y1, int x2, int y2, const char* color) {
    ss << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
       << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
}

void emit_text(std::ostringstream& ss, int x, int y, const std::string& s) {
    ss << "  <text x=\"" << x << "\" y=\"" << y
       << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#333333\">" << s << "</text>\n";
}

const char* block_color(BlockType t) {
    switch (t) {
        case BlockType::db: return "#1f77b4";
        case BlockType::bb: return "#d62728";
        case BlockType::vb: return "#2ca02c";
        case BlockType::hb: return "#9467bd";
    }
    return "#000000";
}

} // namespace

std::string render_barcode_svg(const Barcode& bc, int poset_size) {
    struct Row {
        int birth, death, mult;
    };
    std::vector<Row> rows;
    for (const Bar& b : bc.bars) {
        if (b.carrier.empty()) continue;
        rows.push_back({b.carrier.front(), b.carrier.back(), b.multiplicity});
    }
    std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
        if (x.birth != y.birth) return x.birth < y.birth;
        if (x.death != y.death) return x.death < y.death;
        return x.mult < y.mult;
    });

    int span = std::max(poset_size, 1);
    int w = 2 * kMargin + span * kUnit + 80;
    int h = 2 * kMargin + (int)rows.size() * (kBarHeight + kBarGap);
    int base_y = h - kMargin;

    std::ostringstream ss;
    open_svg(ss, w, h);
    emit_line(ss, kMargin, kMargin / 2, kMargin, base_y, "#333333");
    emit_line(ss, kMargin, base_y, w - kMargin / 2, base_y, "#333333");
    for (int i = 0; i < poset_size; ++i)
        emit_text(ss, kMargin + i * kUnit + kUnit / 2 - 4, base_y + 16, std::to_string(i));

    int y = kMargin;
    for (const Row& r : rows) {
        int x = kMargin + r.birth * kUnit + 3;
        int rect_w = (r.death - r.birth + 1) * kUnit - 6;
        ss << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << rect_w << "\" height=\""
           << kBarHeight << "\" fill=\"#1f77b4\"/>\n";
        emit_text(ss, x + rect_w + 6, y + kBarHeight - 2, "x" + std::to_string(r.mult));
        y += kBarHeight + kBarGap;
    }
    ss << "</svg>\n";
    return ss.str();
}

std::string render_blocklist_svg(const BlockList& bl, const FinitePoset& P) {
    int m = 1, n = 1;
    for (auto [i, j] : P.coords) {
        m = std::max(m, i + 1);
        n = std::max(n, j + 1);
    }
    int grid_w = m * kUnit, grid_h = n * kUnit;
    int legend_y0 = kMargin + grid_h + kMargin / 2;
    int w = 2 * kMargin + std::max(grid_w, 11 * kUnit);
    int h = legend_y0 + (int)bl.blocks.size() * kLegendLine + kMargin;

    std::ostringstream ss;
    open_svg(ss, w, h);
    for (int i = 0; i <= m; ++i)
        emit_line(ss, kMargin + i * kUnit, kMargin, kMargin + i * kUnit, kMargin + grid_h,
                  "#cccccc");
    for (int j = 0; j <= n; ++j)
        emit_line(ss, kMargin, kMargin + j * kUnit, kMargin + grid_w, kMargin + j * kUnit,
                  "#cccccc");

    int k = 0;
    for (const BlockEntry& e : bl.blocks) {
        int imin = m, imax = -1, jmin = n, jmax = -1;
        for (int x : e.carrier) {
            auto [i, j] = P.coords[x];
            imin = std::min(imin, i);
            imax = std::max(imax, i);
            jmin = std::min(jmin, j);
            jmax = std::max(jmax, j);
        }
        if (imax < 0) continue;
        const char* color = block_color(e.types.front());
        int inset = 2 + (k % 4) * 3;
        int x = kMargin + imin * kUnit + inset;
        int y = kMargin + (n - 1 - jmax) * kUnit + inset;
        int rw = std::max((imax - imin + 1) * kUnit - 2 * inset, 4);
        int rh = std::max((jmax - jmin + 1) * kUnit - 2 * inset, 4);
        ss << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << rw << "\" height=\"" << rh
           << "\" fill=\"" << color << "\" fill-opacity=\"0.45\" stroke=\"" << color
           << "\" stroke-width=\"2\"/>\n";

        std::string names;
        for (BlockType t : e.types) {
            if (!names.empty()) names += "/";
            names += block_type_name(t);
        }
        std::ostringstream label;
        label << names << " [" << imin << "," << jmin << "]..[" << imax << "," << jmax << "] x"
              << e.multiplicity;
        emit_text(ss, kMargin, legend_y0 + k * kLegendLine, label.str());
        ++k;
    }
    ss << "</svg>\n";
    return ss.str();
}

} // namespace pmd
