#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "arcalg/basis_diagram.hpp"
#include "arcalg/element.hpp"

namespace arcalg {

namespace detail {

// Nesting height of each arc: innermost arcs sit at height 1, an arc
// enclosing others one row further out.
inline std::vector<int> arc_heights(const std::vector<Arc>& arcs) {
    std::vector<int> h(arcs.size(), 1);
    // process by increasing span so nested heights are known first
    std::vector<std::size_t> order(arcs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return arcs[a].second - arcs[a].first < arcs[b].second - arcs[b].first;
    });
    for (std::size_t oi : order) {
        int best = 0;
        for (std::size_t j = 0; j < arcs.size(); ++j)
            if (j != oi && arcs[oi].first < arcs[j].first && arcs[j].second < arcs[oi].second)
                best = std::max(best, h[j]);
        h[oi] = best + 1;
    }
    return h;
}

inline void rstrip(std::string& s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
}

// One band (caps or cups). Rows are returned nearest-the-line first.
inline std::vector<std::string> band_rows(const ArcDiagram& d, char corner) {
    const int n = static_cast<int>(d.size());
    const auto arcs = d.arcs();
    const auto heights = arc_heights(arcs);
    const auto rays = d.rays();
    int band = 0;
    for (int h : heights) band = std::max(band, h);
    if (!rays.empty()) band = std::max(band + 1, 1);
    std::vector<std::string> rows;
    const int width = n == 0 ? 0 : 2 * n - 1;
    for (int r = 1; r <= band; ++r) {
        std::string row(static_cast<std::size_t>(width), ' ');
        auto col = [&](int v) { return static_cast<std::size_t>(2 * v); };
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            if (heights[i] == r) {
                row[col(arcs[i].first)] = corner;
                row[col(arcs[i].second)] = corner;
                for (std::size_t c = col(arcs[i].first) + 1; c < col(arcs[i].second); ++c)
                    row[c] = '-';
            } else if (heights[i] > r) {
                row[col(arcs[i].first)] = '|';
                row[col(arcs[i].second)] = '|';
            }
        }
        for (int v : rays) row[col(v)] = '|';
        rstrip(row);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace detail

// Plain-text picture: caps above, the weight symbols on the line, cups
// below; the first line repeats the diagram in the parseable grammar form.
inline std::string render_ascii(const BasisDiagram& d, bool include_header = true) {
    const int n = static_cast<int>(d.weight().size());
    std::string out;
    if (include_header) out += d.str() + "\n";
    auto caps = detail::band_rows(d.cap(), '.');
    auto cups = detail::band_rows(d.cup(), '\'');
    for (auto it = caps.rbegin(); it != caps.rend(); ++it) out += *it + "\n";
    std::string mid;
    for (int v = 0; v < n; ++v) {
        if (v) mid += ' ';
        mid += to_char(d.weight()[static_cast<std::size_t>(v)]);
    }
    detail::rstrip(mid);
    out += mid + "\n";
    for (const auto& row : cups) out += row + "\n";
    return out;
}

// Each term rendered below its signed coefficient line.
inline std::string render_ascii(const Element& e) {
    if (e.zero()) return "0\n";
    std::string out;
    for (const auto& [d, c] : e) {
        out += (c < 0 ? "-" : "+") + std::to_string(c < 0 ? -c : c) + "·(" + d.str() + ")\n";
        out += render_ascii(d, /*include_header=*/false);
    }
    return out;
}

} // namespace arcalg
