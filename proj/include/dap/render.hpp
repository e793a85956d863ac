#pragma once

// Schematic ASCII and SVG pictures of paths and meander words. Unit-grid
// geometry only; nothing here feeds back into the combinatorics.

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "core.hpp"
#include "errors.hpp"

namespace dap {

namespace renderdetail {

// Band b is the vertical strip [b, b+1); printed top row first.
struct Grid {
    int maxband, minband;
    std::vector<std::string> rows;
    Grid(int lo, int hi, std::size_t cols)
        : maxband(hi), minband(lo), rows(hi - lo + 1, std::string(cols, ' ')) {}
    void put(int band, std::size_t col, char ch) { rows[maxband - band][col] = ch; }
    std::string str() const {
        std::string out;
        for (const std::string& r : rows) {
            std::size_t end = r.find_last_not_of(' ');
            out.append(r, 0, end == std::string::npos ? 0 : end + 1);
            out += '\n';
        }
        return out;
    }
};

inline std::string svg_document(long x0, long y0, long w, long h, const std::string& body) {
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    out += std::to_string(x0) + " " + std::to_string(y0) + " " + std::to_string(w) + " " +
           std::to_string(h) + "\" width=\"" + std::to_string(w) + "\" height=\"" +
           std::to_string(h) + "\">\n";
    out += body;
    out += "</svg>\n";
    return out;
}

constexpr long px = 24;  // pixels per lattice unit

}  // namespace renderdetail

// One column per step. An up step in the strip it climbs through is '/'; a
// down step D_k is '\' in its top strip with '|' filling the k-1 strips below,
// so "UUD2" renders as a 3-column picture with the apex at height 2:
//     " /\ "  over  "/ |"
inline std::string render_path_ascii(const AirPocketPath& p) {
    const auto hs = p.heights();
    int maxh = *std::max_element(hs.begin(), hs.end());
    renderdetail::Grid g(0, maxh - 1, p.size());
    int before = 0;
    for (int i = 0; i < p.size(); ++i) {
        Step s = p.steps()[i];
        if (s.is_up()) {
            g.put(before, i, '/');
        } else {
            g.put(before - 1, i, '\\');
            for (int b = before - s.fall(); b < before - 1; ++b) g.put(b, i, '|');
        }
        before = hs[i];
    }
    return g.str();
}

// Polyline through the lattice points, one line segment per step; SVG y grows
// downward so ordinates are flipped against the max height.
inline std::string render_path_svg(const AirPocketPath& p) {
    using renderdetail::px;
    const auto hs = p.heights();
    long maxh = *std::max_element(hs.begin(), hs.end());
    std::string d = "M 0 " + std::to_string(maxh * px);
    for (std::size_t i = 0; i != hs.size(); ++i)
        d += " L " + std::to_string((i + 1) * px) + " " + std::to_string((maxh - hs[i]) * px);
    std::string body = "  <path d=\"" + d +
                       "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" "
                       "stroke-linejoin=\"round\"/>\n";
    return renderdetail::svg_document(-px / 4, -px / 4, static_cast<long>(p.size()) * px + px / 2,
                                      maxh * px + px / 2, body);
}

// Motzkin-type words, wavy flats included; grand words may dip below 0.
inline std::string render_word_ascii(std::span<const MStep> w) {
    if (w.empty()) return "";
    int lo = 0, hi = 0, h = 0;
    std::vector<int> bands(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        // flats sit on the baseline of their own strip; a down step's glyph
        // lives in the strip it descends into
        bands[i] = w[i] == MStep::down ? h - 1 : h;
        h += rise(w[i]);
        lo = std::min(lo, bands[i]);
        hi = std::max(hi, bands[i]);
    }
    renderdetail::Grid g(lo, hi, w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        char ch = w[i] == MStep::up     ? '/'
                  : w[i] == MStep::down ? '\\'
                  : w[i] == MStep::flat ? '_'
                                        : '~';
        g.put(bands[i], i, ch);
    }
    return g.str();
}

inline std::string render_word_ascii(const MotzkinWord& w) { return render_word_ascii(w.steps()); }

// A meander is drawn through its pair image: the word picture makes the arc
// structure legible in a terminal.
inline std::string render_meander_ascii(const MeanderWord& m) {
    std::vector<MStep> img = m.mu();
    return render_word_ascii(img);
}

// Chained half-circle arcs of radius 1 on a common baseline. The pen state is
// (abscissa, side): after an arc above the line the next one goes below, and
// vice versa. Sweep orientation: above the line a rightward arc is clockwise
// (sweep 1) and a leftward one counterclockwise (sweep 0); below the line the
// two roles swap, which works out to sweep = 1 exactly for the letter R.
inline std::string render_meander_svg(const MeanderWord& m) {
    using renderdetail::px;
    long x = 0, minx = 0, maxx = 0;
    bool above = true;
    std::string d = "M 0 0";
    for (char c : m.letters()) {
        long nx;
        if (above)
            nx = c == 'L' ? x - 2 : x + 2;
        else
            nx = c == 'L' ? x + 2 : x - 2;
        d += " A " + std::to_string(px) + " " + std::to_string(px) + " 0 0 " +
             (c == 'R' ? "1" : "0") + " " + std::to_string(nx * px) + " 0";
        x = nx;
        minx = std::min(minx, x);
        maxx = std::max(maxx, x);
        above = !above;
    }
    std::string body = "  <path d=\"" + d +
                       "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    return renderdetail::svg_document((minx - 1) * px - px / 2, -px - px / 2,
                                      (maxx - minx + 2) * px + px, 2 * px + px, body);
}

}  // namespace dap
