#include "rulerlab/svg.hpp"

#include <cmath>
#include <sstream>

#include "rulerlab/report.hpp"

namespace rulerlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string svg_open(int width, int height) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    return os.str();
}

std::string num(double x) {
    return format_real(x);
}

void text_at(std::ostringstream& os, double x, double y, int size, const std::string& s,
             const char* anchor = "middle") {
    os << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-size=\"" << size
       << "\" font-family=\"monospace\" text-anchor=\"" << anchor << "\">" << s << "</text>\n";
}

} // namespace

std::string svg_ruler_ticks(int n) {
    const IndexSequence terms = ruler_block(n);
    const int width = 1000, height = 260;
    const double left = 40, right = 20, bottom = 30, unit = (height - 60.0) / n;
    const double span = width - left - right;
    std::ostringstream os;
    os << svg_open(width, height);
    const double y0 = height - bottom;
    os << "<path d=\"M " << num(left) << " " << num(y0) << " H " << num(width - right)
       << "\" stroke=\"black\" fill=\"none\"/>\n";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const double x = terms.size() == 1
                             ? left + span / 2
                             : left + span * static_cast<double>(i) / (terms.size() - 1);
        os << "<line x1=\"" << num(x) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x)
           << "\" y2=\"" << num(y0 - unit * terms[i]) << "\" stroke=\"black\" stroke-width=\"0.6\"/>\n";
    }
    for (int v = 1; v <= n; ++v)
        text_at(os, left - 12, y0 - unit * v + 3, 9, std::to_string(v));
    text_at(os, width / 2.0, height - 8, 10, "position in sequence");
    os << "</svg>\n";
    return os.str();
}

std::string svg_age_pyramid(const AgeCensus& census) {
    const int width = 600, height = 60 + 26 * static_cast<int>(census.counts.size());
    const double cx = width / 2.0, full = width - 160.0;
    std::ostringstream os;
    os << svg_open(width, height);
    text_at(os, cx, 20, 12, "age distribution, step " + std::to_string(census.step));
    for (std::size_t k = 0; k < census.counts.size(); ++k) {
        const double share = census.proportions[k];
        const double w = full * share;
        const double y = height - 30.0 - 26.0 * k;
        os << "<rect x=\"" << num(cx - w / 2) << "\" y=\"" << num(y - 18) << "\" width=\""
           << num(w) << "\" height=\"18\" fill=\"#4878a8\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
        text_at(os, 30, y - 4, 10, std::to_string(k + 1), "start");
        text_at(os, width - 10, y - 4, 10,
                std::to_string(census.counts[k]) + " (" + format_real(share) + ")", "end");
    }
    text_at(os, 30, 32, 10, "age", "start");
    os << "</svg>\n";
    return os.str();
}

std::string svg_cantor_levels(int n) {
    const int width = 1000, row = 46;
    const int height = 30 + row * n;
    const double left = 30, span = width - 60.0;
    std::ostringstream os;
    os << svg_open(width, height);
    for (int s = 1; s <= n; ++s) {
        const CantorLevel lvl = cantor_level(s);
        const double y = 20.0 + row * (s - 1);
        text_at(os, 8, y + 16, 10, "n=" + std::to_string(s), "start");
        os << "<path d=\"M " << num(left) << " " << num(y + 20) << " H " << num(left + span)
           << "\" stroke=\"#cccccc\" fill=\"none\"/>\n";
        for (const MiddleInterval& iv : lvl.intervals) {
            const double lo =
                static_cast<double>(iv.lo.numerator) / std::pow(3.0, iv.lo.exponent);
            const double hi =
                static_cast<double>(iv.hi.numerator) / std::pow(3.0, iv.hi.exponent);
            const double x0 = left + span * lo, x1 = left + span * hi;
            os << "<rect x=\"" << num(x0) << "\" y=\"" << num(y + 14) << "\" width=\""
               << num(x1 - x0) << "\" height=\"12\" fill=\"#333333\"/>\n";
            if (s <= 5)
                text_at(os, (x0 + x1) / 2, y + 10, 9, std::to_string(interval_index(lvl, iv)));
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string svg_polygon_generations(int n) {
    const int width = 640, height = 640;
    const double cx = width / 2.0, cy = height / 2.0, R = 270.0;
    // angle fraction t (clockwise from the southernmost vertex) to canvas
    const auto px = [&](double t) { return cx - R * std::sin(2 * kPi * t); };
    const auto py = [&](double t) { return cy + R * std::cos(2 * kPi * t); };
    std::ostringstream os;
    os << svg_open(width, height);
    os << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(R)
       << "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
    for (int m = 1; m <= n; ++m) {
        const int verts = 1 << m;
        os << "<polygon points=\"";
        for (int k = 0; k < verts; ++k) {
            const double t = static_cast<double>(k) / verts;
            if (k)
                os << ' ';
            os << num(px(t)) << ',' << num(py(t));
        }
        os << "\" fill=\"none\" stroke=\"black\" stroke-width=\""
           << num(0.4 + 1.6 * (n - m + 1) / n) << "\"/>\n";
    }
    const int verts = 1 << n;
    for (int k = 0; k < verts; ++k) {
        const double t = static_cast<double>(k) / verts;
        const int index = k == 0 ? n : vertex_index({static_cast<std::uint32_t>(k), n});
        os << "<circle cx=\"" << num(px(t)) << "\" cy=\"" << num(py(t))
           << "\" r=\"3\" fill=\"black\"/>\n";
        const double lx = cx + (px(t) - cx) * 1.09, ly = cy + (py(t) - cy) * 1.09;
        text_at(os, lx, ly + 3, 11, std::to_string(index));
    }
    os << "</svg>\n";
    return os.str();
}

std::string svg_visibility_diagram(const Orbit& orbit) {
    const std::size_t p = orbit.points.size();
    const VisibilityPattern pattern = orbit_visibility_pattern(orbit);
    const int width = 120 + 60 * static_cast<int>(p), height = 420;
    const double left = 60, base = height - 60.0, scale = height - 140.0;
    const auto sx = [&](std::size_t i) { return left + 60.0 * i; };
    const auto sy = [&](double v) { return base - scale * v; };
    std::ostringstream os;
    os << svg_open(width, height);
    text_at(os, width / 2.0, 24, 12,
            "forward visibility, period " + std::to_string(orbit.period) + " at r=" +
                format_real(orbit.r));
    // two periods of stems; arcs from the first period only
    for (std::size_t i = 0; i < 2 * p; ++i) {
        const double v = orbit.points[i % p];
        os << "<line x1=\"" << num(sx(i)) << "\" y1=\"" << num(base) << "\" x2=\"" << num(sx(i))
           << "\" y2=\"" << num(sy(v)) << "\" stroke=\"#777777\" stroke-width=\"2\"/>\n";
        os << "<circle cx=\"" << num(sx(i)) << "\" cy=\"" << num(sy(v))
           << "\" r=\"3\" fill=\"black\"/>\n";
    }
    std::vector<double> series;
    for (int c = 0; c < 4; ++c)
        series.insert(series.end(), orbit.points.begin(), orbit.points.end());
    for (std::size_t i = 0; i < p; ++i) {
        const double xi = series[i];
        double blocker = -1.0;
        for (std::size_t j = i + 1; j < series.size() && j < 2 * p; ++j) {
            const double xj = series[j];
            if (blocker < xj && blocker < xi) {
                const double x0 = sx(i), x1 = sx(j);
                const double y0 = sy(std::min(xi, xj));
                os << "<path d=\"M " << num(x0) << " " << num(y0) << " Q " << num((x0 + x1) / 2)
                   << " " << num(y0 - 26) << " " << num(x1) << " " << num(y0)
                   << "\" stroke=\"#a03030\" fill=\"none\"/>\n";
            }
            if (xj >= xi)
                break;
            blocker = std::max(blocker, xj);
        }
        text_at(os, sx(i), base + 18, 11, std::to_string(pattern.degrees[i]));
    }
    text_at(os, width / 2.0, height - 14, 10, "degree per point over one period");
    os << "</svg>\n";
    return os.str();
}

} // namespace rulerlab
