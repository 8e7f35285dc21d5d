#include "arr/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace arr {

namespace {

constexpr double kWidth = 800.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

struct Mapper {
    Viewport vp;
    double height;

    explicit Mapper(Viewport v) : vp(v) {
        double dx = vp.max_x - vp.min_x, dy = vp.max_y - vp.min_y;
        height = kWidth * dy / dx;
    }
    double px(double x) const { return (x - vp.min_x) / (vp.max_x - vp.min_x) * kWidth; }
    double py(double y) const { return height - (y - vp.min_y) / (vp.max_y - vp.min_y) * height; }
};

Viewport pad(double x0, double y0, double x1, double y1) {
    double dx = x1 - x0, dy = y1 - y0;
    if (dx <= 0) dx = 1;
    if (dy <= 0) dy = 1;
    return Viewport{x0 - 0.1 * dx, y0 - 0.1 * dy, x1 + 0.1 * dx, y1 + 0.1 * dy};
}

Viewport bbox(const std::vector<Point>& pts) {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    bool first = true;
    for (const Point& p : pts) {
        double x = rat_to_double(p.x), y = rat_to_double(p.y);
        if (first) { x0 = x1 = x; y0 = y1 = y; first = false; }
        x0 = std::min(x0, x); x1 = std::max(x1, x);
        y0 = std::min(y0, y); y1 = std::max(y1, y);
    }
    return pad(x0, y0, x1, y1);
}

// clip a*x + b*y = c to the viewport rectangle; empty when the line misses it
std::vector<std::pair<double, double>> clip_line(const GeneralLine& l, const Viewport& vp) {
    double a = rat_to_double(l.a), b = rat_to_double(l.b), c = rat_to_double(l.c);
    std::vector<std::pair<double, double>> hits;
    auto push = [&](double x, double y) {
        for (auto [hx, hy] : hits)
            if (std::abs(hx - x) < 1e-9 && std::abs(hy - y) < 1e-9) return;
        hits.emplace_back(x, y);
    };
    if (b != 0) {
        for (double x : {vp.min_x, vp.max_x}) {
            double y = (c - a * x) / b;
            if (y >= vp.min_y - 1e-9 && y <= vp.max_y + 1e-9) push(x, y);
        }
    }
    if (a != 0) {
        for (double y : {vp.min_y, vp.max_y}) {
            double x = (c - b * y) / a;
            if (x >= vp.min_x - 1e-9 && x <= vp.max_x + 1e-9) push(x, y);
        }
    }
    if (hits.size() > 2) hits.resize(2);
    return hits;
}

std::string header(const Mapper& m) {
    std::ostringstream ss;
    ss << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt(kWidth) << " "
       << fmt(m.height) << "\">\n";
    return ss.str();
}

} // namespace

std::string svg_export(const Arrangement& A, std::optional<Viewport> vp) {
    std::vector<Point> verts = A.distinct_vertices();
    Viewport box = vp ? *vp : (verts.empty() ? pad(-1, -1, 1, 1) : bbox(verts));
    Mapper m(box);
    std::ostringstream ss;
    ss << header(m);
    for (std::size_t i = 0; i < A.size(); ++i) {
        auto seg = clip_line(A.line(i), box);
        if (seg.size() < 2) continue;
        ss << "  <line x1=\"" << fmt(m.px(seg[0].first)) << "\" y1=\"" << fmt(m.py(seg[0].second))
           << "\" x2=\"" << fmt(m.px(seg[1].first)) << "\" y2=\"" << fmt(m.py(seg[1].second))
           << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        ss << "  <text x=\"" << fmt(m.px(seg[0].first) + 4) << "\" y=\""
           << fmt(m.py(seg[0].second) - 4) << "\" font-size=\"12\">l" << (i + 1) << "</text>\n";
    }
    for (const Point& p : verts)
        ss << "  <circle cx=\"" << fmt(m.px(rat_to_double(p.x))) << "\" cy=\""
           << fmt(m.py(rat_to_double(p.y))) << "\" r=\"2.5\" fill=\"red\"/>\n";
    ss << "</svg>\n";
    return ss.str();
}

std::string svg_export(const DrawingFile& df, std::optional<Viewport> vp) {
    Viewport box = vp ? *vp : bbox(df.drawing.points);
    Mapper m(box);
    std::ostringstream ss;
    ss << header(m);
    for (auto [u, v] : df.edges) {
        const Point& p = df.drawing.points[u];
        const Point& q = df.drawing.points[v];
        ss << "  <line x1=\"" << fmt(m.px(rat_to_double(p.x))) << "\" y1=\""
           << fmt(m.py(rat_to_double(p.y))) << "\" x2=\"" << fmt(m.px(rat_to_double(q.x)))
           << "\" y2=\"" << fmt(m.py(rat_to_double(q.y)))
           << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    for (std::size_t v = 0; v < df.drawing.points.size(); ++v) {
        const Point& p = df.drawing.points[v];
        double x = m.px(rat_to_double(p.x)), y = m.py(rat_to_double(p.y));
        ss << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
           << "\" r=\"3\" fill=\"steelblue\"/>\n";
        ss << "  <text x=\"" << fmt(x + 5) << "\" y=\"" << fmt(y - 5) << "\" font-size=\"12\">v"
           << (v + 1) << "</text>\n";
    }
    ss << "</svg>\n";
    return ss.str();
}

} // namespace arr
