#include "arr/geometry.hpp"

#include <algorithm>

namespace arr {

IntersectionResult line_intersection(const GeneralLine& l1, const GeneralLine& l2) {
    Rat det = l1.a * l2.b - l1.b * l2.a;
    if (det == 0) {
        return ParallelIndicator{l1.same_line(l2)};
    }
    Rat x = (l1.c * l2.b - l1.b * l2.c) / det;
    Rat y = (l1.a * l2.c - l1.c * l2.a) / det;
    return Point{x, y};
}

int orientation(const Point& a, const Point& b, const Point& c) {
    return sign((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

namespace {

bool on_segment(const Segment& s, const Point& p) {
    if (orientation(s.p, s.q, p) != 0) return false;
    return std::min(s.p.x, s.q.x) <= p.x && p.x <= std::max(s.p.x, s.q.x) &&
           std::min(s.p.y, s.q.y) <= p.y && p.y <= std::max(s.p.y, s.q.y);
}

} // namespace

SegmentRelation segments_cross(const Segment& s1, const Segment& s2) {
    int o1 = orientation(s1.p, s1.q, s2.p);
    int o2 = orientation(s1.p, s1.q, s2.q);
    int o3 = orientation(s2.p, s2.q, s1.p);
    int o4 = orientation(s2.p, s2.q, s1.q);

    bool meet;
    if (o1 != o2 && o3 != o4 && o1 * o2 <= 0 && o3 * o4 <= 0) {
        // covers proper crossings and T-contacts where one endpoint is
        // interior to the other segment
        meet = (o1 * o2 < 0 && o3 * o4 < 0) ||
               (o1 == 0 && on_segment(s1, s2.p)) || (o2 == 0 && on_segment(s1, s2.q)) ||
               (o3 == 0 && on_segment(s2, s1.p)) || (o4 == 0 && on_segment(s2, s1.q));
    } else {
        meet = (o1 == 0 && on_segment(s1, s2.p)) || (o2 == 0 && on_segment(s1, s2.q)) ||
               (o3 == 0 && on_segment(s2, s1.p)) || (o4 == 0 && on_segment(s2, s1.q));
    }
    if (!meet) return SegmentRelation::Disjoint;

    // Meeting point(s) exist. Decide whether the intersection is exactly one
    // shared endpoint and nothing more.
    bool share_pp = s1.p == s2.p, share_pq = s1.p == s2.q;
    bool share_qp = s1.q == s2.p, share_qq = s1.q == s2.q;
    int shared = int(share_pp) + int(share_pq) + int(share_qp) + int(share_qq);
    if (shared == 0) return SegmentRelation::Crossing;
    if (shared >= 2) return SegmentRelation::Crossing; // identical or overlapping

    // One shared endpoint. Any other contact (collinear overlap or the shared
    // endpoint interior to the other segment cannot happen; check overlap).
    if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
        // collinear with one shared endpoint: overlap iff a non-shared
        // endpoint lies on the other segment
        const Point& a = share_pp || share_pq ? s1.q : s1.p;
        const Point& b = share_qp || share_pp ? s2.q : s2.p;
        if (on_segment(s2, a) || on_segment(s1, b)) return SegmentRelation::Crossing;
    }
    return SegmentRelation::ShareEndpointOnly;
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& p, const Point& q) { return lex_less(p, q); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 1) return pts;

    // monotone chain, strict turns only (no collinear hull vertices)
    std::vector<Point> h;
    auto build = [&](auto begin, auto end) {
        std::size_t base = h.size();
        for (auto it = begin; it != end; ++it) {
            while (h.size() >= base + 2 && orientation(h[h.size() - 2], h.back(), *it) <= 0)
                h.pop_back();
            h.push_back(*it);
        }
    };
    build(pts.begin(), pts.end());
    h.pop_back();
    std::size_t lower = h.size();
    build(pts.rbegin(), pts.rend());
    h.pop_back();
    if (h.size() == lower) {
        // all collinear: lower chain alone, keep the two extremes
        return {pts.front(), pts.back()};
    }
    return h;
}

bool point_in_convex_polygon(const std::vector<Point>& poly, const Point& p) {
    if (poly.empty()) return false;
    if (poly.size() == 1) return poly[0] == p;
    if (poly.size() == 2) return on_segment(Segment(poly[0], poly[1]), p);
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % poly.size()];
        if (orientation(a, b, p) < 0) return false;
    }
    return true;
}

namespace {

std::vector<Segment> polygon_edges(const std::vector<Point>& poly) {
    std::vector<Segment> e;
    if (poly.size() == 2) {
        e.emplace_back(poly[0], poly[1]);
    } else if (poly.size() >= 3) {
        for (std::size_t i = 0; i < poly.size(); ++i)
            e.emplace_back(poly[i], poly[(i + 1) % poly.size()]);
    }
    return e;
}

} // namespace

bool convex_polygons_intersect(const std::vector<Point>& a, const std::vector<Point>& b) {
    if (a.empty() || b.empty()) return false;
    for (const Point& p : a)
        if (point_in_convex_polygon(b, p)) return true;
    for (const Point& p : b)
        if (point_in_convex_polygon(a, p)) return true;
    for (const Segment& ea : polygon_edges(a))
        for (const Segment& eb : polygon_edges(b))
            if (segments_cross(ea, eb) != SegmentRelation::Disjoint) return true;
    return false;
}

bool line_meets_polygon(const GeneralLine& l, const std::vector<Point>& poly) {
    bool pos = false, neg = false;
    for (const Point& p : poly) {
        int sg = sign(l.eval(p));
        if (sg == 0) return true;
        (sg > 0 ? pos : neg) = true;
    }
    return pos && neg;
}

bool strictly_below(const GeneralLine& l, const std::vector<Point>& pts) {
    for (const Point& p : pts)
        if (sign(l.eval(p)) >= 0) return false;
    return true;
}

} // namespace arr
