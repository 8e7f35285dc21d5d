#ifndef ARR_GEOMETRY_HPP
#define ARR_GEOMETRY_HPP

#include <compare>
#include <optional>
#include <variant>
#include <vector>

#include "arr/rational.hpp"

namespace arr {

struct Point {
    Rat x, y;
    bool operator==(const Point&) const = default;
};

// Lexicographic order, used for deterministic tie-breaks and dedup.
inline bool lex_less(const Point& p, const Point& q) {
    if (p.x != q.x) return p.x < q.x;
    return p.y < q.y;
}

// Locus a*x + b*y = c, stored in canonical scale: the first nonzero
// coefficient among (a, b) equals +-1. Scaling is by a positive factor only,
// so the orientation of the normal (which side is which) survives; negating
// all coefficients yields the same locus with the opposite orientation.
struct GeneralLine {
    Rat a, b, c;

    GeneralLine(Rat a_, Rat b_, Rat c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
        if (a == 0 && b == 0) throw std::invalid_argument("GeneralLine: degenerate coefficients");
        Rat s = rat_abs((a != 0) ? a : b);
        a /= s; b /= s; c /= s;
    }

    // same locus, ignoring orientation
    bool same_line(const GeneralLine& o) const {
        return a * o.b == b * o.a && a * o.c == c * o.a && b * o.c == c * o.b;
    }

    static GeneralLine through(const Point& p, const Point& q) {
        if (p == q) throw std::invalid_argument("GeneralLine::through: identical points");
        // (y2-y1)x - (x2-x1)y = (y2-y1)x1 - (x2-x1)y1
        Rat a = q.y - p.y, b = p.x - q.x;
        return GeneralLine(a, b, a * p.x + b * p.y);
    }

    Rat eval(const Point& p) const { return a * p.x + b * p.y - c; }
    bool contains(const Point& p) const { return eval(p) == 0; }

    bool operator==(const GeneralLine&) const = default;
};

inline bool lex_less(const GeneralLine& l, const GeneralLine& m) {
    if (l.a != m.a) return l.a < m.a;
    if (l.b != m.b) return l.b < m.b;
    return l.c < m.c;
}

inline bool parallel(const GeneralLine& l, const GeneralLine& m) {
    return l.a * m.b - l.b * m.a == 0;
}

// y = slope * (x - x_intercept); excludes horizontal (slope != 0) and,
// by representability, vertical lines.
struct InterceptLine {
    Rat slope, x_intercept;

    InterceptLine(Rat s, Rat b) : slope(std::move(s)), x_intercept(std::move(b)) {
        if (slope == 0) throw std::invalid_argument("InterceptLine: zero slope");
    }

    GeneralLine general() const {
        // slope*x - y = slope*x_intercept
        return GeneralLine(slope, Rat(-1), slope * x_intercept);
    }

    Rat y_at(const Rat& x) const { return slope * (x - x_intercept); }
    Rat x_at(const Rat& y) const { return x_intercept + y / slope; }
};

enum class HalfplaneSense { Closed /* a*x+b*y <= c */, Open /* a*x+b*y < c */ };

enum class Side { Inside, Boundary, Outside };

struct Halfplane {
    GeneralLine boundary;
    HalfplaneSense sense;

    Halfplane(GeneralLine b, HalfplaneSense s) : boundary(std::move(b)), sense(s) {}

    bool contains(const Point& p) const {
        int sg = sign(boundary.eval(p));
        return sense == HalfplaneSense::Closed ? sg <= 0 : sg < 0;
    }

    Halfplane complement_closed() const {
        // closed halfplane on the other side of the same boundary
        return Halfplane(GeneralLine(-boundary.a, -boundary.b, -boundary.c), HalfplaneSense::Closed);
    }
};

inline Side side_of(const Halfplane& h, const Point& p) {
    int sg = sign(h.boundary.eval(p));
    if (sg == 0) return h.sense == HalfplaneSense::Closed ? Side::Inside : Side::Outside;
    return sg < 0 ? Side::Inside : Side::Outside;
}

// Exact classification of a point against a line, independent of sense.
inline Side side_of_boundary(const GeneralLine& l, const Point& p) {
    int sg = sign(l.eval(p));
    if (sg == 0) return Side::Boundary;
    return sg < 0 ? Side::Inside : Side::Outside;
}

struct Segment {
    Point p, q;
    Segment(Point p_, Point q_) : p(std::move(p_)), q(std::move(q_)) {
        if (p == q) throw std::invalid_argument("Segment: identical endpoints");
    }
};

struct ParallelIndicator {
    bool identical;
};

using IntersectionResult = std::variant<Point, ParallelIndicator>;

IntersectionResult line_intersection(const GeneralLine& l1, const GeneralLine& l2);

// Orientation of the triple (a, b, c): sign of the cross product
// (b-a) x (c-a). +1 = counterclockwise, 0 = collinear, -1 = clockwise.
int orientation(const Point& a, const Point& b, const Point& c);

enum class SegmentRelation { Disjoint, ShareEndpointOnly, Crossing };

// "Crossing" exactly when the closed segments meet at some point other
// than a common endpoint (overlap, interior touch and T-contact included).
SegmentRelation segments_cross(const Segment& s1, const Segment& s2);

// Minimal ccw vertex cycle of the hull. Degenerate inputs yield a single
// point or the two extreme points of a segment.
std::vector<Point> convex_hull(std::vector<Point> pts);

// Point in (possibly degenerate) convex polygon given as hull output.
bool point_in_convex_polygon(const std::vector<Point>& poly, const Point& p);

// Do two convex polygons (hull outputs, possibly degenerate) share a point?
bool convex_polygons_intersect(const std::vector<Point>& a, const std::vector<Point>& b);

// Does the line meet the polygon (vertex on the line, or vertices on both
// strict sides)?
bool line_meets_polygon(const GeneralLine& l, const std::vector<Point>& poly);

// All points strictly on the negative side of l?
bool strictly_below(const GeneralLine& l, const std::vector<Point>& pts);

} // namespace arr

#endif
