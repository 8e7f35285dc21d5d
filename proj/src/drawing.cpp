#include "arr/drawing.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace arr {

Point PreparedLines::to_prepared(const Point& p) const {
    Rat y2 = p.y + shear_y * p.x;
    Rat x3 = p.x + shear_x * y2;
    return Point{x3, y2 - translate_down};
}

Point PreparedLines::to_original(const Point& p) const {
    Rat y3 = p.y + translate_down;
    Rat x2 = p.x - shear_x * y3;
    return Point{x2, y3 - shear_y * x2};
}

PreparedLines prepare_lines(const std::vector<GeneralLine>& lines) {
    if (lines.empty()) throw std::invalid_argument("prepare_lines: no lines");
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (parallel(lines[i], lines[j]))
                throw ParallelLines("prepare_lines: lines " + std::to_string(i) + " and " +
                                    std::to_string(j) + " are parallel");

    PreparedLines pl;
    pl.original = lines;

    // shear (x,y) -> (x, y + t*x): coefficients (a, b, c) -> (a - b*t, b, c);
    // kills horizontals (a == 0) when t avoids every a_i/b_i
    auto pick_avoiding = [](const std::set<Rat>& forbidden) {
        for (Rat t(1);; t += 1)
            if (!forbidden.count(t)) return t;
    };
    bool any_horizontal = std::any_of(lines.begin(), lines.end(),
                                      [](const GeneralLine& l) { return l.a == 0; });
    pl.shear_y = 0;
    if (any_horizontal) {
        std::set<Rat> forbidden;
        for (const GeneralLine& l : lines)
            if (l.b != 0) forbidden.insert(l.a / l.b);
        pl.shear_y = pick_avoiding(forbidden);
    }
    std::vector<GeneralLine> work;
    for (const GeneralLine& l : lines) work.emplace_back(l.a - l.b * pl.shear_y, l.b, l.c);

    // shear (x,y) -> (x + t*y, y): (a, b, c) -> (a, b - a*t, c); kills
    // verticals (b == 0), cannot reintroduce horizontals
    bool any_vertical = std::any_of(work.begin(), work.end(),
                                    [](const GeneralLine& l) { return l.b == 0; });
    pl.shear_x = 0;
    if (any_vertical) {
        std::set<Rat> forbidden;
        for (const GeneralLine& l : work) forbidden.insert(l.b / l.a);
        pl.shear_x = pick_avoiding(forbidden);
    }
    for (GeneralLine& l : work) l = GeneralLine(l.a, l.b - l.a * pl.shear_x, l.c);

    // translate down past the highest arrangement vertex
    Rat max_y;
    bool have_vertex = false;
    for (std::size_t i = 0; i < work.size(); ++i)
        for (std::size_t j = i + 1; j < work.size(); ++j) {
            const Point& p = std::get<Point>(line_intersection(work[i], work[j]));
            if (!have_vertex || p.y > max_y) { max_y = p.y; have_vertex = true; }
        }
    pl.translate_down = (have_vertex && max_y >= 0) ? max_y + 1 : Rat(0);
    for (GeneralLine& l : work)
        l = GeneralLine(l.a, l.b, l.c - l.b * pl.translate_down);

    // intercept forms, sorted by x intercept
    std::vector<std::size_t> order(work.size());
    std::vector<InterceptLine> ils;
    for (const GeneralLine& l : work) ils.emplace_back(-l.a / l.b, l.c / l.a);
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return ils[i].x_intercept < ils[j].x_intercept;
    });
    for (std::size_t i : order) {
        pl.sorted.push_back(ils[i]);
        pl.original_idx.push_back(i);
    }
    for (std::size_t i = 0; i + 1 < pl.sorted.size(); ++i) {
        if (pl.sorted[i].x_intercept == pl.sorted[i + 1].x_intercept)
            throw InductionViolation("prepare_lines: equal x intercepts after translation");
        if (Rat(1) / pl.sorted[i].slope >= Rat(1) / pl.sorted[i + 1].slope)
            throw InductionViolation("prepare_lines: inverse slopes not sorted with intercepts");
    }

    pl.min_abs_slope = rat_abs(pl.sorted[0].slope);
    for (const InterceptLine& l : pl.sorted)
        pl.min_abs_slope = std::min(pl.min_abs_slope, rat_abs(l.slope));
    pl.min_b_gap = 0;
    for (std::size_t i = 0; i + 1 < pl.sorted.size(); ++i) {
        Rat gap = pl.sorted[i + 1].x_intercept - pl.sorted[i].x_intercept;
        if (pl.min_b_gap == 0 || gap < pl.min_b_gap) pl.min_b_gap = gap;
    }
    return pl;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> graph_edges(const EmbeddedTriangulation& g) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < g.n; ++u)
        for (std::size_t v : g.rotation[u])
            if (u < v) edges.emplace_back(u, v);
    return edges;
}

int count_violations(const EmbeddedTriangulation& g, const std::vector<Point>& pts,
                     const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    int bad = 0;
    for (std::size_t u = 0; u < g.n; ++u)
        for (std::size_t v = u + 1; v < g.n; ++v)
            if (pts[u] == pts[v]) ++bad;
    if (bad) return bad + 1000; // coincident points dominate everything else
    std::vector<Segment> segs;
    for (auto [u, v] : edges) segs.emplace_back(pts[u], pts[v]);
    for (std::size_t e = 0; e < edges.size(); ++e)
        for (std::size_t f = e + 1; f < edges.size(); ++f) {
            bool adjacent = edges[e].first == edges[f].first || edges[e].first == edges[f].second ||
                            edges[e].second == edges[f].first || edges[e].second == edges[f].second;
            auto rel = segments_cross(segs[e], segs[f]);
            if (rel == SegmentRelation::Crossing) ++bad;
            if (!adjacent && rel != SegmentRelation::Disjoint) ++bad;
        }
    for (std::size_t e = 0; e < edges.size(); ++e)
        for (std::size_t w = 0; w < g.n; ++w) {
            if (w == edges[e].first || w == edges[e].second) continue;
            if (orientation(segs[e].p, segs[e].q, pts[w]) == 0 &&
                std::min(segs[e].p.x, segs[e].q.x) <= pts[w].x &&
                pts[w].x <= std::max(segs[e].p.x, segs[e].q.x) &&
                std::min(segs[e].p.y, segs[e].q.y) <= pts[w].y &&
                pts[w].y <= std::max(segs[e].p.y, segs[e].q.y))
                ++bad;
        }
    return bad;
}

} // namespace

ValidationReport verify_drawing(const EmbeddedTriangulation& g,
                                const std::vector<GeneralLine>& lines, const Drawing& d) {
    ValidationReport rep;
    auto issue = [&](std::string s) { rep.issues.push_back(std::move(s)); };

    if (d.line_of_vertex.size() != g.n || d.points.size() != g.n || lines.size() != g.n) {
        issue("size mismatch between graph, lines and drawing");
        return rep;
    }
    std::vector<char> used(g.n, 0);
    for (std::size_t v = 0; v < g.n; ++v) {
        std::size_t li = d.line_of_vertex[v];
        if (li >= g.n || used[li]) {
            issue("vertex-to-line assignment is not a bijection");
            return rep;
        }
        used[li] = 1;
    }
    for (std::size_t v = 0; v < g.n; ++v)
        if (!lines[d.line_of_vertex[v]].contains(d.points[v]))
            issue("vertex " + std::to_string(v) + " is not on its assigned line");

    for (std::size_t u = 0; u < g.n; ++u)
        for (std::size_t v = u + 1; v < g.n; ++v)
            if (d.points[u] == d.points[v])
                issue("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                      " share a point");
    if (!rep.ok()) return rep;

    auto edges = graph_edges(g);
    std::vector<Segment> segs;
    for (auto [u, v] : edges) segs.emplace_back(d.points[u], d.points[v]);
    for (std::size_t e = 0; e < edges.size(); ++e)
        for (std::size_t f = e + 1; f < edges.size(); ++f) {
            bool adjacent = edges[e].first == edges[f].first || edges[e].first == edges[f].second ||
                            edges[e].second == edges[f].first || edges[e].second == edges[f].second;
            auto rel = segments_cross(segs[e], segs[f]);
            if (rel == SegmentRelation::Crossing ||
                (!adjacent && rel != SegmentRelation::Disjoint))
                issue("edges " + std::to_string(e) + " and " + std::to_string(f) + " cross");
        }
    for (std::size_t e = 0; e < edges.size(); ++e)
        for (std::size_t w = 0; w < g.n; ++w) {
            if (w == edges[e].first || w == edges[e].second) continue;
            const Point& p = d.points[w];
            if (orientation(segs[e].p, segs[e].q, p) == 0 &&
                std::min(segs[e].p.x, segs[e].q.x) <= p.x && p.x <= std::max(segs[e].p.x, segs[e].q.x) &&
                std::min(segs[e].p.y, segs[e].q.y) <= p.y && p.y <= std::max(segs[e].p.y, segs[e].q.y))
                issue("vertex " + std::to_string(w) + " lies on edge " + std::to_string(e));
        }
    return rep;
}

Drawing draw_on_lines(const EmbeddedTriangulation& g, const std::vector<GeneralLine>& lines) {
    if (lines.size() != g.n)
        throw std::invalid_argument("draw_on_lines: need exactly one line per vertex");
    PreparedLines pl = prepare_lines(lines);

    CanonicalOrder ord = canonical_ordering(g);
    Frame fr = frame(g, ord);
    std::vector<std::size_t> rho = linear_extension(fr);

    // v_rho(i) goes to the i-th line in x-intercept order
    std::vector<std::size_t> sorted_pos(g.n);
    for (std::size_t i = 0; i < g.n; ++i) sorted_pos[rho[i]] = i;

    Drawing d;
    d.line_of_vertex.resize(g.n);
    d.points.resize(g.n);
    for (std::size_t v = 0; v < g.n; ++v) d.line_of_vertex[v] = pl.original_idx[sorted_pos[v]];

    std::vector<Point> pos(g.n); // prepared coordinates
    const std::size_t v1 = ord.ordering[0], v2 = ord.ordering[1];
    pos[v1] = Point{pl.sorted.front().x_intercept, Rat(0)};
    pos[v2] = Point{pl.sorted.back().x_intercept, Rat(0)};

    auto slope_between = [](const Point& p, const Point& q) -> std::optional<Rat> {
        if (p.x == q.x) return std::nullopt;
        return (q.y - p.y) / (q.x - p.x);
    };

    Rat h(1);
    for (std::size_t i = g.n; i >= 3; --i) {
        std::size_t vi = ord.ordering[i - 1];
        const InterceptLine& li = pl.sorted[sorted_pos[vi]];
        pos[vi] = Point{li.x_at(h), h};

        auto s1 = slope_between(pos[v1], pos[vi]);
        auto s2 = slope_between(pos[vi], pos[v2]);
        // s must stay strictly below both |s1| and |s2|, otherwise the clamp
        // heights y_1, y_2 are not positive; a vertical segment poses no bound
        Rat s = pl.min_abs_slope;
        if (s1 && s2) {
            Rat cand = std::min(rat_abs(*s1), rat_abs(*s2)) / 2;
            s = std::min(cand, pl.min_abs_slope);
        } else if (s1) {
            s = std::min(Rat(rat_abs(*s1) / 2), pl.min_abs_slope);
        } else if (s2) {
            s = std::min(Rat(rat_abs(*s2) / 2), pl.min_abs_slope);
        }
        // keep s strictly below every |a_i| so the clamp lines are never
        // parallel to l_1 or l_n
        if (s == pl.min_abs_slope) s /= 2;
        if (s <= 0) throw InductionViolation("draw_on_lines: nonpositive slope bound");

        const InterceptLine& l1 = pl.sorted.front();
        const InterceptLine& ln = pl.sorted.back();
        // intersection of the slope +-s line through v_i with l_1 / l_n
        auto clamp_y = [&](const InterceptLine& l, const Rat& slope) {
            Rat x = (l.slope * l.x_intercept + pos[vi].y - slope * pos[vi].x) / (l.slope - slope);
            return l.y_at(x);
        };
        Rat y1 = clamp_y(l1, s);
        Rat y2 = clamp_y(ln, -s);
        if (y1 <= 0 || y2 <= 0)
            throw InductionViolation("draw_on_lines: slab clamp not strictly positive");
        Rat cone = s * pl.min_b_gap / 2;

        Rat bound = std::min(std::min(y1, y2), std::min(cone, Rat(h / 2)));
        Rat next_h = pow2_floor(bound);
        d.trace.push_back(TraceRow{i, h, s, y1, y2, cone, next_h});
        h = next_h;
    }

    for (std::size_t v = 0; v < g.n; ++v) d.points[v] = pl.to_original(pos[v]);

    ValidationReport rep = verify_drawing(g, lines, d);
    if (!rep.ok())
        throw InductionViolation("draw_on_lines: verification failed: " + rep.issues.front());
    return d;
}

std::optional<Drawing> falsify_support(const EmbeddedTriangulation& g,
                                       const std::vector<std::size_t>& labelling,
                                       const std::vector<GeneralLine>& lines,
                                       std::size_t budget, std::uint64_t seed) {
    if (lines.size() != g.n || labelling.size() != g.n)
        throw std::invalid_argument("falsify_support: need one line per vertex");
    {
        std::vector<char> used(g.n, 0);
        for (std::size_t li : labelling) {
            if (li >= g.n || used[li])
                throw std::invalid_argument("falsify_support: labelling is not a bijection");
            used[li] = 1;
        }
    }

    std::mt19937_64 rng(seed);
    auto edges = graph_edges(g);

    auto point_on_line = [&](std::size_t li, const Rat& t) {
        const GeneralLine& l = lines[li];
        if (l.b != 0) return Point{t, (l.c - l.a * t) / l.b};
        return Point{l.c / l.a, t};
    };
    auto random_param = [&]() {
        Int num = Int(rng() % 4001) - 2000;
        Int den = Int(rng() % 16 + 1);
        return Rat(num, den);
    };

    std::size_t evals = 0;
    while (evals < budget) {
        std::vector<Rat> params(g.n);
        std::vector<Point> pts(g.n);
        for (std::size_t v = 0; v < g.n; ++v) {
            params[v] = random_param();
            pts[v] = point_on_line(labelling[v], params[v]);
        }
        int best = count_violations(g, pts, edges);
        ++evals;

        std::size_t stall = 0;
        while (best > 0 && evals < budget && stall < 8 * g.n) {
            std::size_t v = rng() % g.n;
            Rat old = params[v];
            params[v] = random_param();
            pts[v] = point_on_line(labelling[v], params[v]);
            int cand = count_violations(g, pts, edges);
            ++evals;
            if (cand < best) {
                best = cand;
                stall = 0;
            } else {
                params[v] = old;
                pts[v] = point_on_line(labelling[v], params[v]);
                ++stall;
            }
        }
        if (best == 0) {
            Drawing d;
            d.line_of_vertex = labelling;
            d.points = pts;
            if (verify_drawing(g, lines, d).ok()) return d;
        }
    }
    return std::nullopt;
}

} // namespace arr
