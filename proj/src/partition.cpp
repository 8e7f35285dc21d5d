#include "arr/partition.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace arr {

std::size_t ceil_sqrt(std::size_t x) {
    std::size_t s = 0;
    while (s * s < x) ++s;
    return s;
}

std::size_t ceil_sqrt_third(std::size_t x) {
    std::size_t s = 0;
    while (3 * s * s < x) ++s;
    return s;
}

std::size_t CutResult::min_value() const {
    std::size_t m = SIZE_MAX;
    for (const auto& per_arr : witnesses)
        for (const auto& w : per_arr) m = std::min(m, w.value);
    return m;
}

namespace {

struct LineLess {
    bool operator()(const GeneralLine& l, const GeneralLine& m) const { return lex_less(l, m); }
};
struct PointLess {
    bool operator()(const Point& p, const Point& q) const { return lex_less(p, q); }
};

std::vector<Point> merged_distinct_vertices(const Arrangement& A1, const Arrangement& A2) {
    std::vector<Point> pts = A1.distinct_vertices();
    auto v2 = A2.distinct_vertices();
    pts.insert(pts.end(), v2.begin(), v2.end());
    std::sort(pts.begin(), pts.end(), [](const Point& p, const Point& q) { return lex_less(p, q); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// candidate cut lines through all pairs of distinct points, deduplicated and
// in deterministic (lexicographic) order
std::vector<GeneralLine> vertex_pair_lines(const std::vector<Point>& pts) {
    std::set<GeneralLine, LineLess> set;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            set.insert(GeneralLine::through(pts[i], pts[j]));
    return {set.begin(), set.end()};
}

std::array<std::array<MuResult, 2>, 2> evaluate_cut(const Arrangement& A1, const Arrangement& A2,
                                                    const GeneralLine& cut) {
    Halfplane minus(cut, HalfplaneSense::Closed);
    Halfplane plus = minus.complement_closed();
    return {{{mu_halfplane(A1, minus), mu_halfplane(A1, plus)},
             {mu_halfplane(A2, minus), mu_halfplane(A2, plus)}}};
}

} // namespace

CutResult ham_sandwich_cut(const Arrangement& A1, const Arrangement& A2) {
    std::vector<Point> pts = merged_distinct_vertices(A1, A2);

    CutResult best;
    if (pts.size() < 2) {
        // no or one vertex overall: any line through the vertex (or any line
        // at all) carries full witnesses on both closed sides
        GeneralLine cut = pts.empty() ? GeneralLine(Rat(1), Rat(0), Rat(0))
                                      : GeneralLine(Rat(1), Rat(-1), pts[0].x - pts[0].y);
        best.cut = cut;
        best.witnesses = evaluate_cut(A1, A2, cut);
        return best;
    }

    bool have = false;
    std::size_t best_min = 0;
    for (const GeneralLine& cand : vertex_pair_lines(pts)) {
        auto w = evaluate_cut(A1, A2, cand);
        std::size_t mn = SIZE_MAX;
        for (const auto& pa : w)
            for (const auto& m : pa) mn = std::min(mn, m.value);
        if (!have || mn > best_min) {
            have = true;
            best_min = mn;
            best.cut = cand;
            best.witnesses = w;
        }
    }
    return best;
}

CutResult::CutResult() : cut(Rat(1), Rat(0), Rat(0)) {}

namespace {

// boundary line through q with the given slope (or vertical)
GeneralLine boundary_through(const Point& q, const std::optional<Rat>& slope) {
    if (!slope) return GeneralLine(Rat(1), Rat(0), q.x);
    return GeneralLine(*slope, Rat(-1), *slope * q.x - q.y);
}

// Candidate boundary slopes through q: every direction at which a vertex
// enters or leaves the boundary, plus a sample inside every interval in
// between. Together these attain the exact minimum of the piecewise-constant
// depth function.
std::vector<std::optional<Rat>> depth_candidate_slopes(const Arrangement& A, const Point& q) {
    std::set<Rat> slopes;
    bool vertical = false;
    auto add_dir = [&](const Rat& dx, const Rat& dy) {
        if (dx == 0) vertical = true;
        else slopes.insert(dy / dx);
    };
    auto vs = A.distinct_vertices();
    for (const Point& w : vs) {
        if (w == q) continue;
        add_dir(w.x - q.x, w.y - q.y);
    }
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            add_dir(vs[j].x - vs[i].x, vs[j].y - vs[i].y);

    std::vector<std::optional<Rat>> cands;
    std::vector<Rat> ev(slopes.begin(), slopes.end());
    for (std::size_t i = 0; i < ev.size(); ++i) {
        cands.emplace_back(ev[i]);
        if (i + 1 < ev.size()) cands.emplace_back((ev[i] + ev[i + 1]) / 2);
    }
    if (!ev.empty()) {
        cands.emplace_back(ev.back() + 1);
        cands.emplace_back(ev.front() - 1);
    }
    if (vertical || ev.empty()) cands.emplace_back(std::nullopt);
    if (vertical) {
        // intervals on both sides of the vertical direction are already
        // sampled by the +-1 offsets unless there were no finite slopes
        if (ev.empty()) cands.emplace_back(Rat(0));
    }
    return cands;
}

} // namespace

DepthCertificate depth(const Arrangement& A, const Point& q) {
    DepthCertificate cert;
    cert.q = q;
    bool have = false;
    for (const auto& slope : depth_candidate_slopes(A, q)) {
        GeneralLine bd = boundary_through(q, slope);
        for (int side = 0; side < 2; ++side) {
            GeneralLine oriented = side == 0 ? bd : GeneralLine(-bd.a, -bd.b, -bd.c);
            MuResult m = mu_halfplane(A, Halfplane(oriented, HalfplaneSense::Closed));
            if (!have || m.value < cert.depth) {
                have = true;
                cert.depth = m.value;
                cert.minimizing_line = oriented;
            }
        }
    }
    if (!have) {
        // no vertices at all: every halfplane holds the single line vacuously
        cert.depth = mu_halfplane(A, Halfplane(boundary_through(q, Rat(0)), HalfplaneSense::Closed)).value;
        cert.minimizing_line = boundary_through(q, Rat(0));
    }
    return cert;
}

DepthCertificate centerpoint(const Arrangement& A, std::size_t search_limit) {
    if (A.size() > search_limit)
        throw SizeLimitExceeded("centerpoint: arrangement exceeds search limit");
    const std::size_t z = ceil_sqrt_third(A.size());

    auto try_point = [&](const Point& p) -> std::optional<DepthCertificate> {
        DepthCertificate c = depth(A, p);
        if (c.depth >= z) return c;
        return std::nullopt;
    };

    std::vector<Point> vs = A.distinct_vertices();
    if (vs.empty()) {
        // single line: depth is 1 everywhere, z == 1
        auto c = try_point(Point{Rat(0), Rat(0)});
        if (c) return *c;
        throw SearchExhausted("centerpoint: bound not met (bug)");
    }

    for (const Point& p : vs)
        if (auto c = try_point(p)) return *c;

    std::set<Point, PointLess> seen(vs.begin(), vs.end());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            Point mid{(vs[i].x + vs[j].x) / 2, (vs[i].y + vs[j].y) / 2};
            if (!seen.insert(mid).second) continue;
            if (auto c = try_point(mid)) return *c;
        }

    // cell sampling via intersections of vertex-pair lines, then midpoints
    auto vpl = vertex_pair_lines(vs);
    std::vector<Point> crossings;
    for (std::size_t i = 0; i < vpl.size(); ++i)
        for (std::size_t j = i + 1; j < vpl.size(); ++j) {
            auto r = line_intersection(vpl[i], vpl[j]);
            if (!std::holds_alternative<Point>(r)) continue;
            const Point& p = std::get<Point>(r);
            if (!seen.insert(p).second) continue;
            crossings.push_back(p);
            if (auto c = try_point(p)) return *c;
        }
    for (std::size_t i = 0; i < crossings.size(); ++i)
        for (std::size_t j = i + 1; j < crossings.size(); ++j) {
            Point mid{(crossings[i].x + crossings[j].x) / 2, (crossings[i].y + crossings[j].y) / 2};
            if (!seen.insert(mid).second) continue;
            if (auto c = try_point(mid)) return *c;
        }
    throw SearchExhausted("centerpoint: no candidate met the depth bound (bug)");
}

Arrangement pencil_arrangement(std::size_t k, PencilPerturb perturb) {
    if (k < 2) throw std::invalid_argument("pencil_arrangement: k must be >= 2");
    const Rat spacing(Int(1), Int(k * (k + 1)));

    std::vector<Rat> slopes;
    for (std::size_t i = 1; i <= k; ++i) {
        Rat lo = Rat(1, 2) - Rat(Int(i), Int(k));
        for (std::size_t j = 1; j <= k; ++j) slopes.push_back(lo + Rat(Int(j)) * spacing);
    }

    auto build = [&](const std::vector<Rat>& sl) {
        std::vector<GeneralLine> lines;
        for (std::size_t i = 1; i <= k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                const Rat& m = sl[(i - 1) * k + j];
                // through (-1/2, i) with slope m
                lines.emplace_back(m, Rat(-1), -Rat(Int(i)) - m / 2);
            }
        return Arrangement(std::move(lines));
    };

    if (!perturb.enabled) return build(slopes);

    std::mt19937_64 rng(perturb.seed);
    std::vector<Point> centers;
    for (std::size_t i = 1; i <= k; ++i) centers.push_back(Point{Rat(-1, 2), Rat(Int(i))});

    for (int attempt = 0; attempt < 64; ++attempt) {
        // distinct positive nudges strictly below half the slope spacing
        std::set<std::uint64_t> draws;
        while (draws.size() < slopes.size()) draws.insert(rng() % 65535 + 1);
        std::vector<std::uint64_t> ds(draws.begin(), draws.end());
        std::shuffle(ds.begin(), ds.end(), rng);

        std::vector<Rat> nudged = slopes;
        for (std::size_t t = 0; t < nudged.size(); ++t)
            nudged[t] += Rat(Int(ds[t]), Int(131072)) * spacing; // < spacing/2

        Arrangement A = build(nudged);
        std::vector<Rat> xs;
        for (const auto& [ij, p] : A.vertices()) {
            bool is_center = std::any_of(centers.begin(), centers.end(),
                                         [&](const Point& c) { return c == p; });
            if (!is_center) xs.push_back(p.x);
        }
        std::sort(xs.begin(), xs.end());
        if (std::adjacent_find(xs.begin(), xs.end()) == xs.end()) return A;
    }
    throw InternalInvariantViolation("pencil_arrangement: perturbation failed to separate x coordinates");
}

namespace {

// every line through two distinct vertices of A misses hull (all hull points
// strictly on one side)
bool vertex_lines_miss_hull(const Arrangement& A, const std::vector<Point>& hull) {
    for (const GeneralLine& l : vertex_pair_lines(A.distinct_vertices())) {
        bool pos = false, neg = false, on = false;
        for (const Point& p : hull) {
            int sg = sign(l.eval(p));
            if (sg == 0) on = true;
            else (sg > 0 ? pos : neg) = true;
        }
        if (on || (pos && neg)) return false;
    }
    return true;
}

} // namespace

std::pair<Arrangement, Arrangement> pencil_pair(std::size_t k) {
    Arrangement base = pencil_arrangement(k, PencilPerturb::deterministic(1));

    // Shear x -> x + eps*y so that no two vertices (the covertical pencil
    // centers included) share an x coordinate; otherwise no translate can
    // clear the vertical vertex-pair lines.
    Rat eps(1, 1024);
    std::optional<Arrangement> sheared;
    for (int attempt = 0; attempt < 64 && !sheared; ++attempt, eps /= 2) {
        std::vector<GeneralLine> lines;
        for (const GeneralLine& l : base.lines())
            lines.emplace_back(l.a, l.b - l.a * eps, l.c);
        Arrangement A(std::move(lines));
        std::vector<Rat> xs;
        for (const Point& p : A.distinct_vertices()) xs.push_back(p.x);
        std::sort(xs.begin(), xs.end());
        if (std::adjacent_find(xs.begin(), xs.end()) == xs.end()) sheared = std::move(A);
    }
    if (!sheared) throw InternalInvariantViolation("pencil_pair: shear failed");

    const Arrangement& A1 = *sheared;
    for (Rat t(1); ; t *= 2) {
        Arrangement A2 = A1.translated(Rat(0), -t);
        if (vertex_lines_miss_hull(A1, A2.hull()) && vertex_lines_miss_hull(A2, A1.hull()))
            return {A1, A2};
        if (t > Rat(Int(1) << 62))
            throw InternalInvariantViolation("pencil_pair: translation did not verify");
    }
}

bool line_separable(const std::vector<Point>& a, const std::vector<Point>& b) {
    if (a.empty() || b.empty()) return true;
    return !convex_polygons_intersect(convex_hull(a), convex_hull(b));
}

std::optional<GeneralLine> common_transversal_exists(const std::vector<Point>& h1,
                                                     const std::vector<Point>& h2,
                                                     const std::vector<Point>& h3) {
    if (h1.empty() || h2.empty() || h3.empty())
        throw std::invalid_argument("common_transversal_exists: empty hull");
    std::vector<Point> pts;
    for (const auto* h : {&h1, &h2, &h3}) pts.insert(pts.end(), h->begin(), h->end());
    std::sort(pts.begin(), pts.end(), [](const Point& p, const Point& q) { return lex_less(p, q); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    if (pts.size() == 1) {
        // all three hulls are the same single point
        const Point& p = pts[0];
        return GeneralLine(Rat(1), Rat(-1), p.x - p.y);
    }
    for (const GeneralLine& cand : vertex_pair_lines(pts))
        if (line_meets_polygon(cand, h1) && line_meets_polygon(cand, h2) &&
            line_meets_polygon(cand, h3))
            return cand;
    return std::nullopt;
}

SameTypeResult same_type_triple(const Arrangement& A1, const Arrangement& A2,
                                const Arrangement& A3, std::size_t target) {
    const Arrangement* inputs[3] = {&A1, &A2, &A3};
    SameTypeResult res;
    std::array<std::optional<Arrangement>, 3> cur;
    for (int i = 0; i < 3; ++i) {
        cur[i] = *inputs[i];
        res.subsets[i].resize(inputs[i]->size());
        for (std::size_t j = 0; j < inputs[i]->size(); ++j) res.subsets[i][j] = j;
        if (inputs[i]->size() < target)
            throw TargetUnreachable("same_type_triple: input below target");
    }

    // index splits of {0,1,2} into two nonempty groups; the singleton named
    // first
    static const std::array<std::array<int, 3>, 3> splits = {{{0, 1, 2}, {1, 0, 2}, {2, 0, 1}}};

    while (true) {
        int violated = -1;
        for (int s = 0; s < 3 && violated < 0; ++s) {
            std::vector<Point> one = cur[splits[s][0]]->distinct_vertices();
            std::vector<Point> rest = cur[splits[s][1]]->distinct_vertices();
            auto more = cur[splits[s][2]]->distinct_vertices();
            rest.insert(rest.end(), more.begin(), more.end());
            if (!line_separable(one, rest)) violated = s;
        }
        if (violated < 0) break;
        if (++res.iterations > 4)
            throw TargetUnreachable("same_type_triple: did not separate within 4 shrink steps");

        CutResult cut = ham_sandwich_cut(*cur[0], *cur[1]);
        Halfplane minus(cut.cut, HalfplaneSense::Closed);
        MuResult m3m = mu_halfplane(*cur[2], minus);
        MuResult m3p = mu_halfplane(*cur[2], minus.complement_closed());
        int side3 = m3m.value >= m3p.value ? 0 : 1;

        // group containing set 3 takes set 3's better side, the other group
        // the opposite side
        bool three_alone = splits[violated][0] == 2;
        auto side_for = [&](int set_idx) {
            bool with_three = three_alone ? (set_idx == 2) : (set_idx != splits[violated][0]);
            return with_three ? side3 : 1 - side3;
        };

        for (int i = 0; i < 3; ++i) {
            const MuResult& w = (i < 2) ? cut.witnesses[i][side_for(i)]
                                        : (side_for(2) == 0 ? m3m : m3p);
            std::vector<std::size_t> next;
            for (std::size_t local : w.witness) next.push_back(res.subsets[i][local]);
            std::sort(next.begin(), next.end());
            if (next.size() < target)
                throw TargetUnreachable("same_type_triple: shrinkage fell below target");
            res.subsets[i] = next;
            cur[i] = inputs[i]->subset(next);
        }
    }
    return res;
}

std::optional<std::vector<std::size_t>> convex_position_points(const std::vector<Point>& pts,
                                                               std::size_t k) {
    if (pts.size() > 20)
        throw SizeLimitExceeded("convex_position_points: more than 20 points");
    if (k == 0) return std::vector<std::size_t>{};
    if (k > pts.size()) return std::nullopt;

    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<Point> sub;
        for (std::size_t i : idx) sub.push_back(pts[i]);
        std::vector<Point> dedup = sub;
        std::sort(dedup.begin(), dedup.end(),
                  [](const Point& p, const Point& q) { return lex_less(p, q); });
        dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
        if (dedup.size() == k && convex_hull(sub).size() == k) return idx;

        // next k-combination
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == pts.size() - k + (i - 1)) --i;
        if (i == 0) return std::nullopt;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

ConvexPositionSubsets convex_position_subsets(const Arrangement& A, std::size_t k, std::size_t c,
                                              std::size_t m) {
    const std::size_t n = A.size();
    if (m < k || m == 0 || n < m)
        throw InfeasibleScale("convex_position_subsets: not enough lines or groups");

    // contiguous near-equal groups
    std::vector<std::vector<std::size_t>> groups(m);
    for (std::size_t i = 0; i < n; ++i) groups[i * m / n].push_back(i);

    auto group_arr = [&](std::size_t g) { return A.subset(groups[g]); };

    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            for (std::size_t d = b + 1; d < m; ++d) {
                SameTypeResult st;
                try {
                    st = same_type_triple(group_arr(a), group_arr(b), group_arr(d), c);
                } catch (const TargetUnreachable& e) {
                    throw InfeasibleScale(std::string("convex_position_subsets: ") + e.what());
                }
                auto remap = [&](std::size_t g, const std::vector<std::size_t>& local) {
                    std::vector<std::size_t> next;
                    for (std::size_t l : local) next.push_back(groups[g][l]);
                    groups[g] = next;
                };
                remap(a, st.subsets[0]);
                remap(b, st.subsets[1]);
                remap(d, st.subsets[2]);
            }

    // one representative transversal point per hull
    std::vector<Point> reps;
    std::vector<std::size_t> rep_group;
    std::vector<std::vector<Point>> hulls(m);
    for (std::size_t g = 0; g < m; ++g) {
        if (groups[g].size() < c)
            throw InfeasibleScale("convex_position_subsets: group below size c");
        hulls[g] = group_arr(g).hull();
        if (hulls[g].empty()) continue; // single line, no vertices to stand on
        reps.push_back(hulls[g][0]);
        rep_group.push_back(g);
    }
    auto chosen = convex_position_points(reps, k);
    if (!chosen)
        throw InfeasibleScale("convex_position_subsets: no k representatives in convex position");

    ConvexPositionSubsets out;
    std::vector<std::size_t> gidx;
    for (std::size_t i : *chosen) gidx.push_back(rep_group[i]);

    // verify: sampled transversals of the chosen hulls are in convex position
    std::mt19937_64 rng(12345);
    std::vector<std::vector<Point>> chosen_hulls;
    for (std::size_t g : gidx) chosen_hulls.push_back(hulls[g]);
    auto check = [&](const std::vector<Point>& tv) {
        if (convex_hull(tv).size() != tv.size())
            throw InternalInvariantViolation("convex_position_subsets: transversal not in convex position");
    };
    // all hull-vertex combinations when small, random samples otherwise
    std::size_t combos = 1;
    for (const auto& h : chosen_hulls) combos *= h.size();
    if (combos <= 4096) {
        std::vector<std::size_t> pick(chosen_hulls.size(), 0);
        for (std::size_t it = 0; it < combos; ++it) {
            std::vector<Point> tv;
            for (std::size_t j = 0; j < chosen_hulls.size(); ++j) tv.push_back(chosen_hulls[j][pick[j]]);
            check(tv);
            for (std::size_t j = 0; j < pick.size(); ++j) {
                if (++pick[j] < chosen_hulls[j].size()) break;
                pick[j] = 0;
            }
        }
    } else {
        for (int it = 0; it < 256; ++it) {
            std::vector<Point> tv;
            for (const auto& h : chosen_hulls) tv.push_back(h[rng() % h.size()]);
            check(tv);
        }
    }

    for (std::size_t g : gidx) out.groups.push_back(groups[g]);
    return out;
}

} // namespace arr
