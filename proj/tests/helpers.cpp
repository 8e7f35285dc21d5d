#include "helpers.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace arrtest {

using namespace arr;

Rat random_rat(Rng& rng, int lo, int hi, int max_den) {
    std::uniform_int_distribution<int> num(lo, hi), den(1, max_den);
    return Rat(num(rng), den(rng));
}

std::vector<GeneralLine> random_lines(Rng& rng, std::size_t n) {
    std::vector<GeneralLine> lines;
    while (lines.size() < n) {
        Rat a = random_rat(rng, -9, 9), b = random_rat(rng, -9, 9), c = random_rat(rng, -9, 9);
        if (a == 0 && b == 0) continue;
        GeneralLine l(a, b, c);
        bool ok = true;
        for (const GeneralLine& m : lines)
            if (parallel(l, m)) { ok = false; break; }
        if (ok) lines.push_back(std::move(l));
    }
    return lines;
}

Arrangement random_arrangement(Rng& rng, std::size_t n) {
    return Arrangement(random_lines(rng, n));
}

Halfplane random_halfplane(Rng& rng, const Arrangement& A, int through_vertices) {
    HalfplaneSense sense = (rng() & 1) ? HalfplaneSense::Closed : HalfplaneSense::Open;
    std::vector<Point> verts = A.distinct_vertices();
    if (through_vertices >= 2 && verts.size() >= 2) {
        for (int tries = 0; tries < 64; ++tries) {
            std::size_t i = rng() % verts.size(), j = rng() % verts.size();
            if (verts[i] == verts[j]) continue;
            GeneralLine l = GeneralLine::through(verts[i], verts[j]);
            if ((rng() & 1)) l = GeneralLine(-l.a, -l.b, -l.c);
            return Halfplane(l, sense);
        }
    }
    if (through_vertices >= 1 && !verts.empty()) {
        const Point& v = verts[rng() % verts.size()];
        while (true) {
            Rat a = random_rat(rng, -5, 5), b = random_rat(rng, -5, 5);
            if (a == 0 && b == 0) continue;
            return Halfplane(GeneralLine(a, b, a * v.x + b * v.y), sense);
        }
    }
    while (true) {
        Rat a = random_rat(rng, -5, 5), b = random_rat(rng, -5, 5), c = random_rat(rng, -5, 5);
        if (a == 0 && b == 0) continue;
        return Halfplane(GeneralLine(a, b, c), sense);
    }
}

std::size_t oracle_depth(const Arrangement& A, const Point& q) {
    // boundary directions where the strict-side vertex partition changes are
    // exactly the directions q -> vertex; the minimum over closed halfplanes
    // is attained strictly inside some interval between consecutive events
    std::vector<Point> verts = A.distinct_vertices();
    std::set<Rat> slopes;
    bool vertical_event = false;
    for (const Point& v : verts) {
        if (v == q) continue;
        if (v.x == q.x) vertical_event = true;
        else slopes.insert((v.y - q.y) / (v.x - q.x));
    }
    std::vector<GeneralLine> candidates;
    auto add_slope = [&](const Rat& m) {
        candidates.emplace_back(m, Rat(-1), m * q.x - q.y);
    };
    std::vector<Rat> ev(slopes.begin(), slopes.end());
    for (const Rat& m : ev) add_slope(m); // event directions themselves
    for (std::size_t i = 0; i + 1 < ev.size(); ++i) add_slope(Rat((ev[i] + ev[i + 1]) / 2));
    if (!ev.empty()) {
        add_slope(Rat(ev.front() - 1));
        add_slope(Rat(ev.back() + 1));
    } else {
        add_slope(Rat(0));
    }
    candidates.emplace_back(Rat(1), Rat(0), q.x); // vertical, covers the wrap-around interval
    if (vertical_event) {
        // intervals next to vertical are covered by slopes beyond the extremes
        if (!ev.empty()) {
            add_slope(Rat(ev.front() - 2));
            add_slope(Rat(ev.back() + 2));
        }
    }
    std::size_t best = A.size();
    for (const GeneralLine& l : candidates) {
        for (const GeneralLine& side : {l, GeneralLine(-l.a, -l.b, -l.c)}) {
            Halfplane h(side, HalfplaneSense::Closed);
            best = std::min(best, mu_region_bruteforce(A, {h}).value);
        }
    }
    return best;
}

std::size_t oracle_monotone_length(const std::vector<Rat>& seq, MonotoneDirection dir) {
    auto ok = [&](const Rat& a, const Rat& b) {
        switch (dir) {
        case MonotoneDirection::Increasing: return a < b;
        case MonotoneDirection::NonDecreasing: return a <= b;
        case MonotoneDirection::Decreasing: return a > b;
        case MonotoneDirection::NonIncreasing: return a >= b;
        }
        return false;
    };
    std::size_t n = seq.size(), best = 0;
    std::vector<std::size_t> dp(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (ok(seq[j], seq[i])) dp[i] = std::max(dp[i], dp[j] + 1);
        best = std::max(best, dp[i]);
    }
    return best;
}

EmbeddedTriangulation k4() {
    EmbeddedTriangulation g;
    g.n = 4;
    // outer triangle 0,1,3 with vertex 2 inside
    g.rotation = {{3, 2, 1}, {0, 2, 3}, {1, 0, 3}, {1, 2, 0}};
    g.outer_face = {0, 1, 3};
    return g;
}

EmbeddedTriangulation octahedron() {
    // antipodal pairs (0,5), (1,4), (2,3); vertex k adjacent to all but its
    // antipode
    EmbeddedTriangulation g;
    g.n = 6;
    g.rotation = {{1, 2, 4, 3}, {0, 3, 5, 2}, {0, 1, 5, 4},
                  {0, 4, 5, 1}, {0, 2, 5, 3}, {1, 3, 4, 2}};
    g.outer_face = {0, 1, 2};
    return g;
}

namespace {

std::size_t index_of(const std::vector<std::size_t>& v, std::size_t x) {
    return std::find(v.begin(), v.end(), x) - v.begin();
}

// flip interior edge (u,v): with adjacent faces (u,v,x) and (v,u,y) the edge
// is replaced by (x,y)
bool flip_edge(EmbeddedTriangulation& g, std::size_t u, std::size_t v) {
    auto succ = [&](std::size_t at, std::size_t of) {
        const auto& r = g.rotation[at];
        return r[(index_of(r, of) + 1) % r.size()];
    };
    std::size_t x = succ(v, u); // face (u, v, x)
    std::size_t y = succ(u, v); // face (v, u, y)
    if (x == y || g.has_edge(x, y)) return false;
    if (g.rotation[u].size() <= 3 || g.rotation[v].size() <= 3) return false;
    bool u_outer = u == g.outer_face[0] || u == g.outer_face[1] || u == g.outer_face[2];
    bool v_outer = v == g.outer_face[0] || v == g.outer_face[1] || v == g.outer_face[2];
    if (u_outer && v_outer) return false;

    auto& ru = g.rotation[u];
    ru.erase(ru.begin() + index_of(ru, v));
    auto& rv = g.rotation[v];
    rv.erase(rv.begin() + index_of(rv, u));
    auto& rx = g.rotation[x];
    rx.insert(rx.begin() + (index_of(rx, v) + 1) % (rx.size() + 1), y);
    auto& ry = g.rotation[y];
    ry.insert(ry.begin() + (index_of(ry, u) + 1) % (ry.size() + 1), x);
    return true;
}

// insert a new vertex inside face (a,b,c), connected to all three corners
void stack_vertex(EmbeddedTriangulation& g, std::size_t a, std::size_t b, std::size_t c) {
    std::size_t w = g.n++;
    // interior face cycle a->b->c: succ(a) in rotation[b] is c, etc.; the new
    // vertex goes between the face's two corners in each corner's rotation
    auto& ra = g.rotation[a];
    ra.insert(ra.begin() + (index_of(ra, c) + 1) % (ra.size() + 1), w);
    auto& rb = g.rotation[b];
    rb.insert(rb.begin() + (index_of(rb, a) + 1) % (rb.size() + 1), w);
    auto& rc = g.rotation[c];
    rc.insert(rc.begin() + (index_of(rc, b) + 1) % (rc.size() + 1), w);
    g.rotation.push_back({a, c, b});
}

} // namespace

EmbeddedTriangulation random_triangulation(Rng& rng, std::size_t n) {
    EmbeddedTriangulation g = k4();
    while (g.n < n) {
        auto faces = trace_faces(g);
        std::vector<std::array<std::size_t, 3>> interior;
        for (const auto& f : faces) {
            std::set<std::size_t> fs(f.begin(), f.end());
            if (fs != std::set<std::size_t>{g.outer_face[0], g.outer_face[1], g.outer_face[2]})
                interior.push_back({f[0], f[1], f[2]});
        }
        auto f = interior[rng() % interior.size()];
        stack_vertex(g, f[0], f[1], f[2]);
    }
    // random interior flips for graphs that are not merely stacked
    for (std::size_t t = 0; t < 3 * n; ++t) {
        std::size_t u = rng() % g.n;
        if (g.rotation[u].empty()) continue;
        std::size_t v = g.rotation[u][rng() % g.rotation[u].size()];
        flip_edge(g, u, v);
    }
    if (!validate_triangulation(g).ok())
        throw std::logic_error("random_triangulation: generator bug");
    return g;
}

std::vector<EmbeddedTriangulation> all_triangulations(std::size_t n) {
    if (n < 3 || n > 7) throw std::invalid_argument("all_triangulations: 3 <= n <= 7");
    std::vector<EmbeddedTriangulation> out;
    if (n == 3) {
        EmbeddedTriangulation g;
        g.n = 3;
        g.rotation = {{2, 1}, {0, 2}, {1, 0}};
        g.outer_face = {0, 1, 2};
        out.push_back(std::move(g));
        return out;
    }

    std::vector<std::pair<std::size_t, std::size_t>> all_pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) all_pairs.emplace_back(i, j);
    std::size_t m = 3 * n - 6;

    using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>>;

    // every subset of 3n-6 edges; a planar graph with that many edges is a
    // maximal planar graph (and automatically connected)
    std::vector<std::size_t> pick(m);
    for (std::size_t i = 0; i < m; ++i) pick[i] = i;
    while (true) {
        BGraph bg(n);
        for (std::size_t i : pick) boost::add_edge(all_pairs[i].first, all_pairs[i].second, bg);
        bool min_deg_ok = true;
        for (std::size_t v = 0; v < n; ++v)
            if (boost::degree(v, bg) < 3) { min_deg_ok = false; break; }
        if (min_deg_ok) {
            std::vector<std::vector<boost::graph_traits<BGraph>::edge_descriptor>> embedding(n);
            auto emb_map = boost::make_iterator_property_map(
                embedding.begin(), boost::get(boost::vertex_index, bg));
            if (boost::boyer_myrvold_planarity_test(
                    boost::boyer_myrvold_params::graph = bg,
                    boost::boyer_myrvold_params::embedding = emb_map)) {
                EmbeddedTriangulation g;
                g.n = n;
                g.rotation.resize(n);
                for (std::size_t v = 0; v < n; ++v)
                    for (auto e : embedding[v]) {
                        std::size_t a = boost::source(e, bg), b = boost::target(e, bg);
                        g.rotation[v].push_back(a == v ? b : a);
                    }
                auto faces = trace_faces(g);
                g.outer_face = {faces[0][0], faces[0][1], faces[0][2]};
                if (!validate_triangulation(g).ok())
                    throw std::logic_error("all_triangulations: embedding not a triangulation");
                out.push_back(std::move(g));
            }
        }
        // next combination
        std::size_t i = m;
        while (i > 0 && pick[i - 1] == all_pairs.size() - m + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

} // namespace arrtest
