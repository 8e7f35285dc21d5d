#include "arr/triangulation.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace arr {

bool EmbeddedTriangulation::has_edge(std::size_t u, std::size_t v) const {
    if (u >= n) return false;
    return std::find(rotation[u].begin(), rotation[u].end(), v) != rotation[u].end();
}

namespace {

// position of x in the cyclic list, SIZE_MAX if absent
std::size_t pos_of(const std::vector<std::size_t>& cyc, std::size_t x) {
    auto it = std::find(cyc.begin(), cyc.end(), x);
    return it == cyc.end() ? SIZE_MAX : std::size_t(it - cyc.begin());
}

bool same_cycle(const std::vector<std::size_t>& a, const std::array<std::size_t, 3>& b) {
    if (a.size() != 3) return false;
    for (int r = 0; r < 3; ++r)
        if (a[0] == b[r] && a[1] == b[(r + 1) % 3] && a[2] == b[(r + 2) % 3]) return true;
    return false;
}

} // namespace

std::vector<std::vector<std::size_t>> trace_faces(const EmbeddedTriangulation& g) {
    std::set<std::pair<std::size_t, std::size_t>> used;
    std::vector<std::vector<std::size_t>> faces;
    for (std::size_t u = 0; u < g.n; ++u) {
        for (std::size_t v : g.rotation[u]) {
            if (used.count({u, v})) continue;
            std::vector<std::size_t> face;
            std::size_t a = u, b = v;
            while (!used.count({a, b})) {
                used.insert({a, b});
                face.push_back(a);
                std::size_t p = pos_of(g.rotation[b], a);
                if (p == SIZE_MAX) return {}; // asymmetric adjacency, caught by validate
                std::size_t w = g.rotation[b][(p + 1) % g.rotation[b].size()];
                a = b;
                b = w;
                if (face.size() > 2 * g.n * g.n) return {}; // runaway, malformed input
            }
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

ValidationReport validate_triangulation(const EmbeddedTriangulation& g) {
    ValidationReport rep;
    auto issue = [&](std::string s) { rep.issues.push_back(std::move(s)); };

    if (g.n < 3) {
        issue("fewer than 3 vertices");
        return rep;
    }
    if (g.rotation.size() != g.n) {
        issue("rotation size differs from n");
        return rep;
    }

    std::size_t edge_ends = 0;
    for (std::size_t u = 0; u < g.n; ++u) {
        std::set<std::size_t> seen;
        for (std::size_t v : g.rotation[u]) {
            if (v >= g.n) { issue("neighbor id out of range at vertex " + std::to_string(u)); return rep; }
            if (v == u) issue("self-loop at vertex " + std::to_string(u));
            if (!seen.insert(v).second) issue("duplicate neighbor at vertex " + std::to_string(u));
        }
        edge_ends += g.rotation[u].size();
    }
    for (std::size_t u = 0; u < g.n; ++u)
        for (std::size_t v : g.rotation[u])
            if (!g.has_edge(v, u)) issue("asymmetric edge " + std::to_string(u) + "-" + std::to_string(v));
    if (!rep.ok()) return rep;

    if (edge_ends != 2 * (3 * g.n - 6))
        issue("edge count is " + std::to_string(edge_ends / 2) + ", expected " +
              std::to_string(3 * g.n - 6));

    auto faces = trace_faces(g);
    if (faces.empty()) {
        issue("face traversal failed");
        return rep;
    }
    if (faces.size() != 2 * g.n - 4)
        issue("face count is " + std::to_string(faces.size()) + ", expected " +
              std::to_string(2 * g.n - 4));
    for (const auto& f : faces) {
        if (f.size() != 3) {
            issue("non-triangular face of length " + std::to_string(f.size()));
            break;
        }
    }
    bool outer_found = false;
    for (const auto& f : faces)
        if (same_cycle(f, g.outer_face)) outer_found = true;
    // accept the outer triple in either traversal orientation
    if (!outer_found) {
        std::array<std::size_t, 3> rev{g.outer_face[0], g.outer_face[2], g.outer_face[1]};
        for (const auto& f : faces)
            if (same_cycle(f, rev)) outer_found = true;
    }
    if (!outer_found) issue("outer face is not a face of the embedding");

    // connectivity
    std::vector<char> vis(g.n, 0);
    std::queue<std::size_t> bfs;
    bfs.push(0);
    vis[0] = 1;
    while (!bfs.empty()) {
        std::size_t u = bfs.front();
        bfs.pop();
        for (std::size_t v : g.rotation[u])
            if (!vis[v]) { vis[v] = 1; bfs.push(v); }
    }
    if (std::count(vis.begin(), vis.end(), 1) != long(g.n)) issue("graph not connected");
    return rep;
}

namespace {

// outer face cycle of g in traced (clockwise) orientation, rotated so that
// it starts with v1 = outer_face[0]
std::vector<std::size_t> outer_cycle(const EmbeddedTriangulation& g) {
    for (const auto& f : trace_faces(g)) {
        if (f.size() != 3) continue;
        if (same_cycle(f, g.outer_face) ||
            same_cycle(f, {g.outer_face[0], g.outer_face[2], g.outer_face[1]})) {
            std::vector<std::size_t> c = f;
            while (c[0] != g.outer_face[0]) std::rotate(c.begin(), c.begin() + 1, c.end());
            return c;
        }
    }
    throw NotTriangulation("outer face not found in embedding");
}

} // namespace

CanonicalOrder canonical_ordering(const EmbeddedTriangulation& g) {
    auto rep = validate_triangulation(g);
    if (!rep.ok()) throw NotTriangulation("canonical_ordering: " + rep.issues.front());

    const std::size_t v1 = g.outer_face[0], v2 = g.outer_face[1];
    std::vector<std::set<std::size_t>> adj(g.n);
    for (std::size_t u = 0; u < g.n; ++u)
        adj[u] = {g.rotation[u].begin(), g.rotation[u].end()};

    std::vector<std::size_t> cycle = outer_cycle(g);
    std::vector<char> alive(g.n, 1);
    CanonicalOrder ord;
    ord.ordering.assign(g.n, 0);

    for (std::size_t i = g.n; i >= 3; --i) {
        if (i == 3) {
            // remaining triangle: the one vertex besides v1, v2
            std::size_t third = SIZE_MAX;
            for (std::size_t u : cycle)
                if (u != v1 && u != v2) third = u;
            ord.ordering[2] = third;
            break;
        }
        std::vector<char> on_cycle(g.n, 0);
        std::vector<std::size_t> cpos(g.n, 0);
        for (std::size_t p = 0; p < cycle.size(); ++p) {
            on_cycle[cycle[p]] = 1;
            cpos[cycle[p]] = p;
        }
        std::size_t chosen = SIZE_MAX;
        for (std::size_t p = 0; p < cycle.size(); ++p) {
            std::size_t u = cycle[p];
            if (u == v1 || u == v2) continue;
            bool chord = false;
            for (std::size_t w : adj[u]) {
                if (!on_cycle[w]) continue;
                std::size_t d = (cpos[w] + cycle.size() - p) % cycle.size();
                if (d != 1 && d != cycle.size() - 1) { chord = true; break; }
            }
            if (!chord && u < chosen) chosen = u;
        }
        if (chosen == SIZE_MAX)
            throw NotTriangulation("canonical_ordering: no removable outer vertex (not a triangulation)");

        ord.ordering[i - 1] = chosen;

        // replace chosen on the cycle by its fan of still-alive neighbors
        std::size_t p = cpos[chosen];
        std::size_t before = cycle[(p + cycle.size() - 1) % cycle.size()];
        std::size_t after = cycle[(p + 1) % cycle.size()];

        std::vector<std::size_t> rot_alive;
        for (std::size_t w : g.rotation[chosen])
            if (alive[w]) rot_alive.push_back(w);
        std::size_t pa = pos_of(rot_alive, before), pb = pos_of(rot_alive, after);
        // fan from before to after, in whichever cyclic direction holds the
        // interior neighbors (the other direction is the empty direct step)
        std::vector<std::size_t> fan;
        for (std::size_t q = (pa + 1) % rot_alive.size(); q != pb; q = (q + 1) % rot_alive.size())
            fan.push_back(rot_alive[q]);
        if (fan.empty() && rot_alive.size() > 2) {
            for (std::size_t q = (pa + rot_alive.size() - 1) % rot_alive.size(); q != pb;
                 q = (q + rot_alive.size() - 1) % rot_alive.size())
                fan.push_back(rot_alive[q]);
        }

        std::vector<std::size_t> next_cycle;
        for (std::size_t q = 0; q < cycle.size(); ++q) {
            if (cycle[q] == chosen) {
                for (std::size_t w : fan) next_cycle.push_back(w);
            } else {
                next_cycle.push_back(cycle[q]);
            }
        }
        cycle = std::move(next_cycle);

        alive[chosen] = 0;
        for (std::size_t w : adj[chosen]) adj[w].erase(chosen);
        adj[chosen].clear();
    }
    ord.ordering[0] = v1;
    ord.ordering[1] = v2;
    return ord;
}

namespace {

// induced embedded subgraph on a vertex subset (rotation order preserved)
EmbeddedTriangulation induced(const EmbeddedTriangulation& g, const std::vector<char>& keep) {
    EmbeddedTriangulation h;
    h.n = g.n;
    h.rotation.resize(g.n);
    for (std::size_t u = 0; u < g.n; ++u) {
        if (!keep[u]) continue;
        for (std::size_t v : g.rotation[u])
            if (keep[v]) h.rotation[u].push_back(v);
    }
    h.outer_face = g.outer_face;
    return h;
}

bool connected_without(const EmbeddedTriangulation& g, const std::vector<char>& keep,
                       std::size_t skip1, std::size_t skip2) {
    std::vector<char> ok = keep;
    if (skip1 != SIZE_MAX) ok[skip1] = 0;
    if (skip2 != SIZE_MAX) ok[skip2] = 0;
    std::size_t total = 0, start = SIZE_MAX;
    for (std::size_t u = 0; u < g.n; ++u)
        if (ok[u]) { ++total; start = u; }
    if (total == 0) return true;
    std::vector<char> vis(g.n, 0);
    std::queue<std::size_t> q;
    q.push(start);
    vis[start] = 1;
    std::size_t cnt = 1;
    while (!q.empty()) {
        std::size_t u = q.front();
        q.pop();
        for (std::size_t v : g.rotation[u])
            if (ok[v] && !vis[v]) { vis[v] = 1; ++cnt; q.push(v); }
    }
    return cnt == total;
}

// outer cycle of the induced subgraph G_i: the face containing the dart of
// edge v1v2 that bounds the outer face of the full graph
std::vector<std::size_t> sub_outer_cycle(const EmbeddedTriangulation& g,
                                         const EmbeddedTriangulation& sub,
                                         std::size_t v1, std::size_t v2) {
    // which dart of v1v2 lies on g's outer face
    std::vector<std::size_t> full_outer = outer_cycle(g);
    std::size_t a = v1, b = v2;
    for (std::size_t r = 0; r < 3; ++r) {
        if (full_outer[r] == v2 && full_outer[(r + 1) % 3] == v1) { a = v2; b = v1; }
    }
    // trace the face of `sub` starting from dart (a, b)
    std::vector<std::size_t> face;
    std::size_t x = a, y = b;
    do {
        face.push_back(x);
        std::size_t p = pos_of(sub.rotation[y], x);
        if (p == SIZE_MAX) throw InvalidOrder("contour derivation failed");
        std::size_t w = sub.rotation[y][(p + 1) % sub.rotation[y].size()];
        x = y;
        y = w;
        if (face.size() > 2 * g.n) throw InvalidOrder("contour derivation runaway");
    } while (!(x == a && y == b));
    return face;
}

} // namespace

ValidationReport check_canonical(const EmbeddedTriangulation& g, const CanonicalOrder& ord) {
    ValidationReport rep;
    auto issue = [&](std::string s) { rep.issues.push_back(std::move(s)); };

    auto base = validate_triangulation(g);
    if (!base.ok()) { rep.issues = base.issues; return rep; }
    if (ord.ordering.size() != g.n) { issue("ordering has wrong length"); return rep; }
    {
        std::vector<char> seen(g.n, 0);
        for (std::size_t v : ord.ordering) {
            if (v >= g.n || seen[v]) { issue("ordering is not a permutation"); return rep; }
            seen[v] = 1;
        }
    }

    const std::size_t v1 = ord.ordering[0], v2 = ord.ordering[1], vn = ord.ordering[g.n - 1];
    // CO1
    auto on_outer = [&](std::size_t v) {
        return v == g.outer_face[0] || v == g.outer_face[1] || v == g.outer_face[2];
    };
    if (!on_outer(v1) || !on_outer(v2) || !on_outer(vn))
        issue("CO1: v1, v2, vn not all on the outer face");
    if (!g.has_edge(v1, v2)) issue("CO1: v1v2 is not an edge");
    if (!rep.ok()) return rep;

    std::vector<char> keep(g.n, 0);
    keep[v1] = keep[v2] = 1;
    std::vector<std::size_t> prev_cycle;
    for (std::size_t i = 3; i <= g.n; ++i) {
        keep[ord.ordering[i - 1]] = 1;
        EmbeddedTriangulation gi = induced(g, keep);

        std::vector<std::size_t> ci;
        try {
            ci = sub_outer_cycle(g, gi, v1, v2);
        } catch (const InvalidOrder& e) {
            issue("CO2: " + std::string(e.what()) + " at i=" + std::to_string(i));
            return rep;
        }
        // CO2: simple cycle containing edge v1v2
        std::set<std::size_t> uniq(ci.begin(), ci.end());
        if (uniq.size() != ci.size() || ci.size() < 3)
            issue("CO2: C_" + std::to_string(i) + " is not a simple cycle");
        if (!uniq.count(v1) || !uniq.count(v2))
            issue("CO2: C_" + std::to_string(i) + " misses v1v2");

        // CO3: biconnected and internally 3-connected
        for (std::size_t u = 0; u < g.n && i > 3; ++u) {
            if (!keep[u]) continue;
            if (!connected_without(gi, keep, u, SIZE_MAX)) {
                issue("CO3: G_" + std::to_string(i) + " not biconnected (cut vertex " +
                      std::to_string(u) + ")");
                break;
            }
        }
        std::vector<std::size_t> interior;
        for (std::size_t u = 0; u < g.n; ++u)
            if (keep[u] && !uniq.count(u)) interior.push_back(u);
        bool bad3 = false;
        for (std::size_t a = 0; a < interior.size() && !bad3; ++a)
            for (std::size_t b = a + 1; b < interior.size() && !bad3; ++b)
                if (!connected_without(gi, keep, interior[a], interior[b])) {
                    issue("CO3: G_" + std::to_string(i) + " not internally 3-connected");
                    bad3 = true;
                }

        // CO4: v_i on C_i with >=2 neighbors consecutive on C_{i-1}
        std::size_t vi = ord.ordering[i - 1];
        if (!uniq.count(vi)) issue("CO4: v_" + std::to_string(i) + " not on C_i");
        if (i >= 3 && !prev_cycle.empty()) {
            std::vector<std::size_t> hits;
            for (std::size_t p = 0; p < prev_cycle.size(); ++p)
                if (g.has_edge(vi, prev_cycle[p])) hits.push_back(p);
            if (hits.size() < 2) {
                issue("CO4: v_" + std::to_string(i) + " has fewer than 2 neighbors on C_{i-1}");
            } else {
                // consecutive on the cycle: hit positions form one cyclic run
                std::size_t m = prev_cycle.size();
                std::size_t gaps = 0;
                for (std::size_t t = 0; t < hits.size(); ++t) {
                    std::size_t cur = hits[t], nxt = hits[(t + 1) % hits.size()];
                    if ((nxt + m - cur) % m != 1) ++gaps;
                }
                if (gaps != 1 && hits.size() != m)
                    issue("CO4: neighbors of v_" + std::to_string(i) +
                          " not consecutive on C_{i-1}");
            }
        }
        prev_cycle = ci;
        if (!rep.ok()) return rep;
    }
    return rep;
}

Frame frame(const EmbeddedTriangulation& g, const CanonicalOrder& ord) {
    if (ord.ordering.size() != g.n) throw InvalidOrder("frame: ordering has wrong length");
    const std::size_t v1 = ord.ordering[0], v2 = ord.ordering[1];

    Frame f;
    f.n = g.n;
    f.source = v1;
    f.sink = v2;
    f.out_adj.resize(g.n);
    f.in_adj.resize(g.n);
    auto add_edge = [&](std::size_t u, std::size_t w) {
        f.edges.emplace_back(u, w);
        f.out_adj[u].push_back(w);
        f.in_adj[w].push_back(u);
    };
    add_edge(v1, v2);

    // incremental contour: the path on C_i from v1 to v2 avoiding edge v1v2
    std::vector<std::size_t> contour = {v1, v2};
    for (std::size_t i = 3; i <= g.n; ++i) {
        std::size_t vi = ord.ordering[i - 1];
        std::size_t first = SIZE_MAX, last = SIZE_MAX;
        for (std::size_t p = 0; p < contour.size(); ++p) {
            if (!g.has_edge(vi, contour[p])) continue;
            if (first == SIZE_MAX) first = p;
            last = p;
        }
        if (first == SIZE_MAX || last == first)
            throw InvalidOrder("frame: v_" + std::to_string(i) + " has fewer than 2 contour neighbors");
        for (std::size_t p = first; p <= last; ++p)
            if (!g.has_edge(vi, contour[p]))
                throw InvalidOrder("frame: contour neighbors of v_" + std::to_string(i) +
                                   " not consecutive");
        add_edge(contour[first], vi);
        add_edge(vi, contour[last]);

        std::vector<std::size_t> next(contour.begin(), contour.begin() + first + 1);
        next.push_back(vi);
        next.insert(next.end(), contour.begin() + last, contour.end());
        contour = std::move(next);
    }

    // sanity: DAG with unique source v1 and sink v2
    if (f.edges.size() != 2 * g.n - 3) throw InvalidOrder("frame: wrong edge count");
    for (std::size_t u = 0; u < g.n; ++u) {
        if (f.in_adj[u].empty() && u != v1) throw InvalidOrder("frame: extra source");
        if (f.out_adj[u].empty() && u != v2) throw InvalidOrder("frame: extra sink");
    }
    linear_extension(f); // throws CyclicFrame on a cycle
    return f;
}

std::vector<std::size_t> linear_extension(const Frame& f) {
    std::vector<std::size_t> indeg(f.n, 0);
    for (const auto& [u, w] : f.edges) ++indeg[w];
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t u = 0; u < f.n; ++u)
        if (indeg[u] == 0) ready.push(u);
    std::vector<std::size_t> order;
    while (!ready.empty()) {
        std::size_t u = ready.top();
        ready.pop();
        order.push_back(u);
        for (std::size_t w : f.out_adj[u])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (order.size() != f.n) throw CyclicFrame("linear_extension: frame has a cycle");
    return order;
}

} // namespace arr
