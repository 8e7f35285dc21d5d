#include "arr/arrangement.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace arr {

Arrangement::Arrangement(std::vector<GeneralLine> lines) : lines_(std::move(lines)) {
    if (lines_.empty()) throw std::invalid_argument("Arrangement: needs at least one line");
    for (std::size_t i = 0; i < lines_.size(); ++i) {
        for (std::size_t j = i + 1; j < lines_.size(); ++j) {
            auto r = line_intersection(lines_[i], lines_[j]);
            if (std::holds_alternative<ParallelIndicator>(r))
                throw ParallelPair("Arrangement: lines " + std::to_string(i) + " and " +
                                   std::to_string(j) + " are parallel");
            vertices_.emplace(std::make_pair(i, j), std::get<Point>(r));
        }
    }
}

std::vector<Point> Arrangement::distinct_vertices() const {
    std::vector<Point> pts;
    pts.reserve(vertices_.size());
    for (const auto& [ij, p] : vertices_) pts.push_back(p);
    std::sort(pts.begin(), pts.end(), [](const Point& p, const Point& q) { return lex_less(p, q); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

Arrangement Arrangement::subset(const std::vector<std::size_t>& indices) const {
    std::vector<GeneralLine> ls;
    ls.reserve(indices.size());
    for (std::size_t i : indices) ls.push_back(lines_.at(i));
    return Arrangement(std::move(ls));
}

Arrangement Arrangement::translated(const Rat& dx, const Rat& dy) const {
    std::vector<GeneralLine> ls;
    ls.reserve(lines_.size());
    for (const GeneralLine& l : lines_)
        ls.emplace_back(l.a, l.b, l.c + l.a * dx + l.b * dy);
    return Arrangement(std::move(ls));
}

std::pair<std::size_t, std::vector<std::size_t>>
monotone_subsequence(const std::vector<Rat>& seq, MonotoneDirection dir) {
    bool weak = dir == MonotoneDirection::NonDecreasing || dir == MonotoneDirection::NonIncreasing;
    bool descending = dir == MonotoneDirection::Decreasing || dir == MonotoneDirection::NonIncreasing;

    std::vector<Rat> v = seq;
    if (descending)
        for (Rat& x : v) x = -x;

    const std::size_t n = v.size();
    std::vector<std::size_t> tails;             // index of smallest tail per length
    std::vector<std::size_t> parent(n, SIZE_MAX);
    for (std::size_t i = 0; i < n; ++i) {
        auto cmp = [&](std::size_t t) { return weak ? v[t] <= v[i] : v[t] < v[i]; };
        // first position whose tail does not extend to v[i]
        std::size_t lo = 0, hi = tails.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (cmp(tails[mid])) lo = mid + 1; else hi = mid;
        }
        if (lo > 0) parent[i] = tails[lo - 1];
        if (lo == tails.size()) tails.push_back(i); else tails[lo] = i;
    }
    std::vector<std::size_t> witness;
    if (!tails.empty()) {
        for (std::size_t i = tails.back(); i != SIZE_MAX; i = parent[i]) witness.push_back(i);
        std::reverse(witness.begin(), witness.end());
    }
    return {witness.size(), witness};
}

MuResult mu_halfplane(const Arrangement& A, const Halfplane& h) {
    const GeneralLine& bd = h.boundary;
    const Rat da = -bd.b, db = bd.a; // direction of the boundary

    // at most one line of A is parallel to the boundary
    std::size_t parallel_idx = SIZE_MAX;
    struct Entry {
        Rat frame_slope; // du/dv: movement along the boundary per unit offset
        Rat t;           // boundary-crossing parameter u
        std::size_t idx;
    };
    std::vector<Entry> entries;
    entries.reserve(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) {
        const GeneralLine& l = A.line(i);
        Rat denom = bd.b * l.a - bd.a * l.b; // 0 iff parallel to boundary
        if (denom == 0) {
            if (parallel_idx != SIZE_MAX)
                throw InternalInvariantViolation("mu_halfplane: two lines parallel to boundary");
            parallel_idx = i;
            continue;
        }
        Rat numer = bd.b * l.b + bd.a * l.a;
        auto r = line_intersection(l, bd);
        const Point& q = std::get<Point>(r);
        entries.push_back(Entry{numer / denom, da * q.x + db * q.y, i});
    }

    std::sort(entries.begin(), entries.end(),
              [](const Entry& x, const Entry& y) { return x.frame_slope < y.frame_slope; });
    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        if (entries[i].frame_slope == entries[i + 1].frame_slope)
            throw InternalInvariantViolation("mu_halfplane: equal frame slopes for distinct lines");

    std::vector<Rat> ts;
    ts.reserve(entries.size());
    for (const Entry& e : entries) ts.push_back(e.t);
    auto dir = h.sense == HalfplaneSense::Open ? MonotoneDirection::Increasing
                                               : MonotoneDirection::NonDecreasing;
    auto [len, sub] = monotone_subsequence(ts, dir);

    MuResult res;
    for (std::size_t k : sub) res.witness.push_back(entries[k].idx);
    res.value = len;

    if (parallel_idx != SIZE_MAX) {
        // all of this line's intersections lie on it, so one sidedness test
        const GeneralLine& p = A.line(parallel_idx);
        Point sample = p.b != 0 ? Point{Rat(0), p.c / p.b} : Point{p.c / p.a, Rat(0)};
        if (h.contains(sample)) {
            res.witness.push_back(parallel_idx);
            res.value += 1;
        }
    }
    if (res.value == 0) {
        // a single line has no vertices and qualifies vacuously
        res.value = 1;
        res.witness.push_back(0);
    }
    std::sort(res.witness.begin(), res.witness.end());
    return res;
}

MuResult mu_region_bruteforce(const Arrangement& A, const std::vector<Halfplane>& region,
                              std::size_t limit) {
    const std::size_t n = A.size();
    if (n > limit) throw SizeLimitExceeded("mu_region_bruteforce: arrangement too large");

    auto in_region = [&](const Point& p) {
        for (const Halfplane& h : region)
            if (h.contains(p)) return true;
        return false;
    };

    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& [ij, p] : A.vertices()) {
        if (in_region(p)) {
            adj[ij.first] |= std::uint32_t(1) << ij.second;
            adj[ij.second] |= std::uint32_t(1) << ij.first;
        }
    }

    std::uint32_t best_mask = 1; // singletons are vacuously valid
    int best_count = 1;
    const std::uint32_t full = (n == 32) ? ~std::uint32_t(0) : ((std::uint32_t(1) << n) - 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int c = std::popcount(mask);
        if (c <= best_count) continue;
        bool ok = true;
        for (std::uint32_t m = mask; m != 0; m &= m - 1) {
            std::uint32_t i = std::countr_zero(m);
            std::uint32_t need = mask & ~(std::uint32_t(1) << i);
            if ((adj[i] & need) != need) { ok = false; break; }
        }
        if (ok) { best_mask = mask; best_count = c; }
    }

    MuResult res;
    res.value = std::size_t(best_count);
    for (std::size_t i = 0; i < n; ++i)
        if (best_mask & (std::uint32_t(1) << i)) res.witness.push_back(i);
    return res;
}

} // namespace arr
