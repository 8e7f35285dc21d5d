#include <doctest.h>

#include <algorithm>

#include "arr/drawing.hpp"
#include "arr/partition.hpp"
#include "helpers.hpp"

using namespace arr;

TEST_CASE("prepare_lines normalizes and orders") {
    // y = x and y = -x + 4
    std::vector<GeneralLine> two = {GeneralLine(Rat(1), Rat(-1), Rat(0)),
                                    GeneralLine(Rat(1), Rat(1), Rat(4))};
    PreparedLines pl = prepare_lines(two);
    REQUIRE(pl.sorted.size() == 2);
    CHECK(pl.sorted[0].x_intercept < pl.sorted[1].x_intercept);
    // the single vertex is below the axis in prepared coordinates
    Point v = std::get<Point>(line_intersection(two[0], two[1]));
    CHECK(pl.to_prepared(v).y < 0);
    // round trip
    CHECK(pl.to_original(pl.to_prepared(v)) == v);

    // already-compliant set: shears are identities
    std::vector<GeneralLine> good = {InterceptLine(Rat(1), Rat(0)).general(),
                                     InterceptLine(Rat(-1), Rat(-10)).general(),
                                     InterceptLine(Rat(2), Rat(5)).general()};
    PreparedLines pl2 = prepare_lines(good);
    CHECK(pl2.shear_x == 0);
    CHECK(pl2.shear_y == 0);

    // vertical member forces a shear; incidence is affine invariant
    std::vector<GeneralLine> with_vertical = {GeneralLine(Rat(1), Rat(0), Rat(0)),
                                              GeneralLine(Rat(1), Rat(-1), Rat(1))};
    PreparedLines pl3 = prepare_lines(with_vertical);
    for (const InterceptLine& l : pl3.sorted) CHECK(l.slope != 0);
    Point w = std::get<Point>(line_intersection(with_vertical[0], with_vertical[1]));
    Point wp = pl3.to_prepared(w);
    // the transformed vertex lies on both transformed lines
    CHECK(pl3.sorted[0].y_at(wp.x) == wp.y);
    CHECK(pl3.sorted[1].y_at(wp.x) == wp.y);

    CHECK_THROWS_AS(prepare_lines({GeneralLine(Rat(1), Rat(-1), Rat(0)),
                                   GeneralLine(Rat(1), Rat(-1), Rat(5))}),
                    ParallelLines);
}

TEST_CASE("triangle drawing on three generic lines") {
    auto tris = arrtest::all_triangulations(3);
    arrtest::Rng rng(51);
    auto lines = arrtest::random_lines(rng, 3);
    Drawing d = draw_on_lines(tris[0], lines);
    CHECK(verify_drawing(tris[0], lines, d).ok());
    // v1 and v2 sit on the extreme lines at prepared height 0
    PreparedLines pl = prepare_lines(lines);
    CanonicalOrder ord = canonical_ordering(tris[0]);
    CHECK(pl.to_prepared(d.points[ord.ordering[0]]).y == 0);
    CHECK(pl.to_prepared(d.points[ord.ordering[1]]).y == 0);
    CHECK(pl.to_prepared(d.points[ord.ordering[2]]).y == 1);
}

TEST_CASE("K4 on pencil lines and octahedron on random lines") {
    EmbeddedTriangulation k4 = arrtest::k4();
    Arrangement P = pencil_arrangement(2);
    Drawing d = draw_on_lines(k4, P.lines());
    CHECK(verify_drawing(k4, P.lines(), d).ok());

    EmbeddedTriangulation oct = arrtest::octahedron();
    arrtest::Rng rng(52);
    auto lines = arrtest::random_lines(rng, 6);
    Drawing d2 = draw_on_lines(oct, lines);
    CHECK(verify_drawing(oct, lines, d2).ok());
    // trace heights strictly decrease and stay positive
    for (std::size_t i = 0; i + 1 < d2.trace.size(); ++i) {
        CHECK(d2.trace[i].height > d2.trace[i + 1].height);
        CHECK(d2.trace[i + 1].height > 0);
        CHECK(d2.trace[i].clamp_left > 0);
        CHECK(d2.trace[i].clamp_right > 0);
        CHECK(d2.trace[i].chosen <= d2.trace[i].height / 2);
    }
}

TEST_CASE("verify_drawing rejects corrupted drawings") {
    EmbeddedTriangulation g = arrtest::k4();
    arrtest::Rng rng(53);
    auto lines = arrtest::random_lines(rng, 4);
    Drawing d = draw_on_lines(g, lines);

    // swap two vertex points across lines: incidence breaks
    Drawing swapped = d;
    std::swap(swapped.points[0], swapped.points[1]);
    CHECK_FALSE(verify_drawing(g, lines, swapped).ok());

    // move an interior vertex far away along its line to force a crossing
    Drawing moved = d;
    const GeneralLine& l = lines[d.line_of_vertex[2]];
    Rat t(100000);
    moved.points[2] = l.b != 0 ? Point{t, (l.c - l.a * t) / l.b} : Point{l.c / l.a, t};
    CHECK_FALSE(verify_drawing(g, lines, moved).ok());
}

TEST_CASE("frame order is compatible with the b order") {
    arrtest::Rng rng(54);
    for (int t = 0; t < 8; ++t) {
        EmbeddedTriangulation g = arrtest::random_triangulation(rng, 5 + rng() % 8);
        auto lines = arrtest::random_lines(rng, g.n);
        Drawing d = draw_on_lines(g, lines);
        REQUIRE(verify_drawing(g, lines, d).ok());
        PreparedLines pl = prepare_lines(lines);
        std::vector<std::size_t> b_rank(g.n); // input line index -> b position
        for (std::size_t i = 0; i < g.n; ++i) b_rank[pl.original_idx[i]] = i;
        Frame f = frame(g, canonical_ordering(g));
        for (auto [u, v] : f.edges) CHECK(b_rank[d.line_of_vertex[u]] < b_rank[d.line_of_vertex[v]]);
    }
}

TEST_CASE("determinism of draw_on_lines") {
    arrtest::Rng rng(55);
    EmbeddedTriangulation g = arrtest::random_triangulation(rng, 9);
    auto lines = arrtest::random_lines(rng, 9);
    Drawing d1 = draw_on_lines(g, lines);
    Drawing d2 = draw_on_lines(g, lines);
    CHECK(d1.line_of_vertex == d2.line_of_vertex);
    CHECK(d1.points == d2.points);
}

TEST_CASE("falsify_support finds drawings for easy instances and keeps its contract") {
    auto tris = arrtest::all_triangulations(3);
    arrtest::Rng rng(56);
    auto lines = arrtest::random_lines(rng, 3);
    for (std::size_t rot = 0; rot < 3; ++rot) {
        std::vector<std::size_t> lab = {rot, (rot + 1) % 3, (rot + 2) % 3};
        auto d = falsify_support(tris[0], lab, lines, 20000, 1);
        REQUIRE(d.has_value());
        CHECK(verify_drawing(tris[0], lines, *d).ok());
        CHECK(d->line_of_vertex == lab);
    }

    // zero budget: none found, and that is not a nonexistence claim
    auto none = falsify_support(tris[0], {0, 1, 2}, lines, 0, 1);
    CHECK_FALSE(none.has_value());

    // K4 with the labelling the constructive engine chose must be findable
    EmbeddedTriangulation g = arrtest::k4();
    auto lines4 = arrtest::random_lines(rng, 4);
    Drawing ref = draw_on_lines(g, lines4);
    auto found = falsify_support(g, ref.line_of_vertex, lines4, 200000, 2);
    if (found) CHECK(verify_drawing(g, lines4, *found).ok());
}
