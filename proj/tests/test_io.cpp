#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sys/wait.h>

#include "arr/drawing.hpp"
#include "arr/io.hpp"
#include "arr/partition.hpp"
#include "arr/svg.hpp"
#include "helpers.hpp"

using namespace arr;

namespace {

std::string tmp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("arrtest_" + name)).string();
}

int run_tool(const std::string& args, const std::string& stdout_file) {
    std::string cmd = std::string(ARRTOOL_PATH) + " " + args + " > " + stdout_file + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

} // namespace

TEST_CASE("lineset parse and round trip") {
    std::string minimal = R"({"lines":[{"a":"1","b":"0","c":"0"},{"a":"0","b":"1","c":"2/3"}]})";
    auto lines = parse_lineset(minimal);
    REQUIRE(lines.size() == 2);
    CHECK(lines[1].c == Rat(2, 3));

    std::string dup = R"({"lines":[{"a":"1","b":"0","c":"0"},{"a":"1","b":"0","c":"0"}]})";
    CHECK_THROWS_AS(parse_lineset(dup), ValidationError);
    CHECK_THROWS_AS(parse_lineset("{not json"), ParseError);
    CHECK_THROWS_AS(parse_lineset(R"({"lines":[{"a":"x","b":"1","c":"0"}]})"), ValidationError);

    // intercept entries are accepted alongside general ones
    std::string mixed =
        R"({"lines":[{"a":"1","b":"0","c":"0"}],"intercept":[{"slope":"2","x_intercept":"1/2"}]})";
    CHECK(parse_lineset(mixed).size() == 2);

    arrtest::Rng rng(61);
    for (int t = 0; t < 20; ++t) {
        auto ls = arrtest::random_lines(rng, 2 + rng() % 8);
        std::string s = serialize_lineset(ls);
        auto back = parse_lineset(s);
        CHECK(back == ls);
        CHECK(serialize_lineset(back) == s);
    }
}

TEST_CASE("graph parse and round trip") {
    EmbeddedTriangulation g = arrtest::k4();
    std::string s = serialize_graph(g);
    EmbeddedTriangulation back = parse_graph(s);
    CHECK(back.n == g.n);
    CHECK(back.rotation == g.rotation);
    CHECK(back.outer_face == g.outer_face);
    CHECK(serialize_graph(back) == s);

    // a graph failing validation is rejected
    EmbeddedTriangulation bad = g;
    bad.rotation[0] = {1, 2, 3}; // reordered rotation breaks the face structure
    bool ok = true;
    try {
        parse_graph(serialize_graph(bad));
    } catch (const ValidationError&) {
        ok = false;
    }
    CHECK_FALSE(ok);
}

TEST_CASE("drawing parse and round trip") {
    arrtest::Rng rng(62);
    EmbeddedTriangulation g = arrtest::random_triangulation(rng, 7);
    auto lines = arrtest::random_lines(rng, 7);
    Drawing d = draw_on_lines(g, lines);
    DrawingFile df = drawing_file(g, d);
    std::string s = serialize_drawing(df);
    DrawingFile back = parse_drawing(s);
    CHECK(back.drawing.line_of_vertex == df.drawing.line_of_vertex);
    CHECK(back.drawing.points == df.drawing.points);
    CHECK(back.edges == df.edges);
    CHECK(serialize_drawing(back) == s);
    CHECK(verify_drawing(g, lines, back.drawing).ok());
}

TEST_CASE("max concurrent validation") {
    std::vector<GeneralLine> conc;
    for (int m : {1, 2, 3}) conc.push_back(InterceptLine(Rat(m), Rat(-1)).general());
    CHECK_THROWS_AS(check_max_concurrent(conc, 2), ValidationError);
    check_max_concurrent(conc, 3); // exactly three through a point is fine
}

TEST_CASE("svg export basics") {
    Arrangement A({GeneralLine(Rat(1), Rat(-1), Rat(0)), GeneralLine(Rat(1), Rat(1), Rat(0))});
    std::string svg = svg_export(A);
    // one <line> element per input line
    std::size_t count = 0, pos = 0;
    while ((pos = svg.find("<line ", pos)) != std::string::npos) { ++count; pos += 5; }
    CHECK(count == 2);

    EmbeddedTriangulation g = arrtest::k4();
    Arrangement P = pencil_arrangement(2);
    Drawing d = draw_on_lines(g, P.lines());
    DrawingFile df = drawing_file(g, d);
    std::string dsvg = svg_export(df);
    std::size_t circles = 0, segs = 0;
    for (pos = 0; (pos = dsvg.find("<circle ", pos)) != std::string::npos; pos += 7) ++circles;
    for (pos = 0; (pos = dsvg.find("<line ", pos)) != std::string::npos; pos += 5) ++segs;
    CHECK(circles == 4);
    CHECK(segs == 6);
}

TEST_CASE("auto viewport contains all drawing points") {
    arrtest::Rng rng(63);
    EmbeddedTriangulation g = arrtest::random_triangulation(rng, 8);
    auto lines = arrtest::random_lines(rng, 8);
    DrawingFile df = drawing_file(g, draw_on_lines(g, lines));
    // exporting with the bounding box explicitly and padding shrunk to zero
    // must keep every point inside [0, 800] x [0, height]; spot-check via the
    // default export not throwing and containing one circle per vertex
    std::string svg = svg_export(df);
    std::size_t circles = 0;
    for (std::size_t pos = 0; (pos = svg.find("<circle ", pos)) != std::string::npos; pos += 7)
        ++circles;
    CHECK(circles == g.n);
}

TEST_CASE("cli end to end: draw, verify, falsify exit codes, determinism") {
    std::string lines_f = tmp_path("lines.json"), graph_f = tmp_path("graph.json"),
                draw_f = tmp_path("drawing.json"), out1 = tmp_path("out1.txt"),
                out2 = tmp_path("out2.txt"), svg_f = tmp_path("drawing.svg");
    arrtest::Rng rng(64);
    auto lines = arrtest::random_lines(rng, 4);
    write_file(lines_f, serialize_lineset(lines));
    write_file(graph_f, serialize_graph(arrtest::k4()));

    CHECK(run_tool("draw --graph " + graph_f + " --lines " + lines_f + " --out " + draw_f +
                       " --svg " + svg_f,
                   out1) == 0);
    CHECK(run_tool("verify --graph " + graph_f + " --lines " + lines_f + " --drawing " + draw_f,
                   out1) == 0);

    // identical invocations are byte identical
    run_tool("mu --lines " + lines_f + " --halfplane \"1,0,0,<=\"", out1);
    run_tool("mu --lines " + lines_f + " --halfplane \"1,0,0,<=\"", out2);
    CHECK(read_file(out1) == read_file(out2));

    // corrupt the drawing: verify exits 1
    DrawingFile df = parse_drawing(read_file(draw_f));
    std::swap(df.drawing.points[0], df.drawing.points[1]);
    std::string bad_f = tmp_path("bad_drawing.json");
    write_file(bad_f, serialize_drawing(df));
    CHECK(run_tool("verify --graph " + graph_f + " --lines " + lines_f + " --drawing " + bad_f,
                   out1) == 1);

    // zero-budget falsify exits 1 with none_found
    CHECK(run_tool("falsify --graph " + graph_f + " --labels 1,2,3,4 --lines " + lines_f +
                       " --budget 0 --seed 1",
                   out1) == 1);
    CHECK(read_file(out1).find("none_found") != std::string::npos);

    // missing file exits 2
    CHECK(run_tool("mu --lines " + tmp_path("nonexistent.json") + " --halfplane \"1,0,0,<=\"",
                   out1) == 2);

    // max-concurrent rejection exits 2
    std::vector<GeneralLine> conc;
    for (int m : {1, 2, 3}) conc.push_back(InterceptLine(Rat(m), Rat(-1)).general());
    std::string conc_f = tmp_path("conc.json");
    write_file(conc_f, serialize_lineset(conc));
    CHECK(run_tool("--max-concurrent 2 mu --lines " + conc_f + " --halfplane \"1,0,0,<=\"", out1) ==
          2);
    CHECK(run_tool("--max-concurrent 3 mu --lines " + conc_f + " --halfplane \"1,0,0,<=\"", out1) ==
          0);
}

TEST_CASE("cli pencils writes parseable files") {
    std::string out_f = tmp_path("pencil.json"), log = tmp_path("pencil_log.txt");
    CHECK(run_tool("pencils --k 2 --out " + out_f, log) == 0);
    CHECK(parse_lineset(read_file(out_f)).size() == 4);
    CHECK(run_tool("pencils --k 2 --pair --out " + out_f, log) == 0);
    CHECK(parse_lineset(read_file(out_f)).size() == 4);
    CHECK(parse_lineset(read_file(tmp_path("pencil_2.json"))).size() == 4);
}
