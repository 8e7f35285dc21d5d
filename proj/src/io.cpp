#include "arr/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace arr {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
}

Rat get_rat(const Json& j, const std::string& what) {
    if (!j.is_string()) throw ValidationError(what + ": rational must be a string");
    auto r = rat_parse(j.get<std::string>());
    if (!r) throw ValidationError(what + ": bad rational '" + j.get<std::string>() + "'");
    return *r;
}

std::size_t get_id(const Json& j, std::size_t n, const std::string& what) {
    if (!j.is_number_unsigned() || j.get<std::size_t>() < 1 || j.get<std::size_t>() > n)
        throw ValidationError(what + ": id out of range 1.." + std::to_string(n));
    return j.get<std::size_t>() - 1;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace

std::vector<GeneralLine> parse_lineset(const std::string& text) {
    Json j = parse_json(text);
    if (!j.is_object() || !j.contains("lines") || !j["lines"].is_array())
        throw ValidationError("lineset: expected object with a \"lines\" array");
    std::vector<GeneralLine> lines;
    for (const Json& e : j["lines"]) {
        if (!e.is_object() || !e.contains("a") || !e.contains("b") || !e.contains("c"))
            throw ValidationError("lineset: each line needs fields a, b, c");
        Rat a = get_rat(e["a"], "lineset a"), b = get_rat(e["b"], "lineset b"),
            c = get_rat(e["c"], "lineset c");
        try {
            lines.emplace_back(a, b, c);
        } catch (const std::invalid_argument& ex) {
            throw ValidationError(std::string("lineset: ") + ex.what());
        }
    }
    if (j.contains("intercept")) {
        if (!j["intercept"].is_array())
            throw ValidationError("lineset: \"intercept\" must be an array");
        for (const Json& e : j["intercept"]) {
            if (!e.is_object() || !e.contains("slope") || !e.contains("x_intercept"))
                throw ValidationError("lineset: intercept entries need slope and x_intercept");
            Rat s = get_rat(e["slope"], "intercept slope");
            Rat b = get_rat(e["x_intercept"], "intercept x_intercept");
            if (s == 0) throw ValidationError("lineset: intercept slope must be nonzero");
            lines.push_back(InterceptLine(s, b).general());
        }
    }
    if (lines.empty()) throw ValidationError("lineset: no lines");
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t k = i + 1; k < lines.size(); ++k)
            if (parallel(lines[i], lines[k]))
                throw ValidationError("lineset: lines " + std::to_string(i + 1) + " and " +
                                      std::to_string(k + 1) +
                                      (lines[i].same_line(lines[k]) ? " are identical" : " are parallel"));
    return lines;
}

std::string serialize_lineset(const std::vector<GeneralLine>& lines) {
    Json j;
    j["lines"] = Json::array();
    for (const GeneralLine& l : lines)
        j["lines"].push_back({{"a", rat_to_string(l.a)},
                              {"b", rat_to_string(l.b)},
                              {"c", rat_to_string(l.c)}});
    return dump(j);
}

EmbeddedTriangulation parse_graph(const std::string& text) {
    Json j = parse_json(text);
    if (!j.is_object() || !j.contains("n") || !j.contains("rotation") || !j.contains("outer"))
        throw ValidationError("graph: expected fields n, rotation, outer");
    if (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() < 3)
        throw ValidationError("graph: n must be an integer >= 3");
    EmbeddedTriangulation g;
    g.n = j["n"].get<std::size_t>();
    if (!j["rotation"].is_array() || j["rotation"].size() != g.n)
        throw ValidationError("graph: rotation must list n vertices");
    for (const Json& row : j["rotation"]) {
        if (!row.is_array()) throw ValidationError("graph: rotation rows must be arrays");
        std::vector<std::size_t> nbrs;
        for (const Json& e : row) nbrs.push_back(get_id(e, g.n, "graph rotation"));
        g.rotation.push_back(std::move(nbrs));
    }
    if (!j["outer"].is_array() || j["outer"].size() != 3)
        throw ValidationError("graph: outer must name three vertices");
    for (std::size_t i = 0; i < 3; ++i) g.outer_face[i] = get_id(j["outer"][i], g.n, "graph outer");
    ValidationReport rep = validate_triangulation(g);
    if (!rep.ok()) throw ValidationError("graph: " + rep.issues.front());
    return g;
}

std::string serialize_graph(const EmbeddedTriangulation& g) {
    Json j;
    j["n"] = g.n;
    j["rotation"] = Json::array();
    for (const auto& row : g.rotation) {
        Json r = Json::array();
        for (std::size_t v : row) r.push_back(v + 1);
        j["rotation"].push_back(std::move(r));
    }
    j["outer"] = {g.outer_face[0] + 1, g.outer_face[1] + 1, g.outer_face[2] + 1};
    return dump(j);
}

DrawingFile parse_drawing(const std::string& text) {
    Json j = parse_json(text);
    if (!j.is_object() || !j.contains("assignment") || !j.contains("edges") ||
        !j["assignment"].is_array() || !j["edges"].is_array())
        throw ValidationError("drawing: expected assignment and edges arrays");
    std::size_t n = j["assignment"].size();
    if (n == 0) throw ValidationError("drawing: empty assignment");
    DrawingFile df;
    df.drawing.line_of_vertex.assign(n, 0);
    df.drawing.points.assign(n, Point{Rat(0), Rat(0)});
    std::vector<char> seen_v(n, 0), seen_l(n, 0);
    for (const Json& e : j["assignment"]) {
        if (!e.is_object() || !e.contains("vertex") || !e.contains("line") || !e.contains("point"))
            throw ValidationError("drawing: assignment entries need vertex, line, point");
        std::size_t v = get_id(e["vertex"], n, "drawing vertex");
        std::size_t l = get_id(e["line"], n, "drawing line");
        if (seen_v[v] || seen_l[l])
            throw ValidationError("drawing: assignment is not a bijection");
        seen_v[v] = seen_l[l] = 1;
        if (!e["point"].is_array() || e["point"].size() != 2)
            throw ValidationError("drawing: point must be a pair of rationals");
        df.drawing.line_of_vertex[v] = l;
        df.drawing.points[v] =
            Point{get_rat(e["point"][0], "drawing point x"), get_rat(e["point"][1], "drawing point y")};
    }
    for (const Json& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw ValidationError("drawing: edges must be pairs");
        std::size_t u = get_id(e[0], n, "drawing edge"), v = get_id(e[1], n, "drawing edge");
        if (u == v) throw ValidationError("drawing: self-loop edge");
        df.edges.emplace_back(u, v);
    }
    return df;
}

std::string serialize_drawing(const DrawingFile& df) {
    Json j;
    j["assignment"] = Json::array();
    for (std::size_t v = 0; v < df.drawing.points.size(); ++v)
        j["assignment"].push_back({{"vertex", v + 1},
                                   {"line", df.drawing.line_of_vertex[v] + 1},
                                   {"point", {rat_to_string(df.drawing.points[v].x),
                                              rat_to_string(df.drawing.points[v].y)}}});
    j["edges"] = Json::array();
    for (auto [u, v] : df.edges) j["edges"].push_back({u + 1, v + 1});
    return dump(j);
}

DrawingFile drawing_file(const EmbeddedTriangulation& g, const Drawing& d) {
    DrawingFile df;
    df.drawing = d;
    df.drawing.trace.clear();
    for (std::size_t u = 0; u < g.n; ++u)
        for (std::size_t v : g.rotation[u])
            if (u < v) df.edges.emplace_back(u, v);
    return df;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    out << text;
    if (!out) throw ParseError("write failed: " + path);
}

void check_max_concurrent(const std::vector<GeneralLine>& lines, std::size_t r) {
    std::map<std::pair<Rat, Rat>, std::size_t> seen; // intersection point -> pair count
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t k = i + 1; k < lines.size(); ++k) {
            auto res = line_intersection(lines[i], lines[k]);
            if (!std::holds_alternative<Point>(res)) continue;
            const Point& p = std::get<Point>(res);
            ++seen[{p.x, p.y}];
        }
    // m lines through a point contribute m(m-1)/2 coincident pairs
    for (const auto& [pt, pairs] : seen)
        if (2 * pairs > r * (r - 1))
            throw ValidationError("more than " + std::to_string(r) +
                                  " lines through a common point");
}

} // namespace arr
