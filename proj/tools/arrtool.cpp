#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arr/arrangement.hpp"
#include "arr/drawing.hpp"
#include "arr/io.hpp"
#include "arr/partition.hpp"
#include "arr/svg.hpp"
#include "arr/triangulation.hpp"

using Json = nlohmann::ordered_json;

namespace {

// exit codes: 0 success/verified, 1 negative result, 2 input error,
// 3 internal invariant violation
constexpr int kOk = 0, kNegative = 1, kInputError = 2, kInternal = 3;

struct NegativeResult {
    Json payload;
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

arr::Arrangement load_arrangement(const std::string& path, std::size_t max_concurrent) {
    std::vector<arr::GeneralLine> lines = arr::parse_lineset(arr::read_file(path));
    if (max_concurrent > 0) arr::check_max_concurrent(lines, max_concurrent);
    return arr::Arrangement(std::move(lines));
}

Json line_json(const arr::GeneralLine& l) {
    return {{"a", arr::rat_to_string(l.a)}, {"b", arr::rat_to_string(l.b)},
            {"c", arr::rat_to_string(l.c)}};
}

Json point_json(const arr::Point& p) {
    return {arr::rat_to_string(p.x), arr::rat_to_string(p.y)};
}

Json witness_json(const std::vector<std::size_t>& w) {
    Json a = Json::array();
    for (std::size_t i : w) a.push_back(i + 1);
    return a;
}

arr::Halfplane parse_halfplane_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = spec.find(',', start);
        parts.push_back(spec.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (parts.size() != 4)
        throw arr::ValidationError("halfplane spec must be \"a,b,c,<\" or \"a,b,c,<=\"");
    auto a = arr::rat_parse(parts[0]), b = arr::rat_parse(parts[1]), c = arr::rat_parse(parts[2]);
    if (!a || !b || !c) throw arr::ValidationError("halfplane spec: bad rational");
    arr::HalfplaneSense sense;
    if (parts[3] == "<") sense = arr::HalfplaneSense::Open;
    else if (parts[3] == "<=") sense = arr::HalfplaneSense::Closed;
    else throw arr::ValidationError("halfplane spec: sense must be < or <=");
    return arr::Halfplane(arr::GeneralLine(*a, *b, *c), sense);
}

std::vector<std::size_t> parse_labels(const std::string& spec, std::size_t n) {
    std::vector<std::size_t> out;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t comma = spec.find(',', start);
        std::string tok = spec.substr(start, comma - start);
        auto r = arr::rat_parse(tok);
        if (!r || arr::rat_den(*r) != 1 || *r < 1 || *r > int(n))
            throw arr::ValidationError("labels: expected 1-based line ids, got '" + tok + "'");
        out.push_back(std::size_t(arr::rat_num(*r).convert_to<unsigned long>()) - 1);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.size() != n) throw arr::ValidationError("labels: need exactly n entries");
    return out;
}

std::string pair_second_path(const std::string& path) {
    std::size_t dot = path.rfind('.');
    std::size_t slash = path.rfind('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + "_2";
    return path.substr(0, dot) + "_2" + path.substr(dot);
}

void cmd_mu(const std::string& lines_path, const std::string& hp_spec, std::size_t maxc) {
    arr::Arrangement A = load_arrangement(lines_path, maxc);
    arr::Halfplane h = parse_halfplane_spec(hp_spec);
    arr::MuResult r = arr::mu_halfplane(A, h);
    emit({{"mu", r.value}, {"witness", witness_json(r.witness)}});
}

void cmd_cut(const std::string& pa, const std::string& pb, bool as_json, std::size_t maxc) {
    arr::Arrangement A1 = load_arrangement(pa, maxc);
    arr::Arrangement A2 = load_arrangement(pb, maxc);
    arr::CutResult r = arr::ham_sandwich_cut(A1, A2);
    if (as_json) {
        Json sides = Json::array();
        for (int i = 0; i < 2; ++i)
            for (int s = 0; s < 2; ++s)
                sides.push_back({{"arrangement", i + 1},
                                 {"side", s == 0 ? "neg" : "pos"},
                                 {"mu", r.witnesses[i][s].value},
                                 {"witness", witness_json(r.witnesses[i][s].witness)}});
        emit({{"cut", line_json(r.cut)}, {"min", r.min_value()}, {"sides", sides}});
    } else {
        std::cout << "cut: " << arr::rat_to_string(r.cut.a) << "*x + "
                  << arr::rat_to_string(r.cut.b) << "*y = " << arr::rat_to_string(r.cut.c) << "\n";
        for (int i = 0; i < 2; ++i)
            std::cout << "arrangement " << (i + 1) << ": mu(neg) = " << r.witnesses[i][0].value
                      << ", mu(pos) = " << r.witnesses[i][1].value << "\n";
        std::cout << "min: " << r.min_value() << "\n";
    }
}

void cmd_centerpoint(const std::string& lines_path, std::size_t maxc) {
    arr::Arrangement A = load_arrangement(lines_path, maxc);
    arr::DepthCertificate c = arr::centerpoint(A);
    emit({{"point", point_json(c.q)},
          {"depth", c.depth},
          {"minimizing_line", line_json(c.minimizing_line)}});
}

void cmd_pencils(std::size_t k, bool pair, bool has_seed, std::uint64_t seed,
                 const std::string& out) {
    Json written = Json::array();
    if (pair) {
        auto [a, b] = arr::pencil_pair(k);
        arr::write_file(out, arr::serialize_lineset(a.lines()));
        std::string out2 = pair_second_path(out);
        arr::write_file(out2, arr::serialize_lineset(b.lines()));
        written.push_back(out);
        written.push_back(out2);
    } else {
        arr::PencilPerturb p =
            has_seed ? arr::PencilPerturb::deterministic(seed) : arr::PencilPerturb::none();
        arr::Arrangement a = arr::pencil_arrangement(k, p);
        arr::write_file(out, arr::serialize_lineset(a.lines()));
        written.push_back(out);
    }
    emit({{"written", written}});
}

void cmd_same_type(const std::string& pa, const std::string& pb, const std::string& pc,
                   std::size_t target, std::size_t maxc) {
    arr::Arrangement A1 = load_arrangement(pa, maxc);
    arr::Arrangement A2 = load_arrangement(pb, maxc);
    arr::Arrangement A3 = load_arrangement(pc, maxc);
    try {
        arr::SameTypeResult r = arr::same_type_triple(A1, A2, A3, target);
        Json subsets = Json::array();
        for (const auto& s : r.subsets) subsets.push_back(witness_json(s));
        emit({{"subsets", subsets}, {"iterations", r.iterations}});
    } catch (const arr::TargetUnreachable&) {
        throw NegativeResult{{{"result", "target_unreachable"}}};
    }
}

void cmd_convex_pos(const std::string& lines_path, std::size_t k, std::size_t c, std::size_t m,
                    std::size_t maxc) {
    arr::Arrangement A = load_arrangement(lines_path, maxc);
    try {
        arr::ConvexPositionSubsets r = arr::convex_position_subsets(A, k, c, m);
        Json groups = Json::array();
        for (const auto& g : r.groups) groups.push_back(witness_json(g));
        emit({{"groups", groups}});
    } catch (const arr::InfeasibleScale&) {
        throw NegativeResult{{{"result", "infeasible_scale"}}};
    }
}

void cmd_draw(const std::string& graph_path, const std::string& lines_path,
              const std::string& out, const std::string& svg_path, bool trace,
              std::size_t maxc) {
    arr::EmbeddedTriangulation g = arr::parse_graph(arr::read_file(graph_path));
    std::vector<arr::GeneralLine> lines = arr::parse_lineset(arr::read_file(lines_path));
    if (maxc > 0) arr::check_max_concurrent(lines, maxc);
    arr::Drawing d = arr::draw_on_lines(g, lines);
    arr::DrawingFile df = arr::drawing_file(g, d);
    arr::write_file(out, arr::serialize_drawing(df));
    if (!svg_path.empty()) arr::write_file(svg_path, arr::svg_export(df));
    Json result = {{"written", out}};
    if (trace) {
        Json rows = Json::array();
        for (const arr::TraceRow& t : d.trace)
            rows.push_back({{"i", t.canonical_index},
                            {"h", arr::rat_to_string(t.height)},
                            {"s", arr::rat_to_string(t.slope_bound)},
                            {"y1", arr::rat_to_string(t.clamp_left)},
                            {"y2", arr::rat_to_string(t.clamp_right)},
                            {"cone", arr::rat_to_string(t.cone_bound)},
                            {"next_h", arr::rat_to_string(t.chosen)}});
        result["trace"] = rows;
    }
    emit(result);
}

void cmd_verify(const std::string& graph_path, const std::string& lines_path,
                const std::string& drawing_path, std::size_t maxc) {
    arr::EmbeddedTriangulation g = arr::parse_graph(arr::read_file(graph_path));
    std::vector<arr::GeneralLine> lines = arr::parse_lineset(arr::read_file(lines_path));
    if (maxc > 0) arr::check_max_concurrent(lines, maxc);
    arr::DrawingFile df = arr::parse_drawing(arr::read_file(drawing_path));
    arr::ValidationReport rep = arr::verify_drawing(g, lines, df.drawing);
    if (rep.ok()) {
        emit({{"verified", true}});
    } else {
        Json issues = Json::array();
        for (const std::string& s : rep.issues) issues.push_back(s);
        throw NegativeResult{{{"verified", false}, {"issues", issues}}};
    }
}

void cmd_falsify(const std::string& graph_path, const std::string& labels,
                 const std::string& lines_path, std::size_t budget, std::uint64_t seed,
                 std::size_t maxc) {
    arr::EmbeddedTriangulation g = arr::parse_graph(arr::read_file(graph_path));
    std::vector<arr::GeneralLine> lines = arr::parse_lineset(arr::read_file(lines_path));
    if (maxc > 0) arr::check_max_concurrent(lines, maxc);
    std::vector<std::size_t> lab = parse_labels(labels, g.n);
    std::optional<arr::Drawing> d = arr::falsify_support(g, lab, lines, budget, seed);
    if (d) {
        arr::DrawingFile df = arr::drawing_file(g, *d);
        Json j = Json::parse(arr::serialize_drawing(df));
        emit({{"result", "drawing_found"}, {"drawing", j}});
    } else {
        // a negative outcome, never a nonexistence proof
        throw NegativeResult{{{"result", "none_found"}}};
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact line-arrangement partitioning and triangulation drawing"};
    app.require_subcommand(1);

    std::size_t maxc = 0; // 0 = unlimited
    app.add_option("--max-concurrent", maxc,
                   "reject line sets with more than R lines through a common point");

    std::string lines_f, lines_a, lines_b, lines_c, hp_spec, graph_f, out_f, svg_f, drawing_f,
        labels;
    std::size_t k = 0, c = 0, m = 0, target = 0, budget = 10000;
    std::uint64_t seed = 0;
    bool as_json = false, pair = false, trace = false;

    auto* mu = app.add_subcommand("mu", "capacity of a halfplane");
    mu->add_option("--lines", lines_f)->required();
    mu->add_option("--halfplane", hp_spec, "a,b,c,<|<= meaning a*x+b*y (<|<=) c")->required();

    auto* cut = app.add_subcommand("cut", "ham-sandwich cut of two arrangements");
    cut->add_option("--lines-a", lines_a)->required();
    cut->add_option("--lines-b", lines_b)->required();
    cut->add_flag("--json", as_json);

    auto* cp = app.add_subcommand("centerpoint", "point of high halfspace depth");
    cp->add_option("--lines", lines_f)->required();

    auto* pen = app.add_subcommand("pencils", "tightness construction");
    pen->add_option("--k", k)->required();
    pen->add_flag("--pair", pair);
    auto* seed_opt = pen->add_option("--seed", seed);
    pen->add_option("--out", out_f)->required();

    auto* st = app.add_subcommand("same-type", "shrink three arrangements to a same-type triple");
    st->add_option("--lines-a", lines_a)->required();
    st->add_option("--lines-b", lines_b)->required();
    st->add_option("--lines-c", lines_c)->required();
    st->add_option("--target", target)->required();

    auto* cpos = app.add_subcommand("convex-pos", "groups with representatives in convex position");
    cpos->add_option("--lines", lines_f)->required();
    cpos->add_option("--k", k)->required();
    cpos->add_option("--c", c)->required();
    cpos->add_option("--m", m)->required();

    auto* draw = app.add_subcommand("draw", "draw a triangulation on a line set");
    draw->add_option("--graph", graph_f)->required();
    draw->add_option("--lines", lines_f)->required();
    draw->add_option("--out", out_f)->required();
    draw->add_option("--svg", svg_f);
    draw->add_flag("--trace", trace);

    auto* ver = app.add_subcommand("verify", "verify a drawing file");
    ver->add_option("--graph", graph_f)->required();
    ver->add_option("--lines", lines_f)->required();
    ver->add_option("--drawing", drawing_f)->required();

    auto* fal = app.add_subcommand("falsify", "search for a drawing with a fixed assignment");
    fal->add_option("--graph", graph_f)->required();
    fal->add_option("--labels", labels, "comma separated 1-based line id per vertex")->required();
    fal->add_option("--lines", lines_f)->required();
    fal->add_option("--budget", budget);
    fal->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (mu->parsed()) cmd_mu(lines_f, hp_spec, maxc);
        else if (cut->parsed()) cmd_cut(lines_a, lines_b, as_json, maxc);
        else if (cp->parsed()) cmd_centerpoint(lines_f, maxc);
        else if (pen->parsed()) cmd_pencils(k, pair, seed_opt->count() > 0, seed, out_f);
        else if (st->parsed()) cmd_same_type(lines_a, lines_b, lines_c, target, maxc);
        else if (cpos->parsed()) cmd_convex_pos(lines_f, k, c, m, maxc);
        else if (draw->parsed()) cmd_draw(graph_f, lines_f, out_f, svg_f, trace, maxc);
        else if (ver->parsed()) cmd_verify(graph_f, lines_f, drawing_f, maxc);
        else if (fal->parsed()) cmd_falsify(graph_f, labels, lines_f, budget, seed, maxc);
        return kOk;
    } catch (const NegativeResult& n) {
        emit(n.payload);
        return kNegative;
    } catch (const arr::InternalInvariantViolation& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kInternal;
    } catch (const std::logic_error& e) {
        // SearchExhausted, CyclicFrame, InductionViolation: bug signals
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
