#ifndef ARR_DRAWING_HPP
#define ARR_DRAWING_HPP

#include <cstdint>
#include <optional>

#include "arr/geometry.hpp"
#include "arr/triangulation.hpp"

namespace arr {

struct ParallelLines : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InductionViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Input lines after rational normalization: two shears remove horizontal and
// vertical members, a downward translation puts every arrangement vertex
// below the x axis. In these coordinates every line reads y = a(x - b) with
// strictly increasing b (and strictly increasing 1/a).
struct PreparedLines {
    std::vector<GeneralLine> original;
    Rat shear_y; // first shear (x, y) -> (x, y + shear_y * x)
    Rat shear_x; // second shear (x, y) -> (x + shear_x * y, y)
    Rat translate_down;

    std::vector<InterceptLine> sorted;     // ascending x intercept
    std::vector<std::size_t> original_idx; // sorted position -> input index
    Rat min_abs_slope;                     // a-hat
    Rat min_b_gap;                         // smallest gap between consecutive b

    Point to_prepared(const Point& p) const;
    Point to_original(const Point& p) const;
};

PreparedLines prepare_lines(const std::vector<GeneralLine>& lines);

struct TraceRow {
    std::size_t canonical_index; // i, counted from 1
    Rat height;                  // h_i, where v_i was placed
    Rat slope_bound;             // s
    Rat clamp_left, clamp_right; // y_1, y_2
    Rat cone_bound;              // y-hat_s
    Rat chosen;                  // h_{i-1}
};

struct Drawing {
    std::vector<std::size_t> line_of_vertex; // vertex -> input line index (bijection)
    std::vector<Point> points;               // vertex -> position, original coordinates
    std::vector<TraceRow> trace;             // steps i = n .. 3
};

// The constructive placement: canonical ordering, frame, linear extension,
// vertices assigned to lines in x-intercept order, then placed top-down at
// exponentially separated heights inside the visibility slabs. The result is
// re-verified before being returned.
Drawing draw_on_lines(const EmbeddedTriangulation& g, const std::vector<GeneralLine>& lines);

// bijection, exact incidence, no crossing pair, no vertex on a foreign edge,
// distinct points
ValidationReport verify_drawing(const EmbeddedTriangulation& g,
                                const std::vector<GeneralLine>& lines, const Drawing& d);

// Randomized search for a crossing-free drawing with the given fixed
// vertex-to-line assignment. A returned drawing always passes
// verify_drawing; nullopt is not a nonexistence proof.
std::optional<Drawing> falsify_support(const EmbeddedTriangulation& g,
                                       const std::vector<std::size_t>& labelling,
                                       const std::vector<GeneralLine>& lines,
                                       std::size_t budget, std::uint64_t seed);

} // namespace arr

#endif
