#ifndef ARR_PARTITION_HPP
#define ARR_PARTITION_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "arr/arrangement.hpp"

namespace arr {

struct DegenerateInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SearchExhausted : std::logic_error {
    using std::logic_error::logic_error;
};
struct TargetUnreachable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InfeasibleScale : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CutResult {
    CutResult();
    GeneralLine cut;
    // [arrangement][side]: side 0 = closed halfplane with eval <= 0,
    // side 1 = the complementary closed halfplane
    std::array<std::array<MuResult, 2>, 2> witnesses;
    std::size_t min_value() const;
};

// Enumerates candidate cuts through all pairs of distinct arrangement
// vertices and returns one maximizing the smallest of the four closed-side
// capacities (ties broken lexicographically on the canonical line form).
// Guarantee: min >= ceil(sqrt(|A_i|)) for each arrangement.
CutResult ham_sandwich_cut(const Arrangement& A1, const Arrangement& A2);

struct DepthCertificate {
    Point q;
    std::size_t depth = 0;
    GeneralLine minimizing_line; // boundary through q attaining the depth
    DepthCertificate() : minimizing_line(Rat(1), Rat(0), Rat(0)) {}
};

// Halfspace depth: minimum capacity over closed halfplanes bounded by a line
// through q. Candidate boundaries sweep every direction interval determined
// by the vertices of A.
DepthCertificate depth(const Arrangement& A, const Point& q);

// A point with depth >= ceil(sqrt(n/3)). Searches arrangement vertices,
// then midpoints of vertex pairs, then intersections of vertex-pair lines.
// SearchExhausted signals a bug: existence is guaranteed.
DepthCertificate centerpoint(const Arrangement& A, std::size_t search_limit = 12);

struct PencilPerturb {
    bool enabled = false;
    std::uint64_t seed = 0;
    static PencilPerturb none() { return {}; }
    static PencilPerturb deterministic(std::uint64_t seed) { return {true, seed}; }
};

// k pencils of k lines each, pencil i centered at (-1/2, i) with slopes
// strictly inside [1/2-(i-1)/k, 1/2-i/k]. With perturbation, slopes are
// nudged by distinct tiny rationals until no two non-center vertices share
// an x coordinate.
Arrangement pencil_arrangement(std::size_t k, PencilPerturb perturb = PencilPerturb::none());

// Two sheared-and-perturbed pencil constructions, the second translated down
// far enough (doubling + exact verification) that no line through two
// vertices of one arrangement meets the hull of the other.
std::pair<Arrangement, Arrangement> pencil_pair(std::size_t k);

struct SameTypeResult {
    std::array<std::vector<std::size_t>, 3> subsets; // indices into the inputs
    std::size_t iterations = 0;                      // shrink steps performed
};

// Shrinks the three arrangements with ham-sandwich cuts until every index
// split is line-separable (hence the three hulls admit no common
// transversal).
SameTypeResult same_type_triple(const Arrangement& A1, const Arrangement& A2,
                                const Arrangement& A3, std::size_t target);

// A line stabbing all three hulls, or nullopt. Candidates are lines through
// pairs of hull vertices (a transversal of convex sets can always be pivoted
// onto two of their vertices).
std::optional<GeneralLine> common_transversal_exists(const std::vector<Point>& h1,
                                                     const std::vector<Point>& h2,
                                                     const std::vector<Point>& h3);

struct ConvexPositionSubsets {
    std::vector<std::vector<std::size_t>> groups; // k groups of line indices into A
};

// Partitions A into m groups, makes every triple of groups same-type, then
// brute-forces k group-representatives in convex position. The returned
// hulls are re-verified by transversal sampling; never returns unverified.
ConvexPositionSubsets convex_position_subsets(const Arrangement& A, std::size_t k,
                                              std::size_t c, std::size_t m);

// Brute-force search for k points in strictly convex position (no three
// collinear). |pts| <= 20.
std::optional<std::vector<std::size_t>> convex_position_points(const std::vector<Point>& pts,
                                                               std::size_t k);

// ceil(sqrt(x)) over naturals
std::size_t ceil_sqrt(std::size_t x);
// ceil(sqrt(x/3)) computed exactly over rationals
std::size_t ceil_sqrt_third(std::size_t x);

// Are the point sets strictly separable by a line? Used for the same-type
// split checks (equivalent to disjointness of their hulls).
bool line_separable(const std::vector<Point>& a, const std::vector<Point>& b);

} // namespace arr

#endif
