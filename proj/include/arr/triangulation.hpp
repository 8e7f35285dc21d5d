#ifndef ARR_TRIANGULATION_HPP
#define ARR_TRIANGULATION_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace arr {

struct NotTriangulation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidOrder : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct CyclicFrame : std::logic_error {
    using std::logic_error::logic_error;
};

struct ValidationReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
};

// Maximal planar graph given as a rotation system: per-vertex clockwise
// cyclic order of neighbors, plus a designated outer face. Vertices are
// 0-based internally.
struct EmbeddedTriangulation {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> rotation;
    std::array<std::size_t, 3> outer_face{};

    bool has_edge(std::size_t u, std::size_t v) const;
};

// Directed face cycles of the rotation system (next dart after u->v is
// v->succ(u) in the rotation at v). Interior faces come out counterclockwise,
// the outer face clockwise.
std::vector<std::vector<std::size_t>> trace_faces(const EmbeddedTriangulation& g);

// simplicity, symmetry, |E| = 3n-6, all faces triangles, outer face valid
ValidationReport validate_triangulation(const EmbeddedTriangulation& g);

struct CanonicalOrder {
    std::vector<std::size_t> ordering; // ordering[i] = v_{i+1}
};

// Canonical ordering by reverse peeling of chord-free outer vertices,
// smallest-id tie-break. Requires a valid triangulation.
CanonicalOrder canonical_ordering(const EmbeddedTriangulation& g);

// Independent re-derivation of the contours C_i and verification of the four
// canonical-ordering properties. Oracle for canonical_ordering.
ValidationReport check_canonical(const EmbeddedTriangulation& g, const CanonicalOrder& ord);

// Oriented frame: edge v1->v2 plus, per added vertex, an edge from its first
// contour neighbor and one to its last. A DAG with unique source v1 and sink
// v2 and exactly 2n-3 edges.
struct Frame {
    std::size_t n = 0;
    std::size_t source = 0, sink = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::vector<std::size_t>> out_adj, in_adj;
};

Frame frame(const EmbeddedTriangulation& g, const CanonicalOrder& ord);

// Lexicographically smallest (by vertex id) topological order of the frame.
// First element is the source, last the sink.
std::vector<std::size_t> linear_extension(const Frame& f);

} // namespace arr

#endif
