#ifndef ARR_IO_HPP
#define ARR_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "arr/drawing.hpp"
#include "arr/geometry.hpp"
#include "arr/triangulation.hpp"

namespace arr {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All file formats carry rationals as "p/q" text and vertex/line ids 1-based.
// Serialization is canonical: lowest terms, fixed key order, 2-space indent,
// so equal values produce byte-identical files.

std::vector<GeneralLine> parse_lineset(const std::string& text);
std::string serialize_lineset(const std::vector<GeneralLine>& lines);

EmbeddedTriangulation parse_graph(const std::string& text);
std::string serialize_graph(const EmbeddedTriangulation& g);

struct DrawingFile {
    Drawing drawing; // trace is not persisted
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

DrawingFile parse_drawing(const std::string& text);
std::string serialize_drawing(const DrawingFile& df);
DrawingFile drawing_file(const EmbeddedTriangulation& g, const Drawing& d);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Rejects line sets with more than r members through a common point.
void check_max_concurrent(const std::vector<GeneralLine>& lines, std::size_t r);

} // namespace arr

#endif
