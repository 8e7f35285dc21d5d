#ifndef ARR_SVG_HPP
#define ARR_SVG_HPP

#include <optional>
#include <string>

#include "arr/arrangement.hpp"
#include "arr/io.hpp"

namespace arr {

// Explicit world-coordinate window. Without one the bounding box of the
// subject is used, padded by ten percent.
struct Viewport {
    double min_x, min_y, max_x, max_y;
};

// Presentation only: the sole place where rationals become doubles.
std::string svg_export(const Arrangement& A, std::optional<Viewport> vp = std::nullopt);
std::string svg_export(const DrawingFile& df, std::optional<Viewport> vp = std::nullopt);

} // namespace arr

#endif
