#ifndef ARR_ARRANGEMENT_HPP
#define ARR_ARRANGEMENT_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "arr/geometry.hpp"

namespace arr {

struct ParallelPair : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SizeLimitExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InternalInvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Finite sequence of pairwise non-parallel lines. The vertex set V(A) (all
// pairwise intersections) is computed eagerly; parallel input pairs are
// rejected since they contribute no vertex.
class Arrangement {
public:
    explicit Arrangement(std::vector<GeneralLine> lines);

    std::size_t size() const { return lines_.size(); }
    const std::vector<GeneralLine>& lines() const { return lines_; }
    const GeneralLine& line(std::size_t i) const { return lines_[i]; }

    // (i, j) with i < j -> intersection point
    const std::map<std::pair<std::size_t, std::size_t>, Point>& vertices() const {
        return vertices_;
    }
    const Point& vertex(std::size_t i, std::size_t j) const {
        return vertices_.at(i < j ? std::make_pair(i, j) : std::make_pair(j, i));
    }

    // distinct vertex points, lexicographically sorted
    std::vector<Point> distinct_vertices() const;
    std::vector<Point> hull() const { return convex_hull(distinct_vertices()); }

    Arrangement subset(const std::vector<std::size_t>& indices) const;
    Arrangement translated(const Rat& dx, const Rat& dy) const;

private:
    std::vector<GeneralLine> lines_;
    std::map<std::pair<std::size_t, std::size_t>, Point> vertices_;
};

struct MuResult {
    std::size_t value = 0;
    std::vector<std::size_t> witness; // line indices, |witness| == value
};

enum class MonotoneDirection { Increasing, NonDecreasing, Decreasing, NonIncreasing };

// Longest subsequence of the requested monotonicity; patience-style
// O(n log n); witness indices strictly increasing; ties broken
// deterministically.
std::pair<std::size_t, std::vector<std::size_t>>
monotone_subsequence(const std::vector<Rat>& seq, MonotoneDirection dir);

// Exact capacity of a single halfplane via the monotone-subsequence
// reduction: in the frame where the boundary is the reference axis, a subset
// has all pairwise vertices inside iff its boundary-crossing parameters are
// monotone in frame-slope order (strict for open, weak for closed).
MuResult mu_halfplane(const Arrangement& A, const Halfplane& h);

// Exact capacity of a finite union of halfplanes by subset enumeration.
// Oracle for mu_halfplane; |A| <= limit.
MuResult mu_region_bruteforce(const Arrangement& A, const std::vector<Halfplane>& region,
                              std::size_t limit = 14);

} // namespace arr

#endif
