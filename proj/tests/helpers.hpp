#ifndef TESTS_HELPERS_HPP
#define TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "arr/arrangement.hpp"
#include "arr/partition.hpp"
#include "arr/triangulation.hpp"

namespace arrtest {

using Rng = std::mt19937_64;

arr::Rat random_rat(Rng& rng, int lo, int hi, int max_den = 8);

// n pairwise non-parallel lines with small rational coefficients
std::vector<arr::GeneralLine> random_lines(Rng& rng, std::size_t n);
arr::Arrangement random_arrangement(Rng& rng, std::size_t n);

// random halfplane, optionally with its boundary through one or two
// arrangement vertices
arr::Halfplane random_halfplane(Rng& rng, const arr::Arrangement& A, int through_vertices);

// minimum over an exhaustive family of closed halfplanes through q of the
// brute-force capacity; independent oracle for depth()
std::size_t oracle_depth(const arr::Arrangement& A, const arr::Point& q);

// longest monotone subsequence by O(n^2) dynamic program
std::size_t oracle_monotone_length(const std::vector<arr::Rat>& seq, arr::MonotoneDirection dir);

arr::EmbeddedTriangulation k4();
arr::EmbeddedTriangulation octahedron();

// random triangulation on n vertices: stacked insertions from K4 plus random
// interior edge flips
arr::EmbeddedTriangulation random_triangulation(Rng& rng, std::size_t n);

// every maximal planar graph on n labeled vertices (3 <= n <= 7), each with
// a planar embedding and an arbitrary face designated outer
std::vector<arr::EmbeddedTriangulation> all_triangulations(std::size_t n);

} // namespace arrtest

#endif
