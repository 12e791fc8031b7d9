#pragma once

// Published facet-vertex matrices, verbatim. The same text lives under data/
// for use with the command line tool.

#include <string_view>

namespace omdp::fixtures {

// Holt and Klee's proposed orientation of a 5-polytope with 10 facets (d = 5).
inline constexpr std::string_view kHoltKlee = R"(
[-1 -1  0 -1 -1 -1  0  0  0  0  0  0 -1  0  0  1  1 -1 -1  1  1  0  0  0  0  0  0 -1 -1  0  1 -1 -1  0  0  0  0  0  0 -1  0  0]
[-1  0  1  0  0  0  1  1  1  0  0  0  0 -1  0  1  1  0  0  0  0  1  1  1  1  0  0 -1  0 -1  0  0  0 -1  1  1  0  0  0  0 -1  0]
[-1 -1 -1  0  0  0 -1 -1 -1  1  1  1  0  0  0 -1  0  1  0  0  0  0  1  0  0  0  0  1 -1  1  0  0  0  1 -1 -1 -1  1  1  0  0  0]
[-1 -1 -1  1 -1 -1  0  0  0 -1 -1 -1  0  0  0  0  1  0  1  0  0  1  0  0  0  0  0  1  1 -1 -1  1  1  0  0  0  1 -1 -1  0  0  0]
[ 0  0  1  1  0  0 -1  0  0  1  0  0  1  0  1  0  0  0 -1  1  0 -1  0  1  0 -1 -1  0  0  1 -1  0  0 -1  0  0 -1  0  0 -1  0  1]
[ 0  1  0  0 -1  0  0  1  0  0 -1  0  0  1  1  0  0 -1  0  0 -1  0 -1  0 -1 -1 -1  0  1  0  0 -1  0  0 -1  0  0 -1  0  0  1  1]
[ 0  0  0  0  1 -1  0 -1  1  0  1 -1 -1 -1 -1  0  0  0  0 -1 -1  0  0  0  0 -1  0  0  0  0  0  1  1  0  1  1  0  1  1  1  1  1]
[ 0  0  0 -1  0  1  1  0 -1 -1  0  1 -1  1 -1  0  0  0  0  0  0  0  0 -1 -1  0  1  0  0  0  1  0  1  1  0  1  1  0  1  1  1  1]
[-1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0]
[ 0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1])";

// A (4,9) program with shortest path [1,2,3,4] -> [6,7,8,9] of length 6 whose source is adjacent to [1,2,3,4] (d = 4).
inline constexpr std::string_view kDim4Facets9 = R"(
[-1 -1 -1 -1  1 -1 -1  1 -1 -1  0  0  0  0  0  0  0  0  0  0  0]
[-1 -1 -1 -1  0  0  0  0  0  0 -1 -1  1  1 -1 -1 -1 -1  0  0  0]
[ 1 -1  0  0  1  1 -1  0  0  0  1  1 -1 -1  0  0  0  0 -1  0  0]
[ 1  0  1  0 -1  0  0 -1  0  0 -1  0  0  0  0  0  0  0  1  0  0]
[ 0  0  0  0  1  1  0  1  1  0  0  1  1  0  1  1  0  0  1 -1  0]
[ 0  0 -1  1  0  0  0 -1 -1  1  1 -1  0  0 -1  0  1  0 -1  1  1]
[ 0  0  0  0  0  1  1  0  1  1  0  0  1  1  0  1  0 -1  0  1  1]
[ 0  0  0  0  0  0  0  0  0  0  0  0  0  0 -1  1  1  1  0  1  1]
[ 0 -1  0 -1  0  0 -1  0  0 -1  0  0  0 -1  0  0 -1 -1  0  0  1])";

// A (5,10) program with sink [6..10], shortest path [1..5] -> [6..10] of length 6 and outmap of [1..5] of size 4 (d = 5).
inline constexpr std::string_view kDim5Facets10Outmap4 = R"(
[-1 -1 -1 -1  1 -1  1 -1 -1  1 -1  1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0]
[ 1  1  1  1 -1  1 -1 -1  1 -1  1 -1  0  0  0  0  0  0  0  0  0  0 -1  1  1 -1 -1 -1  1  1  0  0  0  0  0  0  0  0  0  0  0  0]
[-1 -1 -1 -1  1 -1  0  0  0  0  0  0 -1  1 -1 -1  0  0  0  0  0  0 -1 -1  1  1  1  1  0  0 -1 -1  1  1  1 -1 -1  0  0  0  0  0]
[-1 -1  0  0  0  0  1  1  0  0  0  0  1  0  0  0  1  0  0  0  0  0  1  1 -1  1  0  0 -1 -1  1  1 -1 -1 -1  0  0  1 -1  0  0  0]
[-1  0 -1  0  0  0 -1  0 -1 -1  1  0 -1  1  0  0  1  1  1  1  0  0 -1  0  0  0 -1  1 -1  0 -1 -1  1  1  0 -1  0 -1 -1 -1 -1  0]
[ 0  0  0  0  0  0  0  0  1 -1  0 -1  0  0  0  0  0 -1 -1 -1  1  1  1 -1  0  0  1  0 -1 -1 -1  0  0  0  0  0  0  1  0  1  1  1]
[ 0  0  0  1 -1  0  0  0 -1  0  1  1  0  0 -1 -1  0  1  0  0 -1 -1  0  1 -1  0 -1  1  0  1  1 -1  0  0 -1  0  1 -1 -1 -1  0  1]
[ 0  0  1 -1  0  0  0  0  0  0 -1  0  0 -1 -1  0  0 -1 -1  0 -1  0  0  0  0  0  0 -1  0  0  0  1 -1  0 -1  1  1  0 -1 -1  1  1]
[ 0  0  0  0  1  1  1  1  0  1  0  1  0  0  0  1  1  0  0  1  0  1  0  0  1  1  0  0  1  1  0  0  1  1  1  1  1  1  1  1  1  1]
[ 0  1  0  0  0  1  0  1  0  0  0  0 -1 -1 -1  1  1  0 -1  1 -1  1  0  0  0  1  0  0  0  0  0  0  0  1  0  1  1  0  0  0  1  1])";

// A (5,10) program with sink [6..10], shortest path [1..5] -> [6..10] of length 6 and source adjacent to [1..5] (d = 5).
inline constexpr std::string_view kDim5Facets10SourceNeighbor = R"(
[-1 -1 -1 -1 -1 -1 -1 -1 -1 -1  1  1  1 -1 -1 -1  1  1  1  1  1  1 -1 -1  0  0  0  0  0  0  0  0  0  0  0  0  0  0]
[ 1 -1  1 -1 -1  1 -1 -1  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0 -1 -1 -1  0  0  0  0  0  0  0  0  0  0  0]
[-1 -1 -1 -1  0  0  0  0 -1 -1  1  1  1 -1 -1 -1  0  0  0  0  0  0  0  0  1  1  0 -1 -1 -1  1 -1 -1 -1  0  0  0  0]
[ 1  1  0  0  1 -1  0  0 -1  1 -1 -1 -1  0  0  0  1  1 -1  0  0  0  0  0  1  0  1  1  1  1 -1  0  0  0 -1 -1  0  0]
[-1  0 -1  0  1  0  1  1 -1  0  0  0  0  0  0  0 -1 -1 -1 -1 -1 -1  0  0  1  1  1 -1 -1  0  0 -1  0  0  1 -1 -1  0]
[ 0  1  0  1  0 -1  1 -1  0 -1  0  0  0 -1  0  0  0  0  0 -1 -1  1  1  1  1  1  1 -1  0 -1  0 -1 -1  0 -1  0  1  1]
[ 0  0  0  0  0  0  0  0  0  0 -1  1  0  0 -1  0  1  1  0  1  1  0 -1  0  0  0  0  1  1  1 -1  1  1  1  1 -1 -1  1]
[ 0  0 -1 -1  0  0 -1  0 -1  0  0  0  1 -1  0  1  0  0 -1  0  0 -1  0  1  0 -1  0  0  1  0 -1 -1 -1  1  0 -1 -1  1]
[ 0  0  0  0  0  0  0  0  0  0  1  0  1  0  1  1  1  0  1 -1  0  1  1  1  0  0  0  0  0  0  1  0  0  1  0  1  1  1]
[ 0  0  0  0  1  1  0  1  0  1  0 -1  0  1  1  1  0 -1  0  0  1  0  1  1  0  0 -1  0  0  1  0  0  1  1  1  0  0  1])";

}  // namespace omdp::fixtures
