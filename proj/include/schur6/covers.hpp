#pragma once

#include <array>
#include <vector>

#include "schur6/group.hpp"

namespace schur6 {

// Combinatorics of triangle and edge-pair covers of lambda*K6, the bridge
// between subsets of the 3-cycle / double-transposition classes and small
// multigraph covers of the complete graph on 6 points.

using Triangle = std::array<int, 3>;  // 1-based points, strictly increasing

// All 20 triangles of K6 in lexicographic order.
const std::vector<Triangle>& all_triangles();

// Index of edge {i,j} (1-based, i != j) in the lexicographic list of the
// 15 edges of K6.
int edge_id(int i, int j);

// All covers of lambda*K6 by distinct triangles: subsets of all_triangles()
// covering every edge exactly lambda times, as sorted id lists. A cover by
// r triangles forces 3r = 15*lambda, so r = 5*lambda.
std::vector<std::vector<int>> triangle_covers(int lambda);

// The 3-cycle elements supported on these triangles, both orientations.
ElementSet triangle_ids_to_elements(const std::vector<int>& triangle_ids);

// Ten triangles forming a 2-cover of K6 whose face complex is the
// hemi-icosahedron; its triangle set is a single orbit of the census above.
const std::vector<Triangle>& hemi_icosahedron();

// Orientation assignments on the hemi-icosahedron faces. Entry +1 gives the
// 3-cycle in the listed point order, -1 its inverse.
using Orientation = std::array<int, 10>;

ElemRank oriented_triangle_element(const Triangle& t, int eps);
ElementSet oriented_hemi_set(const Orientation& eps);

// Number of edges whose two incident faces induce opposite directions on it.
int opposite_edge_count(const Orientation& eps);

struct OrientationRecord {
  Orientation eps;
  int f_minus;         // faces oriented against the listed order
  int opposite_edges;  // see opposite_edge_count
};

// All 2^10 orientation assignments with their invariants.
std::vector<OrientationRecord> orientation_census();

// 2-factors of the disjointness graph on the 15 edges of K6 (vertices are
// edges of K6, adjacent when disjoint; each vertex gets degree exactly 2).
// A 2-factor is returned as the 15-subset of the (2,2,1,1) class formed by
// its chosen vertex pairs.
std::vector<ElementSet> edge_pair_two_factors();

// Cycle lengths of a 2-factor, sorted ascending.
std::vector<int> two_factor_cycle_lengths(const ElementSet& factor);

// The 2-factors all of whose cycles are triangles; these are exactly the
// partitions of the K6 edge set into five perfect matchings.
std::vector<ElementSet> all_triangle_two_factors();

// Deduplicate a family of element sets up to S6 conjugacy; returns the
// canonical forms, sorted.
std::vector<ElementSet> conjugacy_class_reps(const std::vector<ElementSet>& sets);

}  // namespace schur6
