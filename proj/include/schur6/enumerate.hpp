#pragma once

#include <vector>

#include "schur6/schur_ring.hpp"

namespace schur6 {

// Every Schur ring over S_degree, found by depth-first assembly of the
// partition, always extending the block that contains the smallest
// unassigned element. Exponential in the group order; intended for the
// small-degree oracles (degree <= 4).
std::vector<SRing> enumerate_all_srings(int degree);

}  // namespace schur6
