#pragma once

#include <string>
#include <vector>

#include "schur6/group.hpp"
#include "schur6/schur_ring.hpp"

namespace schur6 {

// Full verification pipeline for the classification of commutative Schur
// rings over S6 that contain the transposition class sum: construction of
// the eight target rings, the per-class split analysis, the compatibility
// assembly, the four split-transposition cases, and the dimension bound.

// Reference sets transcribed once and validated at load time against their
// defining properties, so transcription errors surface immediately.
struct ClassificationFixtures {
  // Subgroups, as full sorted element sets.
  ElementSet h120;     // order 120, 3-transitive copy of S5, not a stabilizer
  ElementSet h36;      // order 36, used for the 72-element five-cycle union
  ElementSet a6;       // alternating group
  ElementSet s2xs4;    // stabilizer of the partition {1,2} | {3,4,5,6}
  ElementSet s2wrs3;   // stabilizer of the pairing {1,2}|{3,4}|{5,6}
  ElementSet s3wrs2;   // stabilizer of the halving {1,2,3}|{4,5,6}
  ElementSet s5;       // point stabilizer of 6

  // Distinguished candidate principal sets.
  ElementSet one_factorization_five;  // 5 triple transpositions, a 1-factorization of K6
  ElementSet disjoint_pair_cover;     // 15 double transpositions, 2-cover by disjoint edge pairs
  ElementSet four_cycle_lift;         // 30 four-cycles, square-root lift of the pair cover
  ElementSet mixed_four_cycle_lift;   // 30 (4,2)-elements projecting onto the lift
  ElementSet double_three_first;      // 20 (3,3)-elements, first distinguished candidate
  ElementSet double_three_second;     // 20 (3,3)-elements, second distinguished candidate

  // The four proper transposition-class partitions treated in the split
  // analysis, each as a list of disjoint parts covering the class.
  std::vector<std::vector<ElementSet>> c2_partitions;

  // Declared dimensions of the eight rings, in construction order.
  std::vector<int> ring_dimensions;

  // Sum of the irreducible character degrees of S6, the commutative
  // dimension bound.
  int dimension_bound = 0;
};

// Shared validated instance; throws std::runtime_error on any validation
// failure (with the failing property named).
const ClassificationFixtures& classification_fixtures();

// One named verification step: what was checked, whether it held, and the
// measured data backing the verdict.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RingRecord {
  std::string name;
  std::string recipe;
  int dimension = 0;
  bool commutative = false;
  bool c2_principal = false;
  std::vector<int> block_sizes;
};

// The eight rings in declared order. Every ring is validated with the full
// axiom check; a failure throws std::runtime_error.
std::vector<SRing> build_eight();

// The commutative dimension-12 ring generated by the centre and a
// 72-element union of two orbits of the order-36 subgroup on the
// five-cycle class. Chooses the orbit labeling operationally: the union
// must cross the two alternating-group orbits and close to dimension 12.
// Throws std::runtime_error with a census of all cross unions if none works.
SRing construct_s36();

// The other cross union of the same orbits: a commutative dimension-26
// ring in which the transposition class splits.
SRing s36_alternative_union();

struct CaseRecord {
  CycleType cls;
  std::string verdict;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  bool ok() const;
};

// Runs the full split analysis for one of the ten nontrivial classes under
// the hypothesis that the transposition class is a principal set. Throws
// std::invalid_argument for the identity type or an unknown type.
CaseRecord verify_case(const CycleType& cls);

struct TheoremRecord {
  std::vector<Check> checks;
  std::vector<std::string> notes;
  bool ok() const;
};

// Mechanical compatibility assembly: catalogs every possible proper split
// option, labels each with the ring it generates, builds the pairwise
// commutation graph, and certifies that joining options from two different
// rings never yields a commutative ring. Confirms the surviving rings are
// exactly the four with the transposition class principal.
TheoremRecord verify_c2_principal_theorem();

struct SplitCaseRecord {
  std::string id;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  bool ok() const;
};

// For each proper transposition-class partition: confirms the generated
// ring is the named orbit ring, then runs the refinement search over every
// principal set (exact linear commutation system, then closure tests on
// the few candidate subsets) and confirms no new commutative ring appears.
std::vector<SplitCaseRecord> verify_split_cases();

struct CorollaryRecord {
  std::vector<Check> checks;
  int max_dimension = 0;
  int bound = 0;
  bool ok() const;
};

// The dimension bound: no surviving commutative ring reaches the character
// degree sum.
CorollaryRecord verify_corollary_76();

struct ClassificationReport {
  std::vector<RingRecord> rings;
  std::vector<CaseRecord> cases;
  std::vector<SplitCaseRecord> split_cases;
  TheoremRecord theorem;
  CorollaryRecord corollary;
  bool all_ok() const;
  std::string to_json() const;
  std::string summary() const;
};

// End-to-end run. Case verifications are independent; `jobs` bounds the
// worker count, and the output is independent of it.
ClassificationReport run_classification(int jobs = 1);

// Subgroup generated by the given elements (ranks), as a sorted set.
ElementSet generated_subgroup(const Group& G, const ElementSet& gens);

}  // namespace schur6
