#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schur6/algebra_element.hpp"
#include "schur6/group.hpp"

namespace schur6 {

// Exact 0/1 systems describing candidate principal sets inside one conjugacy
// class. Each variable stands for a block of group elements (an inverse pair
// for symmetric candidates, a single element otherwise) that enters or leaves
// the candidate set together. Constraints are compiled from restriction
// equations of the form (X * F)|_K = t * K-sum or "(X * X * F)|_K is constant"
// by expanding the convolution against the multiplication table.

// One labelled exact linear requirement. Coordinates index the members of the
// target class K; the requirement is
//   sum over chosen variables v of weight[v][c] == target   for every c.
struct LinearTargetCondition {
  std::string name;
  CycleType factor_class;  // the central class-sum factor F
  CycleType target_class;  // the class K the product is restricted to
  int target = 0;          // required common coefficient value
  std::vector<std::vector<int>> weight;  // weight[var][coord]
};

// Scope of a quadratic constancy requirement: one common value across the
// whole target class, or one value on coordinates whose element was chosen
// and another on the rest (the candidate class itself must then be K).
enum class QuadraticScope { kWholeClass, kSplitByMembership };

// A labelled quadratic requirement: (X * X * F)|_K takes a single value per
// scope group. pair_weight is stored triangularly: row i holds the rows for
// j = i..n-1, and entry [i][j-i][c] is the contribution to coordinate c when
// variables i and j are both chosen (both orders of the product included;
// the diagonal j = i covers products within one block).
struct QuadraticCondition {
  std::string name;
  std::optional<CycleType> factor_class;  // extra central factor, if any
  CycleType target_class;
  QuadraticScope scope = QuadraticScope::kWholeClass;
  std::vector<std::vector<std::vector<int>>> pair_weight;
};

// Descriptor for one restriction equation handed to build_system.
struct RestrictionEquation {
  enum class Kind { kLinear, kQuadratic };
  std::string name;
  Kind kind = Kind::kLinear;
  std::optional<CycleType> factor_class;  // required for linear conditions
  CycleType target_class;
  int target = 0;  // linear only; quadratic conditions pin no value
  QuadraticScope scope = QuadraticScope::kWholeClass;
};

struct BoolSystem {
  int degree = 6;
  CycleType candidate_class;
  int candidate_size = 0;  // number of group elements in the candidate set
  bool symmetric = true;
  int var_count = 0;
  std::vector<ElementSet> var_blocks;           // members per variable
  int cardinality = 0;                          // required number of chosen vars
  std::vector<std::pair<int, int>> exclusions;  // x_i * x_j = 0
  std::vector<LinearTargetCondition> linear;
  std::vector<QuadraticCondition> quadratic;
};

// Compiles a candidate system. Symmetric systems put one variable on each
// inverse pair of the class; asymmetric systems put one variable on each
// element with an exclusion between each element and its inverse. Throws
// std::invalid_argument if the size is inconsistent with the block shape.
BoolSystem build_system(const CycleType& candidate_class, int size, bool symmetric,
                        const std::vector<RestrictionEquation>& conditions);

// Candidate sizes in 1..(class size - 1) for which every linear condition of
// the given list admits an integral target value. Mechanises the divisibility
// step that narrows |C| before any search runs.
std::vector<int> admissible_sizes(const CycleType& candidate_class,
                                  const std::vector<RestrictionEquation>& conditions);

// The target value forced on one linear condition by a candidate of the given
// size (per-element row sum times size divided by target-class size), or
// nullopt when that quotient is not integral.
std::optional<int> forced_target(const CycleType& candidate_class, int size,
                                 const RestrictionEquation& eq);

struct Anchor {
  int variable = 0;
  int value = 0;  // fixes x_variable to 0 or 1 before the search
};

struct SolveStats {
  long long nodes = 0;
  long long linear_complete = 0;  // assignments that satisfied every linear constraint
  std::map<std::string, long long> rejected_by;  // constraint label -> rejections
};

struct SolveResult {
  // Each entry has var_count entries of 0/1 and satisfies every constraint.
  // Emitted in lexicographic order of the assignment vector.
  std::vector<std::vector<std::uint8_t>> assignments;
  SolveStats stats;
};

// Exhaustive DFS with exact per-coordinate interval propagation on the linear
// constraints; quadratic constraints filter completed assignments. `jobs`
// splits the search frontier across threads; results are independent of it.
SolveResult solve(const BoolSystem& system, std::optional<Anchor> anchor = std::nullopt,
                  int jobs = 1);

// Chosen blocks of an assignment as one sorted element set.
ElementSet decode(const BoolSystem& system, const std::vector<std::uint8_t>& assignment);

// Conjugacy classes of a list of element sets under the full S_n action.
// Classes are sorted by (size, canonical form); members index the input list.
struct SolutionClass {
  ElementSet representative;  // the first input member of the class
  ElementSet canonical_form;
  std::vector<int> members;
};
std::vector<SolutionClass> classify_solutions(const Group& G,
                                              const std::vector<ElementSet>& sets);

// Re-validates a decoded candidate against every condition of the system at
// the group-algebra level (convolution and restriction, independent of the
// compiled weight tables). Returns nullopt on success, else a message naming
// the first failed condition.
std::optional<std::string> algebra_recheck(const BoolSystem& system,
                                           const ElementSet& candidate);

// ---------------------------------------------------------------------------
// Named case fixtures
// ---------------------------------------------------------------------------

// One registered search with everything a report needs: the compiled system,
// the anchor convention, solutions, their conjugacy classes, and (where the
// case applies a second stage) the survivors of the post conditions.
struct CaseRun {
  std::string id;
  BoolSystem system;
  std::optional<Anchor> anchor;
  SolveResult result;
  std::vector<ElementSet> candidates;  // decoded, aligned with result.assignments
  std::vector<SolutionClass> classes;
  std::vector<std::string> post_condition_names;
  std::vector<int> post_survivors;  // indices into candidates
  std::vector<SolutionClass> post_classes;
  std::string to_json() const;
};

std::vector<std::string> case_fixture_ids();
CaseRun run_case_fixture(const std::string& id, int jobs = 1);

// ---------------------------------------------------------------------------
// Sign system for the three-cycle class
// ---------------------------------------------------------------------------

// An orientation assignment picks one of the two 3-cycles on each of the 20
// triangles of {1..6}: +1 is the increasing rotation (a,b,c) of a < b < c,
// -1 its inverse. The system asks whether the square of such a choice can
// restrict to a multiple of the choice on the chosen side of the class.
using TriangleSigns = std::array<int, 20>;

// Factorisation relations of the positively oriented 3-cycle of each target
// triangle into ordered products from two other triangles. For target sign s
// the required factor signs scale to (first * s, second * s).
struct SignRelation {
  int first_slot = 0;
  int first_sign = 0;
  int second_slot = 0;
  int second_sign = 0;
};

// relations[t] lists the ordered factorisations for target triangle t.
const std::vector<std::vector<SignRelation>>& sign_relations();

// Coefficient of the chosen element of each triangle in the square of the
// chosen indicator, evaluated through the relation table.
std::array<int, 20> sign_profile(const TriangleSigns& eps);

struct SignSystemReport {
  int slot_count = 0;
  int ordered_relations_per_slot = 0;  // uniform count, validated
  int active_relations_per_slot = 0;   // relations that can fire with one
                                       // chosen orientation per triangle
  long long assignments_scanned = 0;
  bool satisfiable = false;              // some assignment makes the profile constant
  long long satisfying_assignments = 0;  // how many assignments do
  int max_equal_slots = 0;               // best number of slots made equal
};

// Scans every assignment with the two disjoint anchor triangles fixed to +1
// and reports whether any makes the profile constant across all 20 slots.
SignSystemReport sign_system_c3();

}  // namespace schur6
