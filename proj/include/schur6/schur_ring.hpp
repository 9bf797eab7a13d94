#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schur6/algebra_element.hpp"
#include "schur6/group.hpp"

namespace schur6 {

// A Schur ring over S_n, represented by its partition of the group into
// principal sets. Canonical block order: (size, rank of minimal member).
// Invariants established at construction: blocks partition the group and the
// identity forms a singleton block. Use verify() for the full ring axioms.
class SRing {
 public:
  SRing(int degree, std::vector<ElementSet> blocks);

  int degree() const { return degree_; }
  int dimension() const { return static_cast<int>(blocks_.size()); }
  const std::vector<ElementSet>& blocks() const { return blocks_; }
  const ElementSet& block(int i) const { return blocks_[i]; }

  int block_index_of(ElemRank g) const { return block_of_[g]; }
  const ElementSet& principal_set_containing(ElemRank g) const {
    return blocks_[block_of_[g]];
  }

  bool has_principal_set(const ElementSet& s) const;

  // True iff every block of this ring is contained in a block of coarser.
  bool refines(const SRing& coarser) const;

  bool is_commutative() const;

  SRing conjugated_by(ElemRank h) const;

  std::vector<int> block_sizes() const;  // sorted ascending

  friend bool operator==(const SRing& a, const SRing& b) {
    return a.degree_ == b.degree_ && a.blocks_ == b.blocks_;
  }

  std::string to_json() const;
  static SRing from_json(const std::string& text);

 private:
  int degree_;
  std::vector<ElementSet> blocks_;
  std::vector<int> block_of_;
};

// Full Schur ring axiom check: partition of the group, identity singleton,
// inverse-closed blocks, and every product of two block indicators constant
// on every block. Returns std::nullopt on success, else a failure message.
std::optional<std::string> verify_sring(const SRing& ring);

// The smallest Schur ring whose algebra contains every seed element
// (iterated coefficient-fiber refinement under products and inverses).
SRing sring_closure(int degree, const std::vector<AlgebraElement>& seeds);

// Closure of the class sums (the centre) together with extra seeds; this is
// the ambient computation everywhere a candidate principal set is tested.
SRing sring_closure_with_center(int degree, const std::vector<AlgebraElement>& extra);

// Orbit Schur ring of the conjugation action of subgroup H.
SRing orbit_sring(int degree, const ElementSet& H);

}  // namespace schur6
