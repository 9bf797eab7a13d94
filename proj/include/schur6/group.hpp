#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schur6/permutation.hpp"

namespace schur6 {

// Elements of S_n as ranks into the lexicographic element list; dense set of
// group elements represented as a sorted vector of ranks.
using ElemRank = std::uint16_t;
using ElementSet = std::vector<ElemRank>;

// Dense multiplication context for a full symmetric group S_n, n <= 6.
// Precomputes multiplication, inverse and conjugation tables so that all
// heavy computation reduces to table lookups.
class Group {
 public:
  static constexpr int kMaxTableDegree = 6;

  explicit Group(int degree);

  int degree() const { return degree_; }
  int order() const { return order_; }

  const Perm& element(ElemRank r) const { return elements_[r]; }
  ElemRank rank_of(const Perm& p) const { return static_cast<ElemRank>(p.rank()); }

  ElemRank mult(ElemRank a, ElemRank b) const { return mult_[a * order_ + b]; }
  ElemRank inv(ElemRank a) const { return inv_[a]; }
  // conj(h, g) = h g h^-1
  ElemRank conj(ElemRank h, ElemRank g) const { return conj_[h * order_ + g]; }

  ElemRank identity() const { return identity_; }

  // Conjugacy classes, ordered by (class size, rank of minimal member).
  int class_count() const { return static_cast<int>(class_members_.size()); }
  int class_id_of(ElemRank g) const { return class_id_[g]; }
  const ElementSet& class_members(int class_id) const { return class_members_[class_id]; }
  const CycleType& class_type(int class_id) const { return class_types_[class_id]; }
  // Class whose members have the given cycle type; throws if absent.
  int class_id_of_type(const CycleType& t) const;

  int centralizer_order(ElemRank g) const;

  // --- sets of elements -----------------------------------------------------

  ElementSet set_parse(const std::vector<std::string>& cycle_strings) const;
  ElementSet whole_class(const CycleType& t) const { return class_members(class_id_of_type(t)); }

  bool is_subgroup(const ElementSet& H) const;

  // Orbits of the conjugation action of H on all of S_n. H must be a
  // subgroup. Orbits are sorted internally and ordered by minimal member.
  std::vector<ElementSet> conjugation_orbits(const ElementSet& H) const;

  // Image of a set under conjugation by h, sorted.
  ElementSet conjugate_set(const ElementSet& S, ElemRank h) const;

  // Lexicographically minimal conjugate image: min over all h of
  // conjugate_set(S, h). Two sets are S_n-conjugate iff forms match.
  ElementSet canonical_set_form(const ElementSet& S) const;

  // {h : h S h^-1 = S}, sorted.
  ElementSet set_stabilizer(const ElementSet& S) const;

  ElementSet inverse_set(const ElementSet& S) const;

 private:
  int degree_;
  int order_;
  ElemRank identity_;
  std::vector<Perm> elements_;
  std::vector<ElemRank> mult_;
  std::vector<ElemRank> inv_;
  std::vector<ElemRank> conj_;
  std::vector<std::uint8_t> class_id_;
  std::vector<CycleType> class_types_;
  std::vector<ElementSet> class_members_;
};

// Shared singleton context per degree (construction is idempotent).
const Group& group_of_degree(int degree);

bool is_sorted_set(const ElementSet& s);
ElementSet set_union_of(const ElementSet& a, const ElementSet& b);
ElementSet set_difference_of(const ElementSet& a, const ElementSet& b);
bool sets_disjoint(const ElementSet& a, const ElementSet& b);

}  // namespace schur6
