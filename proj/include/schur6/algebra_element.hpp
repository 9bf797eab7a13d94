#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "schur6/checked.hpp"
#include "schur6/group.hpp"

namespace schur6 {

// Element of the integral group algebra Z[S_n]: a dense coefficient vector
// indexed by element rank. All arithmetic is exact; 64-bit overflow throws.
class AlgebraElement {
 public:
  explicit AlgebraElement(int degree);

  static AlgebraElement indicator(int degree, const ElementSet& support);
  static AlgebraElement unit(int degree, ElemRank g, i64 coeff = 1);
  static AlgebraElement class_sum(int degree, const CycleType& t);

  // Parses "c1*(cycles) + c2*(cycles) + ...", e.g. "2*(1,2) + -1*(1,2,3)".
  // Whitespace-insensitive between terms; coefficients are signed integers.
  static AlgebraElement parse(int degree, std::string_view text);
  // Canonical text form: terms in rank order, "c*(cycles)" joined by " + ".
  // The zero element prints as "0".
  std::string format() const;

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(coeffs_.size()); }
  i64 at(ElemRank g) const { return coeffs_[g]; }
  void set(ElemRank g, i64 c) { coeffs_[g] = c; }

  bool is_zero() const;
  bool is_nonneg() const;
  ElementSet support() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(i64 scalar);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) = default;

  // Coefficient of g under the map alpha(g) -> alpha(g^-1); for an indicator
  // this is the indicator of the inverse set.
  AlgebraElement antipode() const;

  // Zeroes all coefficients outside the given conjugacy class.
  AlgebraElement restrict_to_class(const CycleType& t) const;
  AlgebraElement restrict_to_set(const ElementSet& s) const;

  // True iff the coefficient is the same on every member of s.
  bool constant_on(const ElementSet& s) const;

  // Coefficient fibers: value -> set of elements with that coefficient
  // (value 0 omitted).
  std::map<i64, ElementSet> fibers() const;

 private:
  int degree_;
  std::vector<i64> coeffs_;
};

// Convolution product: (a*b)(g) = sum over xy=g of a(x)b(y). Exact.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

bool commute(const AlgebraElement& a, const AlgebraElement& b);

// Indicator-set convolution helpers used in hot loops. The result counts,
// for each g, the number of (x,y) in A x B with xy = g.
std::vector<int> convolve_sets(const Group& G, const ElementSet& A, const ElementSet& B);
bool sets_commute(const Group& G, const ElementSet& A, const ElementSet& B);

}  // namespace schur6
