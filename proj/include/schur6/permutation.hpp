#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace schur6 {

// Partition of the degree, parts sorted descending, e.g. {3,2,1} for a
// permutation with one 3-cycle, one 2-cycle, one fixed point.
using CycleType = std::vector<int>;

inline constexpr std::uint32_t kFactorial[8] = {1, 1, 2, 6, 24, 120, 720, 5040};

// A permutation of {1..degree}, degree <= 7, stored as a 0-based image table.
// Value type: fits in 8 bytes, cheap to copy and compare.
class Perm {
 public:
  static constexpr int kMaxDegree = 7;

  explicit Perm(int degree);  // identity

  static Perm from_images(int degree, const std::vector<int>& zero_based_images);

  // Parses disjoint cycle notation with 1-based points: "(1,2)(3,4)", "()",
  // whitespace-insensitive. Throws std::invalid_argument on malformed input,
  // out-of-range points, or repeated points.
  static Perm parse(int degree, std::string_view text);

  int degree() const { return degree_; }
  int apply(int x) const { return images_[x]; }  // 0-based point

  bool is_identity() const;
  int parity() const;  // +1 even, -1 odd
  CycleType cycle_type() const;

  // Disjoint cycles, 1-based, each cycle rotated to start at its minimum,
  // cycles sorted by minimum; fixed points omitted.
  std::vector<std::vector<int>> cycles() const;

  // Canonical cycle notation; identity prints as "()".
  std::string format() const;

  // Lexicographic rank of the image table among all degree! permutations.
  std::uint32_t rank() const;
  static Perm unrank(int degree, std::uint32_t rank);

  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) = default;

 private:
  std::int8_t degree_;
  std::array<std::int8_t, kMaxDegree> images_;
};

// compose(p, q) applies q first, then p: compose(p,q)(x) = p(q(x)).
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);

// Conjugate of g by h: h g h^-1.
Perm conjugate(const Perm& g, const Perm& h);

// All degree! permutations in rank order.
std::vector<Perm> all_elements(int degree);

// Subgroup generated by gens (breadth-first closure), sorted by rank.
// Degree capped at kMaxDegree; gens must share the given degree.
std::vector<Perm> generate_subgroup(int degree, const std::vector<Perm>& gens);

// Splits "(1,4)(3,5),(1,4,6,2,5,3)" into per-permutation cycle strings
// (commas at parenthesis depth 0 separate elements).
std::vector<std::string> split_perm_list(std::string_view text);

std::string format_cycle_type(const CycleType& t);  // e.g. "(3,2,1)"

}  // namespace schur6
