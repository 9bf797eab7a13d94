#include "schur6/group.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "schur6/checked.hpp"

namespace schur6 {

Group::Group(int degree) : degree_(degree) {
  check(degree >= 1 && degree <= kMaxTableDegree, "Group: degree must be in [1,6]");
  elements_ = all_elements(degree);
  order_ = static_cast<int>(elements_.size());
  identity_ = rank_of(Perm(degree));

  mult_.resize(static_cast<std::size_t>(order_) * order_);
  inv_.resize(order_);
  conj_.resize(static_cast<std::size_t>(order_) * order_);
  for (int a = 0; a < order_; ++a) {
    inv_[a] = rank_of(inverse(elements_[a]));
    for (int b = 0; b < order_; ++b)
      mult_[static_cast<std::size_t>(a) * order_ + b] =
          rank_of(compose(elements_[a], elements_[b]));
  }
  for (int h = 0; h < order_; ++h)
    for (int g = 0; g < order_; ++g) {
      const ElemRank hg = mult_[static_cast<std::size_t>(h) * order_ + g];
      conj_[static_cast<std::size_t>(h) * order_ + g] =
          mult_[static_cast<std::size_t>(hg) * order_ + inv_[h]];
    }

  // Conjugacy classes grouped by cycle type, ordered by (size, min member).
  std::map<CycleType, ElementSet> by_type;
  for (int g = 0; g < order_; ++g) by_type[elements_[g].cycle_type()].push_back(g);
  std::vector<std::pair<CycleType, ElementSet>> classes(by_type.begin(), by_type.end());
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    return a.second.front() < b.second.front();
  });
  class_id_.resize(order_);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    class_types_.push_back(classes[c].first);
    class_members_.push_back(classes[c].second);
    for (ElemRank g : classes[c].second) class_id_[g] = static_cast<std::uint8_t>(c);
  }
}

int Group::class_id_of_type(const CycleType& t) const {
  for (int c = 0; c < class_count(); ++c)
    if (class_types_[c] == t) return c;
  throw std::invalid_argument("Group::class_id_of_type: no class with cycle type " +
                              format_cycle_type(t));
}

int Group::centralizer_order(ElemRank g) const {
  int n = 0;
  for (int h = 0; h < order_; ++h)
    if (conj(static_cast<ElemRank>(h), g) == g) ++n;
  return n;
}

ElementSet Group::set_parse(const std::vector<std::string>& cycle_strings) const {
  ElementSet out;
  out.reserve(cycle_strings.size());
  for (const auto& s : cycle_strings) out.push_back(rank_of(Perm::parse(degree_, s)));
  std::sort(out.begin(), out.end());
  check(std::adjacent_find(out.begin(), out.end()) == out.end(),
        "Group::set_parse: repeated element");
  return out;
}

bool Group::is_subgroup(const ElementSet& H) const {
  if (H.empty() || !std::binary_search(H.begin(), H.end(), identity_)) return false;
  for (ElemRank a : H)
    for (ElemRank b : H)
      if (!std::binary_search(H.begin(), H.end(), mult(a, b))) return false;
  return true;
}

std::vector<ElementSet> Group::conjugation_orbits(const ElementSet& H) const {
  check(is_subgroup(H), "conjugation_orbits: H is not a subgroup");
  std::vector<bool> seen(order_, false);
  std::vector<ElementSet> orbits;
  for (int g = 0; g < order_; ++g) {
    if (seen[g]) continue;
    ElementSet orbit;
    std::vector<ElemRank> frontier{static_cast<ElemRank>(g)};
    seen[g] = true;
    while (!frontier.empty()) {
      std::vector<ElemRank> next;
      for (ElemRank x : frontier) {
        orbit.push_back(x);
        for (ElemRank h : H) {
          const ElemRank y = conj(h, x);
          if (!seen[y]) {
            seen[y] = true;
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;  // ordered by minimal member because g scans upward
}

ElementSet Group::conjugate_set(const ElementSet& S, ElemRank h) const {
  ElementSet out;
  out.reserve(S.size());
  for (ElemRank g : S) out.push_back(conj(h, g));
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet Group::canonical_set_form(const ElementSet& S) const {
  check(is_sorted_set(S), "canonical_set_form: input set must be sorted");
  ElementSet best = S;
  for (int h = 0; h < order_; ++h) {
    ElementSet img = conjugate_set(S, static_cast<ElemRank>(h));
    if (img < best) best = std::move(img);
  }
  return best;
}

ElementSet Group::set_stabilizer(const ElementSet& S) const {
  check(is_sorted_set(S), "set_stabilizer: input set must be sorted");
  ElementSet out;
  for (int h = 0; h < order_; ++h)
    if (conjugate_set(S, static_cast<ElemRank>(h)) == S) out.push_back(static_cast<ElemRank>(h));
  return out;
}

ElementSet Group::inverse_set(const ElementSet& S) const {
  ElementSet out;
  out.reserve(S.size());
  for (ElemRank g : S) out.push_back(inv(g));
  std::sort(out.begin(), out.end());
  return out;
}

const Group& group_of_degree(int degree) {
  static std::mutex mutex;
  static std::unique_ptr<Group> cache[Group::kMaxTableDegree + 1];
  check(degree >= 1 && degree <= Group::kMaxTableDegree, "group_of_degree: degree out of range");
  std::lock_guard<std::mutex> lock(mutex);
  if (!cache[degree]) cache[degree] = std::make_unique<Group>(degree);
  return *cache[degree];
}

bool is_sorted_set(const ElementSet& s) {
  return std::is_sorted(s.begin(), s.end()) &&
         std::adjacent_find(s.begin(), s.end()) == s.end();
}

ElementSet set_union_of(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet set_difference_of(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool sets_disjoint(const ElementSet& a, const ElementSet& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) ++ia;
    else if (*ib < *ia) ++ib;
    else return false;
  }
  return true;
}

}  // namespace schur6
