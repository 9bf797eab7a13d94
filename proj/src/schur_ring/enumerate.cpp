#include "schur6/enumerate.hpp"

#include <algorithm>

namespace schur6 {

namespace {

bool constant_on(const std::vector<int>& v, const ElementSet& s) {
  for (ElemRank g : s) {
    if (v[g] != v[s.front()]) return false;
  }
  return true;
}

class Enumerator {
 public:
  explicit Enumerator(int degree) : degree_(degree), G_(group_of_degree(degree)) {}

  std::vector<SRing> run() {
    results_.clear();
    assigned_.clear();
    recurse();
    std::sort(results_.begin(), results_.end(), [](const SRing& a, const SRing& b) {
      if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
      return a.blocks() < b.blocks();
    });
    return results_;
  }

 private:
  // Candidate blocks must survive the axioms that mention only already
  // assigned blocks; the recursive closure prune below does the rest.
  bool close_checks(const ElementSet& S) const {
    const ElementSet Sinv = G_.inverse_set(S);
    if (Sinv != S && !sets_disjoint(Sinv, S)) return false;
    // Sinv will be a block too, so it may not cut across assigned blocks.
    for (const auto& B : assigned_) {
      if (Sinv != B && !sets_disjoint(Sinv, B)) return false;
    }
    std::vector<const ElementSet*> watch = {&S, &Sinv};
    for (const auto& B : assigned_) watch.push_back(&B);
    auto ok = [&](const ElementSet& A, const ElementSet& B) {
      const std::vector<int> prod = convolve_sets(G_, A, B);
      for (const ElementSet* w : watch) {
        if (!constant_on(prod, *w)) return false;
      }
      return true;
    };
    if (!ok(S, S) || !ok(S, Sinv) || !ok(Sinv, S) || !ok(Sinv, Sinv)) return false;
    for (const auto& B : assigned_) {
      if (!ok(B, S) || !ok(S, B)) return false;
    }
    return true;
  }

  void recurse() {
    std::vector<AlgebraElement> seeds;
    seeds.reserve(assigned_.size());
    for (const auto& B : assigned_) seeds.push_back(AlgebraElement::indicator(degree_, B));
    const SRing T0 = sring_closure(degree_, seeds);

    // A completed ring refines T0, so every assigned block is a union of
    // T0 blocks; it is itself one block there or the branch is dead.
    for (const auto& B : assigned_) {
      if (!T0.has_principal_set(B)) return;
    }

    std::vector<bool> taken(G_.order(), false);
    taken[G_.identity()] = true;
    for (const auto& B : assigned_) {
      for (ElemRank g : B) taken[g] = true;
    }
    int g = -1;
    for (int e = 0; e < G_.order(); ++e) {
      if (!taken[e]) {
        g = e;
        break;
      }
    }
    if (g < 0) {
      results_.push_back(T0);
      return;
    }

    // Unassigned blocks of the completed ring stay inside single blocks of
    // T0, so only subsets of g's T0 block can contain g.
    const ElementSet& cell = T0.principal_set_containing(static_cast<ElemRank>(g));
    ElementSet S = {static_cast<ElemRank>(g)};
    grow(cell, S, /*pos=*/1, /*has_pair=*/G_.inv(static_cast<ElemRank>(g)) == g,
         /*missed=*/false);
  }

  // Enumerates blocks S with min element cell[0]; each subset is visited
  // exactly once by choosing the indices it includes in ascending order.
  // has_pair: S contains a full inverse pair. missed: some member's inverse
  // lies in cell, is not in S, and can no longer be added. Both at once is
  // fatal: S can then be neither inverse-closed nor disjoint from its
  // inverse set.
  void grow(const ElementSet& cell, ElementSet& S, std::size_t pos, bool has_pair, bool missed) {
    if (!(has_pair && missed) && close_checks(S)) {
      assigned_.push_back(S);
      recurse();
      assigned_.pop_back();
    }
    bool loop_missed = missed;
    for (std::size_t p = pos; p < cell.size(); ++p) {
      if (has_pair && loop_missed) return;
      const ElemRank e = cell[p];
      const ElemRank einv = G_.inv(e);
      const bool inv_in_S = std::binary_search(S.begin(), S.end(), einv);
      const bool inv_passed_over =
          einv < e && !inv_in_S &&
          std::binary_search(cell.begin(), cell.begin() + static_cast<long>(p), einv);
      S.push_back(e);
      grow(cell, S, p + 1, has_pair || einv == e || inv_in_S, loop_missed || inv_passed_over);
      S.pop_back();
      // From here on e is passed over; a partner left in S is now stranded.
      if (inv_in_S) loop_missed = true;
    }
  }

  int degree_;
  const Group& G_;
  std::vector<ElementSet> assigned_;
  std::vector<SRing> results_;
};

}  // namespace

std::vector<SRing> enumerate_all_srings(int degree) {
  return Enumerator(degree).run();
}

}  // namespace schur6
