#include "schur6/schur_ring.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "schur6/checked.hpp"

namespace schur6 {

namespace {

// Incremental partition refinement over element ranks. Splitting a block
// keeps its lowest-valued fiber under the old id and appends the rest, so
// ids stay stable for untouched blocks.
class Refiner {
 public:
  explicit Refiner(const Group& G) : G_(G), block_of_(G.order(), 0) {
    std::vector<ElemRank> rest;
    rest.reserve(G.order() - 1);
    for (int g = 0; g < G.order(); ++g) {
      if (static_cast<ElemRank>(g) != G.identity()) rest.push_back(static_cast<ElemRank>(g));
    }
    blocks_.push_back({G.identity()});
    blocks_.push_back(std::move(rest));
    for (int g = 0; g < G.order(); ++g) {
      block_of_[g] = (static_cast<ElemRank>(g) == G.identity()) ? 0 : 1;
    }
  }

  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<ElemRank>& block(int i) const { return blocks_[i]; }
  int block_of(ElemRank g) const { return block_of_[g]; }

  // Splits every block on which v is non-constant. Entries absent from
  // touched (all-zero blocks) are left alone. Returns true if anything split.
  template <typename T>
  bool refine_by(const std::vector<T>& v, const std::vector<ElemRank>& support) {
    std::vector<int> touched;
    for (ElemRank g : support) {
      const int b = block_of_[g];
      if (!std::binary_search(touched.begin(), touched.end(), b)) {
        touched.insert(std::upper_bound(touched.begin(), touched.end(), b), b);
      }
    }
    bool split = false;
    for (int b : touched) {
      std::map<T, std::vector<ElemRank>> fibers;
      for (ElemRank g : blocks_[b]) fibers[v[g]].push_back(g);
      if (fibers.size() < 2) continue;
      split = true;
      auto it = fibers.begin();
      blocks_[b] = std::move(it->second);
      for (++it; it != fibers.end(); ++it) {
        const int fresh = static_cast<int>(blocks_.size());
        for (ElemRank g : it->second) block_of_[g] = fresh;
        blocks_.push_back(std::move(it->second));
      }
    }
    return split;
  }

  // Refine until every block's elementwise inverse is again a block.
  bool inverse_fixpoint() {
    bool any = false;
    std::vector<int> v(G_.order());
    std::vector<ElemRank> all(G_.order());
    for (int g = 0; g < G_.order(); ++g) all[g] = static_cast<ElemRank>(g);
    for (;;) {
      for (int g = 0; g < G_.order(); ++g) v[g] = block_of_[G_.inv(static_cast<ElemRank>(g))];
      if (!refine_by(v, all)) break;
      any = true;
    }
    return any;
  }

  std::vector<ElementSet> take_blocks() {
    std::vector<ElementSet> out;
    out.reserve(blocks_.size());
    for (auto& b : blocks_) {
      std::sort(b.begin(), b.end());
      out.push_back(std::move(b));
    }
    return out;
  }

 private:
  const Group& G_;
  std::vector<int> block_of_;
  std::vector<std::vector<ElemRank>> blocks_;
};

}  // namespace

SRing::SRing(int degree, std::vector<ElementSet> blocks)
    : degree_(degree), blocks_(std::move(blocks)) {
  const Group& G = group_of_degree(degree);
  for (auto& b : blocks_) {
    check(!b.empty(), "SRing: empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  block_of_.assign(G.order(), -1);
  std::size_t covered = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (ElemRank g : blocks_[i]) {
      check(g < G.order() && block_of_[g] == -1, "SRing: blocks do not partition the group");
      block_of_[g] = static_cast<int>(i);
      ++covered;
    }
  }
  check(covered == static_cast<std::size_t>(G.order()), "SRing: blocks do not cover the group");
  check(blocks_.front().size() == 1 && blocks_.front().front() == G.identity(),
        "SRing: identity is not a singleton block");
}

bool SRing::has_principal_set(const ElementSet& s) const {
  if (s.empty()) return false;
  const ElementSet& b = blocks_[block_of_[s.front()]];
  return b == s;
}

bool SRing::refines(const SRing& coarser) const {
  check(degree_ == coarser.degree_, "refines: degree mismatch");
  for (const auto& b : blocks_) {
    const int target = coarser.block_of_[b.front()];
    for (ElemRank g : b) {
      if (coarser.block_of_[g] != target) return false;
    }
  }
  return true;
}

bool SRing::is_commutative() const {
  const Group& G = group_of_degree(degree_);
  const int t = dimension();
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      if (!sets_commute(G, blocks_[i], blocks_[j])) return false;
    }
  }
  return true;
}

SRing SRing::conjugated_by(ElemRank h) const {
  const Group& G = group_of_degree(degree_);
  std::vector<ElementSet> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.push_back(G.conjugate_set(b, h));
  return SRing(degree_, std::move(out));
}

std::vector<int> SRing::block_sizes() const {
  std::vector<int> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.push_back(static_cast<int>(b.size()));
  std::sort(out.begin(), out.end());
  return out;
}

std::string SRing::to_json() const {
  const Group& G = group_of_degree(degree_);
  nlohmann::json j;
  j["degree"] = degree_;
  j["dimension"] = dimension();
  nlohmann::json sets = nlohmann::json::array();
  for (const auto& b : blocks_) {
    nlohmann::json one = nlohmann::json::array();
    for (ElemRank g : b) one.push_back(G.element(g).format());
    sets.push_back(std::move(one));
  }
  j["principal_sets"] = std::move(sets);
  return j.dump(2) + "\n";
}

SRing SRing::from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const int degree = j.at("degree").get<int>();
  const Group& G = group_of_degree(degree);
  std::vector<ElementSet> blocks;
  for (const auto& one : j.at("principal_sets")) {
    ElementSet b;
    for (const auto& s : one) b.push_back(G.rank_of(Perm::parse(degree, s.get<std::string>())));
    std::sort(b.begin(), b.end());
    blocks.push_back(std::move(b));
  }
  SRing ring(degree, std::move(blocks));
  check(ring.dimension() == j.at("dimension").get<int>(), "SRing JSON: dimension field mismatch");
  return ring;
}

std::optional<std::string> verify_sring(const SRing& ring) {
  const Group& G = group_of_degree(ring.degree());
  const int t = ring.dimension();
  for (int i = 0; i < t; ++i) {
    const ElementSet inv = G.inverse_set(ring.block(i));
    if (!ring.has_principal_set(inv)) {
      std::ostringstream os;
      os << "block " << i << " has an inverse set that is not a block";
      return os.str();
    }
  }
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) {
      const std::vector<int> prod = convolve_sets(G, ring.block(i), ring.block(j));
      for (int b = 0; b < t; ++b) {
        const ElementSet& blk = ring.block(b);
        const int want = prod[blk.front()];
        for (ElemRank g : blk) {
          if (prod[g] != want) {
            std::ostringstream os;
            os << "product of blocks " << i << "," << j << " is non-constant on block " << b;
            return os.str();
          }
        }
      }
    }
  }
  return std::nullopt;
}

SRing sring_closure(int degree, const std::vector<AlgebraElement>& seeds) {
  const Group& G = group_of_degree(degree);
  const int N = G.order();
  Refiner R(G);

  std::vector<ElemRank> all(N);
  for (int g = 0; g < N; ++g) all[g] = static_cast<ElemRank>(g);
  for (const AlgebraElement& s : seeds) {
    check(s.degree() == degree, "sring_closure: seed degree mismatch");
    std::vector<i64> v(N);
    for (int g = 0; g < N; ++g) v[g] = s.at(static_cast<ElemRank>(g));
    R.refine_by(v, all);
  }

  // Alternate inverse closure with full product passes until stable. Each
  // pass convolves the pair list snapshotted at pass start; newly created
  // blocks join the pair list on the next pass. The final pass re-checks
  // every pair against an unchanged partition, which certifies stability.
  std::vector<int> prod(N, 0);
  std::vector<ElemRank> support;
  for (;;) {
    bool any = R.inverse_fixpoint();
    const int nb = R.block_count();
    for (int i = 0; i < nb; ++i) {
      for (int j = 0; j < nb; ++j) {
        const auto& A = R.block(i);
        const auto& B = R.block(j);
        support.clear();
        for (ElemRank a : A) {
          for (ElemRank b : B) {
            const ElemRank ab = G.mult(a, b);
            if (prod[ab] == 0) support.push_back(ab);
            ++prod[ab];
          }
        }
        if (R.refine_by(prod, support)) any = true;
        for (ElemRank g : support) prod[g] = 0;
      }
    }
    if (!any) break;
  }
  return SRing(degree, R.take_blocks());
}

SRing sring_closure_with_center(int degree, const std::vector<AlgebraElement>& extra) {
  const Group& G = group_of_degree(degree);
  std::vector<AlgebraElement> seeds;
  for (int t = 0; t < G.class_count(); ++t) {
    seeds.push_back(AlgebraElement::indicator(degree, G.class_members(t)));
  }
  seeds.insert(seeds.end(), extra.begin(), extra.end());
  return sring_closure(degree, seeds);
}

SRing orbit_sring(int degree, const ElementSet& H) {
  const Group& G = group_of_degree(degree);
  check(G.is_subgroup(H), "orbit_sring: generators set is not a subgroup");
  return SRing(degree, G.conjugation_orbits(H));
}

}  // namespace schur6
