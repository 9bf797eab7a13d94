#include "schur6/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "schur6/checked.hpp"

namespace schur6 {

namespace {

void require_degree(int degree) {
  if (degree < 1 || degree > Perm::kMaxDegree)
    throw std::invalid_argument("Perm: degree must be in [1," +
                                std::to_string(Perm::kMaxDegree) + "], got " +
                                std::to_string(degree));
}

}  // namespace

Perm::Perm(int degree) : degree_(static_cast<std::int8_t>(degree)) {
  require_degree(degree);
  images_.fill(0);
  for (int i = 0; i < degree; ++i) images_[i] = static_cast<std::int8_t>(i);
}

Perm Perm::from_images(int degree, const std::vector<int>& zero_based_images) {
  require_degree(degree);
  if (static_cast<int>(zero_based_images.size()) != degree)
    throw std::invalid_argument("Perm::from_images: image table size != degree");
  std::array<bool, kMaxDegree> seen{};
  Perm p(degree);
  for (int i = 0; i < degree; ++i) {
    const int v = zero_based_images[i];
    if (v < 0 || v >= degree || seen[v])
      throw std::invalid_argument("Perm::from_images: not a bijection on [0,degree)");
    seen[v] = true;
    p.images_[i] = static_cast<std::int8_t>(v);
  }
  return p;
}

Perm Perm::parse(int degree, std::string_view text) {
  require_degree(degree);
  Perm p(degree);
  std::array<bool, kMaxDegree> used{};
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool any_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("Perm::parse: expected '(' at position " + std::to_string(i));
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!cycle.empty()) {
        if (text[i] != ',')
          throw std::invalid_argument("Perm::parse: expected ',' inside cycle");
        ++i;
        skip_ws();
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("Perm::parse: expected point label");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree)
        throw std::invalid_argument("Perm::parse: point " + std::to_string(v) +
                                    " out of range 1.." + std::to_string(degree));
      if (used[v - 1])
        throw std::invalid_argument("Perm::parse: point " + std::to_string(v) + " repeated");
      used[v - 1] = true;
      cycle.push_back(v - 1);
      skip_ws();
    }
    if (i >= text.size())
      throw std::invalid_argument("Perm::parse: unterminated cycle");
    ++i;  // ')'
    if (cycle.size() == 1)
      throw std::invalid_argument("Perm::parse: singleton cycle is not allowed");
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p.images_[cycle[k]] = static_cast<std::int8_t>(cycle[(k + 1) % cycle.size()]);
    any_cycle = true;
    skip_ws();
  }
  if (!any_cycle)
    throw std::invalid_argument("Perm::parse: empty input (identity is \"()\")");
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree_; ++i)
    if (images_[i] != i) return false;
  return true;
}

int Perm::parity() const {
  std::array<bool, kMaxDegree> seen{};
  int transpositions = 0;
  for (int i = 0; i < degree_; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return (transpositions % 2 == 0) ? 1 : -1;
}

CycleType Perm::cycle_type() const {
  std::array<bool, kMaxDegree> seen{};
  CycleType type;
  for (int i = 0; i < degree_; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::array<bool, kMaxDegree> seen{};
  std::vector<std::vector<int>> out;
  for (int i = 0; i < degree_; ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<int> cycle;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(j + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;  // outer order is by minimum because i scans upward
}

std::string Perm::format() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) os << ',';
      os << c[k];
    }
    os << ')';
  }
  return os.str();
}

std::uint32_t Perm::rank() const {
  // Lehmer code over the image table.
  std::uint32_t r = 0;
  for (int i = 0; i < degree_; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < degree_; ++j)
      if (images_[j] < images_[i]) ++smaller;
    r += static_cast<std::uint32_t>(smaller) * kFactorial[degree_ - 1 - i];
  }
  return r;
}

Perm Perm::unrank(int degree, std::uint32_t rank) {
  require_degree(degree);
  if (rank >= kFactorial[degree])
    throw std::invalid_argument("Perm::unrank: rank out of range");
  std::vector<int> pool(degree);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) {
    const std::uint32_t f = kFactorial[degree - 1 - i];
    const std::uint32_t idx = rank / f;
    rank %= f;
    images[i] = pool[idx];
    pool.erase(pool.begin() + idx);
  }
  return from_images(degree, images);
}

Perm compose(const Perm& p, const Perm& q) {
  check(p.degree() == q.degree(), "compose: degree mismatch");
  std::vector<int> images(p.degree());
  for (int x = 0; x < p.degree(); ++x) images[x] = p.apply(q.apply(x));
  return Perm::from_images(p.degree(), images);
}

Perm inverse(const Perm& p) {
  std::vector<int> images(p.degree());
  for (int x = 0; x < p.degree(); ++x) images[p.apply(x)] = x;
  return Perm::from_images(p.degree(), images);
}

Perm conjugate(const Perm& g, const Perm& h) {
  return compose(compose(h, g), inverse(h));
}

std::vector<Perm> all_elements(int degree) {
  require_degree(degree);
  std::vector<Perm> out;
  out.reserve(kFactorial[degree]);
  for (std::uint32_t r = 0; r < kFactorial[degree]; ++r) out.push_back(Perm::unrank(degree, r));
  return out;
}

std::vector<Perm> generate_subgroup(int degree, const std::vector<Perm>& gens) {
  require_degree(degree);
  for (const auto& g : gens)
    check(g.degree() == degree, "generate_subgroup: generator degree mismatch");
  std::set<Perm> members;
  std::vector<Perm> frontier;
  const Perm id(degree);
  members.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& m : frontier) {
      for (const auto& g : gens) {
        const Perm x = compose(m, g);
        if (members.insert(x).second) next.push_back(x);
      }
    }
    frontier = std::move(next);
  }
  return {members.begin(), members.end()};
}

std::vector<std::string> split_perm_list(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  out.push_back(current);
  return out;
}

std::string format_cycle_type(const CycleType& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ',';
    os << t[i];
  }
  os << ')';
  return os.str();
}

}  // namespace schur6
