#include "schur6/algebra_element.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace schur6 {

AlgebraElement::AlgebraElement(int degree) : degree_(degree) {
  const auto& G = group_of_degree(degree);
  coeffs_.assign(G.order(), 0);
}

AlgebraElement AlgebraElement::indicator(int degree, const ElementSet& support) {
  AlgebraElement e(degree);
  for (ElemRank g : support) {
    check(e.coeffs_[g] == 0, "indicator: repeated element in support");
    e.coeffs_[g] = 1;
  }
  return e;
}

AlgebraElement AlgebraElement::unit(int degree, ElemRank g, i64 coeff) {
  AlgebraElement e(degree);
  e.coeffs_[g] = coeff;
  return e;
}

AlgebraElement AlgebraElement::class_sum(int degree, const CycleType& t) {
  const auto& G = group_of_degree(degree);
  return indicator(degree, G.class_members(G.class_id_of_type(t)));
}

AlgebraElement AlgebraElement::parse(int degree, std::string_view text) {
  const auto& G = group_of_degree(degree);
  AlgebraElement e(degree);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw std::invalid_argument("AlgebraElement::parse: empty input");
  if (text.substr(i) == "0") return e;
  bool first = true;
  while (i < text.size()) {
    if (!first) {
      if (text[i] != '+')
        throw std::invalid_argument("AlgebraElement::parse: expected '+' between terms");
      ++i;
      skip_ws();
    }
    first = false;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      negative = (text[i] == '-');
      ++i;
      skip_ws();
    }
    // Coefficient and '*' are optional: "(1,2)" and "-(1,2)" are terms too.
    i64 c = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      c = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        c = checked_add(checked_mul(c, 10), text[i] - '0');
        ++i;
      }
      skip_ws();
      if (i >= text.size() || text[i] != '*')
        throw std::invalid_argument("AlgebraElement::parse: expected '*' after coefficient");
      ++i;
      skip_ws();
    }
    if (negative) c = -c;
    if (i >= text.size() || text[i] != '(')
      throw std::invalid_argument("AlgebraElement::parse: expected '(' starting cycles");
    // Consume consecutive parenthesised cycles.
    const std::size_t start = i;
    int depth = 0;
    while (i < text.size()) {
      if (text[i] == '(') ++depth;
      else if (text[i] == ')') {
        --depth;
        if (depth < 0) throw std::invalid_argument("AlgebraElement::parse: unbalanced ')'");
      }
      ++i;
      if (depth == 0) {
        const std::size_t probe = [&] {
          std::size_t j = i;
          while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
          return j;
        }();
        if (probe >= text.size() || text[probe] != '(') break;
        i = probe;
      }
    }
    if (depth != 0) throw std::invalid_argument("AlgebraElement::parse: unbalanced '('");
    const std::string_view cycles = text.substr(start, i - start);
    const ElemRank g = G.rank_of(cycles == "()" ? Perm(degree) : Perm::parse(degree, cycles));
    e.coeffs_[g] = checked_add(e.coeffs_[g], c);
    skip_ws();
  }
  return e;
}

std::string AlgebraElement::format() const {
  const auto& G = group_of_degree(degree_);
  std::ostringstream os;
  bool first = true;
  for (int g = 0; g < order(); ++g) {
    if (coeffs_[g] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[g] << "*" << G.element(static_cast<ElemRank>(g)).format();
  }
  if (first) os << "0";
  return os.str();
}

bool AlgebraElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](i64 c) { return c == 0; });
}

bool AlgebraElement::is_nonneg() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](i64 c) { return c >= 0; });
}

ElementSet AlgebraElement::support() const {
  ElementSet out;
  for (int g = 0; g < order(); ++g)
    if (coeffs_[g] != 0) out.push_back(static_cast<ElemRank>(g));
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check(degree_ == o.degree_, "AlgebraElement: degree mismatch");
  for (int g = 0; g < order(); ++g) coeffs_[g] = checked_add(coeffs_[g], o.coeffs_[g]);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check(degree_ == o.degree_, "AlgebraElement: degree mismatch");
  for (int g = 0; g < order(); ++g) coeffs_[g] = checked_sub(coeffs_[g], o.coeffs_[g]);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(i64 scalar) {
  for (int g = 0; g < order(); ++g) coeffs_[g] = checked_mul(coeffs_[g], scalar);
  return *this;
}

AlgebraElement AlgebraElement::antipode() const {
  const auto& G = group_of_degree(degree_);
  AlgebraElement out(degree_);
  for (int g = 0; g < order(); ++g) out.coeffs_[G.inv(static_cast<ElemRank>(g))] = coeffs_[g];
  return out;
}

AlgebraElement AlgebraElement::restrict_to_class(const CycleType& t) const {
  const auto& G = group_of_degree(degree_);
  return restrict_to_set(G.class_members(G.class_id_of_type(t)));
}

AlgebraElement AlgebraElement::restrict_to_set(const ElementSet& s) const {
  AlgebraElement out(degree_);
  for (ElemRank g : s) out.coeffs_[g] = coeffs_[g];
  return out;
}

bool AlgebraElement::constant_on(const ElementSet& s) const {
  if (s.empty()) return true;
  const i64 v = coeffs_[s.front()];
  return std::all_of(s.begin(), s.end(), [&](ElemRank g) { return coeffs_[g] == v; });
}

std::map<i64, ElementSet> AlgebraElement::fibers() const {
  std::map<i64, ElementSet> out;
  for (int g = 0; g < order(); ++g)
    if (coeffs_[g] != 0) out[coeffs_[g]].push_back(static_cast<ElemRank>(g));
  return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  check(a.degree() == b.degree(), "multiply: degree mismatch");
  const auto& G = group_of_degree(a.degree());
  AlgebraElement out(a.degree());
  const ElementSet sa = a.support();
  const ElementSet sb = b.support();
  for (ElemRank x : sa) {
    const i64 ax = a.at(x);
    for (ElemRank y : sb) {
      const ElemRank g = G.mult(x, y);
      out.set(g, checked_add(out.at(g), checked_mul(ax, b.at(y))));
    }
  }
  return out;
}

bool commute(const AlgebraElement& a, const AlgebraElement& b) {
  return multiply(a, b) == multiply(b, a);
}

std::vector<int> convolve_sets(const Group& G, const ElementSet& A, const ElementSet& B) {
  std::vector<int> out(G.order(), 0);
  for (ElemRank x : A)
    for (ElemRank y : B) ++out[G.mult(x, y)];
  return out;
}

bool sets_commute(const Group& G, const ElementSet& A, const ElementSet& B) {
  return convolve_sets(G, A, B) == convolve_sets(G, B, A);
}

}  // namespace schur6
