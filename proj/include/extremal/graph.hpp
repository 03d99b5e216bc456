#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "extremal/error.hpp"

namespace extremal {

/// Integer vector indexed by the vertices of a graph: weights of words,
/// roots, delta.
class WeightVec {
 public:
  WeightVec() = default;
  explicit WeightVec(std::size_t n) : c_(n, 0) {}
  explicit WeightVec(std::vector<int> coeffs) : c_(std::move(coeffs)) {}

  static WeightVec simple(std::size_t n, std::size_t x) {
    WeightVec w(n);
    w.c_.at(x) = 1;
    return w;
  }

  std::size_t size() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  const std::vector<int>& coeffs() const { return c_; }

  int height() const { return std::accumulate(c_.begin(), c_.end(), 0); }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
  }
  bool is_nonnegative() const {
    return std::all_of(c_.begin(), c_.end(), [](int v) { return v >= 0; });
  }

  WeightVec& operator+=(const WeightVec& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  WeightVec& operator-=(const WeightVec& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend WeightVec operator+(WeightVec a, const WeightVec& b) { return a += b; }
  friend WeightVec operator-(WeightVec a, const WeightVec& b) { return a -= b; }
  WeightVec operator-() const {
    WeightVec r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend WeightVec operator*(int k, WeightVec w) {
    for (auto& v : w.c_) v *= k;
    return w;
  }

  friend bool operator==(const WeightVec&, const WeightVec&) = default;
  friend auto operator<=>(const WeightVec&, const WeightVec&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
    return s + ")";
  }

 private:
  void check(const WeightVec& o) const {
    if (o.c_.size() != c_.size()) throw Error(ErrorKind::DimensionMismatch, "weight vectors of different length");
  }
  std::vector<int> c_;
};

/// Letters x_d, ..., x_1 of a left-normed monomial [x_d,[...[x_2,x_1]...]],
/// outermost letter first.
using Word = std::vector<int>;

/// Finite connected simple graph. Vertex order is the order of the labels
/// given at construction and drives every deterministic convention.
class SimpleGraph {
 public:
  SimpleGraph(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& edges)
      : labels_(std::move(labels)), adj_(labels_.size(), std::vector<bool>(labels_.size(), false)) {
    if (labels_.empty()) throw Error(ErrorKind::InvalidGraph, "graph has no vertices");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (index_.count(labels_[i])) throw Error(ErrorKind::InvalidGraph, "duplicate vertex '" + labels_[i] + "'");
      index_[labels_[i]] = static_cast<int>(i);
    }
    for (const auto& [a, b] : edges) {
      int i = index_of(a), j = index_of(b);
      if (i == j) throw Error(ErrorKind::InvalidGraph, "loop at '" + a + "'");
      if (adj_[i][j]) throw Error(ErrorKind::InvalidGraph, "duplicate edge '" + a + "-" + b + "'");
      adj_[i][j] = adj_[j][i] = true;
      edges_.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(edges_.begin(), edges_.end());
    if (!connected()) throw Error(ErrorKind::InvalidGraph, "graph is not connected");
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_.at(v); }
  bool adjacent(int a, int b) const { return adj_.at(a).at(b); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw Error(ErrorKind::InvalidGraph, "unknown vertex '" + label + "'");
    return it->second;
  }

  int degree(int v) const {
    return static_cast<int>(std::count(adj_.at(v).begin(), adj_.at(v).end(), true));
  }

  std::vector<int> neighbours(int v) const {
    std::vector<int> out;
    for (std::size_t u = 0; u < size(); ++u)
      if (adj_[v][u]) out.push_back(static_cast<int>(u));
    return out;
  }

  /// Induced subgraph on the given vertices (kept in the given order).
  SimpleGraph induced(const std::vector<int>& vertices) const {
    std::vector<std::string> labels;
    for (int v : vertices) labels.push_back(labels_.at(v));
    std::vector<std::pair<std::string, std::string>> es;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t j = i + 1; j < vertices.size(); ++j)
        if (adj_[vertices[i]][vertices[j]]) es.emplace_back(labels_[vertices[i]], labels_[vertices[j]]);
    return SimpleGraph(std::move(labels), es);
  }

  /// Same graph with vertices listed in the order perm[0], perm[1], ...
  SimpleGraph permuted(const std::vector<int>& perm) const { return induced(perm); }

  WeightVec simple_root(int x) const { return WeightVec::simple(size(), static_cast<std::size_t>(x)); }

  WeightVec weight_of(const Word& w) const {
    WeightVec r(size());
    for (int x : w) r[x] += 1;
    return r;
  }

  std::string word_string(const Word& w) const {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "." : "") + labels_.at(w[i]);
    return s;
  }

  Word parse_word(const std::string& text) const {
    Word w;
    std::size_t start = 0;
    while (true) {
      auto dot = text.find('.', start);
      w.push_back(index_of(text.substr(start, dot == std::string::npos ? std::string::npos : dot - start)));
      if (dot == std::string::npos) break;
      start = dot + 1;
    }
    return w;
  }

 private:
  bool connected() const {
    std::vector<bool> seen(size(), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    std::size_t count = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (std::size_t u = 0; u < size(); ++u)
        if (adj_[v][u] && !seen[u]) {
          seen[u] = true;
          ++count;
          q.push(static_cast<int>(u));
        }
    }
    return count == size();
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::map<std::string, int> index_;
};

namespace detail {

inline SimpleGraph numbered_graph(int first, int last, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::string> labels;
  for (int i = first; i <= last; ++i) labels.push_back(std::to_string(i));
  std::vector<std::pair<std::string, std::string>> es;
  for (auto [a, b] : edges) es.emplace_back(std::to_string(a), std::to_string(b));
  return SimpleGraph(std::move(labels), es);
}

inline std::vector<std::pair<int, int>> finite_edges(char type, int n) {
  std::vector<std::pair<int, int>> es;
  switch (type) {
    case 'A':
      for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) es.emplace_back(i, i + 1);
      es.emplace_back(n - 2, n);
      break;
    case 'E':
      es = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
      for (int i = 6; i < n; ++i) es.emplace_back(i, i + 1);
      break;
    default:
      break;
  }
  return es;
}

}  // namespace detail

/// Named simply laced diagrams with Bourbaki numbering 1..n. A trailing '~'
/// selects the affine extension, whose extra vertex "0" is listed first.
inline SimpleGraph builtin_diagram(const std::string& name) {
  auto bad = [&] { return Error(ErrorKind::ParseError, "unknown diagram '" + name + "'"); };
  if (name.size() < 2) throw bad();
  char type = name[0];
  bool affine = name.back() == '~';
  std::string digits = name.substr(1, name.size() - 1 - (affine ? 1 : 0));
  if (digits.empty() || digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), ::isdigit)) throw bad();
  int n = std::stoi(digits);
  bool ok = (type == 'A' && n >= 1) || (type == 'D' && n >= 4) || (type == 'E' && n >= 6 && n <= 8);
  if (!ok || (affine && type == 'A' && n < 2)) throw bad();
  auto es = detail::finite_edges(type, n);
  if (!affine) return detail::numbered_graph(1, n, es);
  switch (type) {
    case 'A':
      es.emplace_back(0, 1);
      es.emplace_back(n, 0);
      break;
    case 'D':
      es.emplace_back(0, 2);
      break;
    case 'E':
      es.emplace_back(0, n == 6 ? 2 : n == 7 ? 1 : 8);
      break;
    default:
      break;
  }
  return detail::numbered_graph(0, n, es);
}

}  // namespace extremal
