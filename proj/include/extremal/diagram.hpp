#pragma once

// Cartan data, Dynkin classification and root combinatorics of simply laced
// diagrams.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "extremal/error.hpp"
#include "extremal/field.hpp"
#include "extremal/graph.hpp"
#include "extremal/matrix.hpp"

namespace extremal {

inline std::vector<std::vector<int>> cartan_int(const SimpleGraph& g) {
  const int n = static_cast<int>(g.size());
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = i == j ? 2 : (g.adjacent(i, j) ? -1 : 0);
  return a;
}

template <Scalar K>
Matrix<K> cartan_matrix(const SimpleGraph& g, const FieldSpec& f) {
  auto a = cartan_int(g);
  Matrix<K> m(f, g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) m(i, j) = from_int<K>(f, a[i][j]);
  return m;
}

inline int bilinear(const SimpleGraph& g, const WeightVec& a, const WeightVec& b) {
  if (a.size() != g.size() || b.size() != g.size())
    throw Error(ErrorKind::DimensionMismatch, "weight length does not match the graph");
  int s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (a[i] == 0) continue;
    int col = 2 * b[i];
    for (int j : g.neighbours(static_cast<int>(i))) col -= b[j];
    s += a[i] * col;
  }
  return s;
}

/// <alpha_x, w>
inline int pair_simple(const SimpleGraph& g, int x, const WeightVec& w) {
  int s = 2 * w[x];
  for (int y : g.neighbours(x)) s -= w[y];
  return s;
}

class DynkinClass {
 public:
  enum class Tag { FiniteA, FiniteD, FiniteE, AffineA, AffineD, AffineE, Other };

  DynkinClass() = default;
  DynkinClass(Tag tag, int n, std::optional<int> x0 = std::nullopt) : tag_(tag), n_(n), x0_(x0) {}

  Tag tag() const { return tag_; }
  int rank() const { return n_; }
  std::optional<int> distinguished_vertex() const { return x0_; }

  bool is_finite() const { return tag_ == Tag::FiniteA || tag_ == Tag::FiniteD || tag_ == Tag::FiniteE; }
  bool is_affine() const { return tag_ == Tag::AffineA || tag_ == Tag::AffineD || tag_ == Tag::AffineE; }
  bool is_dynkin() const { return is_finite() || is_affine(); }

  std::string name() const {
    switch (tag_) {
      case Tag::FiniteA: return "A" + std::to_string(n_);
      case Tag::FiniteD: return "D" + std::to_string(n_);
      case Tag::FiniteE: return "E" + std::to_string(n_);
      case Tag::AffineA: return "A" + std::to_string(n_) + "~";
      case Tag::AffineD: return "D" + std::to_string(n_) + "~";
      case Tag::AffineE: return "E" + std::to_string(n_) + "~";
      case Tag::Other: return "Other";
    }
    return "Other";
  }

  friend bool operator==(const DynkinClass&, const DynkinClass&) = default;

 private:
  Tag tag_ = Tag::Other;
  int n_ = 0;
  std::optional<int> x0_;
};

inline std::vector<int> delta_vector(const SimpleGraph& g);

namespace detail {

// Length of the arm starting at `next` when leaving `from`, for a vertex of
// degree <= 2 chain; returns -1 if the arm branches again.
inline int arm_length(const SimpleGraph& g, int from, int next) {
  int len = 1;
  while (true) {
    int deg = g.degree(next);
    if (deg == 1) return len;
    if (deg != 2) return -1;
    auto nb = g.neighbours(next);
    int other = nb[0] == from ? nb[1] : nb[0];
    from = next;
    next = other;
    ++len;
  }
}

inline DynkinClass shape_class(const SimpleGraph& g) {
  using T = DynkinClass::Tag;
  const int n = static_cast<int>(g.size());
  const int m = static_cast<int>(g.edges().size());
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  int maxdeg = n ? *std::max_element(deg.begin(), deg.end()) : 0;

  if (m == n) {  // unicyclic; only the bare cycle is Dynkin
    if (n >= 3 && maxdeg == 2) return {T::AffineA, n - 1};
    return {};
  }
  if (m != n - 1) return {};
  if (maxdeg <= 2) return {T::FiniteA, n};

  std::vector<int> branch;
  for (int v = 0; v < n; ++v)
    if (deg[v] >= 3) branch.push_back(v);
  if (maxdeg == 4) {
    if (n == 5) return {T::AffineD, 4};
    return {};
  }
  if (maxdeg > 4) return {};
  if (branch.size() == 1) {
    int c = branch[0];
    std::vector<int> arms;
    for (int nb : g.neighbours(c)) arms.push_back(arm_length(g, c, nb));
    std::sort(arms.begin(), arms.end());
    if (arms[0] < 1) return {};
    int a = arms[0], b = arms[1], k = arms[2];
    if (a == 1 && b == 1) return {T::FiniteD, k + 3};
    if (a == 1 && b == 2 && k >= 2 && k <= 4) return {T::FiniteE, k + 4};
    if (a == 2 && b == 2 && k == 2) return {T::AffineE, 6};
    if (a == 1 && b == 3 && k == 3) return {T::AffineE, 7};
    if (a == 1 && b == 2 && k == 5) return {T::AffineE, 8};
    return {};
  }
  if (branch.size() == 2) {
    for (int c : branch) {
      int leaves = 0;
      for (int nb : g.neighbours(c)) leaves += deg[nb] == 1;
      if (leaves < 2) return {};
    }
    return {T::AffineD, n - 1};
  }
  return {};
}

}  // namespace detail

inline DynkinClass classify(const SimpleGraph& g) {
  DynkinClass c = detail::shape_class(g);
  if (!c.is_affine()) return c;
  auto delta = delta_vector(g);
  for (std::size_t v = 0; v < g.size(); ++v)
    if (delta[v] == 1) return DynkinClass(c.tag(), c.rank(), static_cast<int>(v));
  throw Error(ErrorKind::NotAffineType, "affine diagram without a coefficient-1 vertex");
}

inline std::vector<WeightVec> positive_roots(const SimpleGraph& g) {
  if (!classify(g).is_finite()) throw Error(ErrorKind::NotFiniteType, "positive_roots needs a finite-type diagram");
  const std::size_t n = g.size();
  std::set<WeightVec> seen;
  std::vector<WeightVec> frontier;
  for (std::size_t x = 0; x < n; ++x) {
    seen.insert(g.simple_root(static_cast<int>(x)));
    frontier.push_back(g.simple_root(static_cast<int>(x)));
  }
  while (!frontier.empty()) {
    std::vector<WeightVec> next;
    for (const auto& b : frontier)
      for (std::size_t x = 0; x < n; ++x)
        if (pair_simple(g, static_cast<int>(x), b) < 0) {
          WeightVec c = b + g.simple_root(static_cast<int>(x));
          if (seen.insert(c).second) next.push_back(c);
        }
    frontier = std::move(next);
  }
  std::vector<WeightVec> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const WeightVec& a, const WeightVec& b) {
    return a.height() < b.height();
  });
  return out;
}

/// Primitive positive kernel vector of the Cartan matrix (affine shapes only).
inline std::vector<int> delta_vector(const SimpleGraph& g) {
  auto shape = detail::shape_class(g);
  if (!shape.is_affine()) throw Error(ErrorKind::NotAffineType, "delta needs an affine diagram");
  auto f = FieldSpec::rationals();
  auto ker = kernel_basis(cartan_matrix<Rational>(g, f));
  if (ker.size() != 1) throw Error(ErrorKind::NotAffineType, "Cartan kernel is not one-dimensional");
  mpz_class l = 1;
  for (const auto& q : ker[0]) l = lcm(l, q.value().get_den());
  std::vector<mpz_class> ints;
  mpz_class gd = 0;
  for (const auto& q : ker[0]) {
    mpz_class v = q.value().get_num() * (l / q.value().get_den());
    ints.push_back(v);
    gd = gcd(gd, v);
  }
  std::vector<int> out;
  int sign = ints[0] < 0 ? -1 : 1;
  for (auto& v : ints) out.push_back(sign * static_cast<int>(mpz_class(v / gd).get_si()));
  return out;
}

struct DeltaCoxeter {
  WeightVec delta;
  int coxeter = 0;
};

inline DeltaCoxeter delta_and_coxeter(const SimpleGraph& g) {
  WeightVec d(delta_vector(g));
  return {d, d.height()};
}

struct AffineData {
  int x0 = 0;
  WeightVec delta;
  int coxeter = 0;
  WeightVec theta;                  // lowest root of the finite subsystem
  std::vector<WeightVec> finite_positive;  // Phi^0_+, embedded in Z^Pi
  std::vector<WeightVec> theta_set;        // Theta
};

inline AffineData theta_weights(const SimpleGraph& g) {
  auto cls = classify(g);
  if (!cls.is_affine()) throw Error(ErrorKind::NotAffineType, "theta_weights needs an affine diagram");
  AffineData a;
  a.x0 = *cls.distinguished_vertex();
  auto dc = delta_and_coxeter(g);
  a.delta = dc.delta;
  a.coxeter = dc.coxeter;
  std::vector<int> rest;
  for (int v = 0; v < static_cast<int>(g.size()); ++v)
    if (v != a.x0) rest.push_back(v);
  for (const auto& r : positive_roots(g.induced(rest))) {
    WeightVec full(g.size());
    for (std::size_t i = 0; i < rest.size(); ++i) full[rest[i]] = r[i];
    a.finite_positive.push_back(full);
  }
  a.theta = -a.finite_positive.back();  // sorted by height; highest is unique
  for (const auto& b : a.finite_positive) a.theta_set.push_back(b);
  for (const auto& b : a.finite_positive) a.theta_set.push_back(a.delta - b);
  a.theta_set.push_back(a.delta);
  std::stable_sort(a.theta_set.begin(), a.theta_set.end(),
                   [](const WeightVec& p, const WeightVec& q) { return p.height() < q.height(); });
  return a;
}

/// Word (x_d, ..., x_1) with <alpha_{x_i}, alpha_{x_{i-1}} + ... + alpha_{x_1}> = -1
/// for every i >= 2, or nullopt.
inline std::optional<Word> is_very_real(const SimpleGraph& g, const WeightVec& beta) {
  if (beta.is_zero() || !beta.is_nonnegative()) return std::nullopt;
  const int n = static_cast<int>(g.size());
  std::set<WeightVec> dead;
  Word path;  // innermost letter first
  WeightVec sum(g.size());
  auto dfs = [&](auto&& self) -> bool {
    if (sum == beta) return true;
    if (dead.count(sum)) return false;
    for (int x = 0; x < n; ++x) {
      if (sum[x] >= beta[x]) continue;
      if (!path.empty() && pair_simple(g, x, sum) != -1) continue;
      path.push_back(x);
      sum[x] += 1;
      if (self(self)) return true;
      sum[x] -= 1;
      path.pop_back();
    }
    dead.insert(sum);
    return false;
  };
  if (!dfs(dfs)) return std::nullopt;
  return Word(path.rbegin(), path.rend());
}

struct RankReport {
  int case_number = 0;
  std::size_t edge_rank = 0;
  std::size_t rank_with_delta = 0;
  std::optional<std::vector<Rational>> delta_coefficients;  // over the edges, in edge order
};

inline RankReport character_rank_analysis(const SimpleGraph& g) {
  if (!classify(g).is_affine()) throw Error(ErrorKind::NotAffineType, "rank analysis needs an affine diagram");
  auto f = FieldSpec::rationals();
  std::vector<Vec<Rational>> edges;
  for (auto [x, y] : g.edges()) {
    Vec<Rational> v = zeros<Rational>(f, g.size());
    v[x] = Rational(1);
    v[y] = Rational(1);
    edges.push_back(v);
  }
  Vec<Rational> delta;
  for (int c : delta_vector(g)) delta.push_back(Rational(c));
  RankReport r;
  r.edge_rank = rank(Matrix<Rational>::from_rows(f, g.size(), edges));
  auto with = edges;
  with.push_back(delta);
  r.rank_with_delta = rank(Matrix<Rational>::from_rows(f, g.size(), with));
  r.delta_coefficients = solve_in_span(f, edges, delta);
  if (r.edge_rank < edges.size()) r.case_number = 3;
  else if (r.rank_with_delta == r.edge_rank) r.case_number = 2;
  else r.case_number = 1;
  return r;
}

}  // namespace extremal
