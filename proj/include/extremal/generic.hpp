#pragma once

// Generic realizations: tuples of extremal elements in a Chevalley algebra
// (or in the matrix model of sl_n) indexed by the vertices of a Dynkin
// diagram, the parameter sets they induce, and isomorphism certificates.

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "extremal/chevalley.hpp"
#include "extremal/lfspace.hpp"
#include "extremal/lie_algebra.hpp"
#include "extremal/sandwich.hpp"

namespace extremal {

template <Scalar K>
struct GeneratorTuple {
  SimpleGraph graph;
  std::shared_ptr<const LieAlgebra<K>> ambient;
  std::vector<Vec<K>> elements;  // indexed by vertex
  std::vector<K> a, b;           // sl2 coordinates per vertex (empty if given explicitly)
  std::vector<K> c;              // extended G_0 column for even cycles; empty otherwise
  std::string model;             // "chevalley", "sl_n", "sl_n-extended", "explicit"
  std::shared_ptr<const SlnModel<K>> sln;  // set for the matrix models
};

/// a^2 E + ab H - b^2 F.
template <Scalar K>
Vec<K> sl2_extremal(const K& a, const K& b, const Sl2Triple<K>& t) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::BothZero, "a and b are both zero");
  Vec<K> v = t.e;
  for (auto& x : v) x *= a * a;
  axpy<K>(v, a * b, std::span<const K>(t.h));
  axpy<K>(v, -(b * b), std::span<const K>(t.f));
  return v;
}

/// Checks the hypotheses shared by every tuple: non-zero, extremal, and
/// commuting along non-edges. Throws PreconditionViolated.
template <Scalar K>
void validate_tuple(const LieAlgebra<K>& alg, const SimpleGraph& g, const std::vector<Vec<K>>& els) {
  if (els.size() != g.size()) throw Error(ErrorKind::DimensionMismatch, "one element per vertex expected");
  for (std::size_t x = 0; x < els.size(); ++x) {
    if (els[x].size() != alg.dimension()) throw Error(ErrorKind::DimensionMismatch, "element length");
    if (is_zero(std::span<const K>(els[x])))
      throw Error(ErrorKind::PreconditionViolated, "generator " + g.label(static_cast<int>(x)) + " is zero");
    if (!is_extremal(alg, els[x]))
      throw Error(ErrorKind::PreconditionViolated, "generator " + g.label(static_cast<int>(x)) + " is not extremal");
  }
  for (std::size_t x = 0; x < els.size(); ++x)
    for (std::size_t y = x + 1; y < els.size(); ++y)
      if (!g.adjacent(static_cast<int>(x), static_cast<int>(y)) &&
          !is_zero(std::span<const K>(alg.bracket(els[x], els[y]))))
        throw Error(ErrorKind::PreconditionViolated,
                    "generators " + g.label(static_cast<int>(x)) + " and " + g.label(static_cast<int>(y)) +
                        " do not commute");
}

template <Scalar K>
GeneratorTuple<K> make_tuple(const SimpleGraph& g, std::shared_ptr<const LieAlgebra<K>> alg,
                             std::vector<Vec<K>> elements) {
  validate_tuple(*alg, g, elements);
  return GeneratorTuple<K>{g, std::move(alg), std::move(elements), {}, {}, {}, "explicit", nullptr};
}

struct GenericityReport {
  std::size_t closure_dimension = 0;
  std::size_t expected_dimension = 0;
  std::vector<std::pair<int, int>> zero_edges;  // edges with kappa(G_x, G_y) = 0
  bool generic() const { return closure_dimension == expected_dimension && zero_edges.empty(); }
};

template <Scalar K>
GenericityReport genericity(const GeneratorTuple<K>& t, std::size_t expected_dimension) {
  GenericityReport r;
  r.expected_dimension = expected_dimension;
  r.closure_dimension = subalgebra_closure(*t.ambient, t.elements).dimension;
  for (auto [x, y] : t.graph.edges())
    if (kappa(*t.ambient, t.elements[x], t.elements[y]).is_zero()) r.zero_edges.emplace_back(x, y);
  return r;
}

namespace detail {

template <Scalar K>
K random_nonzero(const FieldSpec& f, std::mt19937_64& rng) {
  for (;;) {
    K v = K::random(f, rng);
    if (!v.is_zero()) return v;
  }
}

template <Scalar K>
std::pair<K, K> random_ab(const FieldSpec& f, std::mt19937_64& rng) {
  for (;;) {
    K a = K::random(f, rng), b = K::random(f, rng);
    if (!a.is_zero() || !b.is_zero()) return {a, b};
  }
}

/// Cycle order starting at x0, continuing through its smaller neighbour.
inline std::vector<int> cycle_walk(const SimpleGraph& g, int x0) {
  std::vector<int> walk{x0};
  int prev = -1, cur = x0;
  while (walk.size() < g.size()) {
    int next = -1;
    for (int y : g.neighbours(cur))
      if (y != prev && (next < 0 || y < next)) next = y;
    prev = cur;
    cur = next;
    walk.push_back(cur);
  }
  return walk;
}

inline constexpr int kRetries = 256;

}  // namespace detail

/// Finite type: G_x = sl2_extremal(a_x, b_x, simple triple of x) in the
/// Chevalley algebra of g0.
template <Scalar K>
GeneratorTuple<K> finite_tuple(const ChevalleyAlgebra<K>& chev, const std::vector<K>& a, const std::vector<K>& b) {
  const auto& g = chev.graph();
  if (a.size() != g.size() || b.size() != g.size()) throw Error(ErrorKind::DimensionMismatch, "one (a,b) per vertex");
  std::vector<Vec<K>> els;
  for (std::size_t x = 0; x < g.size(); ++x) els.push_back(sl2_extremal(a[x], b[x], chev.simple_triple(static_cast<int>(x))));
  auto t = make_tuple<K>(g, chev.algebra_ptr(), std::move(els));
  t.a = a;
  t.b = b;
  t.model = "chevalley";
  return t;
}

template <Scalar K>
GeneratorTuple<K> realize_finite(const SimpleGraph& g0, const FieldSpec& f, std::uint64_t seed,
                                 int retries = detail::kRetries) {
  auto chev = build_chevalley<K>(g0, f);
  const std::size_t target = chev.positive_count();
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<K> a, b;
    for (std::size_t x = 0; x < g0.size(); ++x) {
      auto [ax, bx] = detail::random_ab<K>(f, rng);
      a.push_back(ax);
      b.push_back(bx);
    }
    auto t = finite_tuple(chev, a, b);
    if (genericity(t, target).generic()) return t;
  }
  throw Error(ErrorKind::GenericityFailed, "no generic tuple after " + std::to_string(retries) + " attempts");
}

/// Affine A on n vertices inside sl_n: the i-th vertex of the walk from x0
/// uses rows i, i+1; x0 uses rows n, 1 (the lowest root). When c is
/// non-empty it holds c_2..c_{n-1} and G_0 gets the extra column entries.
template <Scalar K>
GeneratorTuple<K> cycle_tuple(const SimpleGraph& g, const FieldSpec& f, const std::vector<K>& a,
                              const std::vector<K>& b, const std::vector<K>& c) {
  auto cls = classify(g);
  if (cls.tag() != DynkinClass::Tag::AffineA) throw Error(ErrorKind::PreconditionViolated, "cycle diagram expected");
  const int n = static_cast<int>(g.size());
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
    throw Error(ErrorKind::DimensionMismatch, "one (a,b) per vertex");
  if (!c.empty() && static_cast<int>(c.size()) != n - 2)
    throw Error(ErrorKind::DimensionMismatch, "c needs n-2 entries");
  auto model = std::make_shared<const SlnModel<K>>(f, n);
  auto walk = detail::cycle_walk(g, *cls.distinguished_vertex());
  std::vector<Vec<K>> els(n);
  for (int i = 1; i < n; ++i) {
    int v = walk[i];
    els[v] = sl2_extremal(a[v], b[v], model->triple(i - 1, i));
  }
  int x0 = walk[0];
  if (c.empty()) {
    els[x0] = sl2_extremal(a[x0], b[x0], model->triple(n - 1, 0));
  } else {
    if (a[x0].is_zero() && b[x0].is_zero()) throw Error(ErrorKind::BothZero, "a and b are both zero");
    // rank one: column (-b0, c_2, ..., c_{n-1}, a0) times row (a0, 0, ..., 0, b0)
    std::vector<K> col{-b[x0]};
    for (const auto& ci : c) col.push_back(ci);
    col.push_back(a[x0]);
    Matrix<K> m(f, n, n);
    for (int r = 0; r < n; ++r) {
      m(r, 0) = col[r] * a[x0];
      m(r, n - 1) = col[r] * b[x0];
    }
    els[x0] = model->from_matrix(m);
  }
  auto t = make_tuple<K>(g, model->algebra_ptr(), std::move(els));
  t.a = a;
  t.b = b;
  t.c = c;
  t.model = c.empty() ? "sl_n" : "sl_n-extended";
  t.sln = model;
  return t;
}

/// Solves b_i c_i + a_i c_{i+1} = 0 along the walk, starting from c_2.
template <Scalar K>
std::vector<K> solve_c_chain(const SimpleGraph& g, const std::vector<K>& a, const std::vector<K>& b, const K& c2) {
  auto walk = detail::cycle_walk(g, *classify(g).distinguished_vertex());
  const int n = static_cast<int>(g.size());
  std::vector<K> c{c2};
  for (int i = 2; i + 1 <= n - 1; ++i) {
    int v = walk[i];
    if (a[v].is_zero()) throw Error(ErrorKind::ConstraintUnsolvable, "a vanishes at vertex " + g.label(v));
    c.push_back(-(b[v] * c.back()) / a[v]);
  }
  return c;
}

/// Affine type: G_x in g(Gamma^0), x0 on the lowest root. Cycles use the
/// matrix model.
template <Scalar K>
GeneratorTuple<K> affine_tuple(const SimpleGraph& g, const FieldSpec& f, const std::vector<K>& a,
                               const std::vector<K>& b) {
  auto cls = classify(g);
  if (!cls.is_affine()) throw Error(ErrorKind::NotAffineType, "affine diagram expected");
  if (cls.tag() == DynkinClass::Tag::AffineA) return cycle_tuple<K>(g, f, a, b, {});
  auto aff = theta_weights(g);
  std::vector<int> rest, pos(g.size(), -1);
  for (int v = 0; v < static_cast<int>(g.size()); ++v)
    if (v != aff.x0) {
      pos[v] = static_cast<int>(rest.size());
      rest.push_back(v);
    }
  auto chev = build_chevalley<K>(g.induced(rest), f);
  WeightVec theta(rest.size());
  for (std::size_t i = 0; i < rest.size(); ++i) theta[i] = aff.theta[rest[i]];
  std::vector<Vec<K>> els(g.size());
  for (int v = 0; v < static_cast<int>(g.size()); ++v)
    els[v] = sl2_extremal(a[v], b[v], v == aff.x0 ? chev.triple(theta) : chev.simple_triple(pos[v]));
  auto t = make_tuple<K>(g, chev.algebra_ptr(), std::move(els));
  t.a = a;
  t.b = b;
  t.model = "chevalley";
  return t;
}

template <Scalar K>
std::size_t ambient_target(const SimpleGraph& g) {
  auto cls = classify(g);
  if (cls.is_finite()) return positive_roots(g).size();
  auto aff = theta_weights(g);
  return 2 * aff.finite_positive.size() + g.size() - 1;
}

template <Scalar K>
GeneratorTuple<K> realize_affine(const SimpleGraph& g, const FieldSpec& f, std::uint64_t seed,
                                 int retries = detail::kRetries) {
  const std::size_t target = ambient_target<K>(g);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<K> a, b;
    for (std::size_t x = 0; x < g.size(); ++x) {
      auto [ax, bx] = detail::random_ab<K>(f, rng);
      a.push_back(ax);
      b.push_back(bx);
    }
    auto t = affine_tuple<K>(g, f, a, b);
    if (genericity(t, target).generic()) return t;
  }
  throw Error(ErrorKind::GenericityFailed, "no generic tuple after " + std::to_string(retries) + " attempts");
}

/// Even cycle with the extended G_0 and a random non-zero c_2.
template <Scalar K>
GeneratorTuple<K> realize_affine_a_odd(const SimpleGraph& g, const FieldSpec& f, std::uint64_t seed,
                                       int retries = detail::kRetries) {
  auto cls = classify(g);
  if (cls.tag() != DynkinClass::Tag::AffineA || g.size() % 2 != 0)
    throw Error(ErrorKind::PreconditionViolated, "even cycle expected");
  const std::size_t target = ambient_target<K>(g);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<K> a, b;
    for (std::size_t x = 0; x < g.size(); ++x) {
      auto [ax, bx] = detail::random_ab<K>(f, rng);
      a.push_back(ax);
      b.push_back(bx);
    }
    K c2 = detail::random_nonzero<K>(f, rng);
    std::vector<K> c;
    try {
      c = solve_c_chain(g, a, b, c2);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ConstraintUnsolvable) continue;
      throw;
    }
    auto t = cycle_tuple<K>(g, f, a, b, c);
    if (genericity(t, target).generic()) return t;
  }
  throw Error(ErrorKind::GenericityFailed, "no generic tuple after " + std::to_string(retries) + " attempts");
}

/// Product identity on an even cycle: the edge forms along alternate edges
/// of the walk from x0 have equal products.
template <Scalar K>
bool cycle_product_identity(const GeneratorTuple<K>& t) {
  auto walk = detail::cycle_walk(t.graph, *classify(t.graph).distinguished_vertex());
  const std::size_t n = walk.size();
  if (n % 2 != 0) throw Error(ErrorKind::PreconditionViolated, "even cycle expected");
  const FieldSpec& f = t.ambient->field();
  K even = from_int<K>(f, 1), odd = from_int<K>(f, 1);
  for (std::size_t i = 0; i < n; ++i) {
    K k = kappa(*t.ambient, t.elements[walk[i]], t.elements[walk[(i + 1) % n]]);
    if (i % 2 == 0) even *= k;
    else odd *= k;
  }
  return even == odd;
}

/// Images of the basis words of L(0) under x -> G_x.
template <Scalar K>
std::vector<Vec<K>> evaluate_basis(const GeneratorTuple<K>& t, const SandwichAlgebra<K>& sand) {
  if (!(sand.graph().size() == t.graph.size())) throw Error(ErrorKind::DimensionMismatch, "graph mismatch");
  std::vector<Vec<K>> val(sand.dimension());
  for (std::size_t i = 0; i < sand.dimension(); ++i) {
    const auto& e = sand.basis()[i];
    val[i] = e.tail < 0 ? t.elements[e.head] : t.ambient->bracket(t.elements[e.head], val[e.tail]);
  }
  return val;
}

/// f_x(b) = kappa(G_x, value of b).
template <Scalar K>
ParameterSet<K> realized_parameters(const GeneratorTuple<K>& t, const SandwichAlgebra<K>& sand) {
  auto val = evaluate_basis(t, sand);
  ParameterSet<K> p(sand.field());
  for (std::size_t x = 0; x < t.graph.size(); ++x)
    for (std::size_t i = 0; i < val.size(); ++i)
      p.set(static_cast<int>(x), static_cast<int>(i), kappa(*t.ambient, t.elements[x], val[i]));
  return p;
}

/// Type of Gamma^0 for an affine class, the class itself otherwise.
inline std::string finite_part_name(const DynkinClass& cls) {
  std::string n = cls.name();
  if (!n.empty() && n.back() == '~') n.pop_back();
  return n;
}

template <Scalar K>
struct IsoCertificate {
  std::size_t d1 = 0;  // dimension of the subalgebra generated by the tuple
  std::size_t d2 = 0;  // dim L(0)
  std::size_t ambient_dimension = 0;
  bool member = false;
  bool zero_parameters = false;
  std::string verdict;
  ParameterSet<K> params;
};

/// The generated subalgebra is a quotient of L(f); equal dimensions make it
/// an isomorphism.
template <Scalar K>
IsoCertificate<K> certify_generic_iso(const GeneratorTuple<K>& t, const SandwichAlgebra<K>& sand) {
  if (!sand.has_certificates())
    throw Error(ErrorKind::CertificateFailed, "sandwich algebra was computed without certificates");
  IsoCertificate<K> c{0, 0, 0, false, false, "", realized_parameters(t, sand)};
  c.d1 = subalgebra_closure(*t.ambient, t.elements).dimension;
  c.d2 = sand.dimension();
  c.ambient_dimension = t.ambient->dimension();
  auto alg = build_bracket(sand, c.params);
  auto rep = membership_in_X(alg);
  c.member = rep.member;
  if (!c.member) throw Error(ErrorKind::CertificateFailed, "realized parameters fail membership");
  if (c.d1 != c.d2)
    throw Error(ErrorKind::CertificateFailed,
                "generated subalgebra has dimension " + std::to_string(c.d1) + ", L(0) has " + std::to_string(c.d2));
  c.zero_parameters = true;
  for (const auto& [k, v] : c.params.values())
    if (!v.is_zero()) c.zero_parameters = false;
  auto cls = classify(t.graph);
  if (c.zero_parameters)
    c.verdict = "L(f) = L(0), dimension " + std::to_string(c.d1);
  else if (c.d1 == c.ambient_dimension)
    c.verdict = "L(f) isomorphic to the Chevalley algebra of type " + finite_part_name(cls) + ", dimension " +
                std::to_string(c.d1);
  else
    c.verdict = "L(f) isomorphic to the generated subalgebra of dimension " + std::to_string(c.d1);
  return c;
}

template <Scalar K>
struct Recognition {
  bool member = false;
  bool isomorphic = false;  // closure dimension equals dim L(0)
  std::size_t closure_dimension = 0;
  std::size_t sandwich_dimension = 0;
  ParameterSet<K> params;
};

/// Extremal generators commuting on non-edges generate a quotient of L(f)
/// for the f they induce, and f lies in X.
template <Scalar K>
Recognition<K> recognize(std::shared_ptr<const LieAlgebra<K>> ambient, const std::vector<Vec<K>>& generators,
                         const SandwichAlgebra<K>& sand) {
  auto t = make_tuple<K>(sand.graph(), std::move(ambient), generators);
  Recognition<K> r{false, false, 0, sand.dimension(), realized_parameters(t, sand)};
  r.member = membership_in_X(build_bracket(sand, r.params)).member;
  r.closure_dimension = subalgebra_closure(*t.ambient, t.elements).dimension;
  r.isomorphic = r.member && r.closure_dimension == r.sandwich_dimension;
  return r;
}

}  // namespace extremal
