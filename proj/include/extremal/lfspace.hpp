#pragma once

// L(f) on the basis of L(0): the filtered bracket built from a parameter set,
// the membership test for X, completion of edge (and delta) values to a full
// parameter set on Dynkin diagrams, and the torus action.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "extremal/diagram.hpp"
#include "extremal/error.hpp"
#include "extremal/sandwich.hpp"
#include "extremal/sparse.hpp"

namespace extremal {

/// Values f_x(b) for x a vertex and b a basis index of L(0).
template <Scalar K>
class ParameterSet {
 public:
  explicit ParameterSet(const FieldSpec& f) : field_(f) {}

  static ParameterSet zero(const SandwichAlgebra<K>& sand) {
    ParameterSet p(sand.field());
    for (std::size_t x = 0; x < sand.graph().size(); ++x)
      for (std::size_t b = 0; b < sand.dimension(); ++b)
        p.set(static_cast<int>(x), static_cast<int>(b), from_int<K>(sand.field(), 0));
    return p;
  }

  const FieldSpec& field() const { return field_; }
  void set(int x, int b, K v) { values_[{x, b}] = std::move(v); }
  bool has(int x, int b) const { return values_.count({x, b}) > 0; }

  const K& get(int x, int b) const {
    auto it = values_.find({x, b});
    if (it == values_.end())
      throw Error(ErrorKind::MissingParameter,
                  "no value for vertex " + std::to_string(x) + " on basis element " + std::to_string(b));
    return it->second;
  }

  /// f_x extended linearly.
  K eval(int x, const SparseVec<K>& v) const {
    K s = from_int<K>(field_, 0);
    for (const auto& [b, c] : v.entries()) s += c * get(x, b);
    return s;
  }

  const std::map<std::pair<int, int>, K>& values() const { return values_; }

  /// Throws MissingParameter unless every (x, b) has a value.
  void require_total(std::size_t vertices, std::size_t dim) const {
    for (std::size_t x = 0; x < vertices; ++x)
      for (std::size_t b = 0; b < dim; ++b) get(static_cast<int>(x), static_cast<int>(b));
  }

  friend bool operator==(const ParameterSet& a, const ParameterSet& b) { return a.values_ == b.values_; }

 private:
  FieldSpec field_;
  std::map<std::pair<int, int>, K> values_;
};

/// Bracket [.,.]_h on the basis of L(0). The sandwich algebra must outlive it.
template <Scalar K>
class FilteredAlgebra {
 public:
  FilteredAlgebra(const SandwichAlgebra<K>& sand, ParameterSet<K> params, detail::GradedData<K> data)
      : sand_(&sand), params_(std::move(params)), data_(std::move(data)) {}

  const SandwichAlgebra<K>& sandwich() const { return *sand_; }
  const ParameterSet<K>& params() const { return params_; }
  const FieldSpec& field() const { return sand_->field(); }
  std::size_t dimension() const { return data_.basis.size(); }

  const SparseVec<K>& structure(int u, int v) const {
    sand_->check_index(u);
    sand_->check_index(v);
    return data_.table[u][v];
  }

  SparseVec<K> bracket(const SparseVec<K>& a, const SparseVec<K>& b) const {
    SparseVec<K> r;
    for (const auto& [i, ci] : a.entries())
      for (const auto& [j, cj] : b.entries()) r.axpy(ci * cj, structure(i, j));
    return r;
  }

  SparseVec<K> unit(int i) const { return SparseVec<K>::unit(field(), i); }

  /// Image of the left-normed word x_d ... x_1, by iterated bracketing.
  SparseVec<K> project(const Word& w) const {
    if (w.empty()) throw Error(ErrorKind::PreconditionViolated, "empty word");
    for (int x : w)
      if (x < 0 || static_cast<std::size_t>(x) >= sand_->graph().size())
        throw Error(ErrorKind::UnknownBasisElement, "letter out of range");
    SparseVec<K> v = unit(w.back());
    for (auto it = w.rbegin() + 1; it != w.rend(); ++it) v = bracket(unit(*it), v);
    return v;
  }

 private:
  const SandwichAlgebra<K>* sand_;
  ParameterSet<K> params_;
  detail::GradedData<K> data_;
};

namespace detail {

template <Scalar K>
Builder<K> replay_builder(const SandwichAlgebra<K>& sand) {
  if (!sand.has_certificates())
    throw Error(ErrorKind::CertificateFailed, "L(f) needs a sandwich algebra computed with certificates");
  Builder<K> b(sand.graph(), sand.field(), Builder<K>::Mode::Replay, sand.max_degree() + 1);
  b.set_source(&sand.data(), &sand.stages());
  return b;
}

}  // namespace detail

template <Scalar K>
FilteredAlgebra<K> build_bracket(const SandwichAlgebra<K>& sand, const ParameterSet<K>& h) {
  h.require_total(sand.graph().size(), sand.dimension());
  auto b = detail::replay_builder(sand);
  b.set_params([&h](int x, int c) { return h.get(x, c); });
  b.run();
  return FilteredAlgebra<K>(sand, h, std::move(b.data()));
}

struct MembershipWitness {
  std::string condition;  // antisymmetry | jacobi | condition1 | condition2
  std::vector<int> indices;
  std::string detail;
};

struct MembershipReport {
  bool member = true;
  std::size_t checked = 0;
  std::vector<MembershipWitness> witnesses;  // at most max_witnesses
  std::map<std::string, std::size_t> failures;
};

/// Exhaustive check of the closed conditions that cut out X: antisymmetry,
/// Jacobi, basis words evaluating to themselves, [x,[x,u]] = h_x(u) x.
template <Scalar K>
MembershipReport membership_in_X(const FilteredAlgebra<K>& alg, std::size_t max_witnesses = 16) {
  MembershipReport rep;
  const auto& sand = alg.sandwich();
  const auto& g = sand.graph();
  const int n = static_cast<int>(alg.dimension());
  auto fail = [&](std::string cond, std::vector<int> idx, std::string det) {
    rep.member = false;
    ++rep.failures[cond];
    if (rep.witnesses.size() < max_witnesses) rep.witnesses.push_back({std::move(cond), std::move(idx), std::move(det)});
  };
  auto word = [&](int i) { return g.word_string(sand.basis()[i].word); };

  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v) {
      ++rep.checked;
      if (!(alg.structure(u, v) + alg.structure(v, u)).is_zero())
        fail("antisymmetry", {u, v}, "[" + word(u) + "," + word(v) + "] + [" + word(v) + "," + word(u) + "] != 0");
    }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int w = v + 1; w < n; ++w) {
        ++rep.checked;
        SparseVec<K> j = alg.bracket(alg.unit(u), alg.structure(v, w));
        j += alg.bracket(alg.unit(v), alg.structure(w, u));
        j += alg.bracket(alg.unit(w), alg.structure(u, v));
        if (!j.is_zero()) fail("jacobi", {u, v, w}, "Jacobi fails on " + word(u) + ", " + word(v) + ", " + word(w));
      }
  for (int b = 0; b < n; ++b) {
    ++rep.checked;
    if (!(alg.project(sand.basis()[b].word) == alg.unit(b))) fail("condition1", {b}, word(b) + " does not evaluate to itself");
  }
  for (int x = 0; x < static_cast<int>(g.size()); ++x)
    for (int y = 0; y < static_cast<int>(g.size()); ++y)
      if (x != y && !g.adjacent(x, y)) {
        ++rep.checked;
        if (!alg.structure(x, y).is_zero()) fail("condition1", {x, y}, "[" + word(x) + "," + word(y) + "] != 0");
      }
  for (int x = 0; x < static_cast<int>(g.size()); ++x)
    for (int u = 0; u < n; ++u) {
      ++rep.checked;
      SparseVec<K> lhs = alg.bracket(alg.unit(x), alg.structure(x, u));
      SparseVec<K> rhs = alg.params().get(x, u) * alg.unit(x);
      if (!(lhs == rhs))
        fail("condition2", {x, u}, "[" + word(x) + ",[" + word(x) + "," + word(u) + "]] != f_" + g.label(x) + "(" + word(u) + ") " + word(x));
    }
  return rep;
}

/// kappa(x, v) from [x,[x,v]] = kappa(x,v) x.
template <Scalar K>
K extremal_form_lf(const FilteredAlgebra<K>& alg, int x, const SparseVec<K>& v) {
  if (x < 0 || static_cast<std::size_t>(x) >= alg.sandwich().graph().size())
    throw Error(ErrorKind::PreconditionViolated, "first argument must be a generator");
  SparseVec<K> w = alg.bracket(alg.unit(x), alg.bracket(alg.unit(x), v));
  K zero = from_int<K>(alg.field(), 0);
  K c = w.get(x, zero);
  if (!(w == c * alg.unit(x))) throw Error(ErrorKind::NotProportional, "[x,[x,v]] is not a multiple of x");
  return c;
}

/// Basis index spanning the weight delta - alpha_x.
template <Scalar K>
int monomial_m(const SandwichAlgebra<K>& sand, const AffineData& a, int x) {
  const auto& ids = sand.basis_of_weight(a.delta - sand.graph().simple_root(x));
  if (ids.size() != 1) throw Error(ErrorKind::NonBasisWeight, "weight delta - alpha_x is not one-dimensional");
  return ids[0];
}

/// Full parameter set determined by edge values (and f_{x0}(m_{x0}) in the
/// affine case), assuming the result lies in X. Edge keys are (min, max).
template <Scalar K>
ParameterSet<K> complete_parameters(const SandwichAlgebra<K>& sand, const DynkinClass& cls,
                                    const std::map<std::pair<int, int>, K>& edge_values,
                                    const std::optional<K>& delta_value) {
  if (!cls.is_dynkin()) throw Error(ErrorKind::NotDynkin, "parameter completion needs a Dynkin diagram");
  if (cls.is_finite() && delta_value)
    throw Error(ErrorKind::PreconditionViolated, "finite type takes no delta value");
  if (cls.is_affine() && !delta_value) throw Error(ErrorKind::MissingDeltaValue, "affine type needs the delta value");
  const auto& g = sand.graph();
  const FieldSpec& f = sand.field();
  const K zero = from_int<K>(f, 0);
  for (auto [x, y] : g.edges())
    if (!edge_values.count({x, y}))
      throw Error(ErrorKind::MissingParameter, "no value for edge " + g.label(x) + "-" + g.label(y));
  std::optional<AffineData> aff;
  if (cls.is_affine()) aff = theta_weights(g);

  auto builder = detail::replay_builder(sand);
  ParameterSet<K> out(f);
  std::set<std::pair<int, int>> active;
  const auto& basis = sand.basis();

  std::function<K(int, int)> value = [&](int x, int c) -> K {
    if (out.has(x, c)) return out.get(x, c);
    if (!active.insert({x, c}).second)
      throw Error(ErrorKind::CertificateFailed, "cyclic parameter dependency");
    const BasisElement& e = basis[c];
    auto eval = [&](int z, const SparseVec<K>& v) {
      K s = zero;
      for (const auto& [k, ck] : v.entries()) s += ck * value(z, k);
      return s;
    };
    K r = zero;
    if (e.degree == 1) {
      if (g.adjacent(x, e.head)) r = edge_values.at({std::min(x, e.head), std::max(x, e.head)});
    } else if (pair_simple(g, x, e.weight) >= -1) {
      // kappa(x, [z, b']) = -kappa(z, [x, b'])
      int z = e.head;
      if (z != x && g.adjacent(x, z)) r = -eval(z, builder.symval(x, e.tail));
    } else {
      if (!aff || e.weight != aff->delta - g.simple_root(x))
        throw Error(ErrorKind::NonBasisWeight, "no rule for f_" + g.label(x) + "(" + g.word_string(e.word) + ")");
      const int x0 = aff->x0;
      if (x == x0) {
        r = *delta_value;
      } else {
        // m_x = x_d ... x_1 x0 Y; peel the x_i off through associativity of kappa.
        std::size_t p = 0;
        while (e.word[p] != x0) ++p;
        SparseVec<K> a = SparseVec<K>::unit(f, x);
        for (std::size_t i = 0; i < p; ++i) a = builder.apply_gen(e.word[i], a);
        int y = c;
        for (std::size_t i = 0; i <= p; ++i) y = basis[y].tail;
        bool flip = p % 2 == 1;
        if (y < 0) {
          r = eval(x0, a);
        } else {
          r = eval(x0, builder.bracket(a, SparseVec<K>::unit(f, y)));
          flip = !flip;
        }
        if (flip) r = -r;
      }
    }
    active.erase({x, c});
    out.set(x, c, r);
    return r;
  };

  builder.set_params([&](int x, int c) { return value(x, c); });
  builder.run();
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t c = 0; c < sand.dimension(); ++c) value(static_cast<int>(x), static_cast<int>(c));
  return out;
}

/// (t h)_x(b) = t_x^{-1} t^{-weight(b)} h_x(b)
template <Scalar K>
ParameterSet<K> scale(const SandwichAlgebra<K>& sand, const std::vector<K>& t, const ParameterSet<K>& h) {
  const auto& g = sand.graph();
  if (t.size() != g.size()) throw Error(ErrorKind::DimensionMismatch, "scaling vector length");
  std::vector<K> inv;
  for (const auto& s : t) inv.push_back(s.inverse());
  ParameterSet<K> out(h.field());
  for (const auto& [key, v] : h.values()) {
    auto [x, b] = key;
    K c = inv[x] * v;
    const WeightVec& w = sand.basis().at(b).weight;
    for (std::size_t y = 0; y < g.size(); ++y)
      for (int k = 0; k < w[y]; ++k) c *= inv[y];
    out.set(x, b, c);
  }
  return out;
}

}  // namespace extremal
