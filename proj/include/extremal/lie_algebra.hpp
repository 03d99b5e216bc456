#pragma once

// Finite-dimensional Lie algebra given by structure constants on a basis.

#include <deque>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "extremal/error.hpp"
#include "extremal/field.hpp"
#include "extremal/graph.hpp"
#include "extremal/matrix.hpp"
#include "extremal/sparse.hpp"

namespace extremal {

template <Scalar K>
class LieAlgebra {
 public:
  /// table[i][j] = [e_i, e_j]; weights may be empty for ungraded algebras.
  LieAlgebra(const FieldSpec& f, std::vector<std::string> names, std::vector<WeightVec> weights,
             std::vector<std::vector<SparseVec<K>>> table)
      : field_(f), names_(std::move(names)), weights_(std::move(weights)), table_(std::move(table)) {
    if (table_.size() != names_.size()) throw Error(ErrorKind::DimensionMismatch, "structure table size");
    for (const auto& row : table_)
      if (row.size() != names_.size()) throw Error(ErrorKind::DimensionMismatch, "structure table size");
    if (!weights_.empty() && weights_.size() != names_.size())
      throw Error(ErrorKind::DimensionMismatch, "grading size");
  }

  const FieldSpec& field() const { return field_; }
  std::size_t dimension() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  bool graded() const { return !weights_.empty(); }
  const WeightVec& weight(std::size_t i) const { return weights_.at(i); }
  const SparseVec<K>& structure(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }

  Vec<K> zero() const { return zeros<K>(field_, dimension()); }
  Vec<K> unit(std::size_t i) const { return extremal::unit<K>(field_, dimension(), i); }

  Vec<K> bracket(const Vec<K>& a, const Vec<K>& b) const {
    if (a.size() != dimension() || b.size() != dimension())
      throw Error(ErrorKind::DimensionMismatch, "element length");
    Vec<K> r = zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j].is_zero()) continue;
        K c = a[i] * b[j];
        for (const auto& [k, s] : table_[i][j].entries()) r[k] += c * s;
      }
    }
    return r;
  }

  /// Number of basis triples (i<j<k) on which Jacobi fails.
  std::size_t jacobi_failures() const {
    std::size_t bad = 0;
    const std::size_t n = dimension();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          SparseVec<K> s;
          s += apply(i, table_[j][k]);
          s += apply(j, table_[k][i]);
          s += apply(k, table_[i][j]);
          bad += !s.is_zero();
        }
    return bad;
  }

  bool antisymmetric() const {
    for (std::size_t i = 0; i < dimension(); ++i)
      for (std::size_t j = i; j < dimension(); ++j)
        if (!(table_[i][j] + table_[j][i]).is_zero()) return false;
    return true;
  }

  /// Whether every structure constant respects the grading.
  bool grading_additive() const {
    if (!graded()) return true;
    for (std::size_t i = 0; i < dimension(); ++i)
      for (std::size_t j = 0; j < dimension(); ++j)
        for (const auto& [k, c] : table_[i][j].entries())
          if (!(weights_[k] == weights_[i] + weights_[j])) return false;
    return true;
  }

 private:
  SparseVec<K> apply(std::size_t i, const SparseVec<K>& v) const {
    SparseVec<K> r;
    for (const auto& [k, c] : v.entries()) r.axpy(c, table_[i][k]);
    return r;
  }

  FieldSpec field_;
  std::vector<std::string> names_;
  std::vector<WeightVec> weights_;
  std::vector<std::vector<SparseVec<K>>> table_;
};

/// c with w == c v, or nullopt. v must be non-zero.
template <Scalar K>
std::optional<K> proportionality(const Vec<K>& v, const Vec<K>& w) {
  std::size_t p = 0;
  while (p < v.size() && v[p].is_zero()) ++p;
  if (p == v.size()) throw Error(ErrorKind::PreconditionViolated, "zero element");
  K c = w[p] / v[p];
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!(w[i] == c * v[i])) return std::nullopt;
  return c;
}

/// ad(v)^2 maps the whole algebra into K v.
template <Scalar K>
bool is_extremal(const LieAlgebra<K>& alg, const Vec<K>& v) {
  if (is_zero(std::span<const K>(v))) throw Error(ErrorKind::PreconditionViolated, "zero element");
  for (std::size_t i = 0; i < alg.dimension(); ++i)
    if (!proportionality(v, alg.bracket(v, alg.bracket(v, alg.unit(i))))) return false;
  return true;
}

/// kappa(v, w) from [v,[v,w]] = kappa(v,w) v.
template <Scalar K>
K extremal_form(const LieAlgebra<K>& alg, const Vec<K>& v, const Vec<K>& w) {
  if (!is_extremal(alg, v)) throw Error(ErrorKind::NotExtremal, "element is not extremal");
  return *proportionality(v, alg.bracket(v, alg.bracket(v, w)));
}

/// Same as extremal_form without the full extremality check; throws
/// NotProportional when [v,[v,w]] is not a multiple of v.
template <Scalar K>
K kappa(const LieAlgebra<K>& alg, const Vec<K>& v, const Vec<K>& w) {
  auto c = proportionality(v, alg.bracket(v, alg.bracket(v, w)));
  if (!c) throw Error(ErrorKind::NotProportional, "[v,[v,w]] is not a multiple of v");
  return *c;
}

template <Scalar K>
struct Closure {
  std::size_t dimension = 0;
  std::vector<Vec<K>> basis;  // reduced echelon rows
};

/// Subalgebra generated by the given elements: the span of all left-normed
/// brackets of generators, grown breadth-first.
template <Scalar K>
Closure<K> subalgebra_closure(const LieAlgebra<K>& alg, const std::vector<Vec<K>>& generators) {
  EchelonBasis<K> ech(alg.field(), alg.dimension());
  std::deque<Vec<K>> queue;
  std::vector<Vec<K>> gens;
  for (const auto& g : generators) {
    if (g.size() != alg.dimension()) throw Error(ErrorKind::DimensionMismatch, "generator length");
    if (ech.insert(g)) {
      queue.push_back(g);
      gens.push_back(g);
    }
  }
  while (!queue.empty() && ech.rank() < alg.dimension()) {
    Vec<K> v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Vec<K> w = alg.bracket(g, v);
      if (ech.insert(w)) queue.push_back(std::move(w));
    }
  }
  return {ech.rank(), ech.rows()};
}

}  // namespace extremal
