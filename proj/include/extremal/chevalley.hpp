#pragma once

// Chevalley algebras of simply laced finite type, u = n+ x| g/n+ for affine
// diagrams, and the trace-zero matrix model of sl_n.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "extremal/diagram.hpp"
#include "extremal/lie_algebra.hpp"

namespace extremal {

template <Scalar K>
struct Sl2Triple {
  Vec<K> e, h, f;  // [e,f] = h, [h,e] = 2e, [h,f] = -2f
};

/// Chevalley basis {H_x} u {E_beta}: H's first, then positive roots by
/// height, then negative roots in the same order.
template <Scalar K>
class ChevalleyAlgebra {
 public:
  ChevalleyAlgebra(SimpleGraph g, std::shared_ptr<const LieAlgebra<K>> alg, std::vector<WeightVec> roots)
      : graph_(std::move(g)), alg_(std::move(alg)), roots_(std::move(roots)) {
    for (std::size_t i = 0; i < roots_.size(); ++i) root_index_[roots_[i]] = static_cast<int>(graph_.size() + i);
  }

  const SimpleGraph& graph() const { return graph_; }
  const LieAlgebra<K>& algebra() const { return *alg_; }
  std::shared_ptr<const LieAlgebra<K>> algebra_ptr() const { return alg_; }
  std::size_t rank() const { return graph_.size(); }
  const std::vector<WeightVec>& roots() const { return roots_; }
  std::size_t positive_count() const { return roots_.size() / 2; }

  int h_index(int x) const { return x; }
  int e_index(const WeightVec& root) const {
    auto it = root_index_.find(root);
    if (it == root_index_.end()) throw Error(ErrorKind::PreconditionViolated, "not a root: " + root.to_string());
    return it->second;
  }

  /// H_beta = sum_x c_x H_x for beta = sum_x c_x alpha_x.
  Vec<K> coroot(const WeightVec& beta) const {
    Vec<K> v = alg_->zero();
    for (std::size_t x = 0; x < rank(); ++x) v[x] = from_int<K>(alg_->field(), beta[x]);
    return v;
  }

  /// (E_beta, H_beta, -E_{-beta}); an sl2-triple for any root beta.
  Sl2Triple<K> triple(const WeightVec& beta) const {
    Sl2Triple<K> t{alg_->unit(e_index(beta)), coroot(beta), alg_->unit(e_index(-beta))};
    for (auto& c : t.f) c = -c;
    return t;
  }
  Sl2Triple<K> simple_triple(int x) const { return triple(graph_.simple_root(x)); }

 private:
  SimpleGraph graph_;
  std::shared_ptr<const LieAlgebra<K>> alg_;
  std::vector<WeightVec> roots_;
  std::map<WeightVec, int> root_index_;
};

/// Sign function: bimultiplicative with eps(a_x, a_y) = -1 iff x = y or
/// (x < y and x ~ y).
inline int chevalley_epsilon(const SimpleGraph& g, const WeightVec& a, const WeightVec& b) {
  long parity = 0;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (a[x] == 0) continue;
    parity += static_cast<long>(a[x]) * b[x];
    for (std::size_t y = x + 1; y < g.size(); ++y)
      if (g.adjacent(static_cast<int>(x), static_cast<int>(y))) parity += static_cast<long>(a[x]) * b[y];
  }
  return parity % 2 == 0 ? 1 : -1;
}

/// [E_a, E_b] = eps(a,b) E_{a+b}, [E_a, E_{-a}] = -H_a, [H_x, E_b] = <a_x,b> E_b.
template <Scalar K>
ChevalleyAlgebra<K> build_chevalley(const SimpleGraph& g0, const FieldSpec& f) {
  if (!classify(g0).is_finite()) throw Error(ErrorKind::NotFiniteType, "Chevalley algebra needs a finite-type diagram");
  auto pos = positive_roots(g0);
  std::vector<WeightVec> roots = pos;
  for (const auto& r : pos) roots.push_back(-r);
  const std::size_t n = g0.size();
  const std::size_t dim = n + roots.size();
  std::map<WeightVec, int> idx;
  for (std::size_t i = 0; i < roots.size(); ++i) idx[roots[i]] = static_cast<int>(n + i);

  std::vector<std::string> names;
  std::vector<WeightVec> weights;
  for (std::size_t x = 0; x < n; ++x) {
    names.push_back("H_" + g0.label(static_cast<int>(x)));
    weights.emplace_back(n);
  }
  for (const auto& r : roots) {
    names.push_back("E" + r.to_string());
    weights.push_back(r);
  }
  std::vector<std::vector<SparseVec<K>>> t(dim, std::vector<SparseVec<K>>(dim));
  auto c = [&](long v) { return from_int<K>(f, v); };
  for (std::size_t x = 0; x < n; ++x)
    for (const auto& r : roots) {
      int p = pair_simple(g0, static_cast<int>(x), r);
      int e = idx[r];
      if (p == 0) continue;
      t[x][e].add(e, c(p));
      t[e][x].add(e, c(-p));
    }
  for (const auto& a : roots)
    for (const auto& b : roots) {
      int ia = idx[a], ib = idx[b];
      WeightVec s = a + b;
      if (s.is_zero()) {
        for (std::size_t x = 0; x < n; ++x) t[ia][ib].add(static_cast<int>(x), c(-a[x]));
      } else if (auto it = idx.find(s); it != idx.end()) {
        t[ia][ib].add(it->second, c(chevalley_epsilon(g0, a, b)));
      }
    }
  auto alg = std::make_shared<const LieAlgebra<K>>(f, std::move(names), std::move(weights), std::move(t));
  if (alg->jacobi_failures() != 0) throw Error(ErrorKind::CertificateFailed, "Chevalley signs violate Jacobi");
  return ChevalleyAlgebra<K>(g0, std::move(alg), std::move(roots));
}

/// u = n+ x| g/n+ for an affine diagram: n+ of the finite subsystem acting on
/// the quotient module g/n+, which has zero bracket. Grading in Z^Pi: E_beta
/// in n+ has weight beta, the image of g_beta (beta <= 0) has weight
/// delta + beta.
template <Scalar K>
struct SemidirectU {
  std::shared_ptr<const LieAlgebra<K>> algebra;
  std::vector<int> nplus;     // indices of E_beta, beta > 0
  std::vector<int> quotient;  // indices of the images of H_x and E_beta, beta < 0
  std::map<WeightVec, int> root_vector;  // finite root (in Z^Pi) -> index in u
  int x0 = 0;
};

template <Scalar K>
SemidirectU<K> semidirect_u(const SimpleGraph& g, const FieldSpec& f) {
  auto cls = classify(g);
  if (!cls.is_affine()) throw Error(ErrorKind::NotFiniteType, "semidirect_u needs an affine diagram (its finite part)");
  auto aff = theta_weights(g);
  std::vector<int> rest;
  for (int v = 0; v < static_cast<int>(g.size()); ++v)
    if (v != aff.x0) rest.push_back(v);
  auto chev = build_chevalley<K>(g.induced(rest), f);
  const auto& ga = chev.algebra();
  const std::size_t n0 = rest.size();
  auto embed = [&](const WeightVec& w) {
    WeightVec full(g.size());
    for (std::size_t i = 0; i < n0; ++i) full[rest[i]] = w[i];
    return full;
  };
  // u index for each g index: n+ first, then H's, then negative roots.
  std::vector<int> to_u(ga.dimension(), -1);
  std::vector<std::string> names;
  std::vector<WeightVec> weights;
  SemidirectU<K> out;
  out.x0 = aff.x0;
  auto add = [&](int gi, const std::string& nm, const WeightVec& w) {
    to_u[gi] = static_cast<int>(names.size());
    names.push_back(nm);
    weights.push_back(w);
  };
  for (std::size_t i = 0; i < chev.positive_count(); ++i) {
    const auto& r = chev.roots()[i];
    add(chev.e_index(r), ga.name(chev.e_index(r)), embed(r));
    out.nplus.push_back(to_u[chev.e_index(r)]);
    out.root_vector[embed(r)] = to_u[chev.e_index(r)];
  }
  for (std::size_t x = 0; x < n0; ++x) {
    add(static_cast<int>(x), "[" + ga.name(x) + "]", aff.delta);
    out.quotient.push_back(to_u[x]);
  }
  for (std::size_t i = chev.positive_count(); i < chev.roots().size(); ++i) {
    const auto& r = chev.roots()[i];
    add(chev.e_index(r), "[" + ga.name(chev.e_index(r)) + "]", aff.delta + embed(r));
    out.quotient.push_back(to_u[chev.e_index(r)]);
    out.root_vector[embed(r)] = to_u[chev.e_index(r)];
  }
  const std::size_t dim = names.size();
  std::vector<bool> in_nplus(ga.dimension(), false);
  for (std::size_t i = 0; i < chev.positive_count(); ++i) in_nplus[chev.e_index(chev.roots()[i])] = true;
  std::vector<std::vector<SparseVec<K>>> t(dim, std::vector<SparseVec<K>>(dim));
  for (std::size_t i = 0; i < ga.dimension(); ++i) {
    if (!in_nplus[i]) continue;
    for (std::size_t j = 0; j < ga.dimension(); ++j) {
      SparseVec<K> v;
      for (const auto& [k, c] : ga.structure(i, j).entries())
        if (in_nplus[j] == in_nplus[k]) v.add(to_u[k], c);  // n+ stays in n+, quotient drops n+
      t[to_u[i]][to_u[j]] = v;
      if (!in_nplus[j]) t[to_u[j]][to_u[i]] = -v;
    }
  }
  out.algebra = std::make_shared<const LieAlgebra<K>>(f, std::move(names), std::move(weights), std::move(t));
  return out;
}

/// sl_n as trace-zero matrices. Basis: H_i = E_ii - E_{i+1,i+1} (i < n-1),
/// then E_ij for i != j in row-major order; 0-based indices.
template <Scalar K>
class SlnModel {
 public:
  SlnModel(const FieldSpec& f, int n) : f_(f), n_(n) {
    if (n < 2) throw Error(ErrorKind::PreconditionViolated, "sl_n needs n >= 2");
    std::vector<std::string> names;
    std::vector<WeightVec> weights;
    for (int i = 0; i + 1 < n; ++i) {
      names.push_back("H" + std::to_string(i + 1));
      weights.emplace_back(static_cast<std::size_t>(n - 1));
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        eidx_[{i, j}] = static_cast<int>(names.size());
        names.push_back("E" + std::to_string(i + 1) + "," + std::to_string(j + 1));
        WeightVec w(static_cast<std::size_t>(n - 1));
        for (int k = std::min(i, j); k < std::max(i, j); ++k) w[k] = i < j ? 1 : -1;
        weights.push_back(w);
      }
    const std::size_t dim = names.size();
    std::vector<std::vector<SparseVec<K>>> t(dim, std::vector<SparseVec<K>>(dim));
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) {
        Matrix<K> m = basis_matrix(a), p = basis_matrix(b);
        Matrix<K> c = m * p;
        Matrix<K> d = p * m;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) c(i, j) -= d(i, j);
        t[a][b] = SparseVec<K>::from_dense(from_matrix_raw(c));
      }
    alg_ = std::make_shared<const LieAlgebra<K>>(f, std::move(names), std::move(weights), std::move(t));
  }

  int n() const { return n_; }
  const LieAlgebra<K>& algebra() const { return *alg_; }
  std::shared_ptr<const LieAlgebra<K>> algebra_ptr() const { return alg_; }
  int e_index(int i, int j) const { return eidx_.at({i, j}); }

  Vec<K> from_matrix(const Matrix<K>& m) const {
    K tr = from_int<K>(f_, 0);
    for (int i = 0; i < n_; ++i) tr += m(i, i);
    if (!tr.is_zero()) throw Error(ErrorKind::PreconditionViolated, "matrix is not trace-zero");
    return from_matrix_raw(m);
  }

  Matrix<K> to_matrix(const Vec<K>& v) const {
    Matrix<K> m(f_, n_, n_);
    for (std::size_t a = 0; a < v.size(); ++a) {
      if (v[a].is_zero()) continue;
      Matrix<K> b = basis_matrix(a);
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m(i, j) += v[a] * b(i, j);
    }
    return m;
  }

  /// Triple (E_{i,j}, E_ii - E_jj, E_{j,i}).
  Sl2Triple<K> triple(int i, int j) const {
    Matrix<K> h(f_, n_, n_);
    h(i, i) = from_int<K>(f_, 1);
    h(j, j) = from_int<K>(f_, -1);
    return {from_matrix(unit_matrix(i, j)), from_matrix(h), from_matrix(unit_matrix(j, i))};
  }

 private:
  Matrix<K> unit_matrix(int i, int j) const {
    Matrix<K> m(f_, n_, n_);
    m(i, j) = from_int<K>(f_, 1);
    return m;
  }

  Matrix<K> basis_matrix(std::size_t a) const {
    const std::size_t nh = static_cast<std::size_t>(n_ - 1);
    Matrix<K> m(f_, n_, n_);
    if (a < nh) {
      m(a, a) = from_int<K>(f_, 1);
      m(a + 1, a + 1) = from_int<K>(f_, -1);
      return m;
    }
    std::size_t k = a - nh;
    int i = static_cast<int>(k / (n_ - 1));
    int r = static_cast<int>(k % (n_ - 1));
    int j = r < i ? r : r + 1;
    m(i, j) = from_int<K>(f_, 1);
    return m;
  }

  Vec<K> from_matrix_raw(const Matrix<K>& m) const {
    const std::size_t nh = static_cast<std::size_t>(n_ - 1);
    Vec<K> v(nh + static_cast<std::size_t>(n_ * (n_ - 1)), from_int<K>(f_, 0));
    K run = from_int<K>(f_, 0);
    for (std::size_t i = 0; i < nh; ++i) {
      run += m(i, i);
      v[i] = run;
    }
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (i != j) v[eidx_.at({i, j})] = m(i, j);
    return v;
  }

  FieldSpec f_;
  int n_;
  std::map<std::pair<int, int>, int> eidx_;
  std::shared_ptr<const LieAlgebra<K>> alg_;
};

}  // namespace extremal
