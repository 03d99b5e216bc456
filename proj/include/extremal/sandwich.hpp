#pragma once

// Graded covering construction of the sandwich algebra L(0).
//
// Degree d, weight mu: the spanning symbols are the formal products x o b with
// b a basis element of weight mu - alpha_x. Relations among them come from
// antisymmetry on basis pairs, Jacobi on basis triples, [x,[x,c]] = h_x(c) x
// and [x,y] = 0 for non-adjacent generators. Non-pivot symbols of the reduced
// relation matrix become basis elements. With h = 0 this is L(0); replaying
// the selected relation rows with non-zero h builds the filtered bracket on
// the same basis (see lfspace.hpp).

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "extremal/diagram.hpp"
#include "extremal/error.hpp"
#include "extremal/field.hpp"
#include "extremal/graph.hpp"
#include "extremal/matrix.hpp"
#include "extremal/sparse.hpp"

namespace extremal {

struct BasisElement {
  Word word;  // outermost letter first
  WeightVec weight;
  int degree = 0;
  int head = -1;  // first letter
  int tail = -1;  // basis index of the word without its first letter; -1 for generators
};

enum class RowKind { Commute, Unit, Sandwich, Antisymmetry, Jacobi };

struct RowDesc {
  RowKind kind;
  int a = -1, b = -1, c = -1;
};

/// Everything recorded while reducing one weight space. Columns of `reduced`
/// list the symbols in descending order, so the surviving (basis) symbols are
/// the lexicographically least ones.
template <Scalar K>
struct WeightStage {
  WeightVec weight;
  int degree = 0;
  std::vector<std::pair<int, int>> symbols;  // (x, b), ascending
  std::map<std::pair<int, int>, int> index;
  bool skipped = false;  // ruled out by the root lemma, no rows computed
  std::vector<RowDesc> rows;
  std::optional<Matrix<K>> reduced;
  std::optional<Matrix<K>> transform;
  std::vector<int> pivot_symbols;
  std::vector<int> basis_symbols;
  std::vector<int> basis_ids;

  std::size_t column_of(int s) const { return symbols.size() - 1 - static_cast<std::size_t>(s); }
};

enum class SandwichMode {
  Certificates,  // keep every relation certificate; required for L(f)
  Pruned         // L(0) only: vanishing lemmas skip work, same basis
};

/// Lemma: if <alpha_x, weight of the rest> >= 0 the word vanishes in L(0).
inline bool reduce_lemma_kills(const SimpleGraph& g, const Word& w) {
  if (w.size() < 2) return false;
  Word rest(w.begin() + 1, w.end());
  return pair_simple(g, w[0], g.weight_of(rest)) >= 0;
}

/// Lemma: two consecutive occurrences of x with at most one neighbour of x
/// between them kill the word in L(0).
inline bool at_least_two_lemma_kills(const SimpleGraph& g, const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[j] != w[i]) continue;
      int nb = 0;
      for (std::size_t k = i + 1; k < j; ++k) nb += g.adjacent(w[i], w[k]);
      if (nb <= 1) return true;
      break;
    }
  return false;
}

namespace detail {

template <Scalar K>
struct GradedData {
  std::vector<BasisElement> basis;
  std::map<WeightVec, std::vector<int>> by_weight;
  std::vector<std::vector<int>> by_degree;  // by_degree[d]
  std::vector<std::vector<SparseVec<K>>> table;
  std::map<std::pair<int, int>, SparseVec<K>> symval;
  int max_degree = 0;
};

template <Scalar K>
class Builder {
 public:
  enum class Mode { Discover, Prune, Replay };
  using ParamFn = std::function<K(int x, int c)>;
  using Stages = std::map<WeightVec, WeightStage<K>>;

  Builder(const SimpleGraph& g, const FieldSpec& f, Mode mode, int cap)
      : g_(g), f_(f), mode_(mode), cap_(cap), zero_(from_int<K>(f, 0)), one_(from_int<K>(f, 1)) {}

  void set_source(const GradedData<K>* data, const Stages* stages) {
    src_data_ = data;
    src_stages_ = stages;
  }
  void set_params(ParamFn fn) { params_ = std::move(fn); }
  void set_root_filter(std::function<bool(const WeightVec&)> fn) { root_filter_ = std::move(fn); }

  void run() {
    init();
    for (int d = 2;; ++d) {
      if (static_cast<std::size_t>(d - 1) >= data_.by_degree.size() || data_.by_degree[d - 1].empty()) break;
      begin_degree(d);
      if (data_.by_degree.size() <= static_cast<std::size_t>(d)) data_.by_degree.resize(d + 1);
      if (mode_ == Mode::Replay) {
        for (const auto& [w, st] : *src_stages_)
          if (st.degree == d) {
            cur_stages_[w] = &st;
            replay_stage(st);
          }
      } else {
        discover_degree(d);
      }
      if (d > cap_ && !data_.by_degree[d].empty())
        throw Error(ErrorKind::DegreeCapExceeded, "basis still non-empty at degree " + std::to_string(d));
      grow_table();
      compute_pairs(d);
    }
    int top = 0;
    for (std::size_t d = 0; d < data_.by_degree.size(); ++d)
      if (!data_.by_degree[d].empty()) top = static_cast<int>(d);
    data_.max_degree = top;
    if (mode_ == Mode::Replay) {
      for (int d = top + 2; d <= 2 * top; ++d) {
        begin_degree(d);
        compute_pairs(d);
      }
    }
    cur_stages_.clear();
    memo_.clear();
  }

  GradedData<K>& data() { return data_; }
  Stages& stages() { return stages_; }

  // Read access to finalized parts, for parameter callbacks.
  const SparseVec<K>& symval(int x, int b) const {
    auto it = data_.symval.find({x, b});
    if (it == data_.symval.end())
      throw Error(ErrorKind::UnknownBasisElement, "product of generator " + std::to_string(x) + " with basis element " +
                                                      std::to_string(b) + " not yet available");
    return it->second;
  }
  const SparseVec<K>& entry(int u, int v) const { return data_.table.at(u).at(v); }

  SparseVec<K> apply_gen(int z, const SparseVec<K>& e) const {
    SparseVec<K> r;
    for (const auto& [k, c] : e.entries()) r.axpy(c, symval(z, k));
    return r;
  }
  SparseVec<K> bracket(const SparseVec<K>& a, const SparseVec<K>& b) const {
    SparseVec<K> r;
    for (const auto& [i, ci] : a.entries())
      for (const auto& [j, cj] : b.entries()) r.axpy(ci * cj, entry(i, j));
    return r;
  }
  const std::vector<BasisElement>& basis() const { return data_.basis; }

 private:
  struct Mixed {
    Vec<K> top;
    SparseVec<K> lower;
  };

  void init() {
    if (mode_ == Mode::Replay) {
      data_.basis = src_data_->basis;
      data_.by_weight = src_data_->by_weight;
      data_.by_degree = src_data_->by_degree;
    } else {
      data_.by_degree.assign(2, {});
      for (std::size_t x = 0; x < g_.size(); ++x) {
        BasisElement e;
        e.word = {static_cast<int>(x)};
        e.weight = g_.simple_root(static_cast<int>(x));
        e.degree = 1;
        e.head = static_cast<int>(x);
        data_.by_weight[e.weight].push_back(static_cast<int>(x));
        data_.by_degree[1].push_back(static_cast<int>(x));
        data_.basis.push_back(std::move(e));
      }
    }
    grow_table();
  }

  void begin_degree(int d) {
    cur_degree_ = d;
    memo_.clear();
    cur_stages_.clear();
  }

  void grow_table() {
    std::size_t n = data_.basis.size();
    data_.table.resize(n);
    for (auto& row : data_.table) row.resize(n);
  }

  int deg(int i) const { return data_.basis[i].degree; }
  const WeightVec& wt(int i) const { return data_.basis[i].weight; }

  const WeightStage<K>* stage_for(const WeightVec& w) const {
    auto it = cur_stages_.find(w);
    return it == cur_stages_.end() ? nullptr : it->second;
  }

  const std::vector<int>* basis_of(const WeightVec& w) const {
    if (!w.is_nonnegative()) return nullptr;
    auto it = data_.by_weight.find(w);
    return it == data_.by_weight.end() ? nullptr : &it->second;
  }

  Mixed empty_mixed(const WeightStage<K>* st) const {
    return Mixed{Vec<K>(st ? st->symbols.size() : 0, zero_), {}};
  }

  void add_into(Mixed& m, const K& c, const Mixed& o) const {
    if (c.is_zero()) return;
    if (m.top.size() != o.top.size()) throw Error(ErrorKind::DimensionMismatch, "mixed weight spaces");
    for (std::size_t s = 0; s < o.top.size(); ++s)
      if (!o.top[s].is_zero()) m.top[s] += c * o.top[s];
    m.lower.axpy(c, o.lower);
  }

  // c * [z, e] for e a finalized element, accumulated into m.
  void add_gen(Mixed& m, const WeightStage<K>* st, int z, const SparseVec<K>& e, const K& c) {
    for (const auto& [k, ck] : e.entries()) {
      if (deg(k) + 1 == cur_degree_) m.top[st->index.at({z, k})] += c * ck;
      else m.lower.axpy(c * ck, symval(z, k));
    }
  }

  // [u, e] for e a finalized element.
  Mixed bracket_mixed(int u, const SparseVec<K>& e, const WeightStage<K>* st) {
    Mixed m = empty_mixed(st);
    for (const auto& [k, ck] : e.entries()) {
      if (deg(u) + deg(k) == cur_degree_) add_into(m, ck, rho(u, k));
      else m.lower.axpy(ck, entry(u, k));
    }
    return m;
  }

  // [u, v] for basis elements of total degree cur_degree_.
  const Mixed& rho(int u, int v) {
    auto key = std::make_pair(u, v);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const WeightStage<K>* st = stage_for(wt(u) + wt(v));
    Mixed m = empty_mixed(st);
    const BasisElement& bu = data_.basis[u];
    if (bu.tail < 0) {
      if (!st) throw Error(ErrorKind::UnknownBasisElement, "missing weight stage");
      m.top[st->index.at({u, v})] = one_;
    } else {
      // [[z,u'],v] = [z,[u',v]] - [u',[z,v]]
      add_gen(m, st, bu.head, entry(bu.tail, v), one_);
      Mixed t = bracket_mixed(bu.tail, symval(bu.head, v), st);
      add_into(m, -one_, t);
    }
    return memo_.emplace(key, std::move(m)).first->second;
  }

  Mixed eval_row(const WeightStage<K>& st, const RowDesc& r) {
    switch (r.kind) {
      case RowKind::Commute:
        return rho(r.a, r.b);
      case RowKind::Unit: {
        Mixed m = empty_mixed(&st);
        m.top[r.a] = one_;
        return m;
      }
      case RowKind::Sandwich: {
        Mixed m = bracket_mixed(r.a, symval(r.a, r.b), &st);
        if (params_) {
          K h = params_(r.a, r.b);
          m.lower.add(r.a, -h);
        }
        return m;
      }
      case RowKind::Antisymmetry: {
        Mixed m = rho(r.a, r.b);
        add_into(m, one_, rho(r.b, r.a));
        return m;
      }
      case RowKind::Jacobi: {
        Mixed m = bracket_mixed(r.a, entry(r.b, r.c), &st);
        add_into(m, one_, bracket_mixed(r.b, entry(r.c, r.a), &st));
        add_into(m, one_, bracket_mixed(r.c, entry(r.a, r.b), &st));
        return m;
      }
    }
    throw Error(ErrorKind::PreconditionViolated, "unknown row kind");
  }

  // Calls fn on each relation instance of the stage until fn returns false.
  template <class Fn>
  void enumerate_rows(const WeightStage<K>& st, Fn&& fn) {
    const WeightVec& mu = st.weight;
    const int d = st.degree;
    const int n = static_cast<int>(g_.size());
    if (d == 2)
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
          if (!g_.adjacent(x, y) && mu == g_.simple_root(x) + g_.simple_root(y))
            if (!fn(RowDesc{RowKind::Commute, x, y})) return;
    if (mode_ == Mode::Prune)
      for (std::size_t s = 0; s < st.symbols.size(); ++s) {
        auto [x, b] = st.symbols[s];
        Word w{x};
        w.insert(w.end(), data_.basis[b].word.begin(), data_.basis[b].word.end());
        if (reduce_lemma_kills(g_, w) || at_least_two_lemma_kills(g_, w))
          if (!fn(RowDesc{RowKind::Unit, static_cast<int>(s)})) return;
      }
    for (int x = 0; x < n; ++x) {
      WeightVec rest = mu - 2 * g_.simple_root(x);
      if (auto* cs = basis_of(rest))
        for (int c : *cs)
          if (!fn(RowDesc{RowKind::Sandwich, x, c})) return;
    }
    const int nb = static_cast<int>(data_.basis.size());
    for (int u = 0; u < nb; ++u) {
      if (deg(u) >= d) break;
      if (auto* vs = basis_of(mu - wt(u)))
        for (int v : *vs)
          if (v >= u && !fn(RowDesc{RowKind::Antisymmetry, u, v})) return;
    }
    for (int u = 0; u < nb; ++u) {
      if (deg(u) + 2 > d) break;
      WeightVec r1 = mu - wt(u);
      if (!r1.is_nonnegative()) continue;
      for (int v = u + 1; v < nb; ++v) {
        if (deg(u) + deg(v) + 1 > d) break;
        if (auto* ws = basis_of(r1 - wt(v)))
          for (int w : *ws)
            if (w > v && !fn(RowDesc{RowKind::Jacobi, u, v, w})) return;
      }
    }
  }

  void discover_degree(int d) {
    const int n = static_cast<int>(g_.size());
    std::map<WeightVec, std::vector<std::pair<int, int>>> syms;
    for (int x = 0; x < n; ++x)
      for (int b : data_.by_degree[d - 1]) syms[g_.simple_root(x) + wt(b)].emplace_back(x, b);
    for (auto& [w, list] : syms) {
      std::sort(list.begin(), list.end());
      WeightStage<K>& st = stages_[w];
      st.weight = w;
      st.degree = d;
      st.symbols = list;
      for (std::size_t s = 0; s < list.size(); ++s) st.index[list[s]] = static_cast<int>(s);
      cur_stages_[w] = &st;
    }
    for (auto& [w, list] : syms) discover_stage(stages_[w]);
  }

  void discover_stage(WeightStage<K>& st) {
    const std::size_t ns = st.symbols.size();
    std::vector<Vec<K>> selected;
    std::vector<SparseVec<K>> lowers;
    if (mode_ == Mode::Prune && root_filter_ && !root_filter_(st.weight)) {
      st.skipped = true;
      for (std::size_t s = 0; s < ns; ++s) {
        selected.push_back(unit<K>(f_, ns, st.column_of(static_cast<int>(s))));
        lowers.emplace_back();
      }
    } else {
      EchelonBasis<K> ech(f_, ns);
      enumerate_rows(st, [&](const RowDesc& r) {
        Mixed m = eval_row(st, r);
        Vec<K> col(ns, zero_);
        for (std::size_t s = 0; s < ns; ++s) col[st.column_of(static_cast<int>(s))] = m.top[s];
        if (ech.insert(col)) {
          st.rows.push_back(r);
          selected.push_back(std::move(col));
          lowers.push_back(std::move(m.lower));
        }
        return ech.rank() < ns;
      });
    }
    Matrix<K> a = Matrix<K>::from_rows(f_, ns, selected);
    auto rr = rref(a);
    std::vector<bool> pivot(ns, false);
    for (auto c : rr.pivot_columns) {
      int s = static_cast<int>(ns - 1 - c);
      pivot[s] = true;
      st.pivot_symbols.push_back(s);
    }
    for (std::size_t s = 0; s < ns; ++s) {
      if (pivot[s]) continue;
      auto [x, b] = st.symbols[s];
      BasisElement e;
      e.word = {x};
      e.word.insert(e.word.end(), data_.basis[b].word.begin(), data_.basis[b].word.end());
      e.weight = st.weight;
      e.degree = st.degree;
      e.head = x;
      e.tail = b;
      int id = static_cast<int>(data_.basis.size());
      data_.basis.push_back(std::move(e));
      data_.by_weight[st.weight].push_back(id);
      data_.by_degree[st.degree].push_back(id);
      st.basis_symbols.push_back(static_cast<int>(s));
      st.basis_ids.push_back(id);
    }
    st.reduced = std::move(rr.reduced);
    st.transform = std::move(rr.transform);
    if (st.skipped) st.rows.clear();
    finalize(st, lowers);
  }

  void replay_stage(const WeightStage<K>& st) {
    if (st.skipped) throw Error(ErrorKind::CertificateFailed, "pruned sandwich algebra carries no certificates");
    std::vector<SparseVec<K>> lowers;
    for (const auto& r : st.rows) lowers.push_back(eval_row(st, r).lower);
    finalize(st, lowers);
  }

  // sym_{p_i} = -sum_j R[i][j] sym_{basis j} - sum_r T[i][r] lower_r
  void finalize(const WeightStage<K>& st, const std::vector<SparseVec<K>>& lowers) {
    for (std::size_t i = 0; i < st.basis_symbols.size(); ++i)
      data_.symval[st.symbols[st.basis_symbols[i]]] = SparseVec<K>::unit(f_, st.basis_ids[i]);
    const Matrix<K>& r = *st.reduced;
    const Matrix<K>& t = *st.transform;
    for (std::size_t i = 0; i < st.pivot_symbols.size(); ++i) {
      SparseVec<K> v;
      for (std::size_t j = 0; j < st.basis_symbols.size(); ++j)
        v.add(st.basis_ids[j], -r(i, st.column_of(st.basis_symbols[j])));
      for (std::size_t k = 0; k < lowers.size(); ++k) v.axpy(-t(i, k), lowers[k]);
      data_.symval[st.symbols[st.pivot_symbols[i]]] = std::move(v);
    }
  }

  SparseVec<K> resolve(const Mixed& m, const WeightStage<K>* st) const {
    SparseVec<K> v = m.lower;
    for (std::size_t s = 0; s < m.top.size(); ++s)
      if (!m.top[s].is_zero()) v.axpy(m.top[s], symval(st->symbols[s].first, st->symbols[s].second));
    return v;
  }

  void compute_pairs(int d) {
    const int nb = static_cast<int>(data_.basis.size());
    for (int u = 0; u < nb; ++u) {
      if (deg(u) >= d) break;
      for (int v = 0; v < nb; ++v) {
        if (deg(u) + deg(v) < d) continue;
        if (deg(u) + deg(v) > d) break;
        WeightVec w = wt(u) + wt(v);
        if (mode_ != Mode::Replay && !basis_of(w)) continue;
        data_.table[u][v] = resolve(rho(u, v), stage_for(w));
      }
    }
  }

  const SimpleGraph& g_;
  FieldSpec f_;
  Mode mode_;
  int cap_;
  K zero_, one_;
  const GradedData<K>* src_data_ = nullptr;
  const Stages* src_stages_ = nullptr;
  ParamFn params_;
  std::function<bool(const WeightVec&)> root_filter_;

  GradedData<K> data_;
  Stages stages_;
  int cur_degree_ = 0;
  std::map<WeightVec, const WeightStage<K>*> cur_stages_;
  std::map<std::pair<int, int>, Mixed> memo_;
};

/// Sound filter for Dynkin diagrams: non-roots have zero weight spaces.
inline std::function<bool(const WeightVec&)> root_filter(const SimpleGraph& g) {
  auto cls = classify(g);
  if (cls.is_finite()) {
    auto roots = positive_roots(g);
    std::set<WeightVec> set(roots.begin(), roots.end());
    return [set](const WeightVec& w) { return set.count(w) > 0; };
  }
  if (cls.is_affine()) {
    auto a = theta_weights(g);
    std::set<WeightVec> set;
    for (const auto& b : a.finite_positive) {
      set.insert(b);
      set.insert(-b);
    }
    set.insert(WeightVec(g.size()));
    int x0 = a.x0;
    WeightVec delta = a.delta;
    return [set, x0, delta](const WeightVec& w) { return set.count(w - w[x0] * delta) > 0; };
  }
  return {};
}

}  // namespace detail

template <Scalar K>
class SandwichAlgebra {
 public:
  SandwichAlgebra(SimpleGraph g, FieldSpec f, detail::GradedData<K> data,
                  std::map<WeightVec, WeightStage<K>> stages, bool certified)
      : graph_(std::move(g)), field_(f), data_(std::move(data)), stages_(std::move(stages)), certified_(certified) {
    for (std::size_t i = 0; i < data_.basis.size(); ++i) word_index_[data_.basis[i].word] = static_cast<int>(i);
  }

  const SimpleGraph& graph() const { return graph_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<BasisElement>& basis() const { return data_.basis; }
  std::size_t dimension() const { return data_.basis.size(); }
  int max_degree() const { return data_.max_degree; }
  bool has_certificates() const { return certified_; }
  const std::map<WeightVec, WeightStage<K>>& stages() const { return stages_; }
  const detail::GradedData<K>& data() const { return data_; }

  const std::vector<int>& basis_of_weight(const WeightVec& w) const {
    static const std::vector<int> none;
    auto it = data_.by_weight.find(w);
    return it == data_.by_weight.end() ? none : it->second;
  }

  std::map<WeightVec, int> multiplicities() const {
    std::map<WeightVec, int> m;
    for (const auto& [w, ids] : data_.by_weight)
      if (!ids.empty()) m[w] = static_cast<int>(ids.size());
    return m;
  }

  std::optional<int> index_of(const Word& w) const {
    auto it = word_index_.find(w);
    if (it == word_index_.end()) return std::nullopt;
    return it->second;
  }

  /// [b_u, b_v]
  const SparseVec<K>& structure(int u, int v) const {
    check_index(u);
    check_index(v);
    return data_.table[u][v];
  }

  /// Expansion of the symbol x o b, i.e. [x, b], over the basis.
  const SparseVec<K>& symbol_value(int x, int b) const {
    auto it = data_.symval.find({x, b});
    if (it == data_.symval.end()) throw Error(ErrorKind::UnknownBasisElement, "no such symbol");
    return it->second;
  }

  void check_index(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= data_.basis.size())
      throw Error(ErrorKind::UnknownBasisElement, "basis index " + std::to_string(i) + " out of range");
  }

 private:
  SimpleGraph graph_;
  FieldSpec field_;
  detail::GradedData<K> data_;
  std::map<WeightVec, WeightStage<K>> stages_;
  bool certified_;
  std::map<Word, int> word_index_;
};

template <Scalar K>
SandwichAlgebra<K> compute_sandwich(const SimpleGraph& g, const FieldSpec& f, int degree_cap = 64,
                                    SandwichMode mode = SandwichMode::Certificates) {
  if (degree_cap < 1) throw Error(ErrorKind::PreconditionViolated, "degree cap must be at least 1");
  using B = detail::Builder<K>;
  B b(g, f, mode == SandwichMode::Pruned ? B::Mode::Prune : B::Mode::Discover, degree_cap);
  if (mode == SandwichMode::Pruned) b.set_root_filter(detail::root_filter(g));
  b.run();
  return SandwichAlgebra<K>(g, f, std::move(b.data()), std::move(b.stages()), mode == SandwichMode::Certificates);
}

/// Bilinear extension of the structure constants of L(0).
template <Scalar K>
SparseVec<K> bracket_in_L0(const SandwichAlgebra<K>& alg, const SparseVec<K>& u, const SparseVec<K>& v) {
  SparseVec<K> r;
  for (const auto& [i, ci] : u.entries())
    for (const auto& [j, cj] : v.entries()) r.axpy(ci * cj, alg.structure(i, j));
  return r;
}

struct WeightCheck {
  WeightVec weight;
  int expected = 0;
  int actual = 0;
  bool ok = false;
};

struct SandwichTheoremReport {
  bool pass = true;
  std::size_t dimension = 0;
  std::vector<WeightCheck> weights;
};

/// Compares the weight multiplicities with Phi_+ (finite type) or with Theta,
/// multiplicity |Pi^0| at delta (affine type).
template <Scalar K>
SandwichTheoremReport verify_sandwich_theorems(const SandwichAlgebra<K>& alg, const DynkinClass& cls) {
  if (!cls.is_dynkin()) throw Error(ErrorKind::NotDynkin, "theorem check needs a Dynkin diagram");
  const auto& g = alg.graph();
  std::map<WeightVec, int> expected;
  if (cls.is_finite()) {
    for (const auto& r : positive_roots(g)) expected[r] = 1;
  } else {
    auto a = theta_weights(g);
    for (const auto& w : a.theta_set) expected[w] = w == a.delta ? static_cast<int>(g.size()) - 1 : 1;
  }
  auto actual = alg.multiplicities();
  std::set<WeightVec> all;
  for (const auto& [w, _] : expected) all.insert(w);
  for (const auto& [w, _] : actual) all.insert(w);
  SandwichTheoremReport rep;
  rep.dimension = alg.dimension();
  for (const auto& w : all) {
    WeightCheck c{w, expected.count(w) ? expected[w] : 0, actual.count(w) ? actual[w] : 0, false};
    c.ok = c.expected == c.actual;
    rep.pass = rep.pass && c.ok;
    rep.weights.push_back(c);
  }
  return rep;
}

}  // namespace extremal
