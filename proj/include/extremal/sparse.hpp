#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "extremal/field.hpp"
#include "extremal/matrix.hpp"

namespace extremal {

/// Sparse coordinate vector over a basis, kept sorted by index with no
/// stored zeros.
template <Scalar K>
class SparseVec {
 public:
  using Entry = std::pair<int, K>;

  SparseVec() = default;

  static SparseVec unit(const FieldSpec& f, int i) {
    SparseVec v;
    v.e_.emplace_back(i, from_int<K>(f, 1));
    return v;
  }

  const std::vector<Entry>& entries() const { return e_; }
  std::size_t nnz() const { return e_.size(); }
  bool is_zero() const { return e_.empty(); }

  /// Coefficient at i; `zero` is returned when absent.
  K get(int i, const K& zero) const {
    auto it = find(i);
    return it == e_.end() ? zero : it->second;
  }

  void add(int i, const K& c) {
    if (c.is_zero()) return;
    auto it = lower(i);
    if (it != e_.end() && it->first == i) {
      it->second += c;
      if (it->second.is_zero()) e_.erase(it);
    } else {
      e_.insert(it, Entry(i, c));
    }
  }

  /// this += c * o
  void axpy(const K& c, const SparseVec& o) {
    if (c.is_zero() || o.e_.empty()) return;
    std::vector<Entry> out;
    out.reserve(e_.size() + o.e_.size());
    std::size_t i = 0, j = 0;
    while (i < e_.size() || j < o.e_.size()) {
      if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
        out.push_back(std::move(e_[i++]));
      } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
        out.emplace_back(o.e_[j].first, c * o.e_[j].second);
        ++j;
      } else {
        K s = e_[i].second + c * o.e_[j].second;
        if (!s.is_zero()) out.emplace_back(e_[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    e_ = std::move(out);
  }

  SparseVec& operator+=(const SparseVec& o) {
    for (const auto& [i, c] : o.e_) add(i, c);
    return *this;
  }
  SparseVec& operator-=(const SparseVec& o) {
    for (const auto& [i, c] : o.e_) add(i, -c);
    return *this;
  }
  SparseVec& operator*=(const K& c) {
    if (c.is_zero()) {
      e_.clear();
      return *this;
    }
    for (auto& [i, v] : e_) v *= c;
    return *this;
  }
  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend SparseVec operator*(const K& c, SparseVec a) { return a *= c; }
  SparseVec operator-() const {
    SparseVec r = *this;
    for (auto& [i, v] : r.e_) v = -v;
    return r;
  }

  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.e_ == b.e_; }

  Vec<K> dense(const FieldSpec& f, std::size_t n) const {
    Vec<K> v(n, from_int<K>(f, 0));
    for (const auto& [i, c] : e_) v.at(i) = c;
    return v;
  }

  static SparseVec from_dense(const Vec<K>& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) s.e_.emplace_back(static_cast<int>(i), v[i]);
    return s;
  }

 private:
  typename std::vector<Entry>::iterator lower(int i) {
    auto it = e_.begin();
    std::size_t lo = 0, hi = e_.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (e_[mid].first < i) lo = mid + 1;
      else hi = mid;
    }
    return it + static_cast<std::ptrdiff_t>(lo);
  }
  typename std::vector<Entry>::const_iterator find(int i) const {
    std::size_t lo = 0, hi = e_.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (e_[mid].first < i) lo = mid + 1;
      else hi = mid;
    }
    if (lo < e_.size() && e_[lo].first == i) return e_.begin() + static_cast<std::ptrdiff_t>(lo);
    return e_.end();
  }

  std::vector<Entry> e_;
};

}  // namespace extremal
