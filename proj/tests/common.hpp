#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>

#include "extremal/extremal.hpp"
#include "oracles.hpp"

namespace testing_support {

using namespace extremal;

inline const FieldSpec Q = FieldSpec::rationals();
inline const FieldSpec F5 = FieldSpec::prime(5);

inline SimpleGraph triangle() { return SimpleGraph({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"x", "z"}}); }
inline SimpleGraph single_edge() { return SimpleGraph({"x", "y"}, {{"x", "y"}}); }

inline oracle::Adj adjacency(const SimpleGraph& g) {
  oracle::Adj a(g.size(), std::vector<bool>(g.size(), false));
  for (auto [x, y] : g.edges()) a[x][y] = a[y][x] = true;
  return a;
}

inline std::map<WeightVec, int> to_weights(const std::map<oracle::Vec, int>& m) {
  std::map<WeightVec, int> r;
  for (const auto& [v, k] : m) {
    WeightVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i];
    r[w] = k;
  }
  return r;
}

// Sandwich algebras are reused across tests; keyed by diagram name and field.
template <Scalar K>
const SandwichAlgebra<K>& sandwich(const std::string& diagram, const FieldSpec& f) {
  static std::map<std::pair<std::string, std::string>, std::unique_ptr<SandwichAlgebra<K>>> cache;
  auto key = std::make_pair(diagram, f.to_string());
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<SandwichAlgebra<K>>(compute_sandwich<K>(builtin_diagram(diagram), f));
  return *slot;
}

template <Scalar K>
std::map<std::pair<int, int>, K> random_edges(const SimpleGraph& g, const FieldSpec& f, std::mt19937_64& rng) {
  std::map<std::pair<int, int>, K> e;
  for (auto [x, y] : g.edges()) e[{x, y}] = K::random(f, rng);
  return e;
}

template <Scalar K>
ParameterSet<K> random_member(const SandwichAlgebra<K>& sand, std::mt19937_64& rng) {
  auto cls = classify(sand.graph());
  std::optional<K> delta;
  if (cls.is_affine()) delta = K::random(sand.field(), rng);
  return complete_parameters(sand, cls, random_edges<K>(sand.graph(), sand.field(), rng), delta);
}

}  // namespace testing_support
