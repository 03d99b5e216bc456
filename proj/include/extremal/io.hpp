#pragma once

// JSON/CSV serialization for graphs, parameter files and reports.

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "extremal/diagram.hpp"
#include "extremal/generic.hpp"
#include "extremal/lfspace.hpp"
#include "extremal/sandwich.hpp"

namespace extremal {

using Json = nlohmann::ordered_json;

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

/// {"vertices": [labels], "edges": [[a, b], ...]}
inline SimpleGraph graph_from_json(const Json& j) {
  try {
    std::vector<std::string> labels;
    for (const auto& v : j.at("vertices")) labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::ParseError, "edge must be a pair");
      auto lab = [](const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
      edges.emplace_back(lab(e[0]), lab(e[1]));
    }
    return SimpleGraph(std::move(labels), edges);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("graph: ") + e.what());
  }
}

inline Json graph_to_json(const SimpleGraph& g) {
  Json j;
  j["vertices"] = g.labels();
  Json edges = Json::array();
  for (auto [x, y] : g.edges()) edges.push_back({g.label(x), g.label(y)});
  j["edges"] = edges;
  return j;
}

inline Json weight_json(const WeightVec& w) { return Json(w.coeffs()); }

/// Edge-and-delta form of a parameter file, or a raw full parameter set.
template <Scalar K>
struct ParameterInput {
  std::optional<std::map<std::pair<int, int>, K>> edges;
  std::optional<K> delta;
  std::optional<ParameterSet<K>> full;
};

namespace detail {

inline std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw Error(ErrorKind::ParseError, "scalars must be strings or integers, got " + v.dump());
}

inline std::pair<int, int> parse_edge_key(const SimpleGraph& g, const std::string& key) {
  // labels may contain '-', so try every split point
  for (std::size_t p = key.find('-'); p != std::string::npos; p = key.find('-', p + 1)) {
    std::string a = key.substr(0, p), b = key.substr(p + 1);
    int x = -1, y = -1;
    try {
      x = g.index_of(a);
      y = g.index_of(b);
    } catch (const Error&) {
      continue;
    }
    if (!g.adjacent(x, y)) throw Error(ErrorKind::ParseError, "not an edge: " + key);
    return {std::min(x, y), std::max(x, y)};
  }
  throw Error(ErrorKind::ParseError, "bad edge key: " + key);
}

template <Scalar K>
void read_full_entry(const SandwichAlgebra<K>& sand, ParameterSet<K>& p, int x, const std::string& word,
                     const Json& value) {
  auto idx = sand.index_of(sand.graph().parse_word(word));
  if (!idx) throw Error(ErrorKind::UnknownBasisElement, "not a basis word of L(0): " + word);
  p.set(x, *idx, parse_scalar<K>(sand.field(), detail::scalar_text(value)));
}

}  // namespace detail

/// Accepts {"edges": {"a-b": "3/2"}, "delta": "1"} or
/// {"full": {"x": [{"word": "y", "value": "1"}, ...]}}; the full form also
/// accepts {"x": {"y": "1"}} per vertex.
template <Scalar K>
ParameterInput<K> parameters_from_json(const Json& j, const SandwichAlgebra<K>& sand) {
  const auto& g = sand.graph();
  const FieldSpec& f = sand.field();
  ParameterInput<K> in;
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "parameter file must be an object");
  try {
    if (j.contains("full")) {
      if (j.contains("edges") || j.contains("delta"))
        throw Error(ErrorKind::ParseError, "\"full\" cannot be combined with \"edges\"/\"delta\"");
      ParameterSet<K> p(f);
      for (const auto& [label, entries] : j.at("full").items()) {
        int x = g.index_of(label);
        if (entries.is_array()) {
          for (const auto& e : entries) detail::read_full_entry(sand, p, x, e.at("word").template get<std::string>(), e.at("value"));
        } else if (entries.is_object()) {
          for (const auto& [w, v] : entries.items()) detail::read_full_entry(sand, p, x, w, v);
        } else {
          throw Error(ErrorKind::ParseError, "entries for vertex " + label + " must be a list or an object");
        }
      }
      p.require_total(g.size(), sand.dimension());
      in.full = std::move(p);
      return in;
    }
    std::map<std::pair<int, int>, K> edges;
    if (j.contains("edges"))
      for (const auto& [key, v] : j.at("edges").items())
        edges[detail::parse_edge_key(g, key)] = parse_scalar<K>(f, detail::scalar_text(v));
    in.edges = std::move(edges);
    if (j.contains("delta")) in.delta = parse_scalar<K>(f, detail::scalar_text(j.at("delta")));
    for (const auto& [key, v] : j.items())
      if (key != "edges" && key != "delta") throw Error(ErrorKind::ParseError, "unknown key: " + key);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("parameter file: ") + e.what());
  }
  return in;
}

template <Scalar K>
Json parameters_to_json(const SandwichAlgebra<K>& sand, const ParameterSet<K>& p) {
  const auto& g = sand.graph();
  Json full = Json::object();
  for (std::size_t x = 0; x < g.size(); ++x) {
    Json list = Json::array();
    for (std::size_t b = 0; b < sand.dimension(); ++b)
      list.push_back({{"word", g.word_string(sand.basis()[b].word)},
                      {"value", p.get(static_cast<int>(x), static_cast<int>(b)).to_string()}});
    full[g.label(static_cast<int>(x))] = list;
  }
  return Json{{"full", full}};
}

inline Json class_json(const DynkinClass& c) {
  Json j{{"type", c.name()}, {"finite", c.is_finite()}, {"affine", c.is_affine()}};
  if (c.distinguished_vertex()) j["distinguished_vertex"] = *c.distinguished_vertex();
  return j;
}

inline Json rank_json(const RankReport& r) {
  Json j{{"case", r.case_number}, {"edge_rank", r.edge_rank}, {"rank_with_delta", r.rank_with_delta}};
  if (r.delta_coefficients) {
    Json c = Json::array();
    for (const auto& v : *r.delta_coefficients) c.push_back(v.to_string());
    j["delta_in_edge_span"] = c;
  }
  return j;
}

template <Scalar K>
Json sandwich_json(const SandwichAlgebra<K>& sand) {
  Json mults = Json::array();
  for (const auto& [w, k] : sand.multiplicities()) mults.push_back({{"weight", weight_json(w)}, {"count", k}});
  Json basis = Json::array();
  for (const auto& e : sand.basis()) basis.push_back(sand.graph().word_string(e.word));
  return Json{{"dimension", sand.dimension()}, {"multiplicities", mults}, {"degrees", sand.max_degree()}, {"basis", basis}};
}

inline Json theorem_json(const SandwichTheoremReport& r) {
  Json bad = Json::array();
  for (const auto& w : r.weights)
    if (!w.ok) bad.push_back({{"weight", weight_json(w.weight)}, {"expected", w.expected}, {"actual", w.actual}});
  return Json{{"pass", r.pass}, {"dimension", r.dimension}, {"mismatches", bad}};
}

inline Json membership_json(const MembershipReport& r) {
  Json w = Json::array();
  for (const auto& x : r.witnesses) w.push_back({{"condition", x.condition}, {"indices", x.indices}, {"detail", x.detail}});
  Json fails = Json::object();
  for (const auto& [k, v] : r.failures) fails[k] = v;
  return Json{{"member", r.member}, {"checked", r.checked}, {"failures", fails}, {"witnesses", w}};
}

template <Scalar K>
Json certificate_json(const IsoCertificate<K>& c, const SandwichAlgebra<K>& sand) {
  return Json{{"d1", c.d1},
              {"d2", c.d2},
              {"ambient_dimension", c.ambient_dimension},
              {"member", c.member},
              {"verdict", c.verdict},
              {"realized_parameters", parameters_to_json(sand, c.params)["full"]}};
}

template <Scalar K>
std::string multiplicities_csv(const SandwichAlgebra<K>& sand) {
  std::ostringstream os;
  os << "weight,height,count\n";
  for (const auto& [w, k] : sand.multiplicities()) {
    os << '"';
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
    os << "\"," << w.height() << ',' << k << '\n';
  }
  return os.str();
}

}  // namespace extremal
