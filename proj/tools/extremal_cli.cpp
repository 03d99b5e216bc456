// extremal_cli: classify | sandwich | check | generic
//
// Exit codes: 0 ok, 1 negative verdict, 2 input error, 3 degree cap exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "extremal/extremal.hpp"

namespace {

using namespace extremal;

struct RunConfig {
  std::string command;
  std::string graph_path;
  std::string diagram;
  std::string field = "Q";
  int cap = 64;
  std::uint64_t seed = 1;
  std::string params_path;
  std::string out_path;
  std::string format = "json";
};

struct Output {
  std::string text;
  int code = 0;
};

SimpleGraph load_graph(const RunConfig& cfg) {
  if (!cfg.diagram.empty()) return builtin_diagram(cfg.diagram);
  return graph_from_json(read_json_file(cfg.graph_path));
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

std::string render(const Json& j, const RunConfig& cfg, const std::string& csv) {
  if (cfg.format == "csv") return csv;
  return j.dump(2) + "\n";
}

Output cmd_classify(const RunConfig& cfg) {
  auto g = load_graph(cfg);
  auto cls = classify(g);
  Json j{{"command", "classify"}, {"graph", graph_to_json(g)}, {"class", class_json(cls)}};
  std::string csv = "type,case\n" + cls.name() + ",";
  if (cls.is_affine()) {
    auto r = character_rank_analysis(g);
    j["rank_analysis"] = rank_json(r);
    csv += std::to_string(r.case_number);
  }
  return {render(j, cfg, csv + "\n"), 0};
}

template <Scalar K>
Output cmd_sandwich(const RunConfig& cfg, const FieldSpec& f) {
  auto g = load_graph(cfg);
  auto cls = classify(g);
  auto sand = compute_sandwich<K>(g, f, cfg.cap);
  Json j{{"command", "sandwich"}, {"field", f.to_string()}, {"graph", graph_to_json(g)}, {"class", cls.name()}};
  j.update(sandwich_json(sand));
  int code = 0;
  if (cls.is_dynkin()) {
    auto rep = verify_sandwich_theorems(sand, cls);
    j["theorem_check"] = theorem_json(rep);
    if (!rep.pass) code = 1;
  }
  return {render(j, cfg, multiplicities_csv(sand)), code};
}

template <Scalar K>
Output cmd_check(const RunConfig& cfg, const FieldSpec& f) {
  if (cfg.params_path.empty()) throw Error(ErrorKind::ParseError, "check needs --params");
  auto g = load_graph(cfg);
  auto cls = classify(g);
  auto pj = read_json_file(cfg.params_path);
  auto sand = compute_sandwich<K>(g, f, cfg.cap);
  auto in = parameters_from_json<K>(pj, sand);
  ParameterSet<K> params = in.full ? *in.full : complete_parameters(sand, cls, *in.edges, in.delta);
  auto alg = build_bracket(sand, params);
  auto rep = membership_in_X(alg);
  Json j{{"command", "check"}, {"field", f.to_string()}, {"graph", graph_to_json(g)},
         {"input", in.full ? "full" : "edges"}};
  j.update(membership_json(rep));
  std::string csv = "member,checked,failures\n" + std::string(rep.member ? "true" : "false") + "," +
                    std::to_string(rep.checked) + "," + std::to_string(rep.witnesses.size()) + "\n";
  return {render(j, cfg, csv), rep.member ? 0 : 1};
}

template <Scalar K>
Output cmd_generic(const RunConfig& cfg, const FieldSpec& f) {
  auto g = load_graph(cfg);
  auto cls = classify(g);
  if (!cls.is_dynkin()) throw Error(ErrorKind::NotDynkin, "generic realizations need a Dynkin diagram");
  auto sand = compute_sandwich<K>(g, f, cfg.cap);
  bool even_cycle = cls.tag() == DynkinClass::Tag::AffineA && g.size() % 2 == 0;
  auto t = cls.is_finite() ? realize_finite<K>(g, f, cfg.seed)
           : even_cycle    ? realize_affine_a_odd<K>(g, f, cfg.seed)
                           : realize_affine<K>(g, f, cfg.seed);
  auto cert = certify_generic_iso(t, sand);
  Json j{{"command", "generic"}, {"field", f.to_string()}, {"graph", graph_to_json(g)}, {"class", cls.name()},
         {"seed", cfg.seed}, {"model", t.model}};
  if (even_cycle) j["product_identity_holds"] = cycle_product_identity(t);
  j.update(certificate_json(cert, sand));
  std::string csv = "d1,d2,verdict\n" + std::to_string(cert.d1) + "," + std::to_string(cert.d2) + "," +
                    csv_escape(cert.verdict) + "\n";
  return {render(j, cfg, csv), 0};
}

template <Scalar K>
Output dispatch(const RunConfig& cfg, const FieldSpec& f) {
  if (cfg.command == "classify") return cmd_classify(cfg);
  if (cfg.command == "sandwich") return cmd_sandwich<K>(cfg, f);
  if (cfg.command == "check") return cmd_check<K>(cfg, f);
  return cmd_generic<K>(cfg, f);
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::DegreeCapExceeded: return 3;
    case ErrorKind::GenericityFailed:
    case ErrorKind::CertificateFailed: return 1;
    default: return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie algebras generated by extremal elements"};
  app.require_subcommand(1, 1);
  RunConfig cfg;
  for (const char* name : {"classify", "sandwich", "check", "generic"}) {
    auto* sub = app.add_subcommand(name);
    auto* graph = sub->add_option("--graph", cfg.graph_path, "graph JSON file")->check(CLI::ExistingFile);
    auto* diag = sub->add_option("--diagram", cfg.diagram, "built-in diagram, e.g. A3, D4~, E6~");
    graph->excludes(diag);
    sub->add_option("--field", cfg.field, "Q or Fp (odd prime p)");
    sub->add_option("--cap", cfg.cap, "degree cap");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--params", cfg.params_path, "parameter file")->check(CLI::ExistingFile);
    sub->add_option("--out", cfg.out_path, "write the report here instead of stdout");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.graph_path.empty() && cfg.diagram.empty()) {
    std::cerr << "error: one of --graph or --diagram is required\n";
    return 2;
  }

  Output out;
  try {
    auto f = FieldSpec::parse(cfg.field);
    out = f.is_rationals() ? dispatch<Rational>(cfg, f) : dispatch<ModP>(cfg, f);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  if (cfg.out_path.empty()) {
    std::cout << out.text;
  } else {
    std::ofstream os(cfg.out_path, std::ios::binary);
    if (!os) {
      std::cerr << "error: cannot write " << cfg.out_path << "\n";
      return 2;
    }
    os << out.text;
  }
  return out.code;
}
