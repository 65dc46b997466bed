#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rough/analysis.hpp"
#include "rough/completion.hpp"
#include "rough/error.hpp"
#include "rough/fca.hpp"
#include "rough/infosys.hpp"
#include "rough/verify.hpp"

using namespace rough;

namespace {

struct InputOptions {
  std::string path;
  std::string construction = "sim";
  std::vector<std::string> attrs;
  std::size_t max_universe = kDefaultExhaustiveCap;
};

struct Loaded {
  Relation relation;
  Json source;
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Loaded load(const InputOptions& opt) {
  const std::string text = read_file(opt.path);
  Loaded out;
  out.source["file"] = opt.path;
  if (ends_with(opt.path, ".csv")) {
    const auto is = InformationSystem::parse_csv(text);
    const auto b = opt.attrs.empty() ? is.all_attributes() : is.attribute_indices(opt.attrs);
    out.source["kind"] = "information-system";
    out.source["mode"] = to_string(is.mode());
    out.source["construction"] = opt.construction;
    Json attrs = Json::array();
    for (auto a : b) attrs.push_back(is.attributes()[a]);
    out.source["attributes"] = attrs;
    if (opt.construction == "sim") {
      out.relation = sim_tolerance(is, b);
    } else if (opt.construction == "rb") {
      auto rb = rb_tolerance(is, b);
      if (!rb.reflexive) {
        throw Error(ErrorKind::NotATolerance,
                    "R_B is not reflexive at " + rb.relation.universe().format(rb.non_reflexive) +
                        " (no compatible complete object)");
      }
      out.relation = std::move(rb.relation);
    } else if (opt.construction == "wind") {
      out.relation = wind_tolerance(is, b);
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown construction " + opt.construction);
    }
    return out;
  }
  if (text.find("\"members\"") != std::string::npos) {
    const auto cov = parse_covering_json(text);
    out.source["kind"] = "covering";
    out.source["irredundant"] = is_irredundant(cov);
    out.relation = induced_tolerance(cov);
    return out;
  }
  out.source["kind"] = "relation";
  out.relation = parse_relation_json(text);
  return out;
}

ApproximationSpace space_for(const InputOptions& opt, Loaded& loaded) {
  require_within_cap(loaded.relation.size(), opt.max_universe, "analysis");
  return ApproximationSpace(loaded.relation);
}

void add_input_options(CLI::App* cmd, InputOptions& opt) {
  cmd->add_option("input", opt.path, "relation JSON, covering JSON or information-system CSV")->required();
  cmd->add_option("--construction", opt.construction, "tolerance built from a CSV table")
      ->check(CLI::IsMember({"sim", "rb", "wind"}));
  cmd->add_option("--attrs", opt.attrs, "attribute subset (comma separated)")->delimiter(',');
  cmd->add_option("--max-universe", opt.max_universe, "cap for subset-exhaustive work");
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << content;
}

int run_analyze(const InputOptions& opt, const std::string& format) {
  auto loaded = load(opt);
  const auto s = space_for(opt, loaded);
  const Json report = analysis_report(s, opt.max_universe, loaded.source);
  std::cout << (format == "text" ? json_to_text(report) : report.dump(2) + "\n");
  return 0;
}

int run_export(const InputOptions& opt, const std::string& what, const std::string& format, const std::string& output) {
  auto loaded = load(opt);
  const auto s = space_for(opt, loaded);
  const auto& u = s.universe();
  const std::size_t cap = opt.max_universe;

  if (what == "down" || what == "up") {
    const auto fam = what == "down" ? enumerate_down_family(s, cap) : enumerate_up_family(s, cap);
    if (format == "dot") {
      write_output(output, to_dot(fam.poset(), what));
    } else {
      Json j{{"schema", kCarrierSchema}, {"what", what}, {"universe", u.labels()}, {"size", fam.size()},
             {"members", family_json(fam)}};
      write_output(output, j.dump(2) + "\n");
    }
    return 0;
  }
  if (what == "fca") {
    const auto ctx = Context::bridge(s.relation());
    const auto cs = concepts(ctx, cap);
    if (format == "dot") {
      write_output(output, to_dot(concept_poset(ctx, cs), "concepts"));
    } else {
      Json items = Json::array();
      for (auto c : cs) items.push_back({{"extent", subset_json(u, c.extent)}, {"intent", subset_json(u, c.intent)}});
      Json j{{"schema", kCarrierSchema}, {"what", what}, {"universe", u.labels()}, {"size", cs.size()},
             {"concepts", items}};
      write_output(output, j.dump(2) + "\n");
    }
    return 0;
  }

  const auto rs = enumerate_rs(s, cap);
  std::vector<RoughPair> carrier;
  std::vector<RoughPair> reference = rs;
  bool second_dual = false;
  if (what == "rs") {
    carrier = rs;
  } else if (what == "irs") {
    carrier = increasing_representation(s, cap);
  } else {
    carrier = disjoint_rs(s, cap);
    reference = carrier;
    second_dual = true;
  }
  if (format == "dot") {
    write_output(output, to_dot(pair_poset(u, carrier, second_dual), what));
  } else {
    write_output(output, carrier_json(what, u, carrier, reference).dump(2) + "\n");
  }
  return 0;
}

int run_verify(const InputOptions& opt, const std::string& suite) {
  auto loaded = load(opt);
  const auto s = space_for(opt, loaded);
  std::vector<std::string> suites = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  bool ok = true;
  for (const auto& name : suites) {
    const auto rep = run_suite(s, name, opt.max_universe);
    for (const auto& c : rep.checks) {
      std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << name << ": " << c.name;
      if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
      std::cout << "\n";
    }
    ok = ok && rep.passed();
  }
  std::cout << (ok ? "all checks passed" : "some checks failed") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rough-set lattice analysis for tolerance relations"};
  app.require_subcommand(1);

  InputOptions analyze_opt;
  std::string analyze_format = "json";
  auto* analyze = app.add_subcommand("analyze", "report the structure of the rough sets of a tolerance");
  add_input_options(analyze, analyze_opt);
  analyze->add_option("--format", analyze_format)->check(CLI::IsMember({"json", "text"}));

  InputOptions export_opt;
  std::string what = "rs";
  std::string export_format = "dot";
  std::string output;
  auto* exp = app.add_subcommand("export", "write a carrier as a Hasse diagram or JSON");
  add_input_options(exp, export_opt);
  exp->add_option("--what", what)->check(CLI::IsMember({"rs", "down", "up", "irs", "drs", "fca"}));
  exp->add_option("--format", export_format)->check(CLI::IsMember({"dot", "json"}));
  exp->add_option("-o,--output", output, "output file (default stdout)");

  InputOptions verify_opt;
  std::string suite = "all";
  auto* ver = app.add_subcommand("verify", "run a property suite");
  add_input_options(ver, verify_opt);
  ver->add_option("--suite", suite)
      ->check(CLI::IsMember({"galois", "ortho", "thmdc", "latticethms", "algebra", "completion", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze) return run_analyze(analyze_opt, analyze_format);
    if (*exp) return run_export(export_opt, what, export_format, output);
    if (*ver) return run_verify(verify_opt, suite);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::CapExceeded ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
