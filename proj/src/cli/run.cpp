#include "ifk/cli/run.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "ifk/cli/bundle.hpp"
#include "ifk/cli/report.hpp"
#include "ifk/diagrams.hpp"
#include "ifk/error.hpp"
#include "ifk/fca.hpp"
#include "ifk/integration.hpp"

namespace ifk::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string output;
  std::optional<std::uint64_t> seed;  // accepted for interface stability; no command is randomized
  std::string bundle;
  std::string theory;
  std::string classification;
  std::string system;
  std::string sequent;
  std::string format = "json";
  std::size_t cap = kDefaultClosureCap;
  std::size_t instance_cap = kDefaultInstanceCap;
  std::size_t delta_bound = kDefaultDeltaBound;
  std::optional<std::size_t> query_cap;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read bundle file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class Map>
const auto& lookup(const Map& m, const std::string& name, const char* kind) {
  auto it = m.find(name);
  if (it == m.end()) throw UsageError(std::string("no ") + kind + " named '" + name + "' in the bundle");
  return it->second;
}

json bundle_error_json(const BundleError& e) {
  json err = {{"kind", to_string(e.kind())}, {"message", e.what()}};
  if (e.kind() == BundleError::Kind::syntax) {
    err["line"] = e.line();
    err["column"] = e.column();
    err["token"] = e.token();
  } else if (!e.location().empty()) {
    err["location"] = e.location();
    err["token"] = e.token();
  }
  json out = {{"ok", false}, {"error", err}};
  if (!e.defects().ok()) out["defects"] = defects_json(e.defects());
  return out;
}

json cap_error_json(const CapExceeded& e) {
  json required = e.required() < 9.0e18 ? json(static_cast<std::uint64_t>(e.required())) : json(e.required());
  return {{"ok", false},
          {"error", {{"kind", "cap-exceeded"}, {"phase", e.phase()}, {"required", required}, {"cap", e.cap()}}}};
}

// Returns the report text; throws on failures.
std::string execute(const std::string& command, const Options& o) {
  const Bundle b = parse_bundle(read_file(o.bundle));

  if (command == "validate") return render({{"ok", true}});

  if (command == "close") {
    const auto& t = lookup(b.theories, o.theory, "theory");
    return render(closure_report(o.theory, close(t, o.cap)));
  }
  if (command == "entails") {
    const auto& t = lookup(b.theories, o.theory, "theory");
    Sequent s;
    try {
      s = parse_sequent(o.sequent, t.types());
    } catch (const SyntaxError& e) {
      throw UsageError(std::string("bad --sequent: ") + e.what());
    } catch (const UnknownElement& e) {
      throw UsageError(std::string("bad --sequent: ") + e.what());
    }
    return render(entails_report(o.theory, t.types(), s, t.entails(s)));
  }
  if (command == "lattice") {
    const auto& c = *lookup(b.classifications, o.classification, "classification");
    const auto l = lattice(c);
    return o.format == "dot" ? lattice_to_dot(l, c) : render(lattice_report(o.classification, l, c));
  }
  const auto& s = lookup(b.systems, o.system, "system");
  if (command == "sum") {
    std::optional<Channel> channel;
    if (s.populated()) channel = sum_classification(s.cls_diagram(), o.instance_cap);
    return render(sum_report(o.system, s, channel));
  }
  if (command == "integrate") {
    IntegrationCaps caps;
    if (o.query_cap) caps.delta_queries = *o.query_cap;
    return render(integration_report(o.system, s, integrate(s, caps, o.delta_bound), o.delta_bound));
  }
  if (command == "consistency") return render(consistency_report(cosmology(unify(s))));
  throw UsageError("unknown command '" + command + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ifk: classifications, sequent theories, information flow and semantic integration"};
  app.name("ifk");
  app.require_subcommand(1);
  Options o;
  app.add_option("--output", o.output, "Write the report to FILE instead of standard output");
  app.add_option("--seed", o.seed, "Accepted and ignored (no command is randomized)");

  auto sub = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->fallthrough();
    c->add_option("bundle", o.bundle, "Bundle file (JSON)")->required();
    return c;
  };
  sub("validate", "Parse and validate a bundle");
  auto* close_cmd = sub("close", "Materialize the closure of a theory");
  close_cmd->add_option("--theory", o.theory, "Theory name in the bundle")->required();
  close_cmd->add_option("--cap", o.cap, "Maximum number of sequents (4^|types|)")->capture_default_str();
  auto* entails_cmd = sub("entails", "Decide whether a theory entails a sequent");
  entails_cmd->add_option("--theory", o.theory, "Theory name in the bundle")->required();
  entails_cmd->add_option("--sequent", o.sequent, "Sequent literal 'a, b |- c'")->required();
  auto* lattice_cmd = sub("lattice", "Concept lattice of a classification");
  lattice_cmd->add_option("--classification", o.classification, "Classification name in the bundle")->required();
  lattice_cmd->add_option("--format", o.format, "Output format, dot or json")->check(CLI::IsMember({"dot", "json"}));
  auto* sum_cmd = sub("sum", "Sum (colimit) of a system's diagram");
  sum_cmd->add_option("--system", o.system, "System name in the bundle")->required();
  sum_cmd->add_option("--instance-cap", o.instance_cap, "Maximum instances in the sum core")->capture_default_str();
  auto* integrate_cmd = sub("integrate", "Semantic integration of a system");
  integrate_cmd->add_option("--system", o.system, "System name in the bundle")->required();
  integrate_cmd->add_option("--delta-bound", o.delta_bound, "Maximum types per side of reported deltas")->capture_default_str();
  integrate_cmd->add_option("--cap", o.query_cap, "Maximum candidate sequents per node");
  auto* consistency_cmd = sub("consistency", "Monocosmic / polycosmic analysis of a system");
  consistency_cmd->add_option("--system", o.system, "System name in the bundle")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  std::string report;
  int status = kExitOk;
  try {
    report = execute(command, o);
  } catch (const UsageError& e) {
    err << "ifk: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BundleError& e) {
    err << "ifk: " << e.what() << "\n";
    report = render(bundle_error_json(e));
    status = kExitDefects;
  } catch (const CapExceeded& e) {
    err << "ifk: " << e.what() << "\n";
    report = render(cap_error_json(e));
    status = kExitDefects;
  } catch (const ValidationError& e) {
    err << "ifk: " << e.what() << "\n";
    report = render({{"ok", false}, {"defects", defects_json(e.result())}});
    status = kExitDefects;
  } catch (const Error& e) {
    err << "ifk: " << e.what() << "\n";
    report = render({{"ok", false}, {"error", {{"kind", "error"}, {"message", e.what()}}}});
    status = kExitDefects;
  }

  if (o.output.empty()) {
    out << report;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) {
      err << "ifk: cannot write '" << o.output << "'\n";
      return kExitUsage;
    }
    file << report;
  }
  return status;
}

}  // namespace ifk::cli
