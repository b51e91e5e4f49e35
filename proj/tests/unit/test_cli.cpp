#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "ifk/cli/bundle.hpp"
#include "ifk/cli/report.hpp"
#include "ifk/cli/run.hpp"
#include "ifk/integration.hpp"

using namespace ifk;
using nlohmann::json;

namespace {

const std::string kBundle = std::string(IFK_FIXTURES) + "/bundle.json";

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome ifk_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / ("ifk_test_" + name);
  std::ofstream(p, std::ios::binary) << content;
  return p;
}

}  // namespace

TEST_CASE("validate") {
  auto r = ifk_run({"validate", kBundle});
  CHECK(r.status == cli::kExitOk);
  CHECK(json::parse(r.out) == json{{"ok", true}});
}

TEST_CASE("integrate report is byte-exact and deterministic") {
  auto r = ifk_run({"integrate", "--system", "vee", "--delta-bound", "1", kBundle});
  REQUIRE(r.status == cli::kExitOk);
  CHECK(r.out == slurp(std::string(IFK_FIXTURES) + "/vee_integrate_bound1.json"));
  CHECK(ifk_run({"integrate", "--system", "vee", "--delta-bound", "1", kBundle}).out == r.out);

  auto two = json::parse(ifk_run({"integrate", "--system", "vee", "--delta-bound", "2", kBundle}).out);
  CHECK(std::find(two["deltas"]["O2"].begin(), two["deltas"]["O2"].end(),
                  json{{"ant", {"philosopher"}}, {"con", {"mortal_gr"}}}) != two["deltas"]["O2"].end());
}

TEST_CASE("consistency") {
  auto r = ifk_run({"consistency", "--system", "clash", kBundle});
  CHECK(r.status == cli::kExitOk);
  CHECK(json::parse(r.out) == json{{"pointwise", true}, {"monocosmic", false}, {"verdict", "polycosmic"}});
}

TEST_CASE("commands agree with the library") {
  auto b = cli::parse_bundle(slurp(kBundle));
  auto close_out = ifk_run({"close", "--theory", "O1", kBundle}).out;
  CHECK(close_out == cli::render(cli::closure_report("O1", close(b.theories.at("O1")))));

  auto ent = json::parse(ifk_run({"entails", "--theory", "O2", "--sequent", "philosopher |- human", kBundle}).out);
  CHECK(ent["entails"] == true);
  CHECK(ent["literal"] == "philosopher |- human");
  auto no = json::parse(ifk_run({"entails", "--theory", "O2", "--sequent", "human |- philosopher", kBundle}).out);
  CHECK(no["entails"] == false);

  const auto& clf = *b.classifications.at("CLF-A");
  CHECK(ifk_run({"lattice", "--classification", "CLF-A", "--format", "dot", kBundle}).out ==
        lattice_to_dot(lattice(clf), clf));
  auto lat = json::parse(ifk_run({"lattice", "--classification", "CLF-A", kBundle}).out);
  CHECK(lat["concepts"].size() == 4);

  auto sum = json::parse(ifk_run({"sum", "--system", "vee_populated", kBundle}).out);
  CHECK(sum["core"]["instances"].size() == 3);
  auto plain = json::parse(ifk_run({"sum", "--system", "vee", kBundle}).out);
  CHECK_FALSE(plain.contains("core"));
  CHECK(plain["sum_language"]["types"] == json{"sum:M.x", "sum:M.y", "sum:O2.philosopher"});

  const auto& s = b.systems.at("vee_populated");
  CHECK(ifk_run({"integrate", "--system", "vee_populated", kBundle}).out ==
        cli::render(cli::integration_report("vee_populated", s, integrate(s), 2)));
}

TEST_CASE("global flags") {
  auto path = std::filesystem::temp_directory_path() / "ifk_test_output.json";
  std::filesystem::remove(path);
  auto r = ifk_run({"--seed", "7", "consistency", "--system", "clash", kBundle, "--output", path.string()});
  CHECK(r.status == cli::kExitOk);
  CHECK(r.out.empty());
  CHECK(json::parse(slurp(path.string()))["verdict"] == "polycosmic");
  std::filesystem::remove(path);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(ifk_run({}).status == cli::kExitUsage);
  CHECK(ifk_run({"frobnicate", kBundle}).status == cli::kExitUsage);
  CHECK(ifk_run({"close", kBundle}).status == cli::kExitUsage);
  CHECK(ifk_run({"close", "--theory", "O1", "--bogus", kBundle}).status == cli::kExitUsage);
  CHECK(ifk_run({"lattice", "--classification", "CLF-A", "--format", "svg", kBundle}).status == cli::kExitUsage);
  CHECK(ifk_run({"validate", "/nonexistent/bundle.json"}).status == cli::kExitUsage);
  auto unknown = ifk_run({"close", "--theory", "Nope", kBundle});
  CHECK(unknown.status == cli::kExitUsage);
  CHECK(unknown.err.find("Nope") != std::string::npos);
  CHECK(ifk_run({"entails", "--theory", "O2", "--sequent", "human", kBundle}).status == cli::kExitUsage);
  CHECK(ifk_run({"entails", "--theory", "O2", "--sequent", "robot |- human", kBundle}).status == cli::kExitUsage);
  CHECK(ifk_run({"--help"}).status == cli::kExitOk);
}

TEST_CASE("defects and cap failures exit with 1") {
  auto bad = temp_file("bad.json", R"({"classifications": {"A": {"instances": ["a"], "types": ["t"],
      "incidence": [["a", "robot"]]}}})");
  auto r = ifk_run({"validate", bad.string()});
  CHECK(r.status == cli::kExitDefects);
  auto j = json::parse(r.out);
  CHECK(j["ok"] == false);
  CHECK(j["defects"][0]["kind"] == "dangling-incidence");

  auto broken = temp_file("broken.json", "{\"theories\": {\n  \"T\": }\n}");
  auto s = ifk_run({"validate", broken.string()});
  CHECK(s.status == cli::kExitDefects);
  auto sj = json::parse(s.out);
  CHECK(sj["error"]["kind"] == "syntax");
  CHECK(sj["error"]["line"] == 2);

  auto cap = ifk_run({"close", "--theory", "O2", "--cap", "63", kBundle});
  CHECK(cap.status == cli::kExitDefects);
  auto cj = json::parse(cap.out);
  CHECK(cj["error"] == json{{"kind", "cap-exceeded"}, {"phase", "close"}, {"required", 64}, {"cap", 63}});

  auto icap = json::parse(ifk_run({"sum", "--system", "vee_populated", "--instance-cap", "5", kBundle}).out);
  CHECK(icap["error"]["phase"] == "sum_classification");
  CHECK(icap["error"]["required"] == 12);

  auto qcap = json::parse(ifk_run({"integrate", "--system", "vee", "--cap", "10", kBundle}).out);
  CHECK(qcap["error"]["phase"] == "delta enumeration");

  std::filesystem::remove(bad);
  std::filesystem::remove(broken);
}
