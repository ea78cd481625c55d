#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

// Drives the installed binary end to end: every assertion below is about
// observable behavior (exit codes, report bytes, emitted documents).

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

const std::string& scratch() {
  static const std::string dir = [] {
    fs::path p = fs::temp_directory_path() / ("hopfpi-cli-" + std::to_string(getpid()));
    fs::create_directories(p);
    return p.string();
  }();
  return dir;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::string& args) {
  static int seq = 0;
  const std::string o = scratch() + "/out" + std::to_string(seq);
  const std::string e = scratch() + "/err" + std::to_string(seq);
  ++seq;
  const std::string cmd = std::string(HOPFPI_CLI_PATH) + " " + args + " > " + o + " 2> " + e;
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return {WEXITSTATUS(status), slurp(o), slurp(e)};
}

/// Emits a preset once per process and hands back its path.
std::string preset(const std::string& name, const std::string& args) {
  const std::string path = scratch() + "/" + name + ".json";
  if (!fs::exists(path)) {
    const RunResult r = run("example " + args + " --out " + path);
    REQUIRE(r.code == 0);
  }
  return path;
}

std::string group_pair() { return preset("gp", "group-pair 6 2"); }
std::string taft_quotient() { return preset("tq", "taft-quotient 3 7 2"); }

}  // namespace

TEST_CASE("emitted presets verify clean") {
  for (const char* spec : {"trivial", "group 4", "taft 3 7 2", "group-pair 6 2",
                           "taft-quotient 3 7 2", "taft-isolated 3 7 2"}) {
    CAPTURE(spec);
    const std::string path = scratch() + "/pv.json";
    REQUIRE(run(std::string("example ") + spec + " --out " + path).code == 0);
    const RunResult v = run("verify " + path);
    CHECK(v.code == 0);
    CHECK(v.out.find("all checks passed") != std::string::npos);
    CHECK(v.out.find("FAIL") == std::string::npos);
  }
}

TEST_CASE("a corrupted entry turns verification red") {
  Json doc = Json::parse(slurp(group_pair()));
  doc["hopf"]["H"]["delta"]["1,1"][0][0] = 5;
  const std::string bad = scratch() + "/bad.json";
  spit(bad, doc.dump(2) + "\n");

  const RunResult v = run("verify " + bad);
  CHECK(v.code == 1);
  CHECK(v.out.find("FAIL") != std::string::npos);
}

TEST_CASE("exit codes separate usage errors from failed checks") {
  CHECK(run("definitely-not-a-command").code == 2);
  CHECK(run("verify /no/such/file.json").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("verify " + group_pair() + " --out /tmp/x.json").code == 2);
  CHECK(run("induce " + group_pair() + " ghost").code == 2);
  CHECK(run("example taft-quotient 3 7 2 --field Q --out /dev/null").code == 2);
  CHECK(run("example group-pair 6").code == 2);
  CHECK(run("mirror taft 3 7 3").code == 2);  // 3 is not a primitive cube root mod 7
}

TEST_CASE("base intertwiners extend or are refused") {
  const std::string f1 = scratch() + "/f1.json";
  spit(f1, "[[2]]\n");

  const RunResult good = run("equiv " + group_pair() + " v0 v0 " + f1);
  CHECK(good.code == 0);
  CHECK(good.out.find("intertwiner accepted") != std::string::npos);

  const RunResult bad = run("equiv " + group_pair() + " v0 v1 " + f1);
  CHECK(bad.code == 1);
  CHECK(bad.out.find("intertwiner refused") != std::string::npos);
  CHECK(bad.out.find("base_intertwines") != std::string::npos);

  CHECK(run("equiv " + group_pair() + " v0 v0 " + f1 + " --coinduced").code == 0);
}

TEST_CASE("direct sums split on both constructions") {
  const std::string gp = group_pair();
  CHECK(run("direct-sum " + gp + " v0 v1 v0v1").code == 0);
  CHECK(run("direct-sum " + gp + " v0 v1 v0v1 --coinduced").code == 0);
  // Wrong summand order: the block decomposition cannot match.
  CHECK(run("direct-sum " + gp + " v1 v0 v0v1").code == 1);
}

TEST_CASE("quotient emits a pair that verifies on reload") {
  const std::string out = scratch() + "/quot.json";
  const RunResult q = run("quotient " + taft_quotient() + " taft xideal --out " + out);
  CHECK(q.code == 0);
  CHECK(q.out.find("pair carries no action") != std::string::npos);
  CHECK(q.out.find("dim C(1) = 3") != std::string::npos);

  const RunResult v = run("verify " + out);
  CHECK(v.code == 0);
}

TEST_CASE("induced and coinduced comodules agree on dimensions") {
  const RunResult ind = run("induce " + taft_quotient() + " trivial");
  CHECK(ind.code == 0);
  CHECK(ind.out.find("dim Ind(1) = 3") != std::string::npos);

  const RunResult coi = run("coinduce " + taft_quotient() + " trivial");
  CHECK(coi.code == 0);
  CHECK(coi.out.find("dim Coind(1) = 3") != std::string::npos);
  CHECK(coi.out.find("coaction_invariant") != std::string::npos);
}

TEST_CASE("simplicity reports the proper subcomodule") {
  const RunResult s = run("simplicity " + taft_quotient() + " trivial");
  CHECK(s.code == 0);
  CHECK(s.out.find("not simple") != std::string::npos);

  const std::string wit = scratch() + "/wit.json";
  REQUIRE(run("simplicity " + taft_quotient() + " trivial --out " + wit).code == 0);
  const Json doc = Json::parse(slurp(wit));
  CHECK(doc["simple"] == false);
  CHECK(doc["exact"] == true);
  // One line per component, written in the induced-subspace coordinates.
  CHECK(doc["witness_family"]["1"].size() == 3);
  CHECK(doc["witness_family"]["1"][0].size() == 1);
}

TEST_CASE("factorization commands need matching flavors") {
  const std::string gp = group_pair();
  CHECK(run("iso-cb " + gp + " pair coset").code == 0);
  CHECK(run("iso-cg " + gp + " pair coset").code == 0);
  CHECK(run("iso-vb " + gp + " v0 coset eta").code == 0);
  // The taft pair presents its quotient inline, so iso-cb must refuse.
  CHECK(run("iso-cb " + taft_quotient() + " pair coset").code == 2);
}

TEST_CASE("reports are byte stable across runs and thread counts") {
  const std::string tq = taft_quotient();
  const std::string base = "simplicity " + tq + " trivial --report json";
  const RunResult a = run(base + " --threads 1");
  const RunResult b = run(base + " --threads 8");
  const RunResult c = run(base + " --threads 1");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);

  const RunResult d = run("coinduce " + tq + " trivial --report json");
  const RunResult e = run("coinduce " + tq + " trivial --report json");
  REQUIRE(d.code == 0);
  CHECK(d.out == e.out);
}

TEST_CASE("json reports carry every check") {
  const RunResult v = run("verify " + group_pair() + " --report json");
  REQUIRE(v.code == 0);
  const Json doc = Json::parse(v.out);
  CHECK(doc["ok"] == true);
  bool saw_antipode = false;
  for (const auto& rep : doc["reports"]) {
    for (const auto& c : rep["checks"]) {
      CHECK(c["pass"] == true);
      if (c["name"].get<std::string>().find("antipode") != std::string::npos) {
        saw_antipode = true;
      }
    }
  }
  CHECK(saw_antipode);
}
