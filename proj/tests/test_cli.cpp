#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <regex>

#include <json.hpp>

using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(MCKAY_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

// Subset of JSON Schema used by the report schema: type, required, properties,
// additionalProperties, items, enum, pattern, minimum.
void validate(const json& v, const json& s, const std::string& path, std::vector<std::string>& errs) {
  if (s.contains("type")) {
    const std::string t = s["type"];
    const bool ok = (t == "object" && v.is_object()) || (t == "array" && v.is_array()) ||
                    (t == "string" && v.is_string()) || (t == "integer" && v.is_number_integer());
    if (!ok) {
      errs.push_back(path + ": expected " + t);
      return;
    }
  }
  if (s.contains("enum") && std::find(s["enum"].begin(), s["enum"].end(), v) == s["enum"].end()) {
    errs.push_back(path + ": value not in enum");
  }
  if (s.contains("pattern") && !std::regex_search(v.get<std::string>(), std::regex(s["pattern"].get<std::string>()))) {
    errs.push_back(path + ": pattern mismatch for " + v.get<std::string>());
  }
  if (s.contains("minimum") && v.get<long>() < s["minimum"].get<long>()) errs.push_back(path + ": below minimum");
  if (s.contains("required")) {
    for (const auto& k : s["required"]) {
      if (!v.contains(k.get<std::string>())) errs.push_back(path + ": missing " + k.get<std::string>());
    }
  }
  if (s.contains("properties")) {
    for (const auto& [k, sub] : v.items()) {
      if (s["properties"].contains(k)) {
        validate(sub, s["properties"][k], path + "." + k, errs);
      } else if (s.value("additionalProperties", true) == false) {
        errs.push_back(path + ": unexpected " + k);
      }
    }
  }
  if (s.contains("items")) {
    for (std::size_t i = 0; i < v.size(); ++i) validate(v[i], s["items"], path + "[" + std::to_string(i) + "]", errs);
  }
}

json load(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return json::parse(in);
}

}  // namespace

TEST_CASE("verify reports") {
  const auto g12 = run("verify --group g12");
  CHECK(g12.status == 0);
  CHECK(contains(g12.out, "theorem_a: 6+1+1=8"));
  CHECK(contains(g12.out, "relation.g12"));
  CHECK(contains(g12.out, "curve.g12.rho3 "));
  CHECK(contains(g12.out, "g12: 26 passed, 0 failed"));
  const auto d6 = run("verify --group g2mm2 --m 6");
  CHECK(d6.status == 0);
  CHECK(contains(d6.out, "branch_components: 3"));
  const auto a5 = run("verify --group gmm2 --m 5");
  CHECK(a5.status == 0);
  CHECK(contains(a5.out, "counts verified, fixed-locus geometry out of scope"));
}

TEST_CASE("JSON report matches the schema") {
  const std::string path = "test_cli_g22.json";
  const auto r = run("verify --group g22 --json " + path);
  CHECK(r.status == 0);
  const json report = load(path);
  const json schema = load(MCKAY_SCHEMA_PATH);
  std::vector<std::string> errs;
  validate(report, schema, "$", errs);
  CHECK_MESSAGE(errs.empty(), (errs.empty() ? "" : errs.front()));
  CHECK(report["group"] == "g22");
  CHECK(report["summary"]["fail"] == 0);
  bool eighteen = false;
  for (const auto& c : report["checks"]) {
    if (c["id"] == "characters.g22") eighteen = contains(c["detail"].get<std::string>(), "18 classes");
  }
  CHECK(eighteen);
  std::vector<std::string> bad_errs;
  json bad = report;
  bad["checks"][0]["status"] = "maybe";
  bad["extra"] = 1;
  validate(bad, schema, "$", bad_errs);
  CHECK(bad_errs.size() == 2);
  std::remove(path.c_str());
}

TEST_CASE("quiver output") {
  const auto e6 = run("quiver --group g12 --sl2 --format dot");
  CHECK(e6.status == 0);
  CHECK(std::count(e6.out.begin(), e6.out.end(), '[') >= 7);
  CHECK(std::regex_search(e6.out, std::regex("v6 \\[")));
  CHECK_FALSE(std::regex_search(e6.out, std::regex("v7 \\[")));
  const auto d6 = run("quiver --group g2mm2 --m 4 --format json");
  CHECK(d6.status == 0);
  const json q = json::parse(d6.out);
  CHECK(q["vertices"].size() == 14);
  CHECK(q["adjacency"].size() == 14);
  const auto g13 = run("quiver --group g13 --format dot");
  CHECK(std::regex_search(g13.out, std::regex("v15 \\[")));
  CHECK_FALSE(std::regex_search(g13.out, std::regex("v16 \\[")));
}

TEST_CASE("fixed-locus listings") {
  CHECK(contains(run("fixed-locus --group g13").out, "E(rho_4): pointwise-fixed"));
  CHECK(contains(run("fixed-locus --group g12").out, "E(rho_1'): exchanged-with E(rho_1'')"));
  CHECK(contains(run("fixed-locus --group g2mm2 --m 4").out, "E(rho_2): pointwise-fixed"));
}

TEST_CASE("case data") {
  const auto r = run("case-data --group g22");
  CHECK(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["conductor"] == 60);
  CHECK(j["expected"]["center_order"] == 4);
  CHECK(j["families"][0]["direction"] == "(1, z20)");
}

TEST_CASE("usage errors") {
  CHECK(run("").status == 2);
  CHECK(run("verify").status == 2);
  CHECK(run("verify --group g99").status == 2);
  CHECK(run("verify --group g2mm2 --m 40").status == 2);
  CHECK(run("quiver --group g12 --format svg").status == 2);
  CHECK(run("quiver --group g2mm2").status == 2);
  CHECK(run("case-data --group all").status == 2);
}

TEST_CASE("identical invocations give identical output") {
  const auto a = run("verify --group g13");
  const auto b = run("verify --group g13");
  CHECK(a.out == b.out);
  CHECK(run("quiver --group g22 --format json").out == run("quiver --group g22 --format json").out);
}
