// tests/test_cli.cpp
//
// Black-box checks of the command-line tool: JSON output shapes, the verify
// round-trip, the CSV table, and the documented exit codes.
//
//   usage: test_cli <path-to-caysum-binary> <path-to-data-dir>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

int g_failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    std::cerr << "FAILED: " << what << "\n";
  }
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

json parse(const RunResult& r, const std::string& what) {
  json j = json::parse(r.out, nullptr, false);
  expect(!j.is_discarded(), what + ": stdout is not JSON");
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: test_cli <caysum-binary> <data-dir>\n";
    return 64;
  }
  std::string cli = argv[1];
  std::string data = argv[2];
  std::string q8 = data + "/groups/q8.json";
  std::string tmp_set = "cli_test_witness_set.json";
  std::string tmp_csv = "cli_test_crosscheck.csv";

  {  // single-subgroup region
    RunResult r = run(cli + " feasible " + q8 + " --subgroup " + data +
                      "/subgroups/q8_h_a2.json");
    expect(r.code == 0, "feasible exit code");
    json j = parse(r, "feasible");
    expect(j["pairs"] == json::parse("[[0,2]]"), "feasible pairs for the center");
    expect(j["case"] == "Thm1.1(3)", "feasible case label");
  }

  {  // all-subgroups region listing
    RunResult r = run(cli + " feasible " + q8);
    expect(r.code == 0, "feasible-all exit code");
    json j = parse(r, "feasible-all");
    expect(j["group"] == "q8", "feasible-all group stem");
    expect(j["regions"].is_array() && j["regions"].size() == 6, "feasible-all covers 6 subgroups");
  }

  {  // construct, then feed the witness back through verify
    RunResult r = run(cli + " construct " + q8 + " --subgroup " + data +
                      "/subgroups/q8_h_a.json --alpha 2 --beta 4");
    expect(r.code == 0, "construct exit code");
    json j = parse(r, "construct");
    expect(j["alpha"] == 2 && j["beta"] == 4, "construct echoes the request");
    expect(j["S"]["elements"].size() == 6, "construct witness size");
    expect(j.contains("plan"), "construct reports its decomposition plan");

    std::ofstream(tmp_set) << json{{"elements", j["S"]["elements"]}}.dump(2) << "\n";
    RunResult v = run(cli + " verify " + q8 + " --subgroup " + data +
                      "/subgroups/q8_h_a.json --set " + tmp_set);
    expect(v.code == 0, "verify exit code");
    json jv = parse(v, "verify");
    expect(jv["validation"]["normal"] == true, "witness is normal");
    expect(jv["validation"]["square_free"] == true, "witness avoids squares");
    expect(jv["profile"]["regular"] == true, "witness profiles as regular");
    expect(jv["profile"]["alpha"] == 2 && jv["profile"]["beta"] == 4,
           "witness realizes the requested pair");
  }

  {  // the empty set is vacuously regular but (0,0) is not a predicted pair
    RunResult r = run(cli + " verify " + q8 + " --subgroup " + data +
                      "/subgroups/q8_h_a2.json --set " + data + "/sets/empty_set.json");
    expect(r.code == 0, "verify-empty exit code");
    json j = parse(r, "verify-empty");
    expect(j["profile"]["regular"] == true, "empty set is regular");
    expect(j["profile"]["alpha"] == 0 && j["profile"]["beta"] == 0, "empty set profiles (0,0)");
    expect(j.contains("note") && j["note"].get<std::string>().find("excluded") !=
                                     std::string::npos,
           "verify-empty notes the (0,0) exclusion");
  }

  {  // invalid sets are reported, not profiled
    RunResult r = run(cli + " verify " + q8 + " --subgroup " + data +
                      "/subgroups/q8_h_a2.json --set " + data + "/sets/q8_not_normal.json");
    expect(r.code == 0, "verify-not-normal exit code");
    json j = parse(r, "verify-not-normal");
    expect(j["validation"]["normal"] == false, "class closure failure detected");
    expect(!j.contains("profile"), "no profile for an invalid set");

    RunResult s = run(cli + " verify " + q8 + " --subgroup " + data +
                      "/subgroups/q8_h_a2.json --set " + data + "/sets/q8_with_square.json");
    expect(s.code == 0, "verify-square exit code");
    json js = parse(s, "verify-square");
    expect(js["validation"]["square_free"] == false, "square element detected");
  }

  {  // malformed input: exit 2
    expect(run(cli + " info " + data + "/bad/truncated.json").code == 2, "truncated JSON exits 2");
    expect(run(cli + " info " + data + "/bad/b2_not_involution.json").code == 2,
           "non-involution square of b exits 2");
    expect(run(cli + " info " + data + "/bad/odd_order.json").code == 2, "odd order exits 2");
    expect(run(cli + " construct " + q8).code == 2, "missing required options exits 2");
    expect(run(cli).code == 2, "missing subcommand exits 2");
  }

  {  // infeasible request: exit 3
    RunResult r = run(cli + " construct " + q8 + " --subgroup " + data +
                      "/subgroups/q8_h_a2.json --alpha 1 --beta 1");
    expect(r.code == 3, "pair outside the region exits 3");
  }

  {  // cap: exit 4
    RunResult r = run(cli + " subgroups " + data + "/bad/too_big.json");
    expect(r.code == 4, "oversized enumeration exits 4");
  }

  {  // crosscheck with CSV
    RunResult r = run(cli + " crosscheck " + q8 + " --csv " + tmp_csv);
    expect(r.code == 0, "crosscheck exit code");
    json j = parse(r, "crosscheck");
    expect(j["all_equal"] == true, "crosscheck all_equal");
    expect(j["n_classes"] == 3, "crosscheck usable class count");
    expect(j["subgroups"].size() == 6, "crosscheck covers 6 subgroups");

    std::ifstream csv(tmp_csv);
    expect(csv.good(), "CSV file written");
    std::string line;
    int rows = 0;
    if (std::getline(csv, line)) expect(line == "# caysum crosscheck csv v1", "CSV version line");
    if (std::getline(csv, line))
      expect(line == "group,subgroup,case_label,n_predicted,n_achieved,equal,seconds",
             "CSV header");
    while (std::getline(csv, line))
      if (!line.empty()) ++rows;
    expect(rows == 6, "CSV has one row per subgroup");
  }

  {  // structure report
    RunResult r = run(cli + " info " + q8);
    expect(r.code == 0, "info exit code");
    json j = parse(r, "info");
    expect(j["order"] == 8 && j["abelian_order"] == 4, "info orders");
    expect(j["lambda"] == 1 && j["mu"] == 0 && j["k"] == 0, "info factor shape");
    expect(j["squares"] == json::parse("[[[0],0],[[2],0]]"), "info squares");
    expect(j["n_nonsquares"] == 6, "info non-square count");
    expect(j["classes"].size() == 5, "info class count");
  }

  {  // subgroup listing
    RunResult r = run(cli + " subgroups " + q8);
    expect(r.code == 0, "subgroups exit code");
    json j = parse(r, "subgroups");
    expect(j["count"] == 6, "subgroups count");
    bool saw_center = false;
    for (const json& s : j["subgroups"])
      if (s["label"] == "A<(2)>") {
        saw_center = true;
        expect(s["case"] == "Thm1.1(3)", "center case label");
        expect(s["script_L"] == 2, "center coset minimum");
      }
    expect(saw_center, "subgroups listing includes the center");
  }

  std::remove(tmp_set.c_str());
  std::remove(tmp_csv.c_str());

  if (g_failures == 0) {
    std::cout << "test_cli: all checks passed\n";
    return 0;
  }
  std::cerr << "test_cli: " << g_failures << " check(s) failed\n";
  return 1;
}
