// caysum command-line tool.
//
// Batch-oriented front end over the library: group structure reports,
// subgroup listings, feasibility predictions, witness construction,
// connection-set verification, and the exhaustive crosscheck.  stdout
// carries JSON only; diagnostics go to stderr.
//
// Exit codes:
//   0  success (for `crosscheck`: every subgroup matched)
//   1  crosscheck found a mismatch between prediction and enumeration
//   2  malformed input (bad JSON, bad coordinates, bad CLI usage)
//   3  infeasible request (the pair lies outside the predicted region)
//   4  a configurable cap was exceeded
//  70  internal error (an invariant the library asserts failed)

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "caysum/json_io.hpp"

namespace {

using caysum::json;

std::string stem_of(const std::string& path) {
  size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  size_t dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

void emit(const json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    caysum::write_text_file(out_path, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regular sets in Cayley sum graphs of generalized dicyclic groups"};
  app.require_subcommand(1);

  std::string group_path, subgroup_path, set_path, out_path, csv_path;
  long long alpha = 0, beta = 0;
  int max_classes = 24, workers = 4;

  CLI::App* cmd_info =
      app.add_subcommand("info", "group structure: factors, squares, involutions, classes");
  cmd_info->add_option("group", group_path, "group JSON file")->required();
  cmd_info->add_option("-o,--output", out_path, "write JSON here instead of stdout");

  CLI::App* cmd_subgroups =
      app.add_subcommand("subgroups", "list every subgroup with its invariants");
  cmd_subgroups->add_option("group", group_path, "group JSON file")->required();
  cmd_subgroups->add_option("-o,--output", out_path, "write JSON here instead of stdout");

  CLI::App* cmd_feasible =
      app.add_subcommand("feasible", "predicted (alpha,beta) regions");
  cmd_feasible->add_option("group", group_path, "group JSON file")->required();
  cmd_feasible->add_option("--subgroup", subgroup_path,
                           "subgroup JSON file (default: every subgroup)");
  cmd_feasible->add_option("-o,--output", out_path, "write JSON here instead of stdout");

  CLI::App* cmd_construct =
      app.add_subcommand("construct", "build a witness connection set for (alpha,beta)");
  cmd_construct->add_option("group", group_path, "group JSON file")->required();
  cmd_construct->add_option("--subgroup", subgroup_path, "subgroup JSON file")->required();
  cmd_construct->add_option("--alpha", alpha, "inside count")->required();
  cmd_construct->add_option("--beta", beta, "outside count")->required();
  cmd_construct->add_option("-o,--output", out_path, "write JSON here instead of stdout");

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "validate a connection set and profile a subgroup");
  cmd_verify->add_option("group", group_path, "group JSON file")->required();
  cmd_verify->add_option("--subgroup", subgroup_path, "subgroup JSON file")->required();
  cmd_verify->add_option("--set", set_path, "connection set JSON file")->required();
  cmd_verify->add_option("-o,--output", out_path, "write JSON here instead of stdout");

  CLI::App* cmd_crosscheck =
      app.add_subcommand("crosscheck", "exhaustive enumeration vs prediction, every subgroup");
  cmd_crosscheck->add_option("group", group_path, "group JSON file")->required();
  cmd_crosscheck->add_option("--max-classes", max_classes,
                             "cap on usable conjugacy classes")->capture_default_str();
  cmd_crosscheck->add_option("--workers", workers, "worker threads")->capture_default_str();
  cmd_crosscheck->add_option("--csv", csv_path, "also write the CSV table to this path");
  cmd_crosscheck->add_option("-o,--output", out_path, "write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);     // prints help or the usage error
    return code == 0 ? 0 : 2;   // bad usage is malformed input
  }

  try {
    caysum::DicyclicGroup G = caysum::group_from_json(caysum::load_json_file(group_path));

    if (*cmd_info) {
      emit(caysum::info_to_json(G), out_path);
      return 0;
    }

    if (*cmd_subgroups) {
      std::vector<caysum::Subgroup> subs = caysum::enumerate_all_subgroups(G);
      json out;
      out["group"] = stem_of(group_path);
      out["count"] = subs.size();
      json arr = json::array();
      for (const caysum::Subgroup& K : subs)
        arr.push_back(caysum::invariants_to_json(G, K, caysum::subgroup_invariants(G, K)));
      out["subgroups"] = arr;
      emit(out, out_path);
      return 0;
    }

    if (*cmd_feasible) {
      if (!subgroup_path.empty()) {
        caysum::Subgroup K = caysum::subgroup_from_json(G, caysum::load_json_file(subgroup_path));
        emit(caysum::region_to_json(caysum::feasible_region(G, K)), out_path);
        return 0;
      }
      json out;
      out["group"] = stem_of(group_path);
      json arr = json::array();
      for (const caysum::Subgroup& K : caysum::enumerate_all_subgroups(G)) {
        json r;
        r["subgroup"] = K.label;
        json reg = caysum::region_to_json(caysum::feasible_region(G, K));
        for (const auto& [key, val] : reg.items()) r[key] = val;
        arr.push_back(r);
      }
      out["regions"] = arr;
      emit(out, out_path);
      return 0;
    }

    if (*cmd_construct) {
      caysum::Subgroup K = caysum::subgroup_from_json(G, caysum::load_json_file(subgroup_path));
      caysum::DecompositionPlan plan;
      caysum::ConnectionSet S = caysum::construct_S(G, K, alpha, beta, &plan);
      emit(caysum::witness_to_json(G, K, alpha, beta, S, plan), out_path);
      return 0;
    }

    if (*cmd_verify) {
      caysum::Subgroup K = caysum::subgroup_from_json(G, caysum::load_json_file(subgroup_path));
      std::vector<int> elems =
          caysum::element_list_from_json(G, caysum::load_json_file(set_path));
      caysum::ValidationReport vrep;
      caysum::ConnectionSet S = G.validate_connection_set(elems, &vrep);
      json out;
      out["subgroup"] = K.label;
      out["set_size"] = S.elements.size();
      out["validation"] = caysum::validation_to_json(G, vrep);
      if (S.validated_normal && S.validated_square_free) {
        caysum::ProfileResult pr = caysum::subgroup_profile_fast(G, S, K);
        out["profile"] = caysum::profile_to_json(G, pr);
        if (pr.regular && pr.alpha == 0 && pr.beta == 0)
          out["note"] = "(0,0) is excluded by the classification; "
                        "an empty profile is vacuously regular";
      } else {
        out["note"] = "profile omitted: the set is not a valid connection set";
      }
      emit(out, out_path);
      return 0;
    }

    if (*cmd_crosscheck) {
      caysum::CrosscheckReport rep =
          caysum::crosscheck(G, stem_of(group_path), max_classes, workers);
      if (!csv_path.empty()) caysum::write_text_file(csv_path, caysum::crosscheck_csv(rep));
      emit(caysum::crosscheck_to_json(G, rep), out_path);
      if (!rep.all_equal)
        std::cerr << "crosscheck: prediction and enumeration disagree, see report\n";
      return rep.all_equal ? 0 : 1;
    }
  } catch (const caysum::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const caysum::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const caysum::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return 0;
}
