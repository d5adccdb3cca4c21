// caysum/json_io.hpp
//
// JSON (de)serialization for every type the command-line tool exchanges,
// plus the CSV emitter for crosscheck reports.  All emitters use ordered
// JSON and canonical element order, so identical inputs produce byte
// identical outputs.
//
// Wire formats:
//
//   group file       {"abelian":[4], "b_squared":[2]}         (user coordinates)
//   element          [[x1,...,xn], f]  for  (x1,...,xn) * b^f (canonical coordinates)
//   connection set   {"elements":[element, ...]}
//   subgroup         {"kind":"A",  "gens":[[...],...]}
//                    {"kind":"zb", "H_gens":[[...],...], "z":[...]}
//   region           {"case":"Thm1.1(3)", "pairs":[[0,2],...], ...}
//   witness          {"subgroup":..., "alpha":..., "beta":..., "S":..., "plan":...}
//
// Group files use the user's pre-normalization coordinates (one entry per
// listed order); everything else uses canonical coordinates (one entry per
// prime-power factor, 2-power factors first).  The `info` output echoes the
// factor permutation so the two systems stay interpretable.

#ifndef CAYSUM_JSON_IO_HPP_
#define CAYSUM_JSON_IO_HPP_

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "caysum/bruteforce.hpp"
#include "caysum/construct.hpp"

namespace caysum {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Elements and element lists.
// ---------------------------------------------------------------------------

inline json coords_to_json(const AbelianGroup& A, int a) {
  json arr = json::array();
  for (int c : A.coords(a)) arr.push_back(c);
  return arr;
}

inline int coords_from_json(const AbelianGroup& A, const json& j, const char* what) {
  if (!j.is_array())
    throw InputError(std::string(what) + ": expected a coordinate array");
  std::vector<int> c;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw InputError(std::string(what) + ": coordinates must be integers");
    c.push_back(v.get<int>());
  }
  return A.index(c);
}

inline json element_to_json(const DicyclicGroup& G, int g) {
  return json::array({coords_to_json(G.A(), G.apart(g)), G.flag(g)});
}

inline int element_from_json(const DicyclicGroup& G, const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[1].is_number_integer())
    throw InputError("group element must be [[coords...], flag]");
  int f = j[1].get<int>();
  if (f != 0 && f != 1) throw InputError("element flag must be 0 or 1");
  return G.make(coords_from_json(G.A(), j[0], "group element"), f);
}

inline json element_list_to_json(const DicyclicGroup& G, const std::vector<int>& v) {
  json arr = json::array();
  for (int g : v) arr.push_back(element_to_json(G, g));
  return arr;
}

inline json a_list_to_json(const AbelianGroup& A, const std::vector<int>& v) {
  json arr = json::array();
  for (int a : v) arr.push_back(coords_to_json(A, a));
  return arr;
}

inline json connection_set_to_json(const DicyclicGroup& G, const ConnectionSet& S) {
  return json{{"elements", element_list_to_json(G, S.elements)}};
}

inline std::vector<int> element_list_from_json(const DicyclicGroup& G, const json& j) {
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
    throw InputError("connection set file must be {\"elements\": [...]}");
  std::vector<int> out;
  for (const auto& e : j["elements"]) out.push_back(element_from_json(G, e));
  return out;
}

inline json pair_set_to_json(const PairSet& ps) {
  json arr = json::array();
  for (const auto& [a, b] : ps) arr.push_back(json::array({a, b}));
  return arr;
}

// ---------------------------------------------------------------------------
// Group files (user coordinates).
// ---------------------------------------------------------------------------

inline DicyclicGroup group_from_json(const json& j) {
  if (!j.is_object())
    throw InputError("group file: expected a JSON object");
  if (!j.contains("abelian") || !j["abelian"].is_array() || j["abelian"].empty())
    throw InputError("group file: \"abelian\" must be a nonempty array of cyclic orders");
  std::vector<long long> orders;
  for (const auto& o : j["abelian"]) {
    if (!o.is_number_integer())
      throw InputError("group file: cyclic orders must be integers");
    orders.push_back(o.get<long long>());
  }
  if (!j.contains("b_squared") || !j["b_squared"].is_array())
    throw InputError("group file: \"b_squared\" must be an array of exponents");
  std::vector<long long> b2;
  for (const auto& v : j["b_squared"]) {
    if (!v.is_number_integer())
      throw InputError("group file: b_squared coordinates must be integers");
    b2.push_back(v.get<long long>());
  }
  return make_group(orders, b2);
}

// ---------------------------------------------------------------------------
// Subgroups (canonical coordinates; generators are closed on parse).
// ---------------------------------------------------------------------------

inline Subgroup subgroup_from_json(const DicyclicGroup& G, const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw InputError("subgroup file: expected {\"kind\":\"A\"|\"zb\", ...}");
  const AbelianGroup& A = G.A();
  auto parse_gens = [&](const json& arr, const char* what) {
    if (!arr.is_array())
      throw InputError(std::string("subgroup file: ") + what +
                       " must be an array of coordinate arrays");
    std::vector<int> gens;
    for (const auto& g : arr) gens.push_back(coords_from_json(A, g, what));
    return gens;
  };
  std::string kind = j["kind"].get<std::string>();
  if (kind == "A") {
    if (!j.contains("gens"))
      throw InputError("subgroup file: kind \"A\" requires \"gens\"");
    return make_type_a(G, A.subgroup_closure(parse_gens(j["gens"], "\"gens\"")));
  }
  if (kind == "zb") {
    if (!j.contains("H_gens") || !j.contains("z"))
      throw InputError("subgroup file: kind \"zb\" requires \"H_gens\" and \"z\"");
    SubgroupA H = A.subgroup_closure(parse_gens(j["H_gens"], "\"H_gens\""));
    int z = coords_from_json(A, j["z"], "\"z\"");
    return make_type_zb(G, std::move(H), z);
  }
  throw InputError("subgroup file: unknown kind \"" + kind + "\"");
}

inline json subgroup_to_json(const DicyclicGroup& G, const Subgroup& K) {
  const AbelianGroup& A = G.A();
  json out;
  if (K.kind == SubgroupKind::TypeA) {
    out["kind"] = "A";
    out["gens"] = a_list_to_json(A, K.gens);
  } else {
    out["kind"] = "zb";
    out["H_gens"] = a_list_to_json(A, K.gens);
    out["z"] = coords_to_json(A, K.z);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Feasible regions.
// ---------------------------------------------------------------------------

inline json region_to_json(const FeasibleRegion& R) {
  json out;
  out["case"] = R.case_label;
  out["pairs"] = pair_set_to_json(R.pairs);
  out["unit"] = R.unit;
  out["eps"] = R.eps;
  out["eps_bar"] = R.eps_bar;
  out["eta_max"] = R.eta_max;
  out["zeta_max"] = R.zeta_max;
  out["t_max"] = R.t_max;
  out["tp_max"] = R.tp_max;
  out["eta_even_only"] = R.eta_even_only;
  out["zeta_even_only"] = R.zeta_even_only;
  out["whole_group"] = R.whole_group;
  return out;
}

// ---------------------------------------------------------------------------
// Subgroup invariants (for the `subgroups` listing).
// ---------------------------------------------------------------------------

inline json invariants_to_json(const DicyclicGroup& G, const Subgroup& K,
                               const SubgroupInvariants& inv) {
  const AbelianGroup& A = G.A();
  json out = subgroup_to_json(G, K);
  out["label"] = K.label;
  out["size"] = K.size();
  out["case"] = inv.case_label;
  out["L"] = inv.L;
  out["T"] = inv.T;
  out["m"] = inv.m;
  out["r"] = inv.r;
  out["u"] = inv.h_unit;
  out["eps"] = inv.eps;
  out["eps_bar"] = inv.eps_bar;
  out["b2_in_H_minus_B"] = inv.b2_in_H_minus_B;
  out["B_in_H"] = inv.B_in_H;
  out["script_L"] = inv.script_L;
  out["whole_group"] = inv.whole_group;
  json jj;
  jj["elements"] = a_list_to_json(A, inv.J.elements);
  json cosets = json::array();
  for (const auto& C : inv.J.cosets) cosets.push_back(a_list_to_json(A, C));
  jj["cosets"] = cosets;
  out["J"] = jj;
  return out;
}

// ---------------------------------------------------------------------------
// Profiles, validation reports, witnesses.
// ---------------------------------------------------------------------------

inline json profile_to_json(const DicyclicGroup& G, const ProfileResult& pr) {
  json out;
  out["regular"] = pr.regular;
  if (pr.regular) {
    out["alpha"] = pr.alpha;
    out["beta"] = pr.beta;
    out["whole_group"] = pr.whole_group;
  } else {
    out["witness_vertex"] = element_to_json(G, pr.witness_vertex);
    out["witness_count"] = pr.witness_count;
    out["expected_count"] = pr.expected_count;
    out["witness_inside"] = pr.witness_inside;
  }
  return out;
}

inline json validation_to_json(const DicyclicGroup& G, const ValidationReport& rep) {
  json out;
  out["normal"] = rep.normal();
  out["square_free"] = rep.square_free();
  if (!rep.normal()) {
    json arr = json::array();
    for (const auto& [g, h] : rep.missing_class_members)
      arr.push_back(json{{"element", element_to_json(G, g)},
                         {"missing_class_member", element_to_json(G, h)}});
    out["missing_class_members"] = arr;
  }
  if (!rep.square_free()) {
    json arr = json::array();
    for (int g : rep.square_elements) arr.push_back(element_to_json(G, g));
    out["square_elements"] = arr;
  }
  return out;
}

inline json witness_to_json(const DicyclicGroup& G, const Subgroup& K, long long alpha,
                            long long beta, const ConnectionSet& S,
                            const DecompositionPlan& plan) {
  json out;
  out["subgroup"] = subgroup_to_json(G, K);
  out["alpha"] = alpha;
  out["beta"] = beta;
  out["S"] = connection_set_to_json(G, S);
  out["plan"] = json{{"eta", plan.eta},
                     {"zeta", plan.zeta},
                     {"t", plan.t},
                     {"t_prime", plan.t_prime}};
  return out;
}

// ---------------------------------------------------------------------------
// Group structure summary (the `info` subcommand).
// ---------------------------------------------------------------------------

inline json info_to_json(const DicyclicGroup& G) {
  const AbelianGroup& A = G.A();
  const AbelianSpec& spec = A.spec();
  json out;
  out["order"] = G.order();
  out["abelian_order"] = G.abelian_order();
  out["abelian"] = spec.user_orders;
  json factors = json::array();
  for (const Factor& f : spec.factors)
    factors.push_back(json{{"prime", f.prime},
                           {"exponent", f.exponent},
                           {"modulus", f.modulus},
                           {"from_order", f.source_index}});
  out["factors"] = factors;
  out["lambda"] = spec.lambda;
  out["mu"] = spec.mu;
  out["k"] = spec.k;
  out["b_squared"] = coords_to_json(A, G.b2());
  out["b_squared_user"] = A.to_user_coords(G.b2());
  out["B"] = a_list_to_json(A, G.B_elements());
  out["A_prime"] = a_list_to_json(A, G.A_prime_elements());
  out["squares"] = element_list_to_json(G, G.square_set());
  out["involutions"] = element_list_to_json(G, G.involution_set());
  out["n_nonsquares"] = G.n_nonsquares();
  json classes = json::array();
  for (const auto& cls : G.conjugacy_classes()) {
    json c;
    c["elements"] = element_list_to_json(G, cls);
    c["is_square"] = G.is_square(cls.front());
    classes.push_back(c);
  }
  out["classes"] = classes;
  return out;
}

// ---------------------------------------------------------------------------
// Crosscheck reports: JSON and versioned CSV.
// ---------------------------------------------------------------------------

inline json crosscheck_to_json(const DicyclicGroup& G, const CrosscheckReport& rep) {
  json out;
  out["group"] = rep.group_label;
  out["n_classes"] = rep.n_classes;
  out["all_equal"] = rep.all_equal;
  out["seconds"] = rep.seconds;
  json arr = json::array();
  for (const SubgroupCheck& c : rep.checks) {
    json jc;
    jc["subgroup"] = c.K.label;
    jc["kind"] = c.K.kind == SubgroupKind::TypeA ? "A" : "zb";
    jc["case"] = c.region.case_label;
    jc["n_predicted"] = c.region.pairs.size();
    jc["n_achieved"] = c.achieved.size();
    jc["equal"] = c.equal;
    jc["seconds"] = c.seconds;
    jc["predicted"] = pair_set_to_json(c.region.pairs);
    jc["achieved"] = pair_set_to_json(c.achieved);
    if (!c.extra.empty()) {
      BruteContext ctx = prepare_brute(G, c.K);
      json ex = json::array();
      for (const auto& p : c.extra) {
        json e;
        e["pair"] = json::array({p.first, p.second});
        ConnectionSet S = G.validate_connection_set(subset_elements(G, ctx, c.witnesses.at(p)));
        e["witness"] = connection_set_to_json(G, S);
        ex.push_back(e);
      }
      jc["extra"] = ex;
    }
    if (!c.missing.empty()) jc["missing"] = pair_set_to_json(c.missing);
    arr.push_back(jc);
  }
  out["subgroups"] = arr;
  return out;
}

inline std::string crosscheck_csv(const CrosscheckReport& rep) {
  std::ostringstream os;
  os << "# caysum crosscheck csv v1\n";
  os << "group,subgroup,case_label,n_predicted,n_achieved,equal,seconds\n";
  char secs[32];
  for (const SubgroupCheck& c : rep.checks) {
    std::snprintf(secs, sizeof secs, "%.6f", c.seconds);
    os << rep.group_label << ',' << c.K.label << ',' << c.region.case_label << ','
       << c.region.pairs.size() << ',' << c.achieved.size() << ',' << (c.equal ? 1 : 0) << ','
       << secs << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// File helpers.
// ---------------------------------------------------------------------------

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open file for writing: " + path);
  out << text;
}

}  // namespace caysum

#endif  // CAYSUM_JSON_IO_HPP_
