#include "rstar_cli/report_json.hpp"

#include "rstar/suite.hpp"

namespace rstar::cli {

json ideal_json(const Ideal& ideal) {
  return json{{"generators", describe(ideal)}, {"members", ideal.elements()}};
}

json axioms_json(const AxiomReport& report) {
  return json{{"ok", report.ok}, {"axiom", report.axiom}, {"witness", report.witness}};
}

// Field order is part of the published schema; append only.
json classification_json(const ClassificationReport& r) {
  json out{{"ring", r.label},
           {"order", r.order},
           {"degenerate", r.degenerate},
           {"is_field", r.is_field},
           {"is_domain", r.is_domain},
           {"is_reduced", r.is_reduced},
           {"is_vnr", r.is_vnr},
           {"is_pi_regular", r.is_pi_regular},
           {"radical_injective", r.radical_injective},
           {"dcc_radical_ideals", r.dcc_radical_ideals},
           {"krull_dimension", r.krull_dimension},
           {"nilradical", ideal_json(r.nilradical)}};
  out["witnesses"] = json::array();
  for (const auto& w : r.witnesses) out["witnesses"].push_back(to_json(w));
  return out;
}

json star_json(const StarCheckResult& r, const IdealLattice& lattice) {
  json subset = json::array();
  for (auto k : r.witness_subset) subset.push_back(ideal_json(lattice[k]));
  json out{{"satisfied", r.satisfied},
           {"method", to_string(r.method)},
           {"family_size", r.family_size},
           {"checks", r.checks},
           {"witness_subset", std::move(subset)},
           {"radical_of_intersection", r.radical_of_intersection},
           {"certificate", r.certificate}};
  if (r.counterexample) {
    json members = json::array();
    for (auto k : r.counterexample->members) members.push_back(ideal_json(lattice[k]));
    out["counterexample"] = json{{"members", std::move(members)},
                                 {"radical_of_intersection", r.counterexample->radical_of_intersection},
                                 {"intersection_of_radicals", r.counterexample->intersection_of_radicals}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

json pid_star_json(const pid::PidStarResult& r) {
  json sub = json::array();
  for (const auto& i : r.witness_subfamily) sub.push_back(i.to_string());
  return json{{"satisfied", r.satisfied},
              {"method", to_string(r.method)},
              {"radical_of_intersection", r.radical_of_intersection.to_string()},
              {"witness_subfamily", std::move(sub)},
              {"witness_value", r.witness_value.to_string()},
              {"certificate", r.certificate}};
}

json pid_a2_json(const pid::PidA2Result& r) {
  json refutations = json::array();
  for (const auto& [n, k] : r.refutations) refutations.push_back(json{{"n", n}, {"k", k}});
  json out{{"holds", r.holds}};
  out["uniform_exponent"] = r.holds ? json(r.uniform_exponent) : json(nullptr);
  out["refutations"] = std::move(refutations);
  out["certificate"] = r.certificate;
  return out;
}

}  // namespace rstar::cli
