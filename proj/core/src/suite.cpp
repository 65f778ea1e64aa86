#include "rstar/suite.hpp"

#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "rstar/error.hpp"

namespace rstar {

namespace {

using json = nlohmann::ordered_json;

RingBattery failed_battery(const RingPtr& ring, const std::string& what) {
  RingBattery b;
  b.label = ring->label();
  b.order = ring->order();
  b.degenerate = ring->is_zero_ring();
  b.axioms.ok = true;
  b.invariants.push_back({"evaluation", false, what, {Witness{"evaluation", {}, {}, what}}});
  return b;
}

std::string first_failure_of(const std::string& where, const std::vector<StatementResult>& st,
                             const std::vector<InvariantResult>& inv) {
  for (const auto& s : st)
    if (s.verdict == Verdict::Refuted) return where + ": " + s.id + " refuted (" + s.detail + ")";
  for (const auto& i : inv)
    if (!i.held) {
      std::string text = where + ": invariant " + i.id + " failed (" + i.detail + ")";
      if (!i.witnesses.empty()) text += ": " + i.witnesses.front().note;
      return text;
    }
  return {};
}

}  // namespace

SuiteResult run_suite(const SuiteOptions& opt) {
  SuiteResult r;
  r.max_order = opt.max_order;
  r.star_cap = opt.star_cap;
  const std::vector<RingPtr> rings = opt.rings.empty() ? build_corpus(opt.max_order) : opt.rings;
  BatteryOptions bo;
  bo.star_cap = opt.star_cap;

  r.rings.resize(rings.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rings.size(); i = next++) {
      try {
        r.rings[i] = theorem_battery(rings[i], bo);
      } catch (const std::exception& e) {
        r.rings[i] = failed_battery(rings[i], e.what());
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(opt.jobs, rings.size()));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  if (opt.include_pid) {
    r.pid.push_back(pid_battery(pid::Domain::integers()));
    r.pid.push_back(pid_battery(pid::Domain::polynomials(2)));
  }

  for (const auto& b : r.rings) {
    r.refuted = r.refuted || b.refuted();
    r.invariants_held = r.invariants_held && b.invariants_held();
    if (!r.first_failure && (b.refuted() || !b.invariants_held()))
      r.first_failure = first_failure_of(b.label, b.statements, b.invariants);
  }
  for (const auto& b : r.pid) {
    r.refuted = r.refuted || b.refuted();
    r.invariants_held = r.invariants_held && b.invariants_held();
    if (!r.first_failure && (b.refuted() || !b.invariants_held()))
      r.first_failure = first_failure_of(b.domain.name(), b.statements, b.invariants);
  }
  return r;
}

json to_json(const Witness& w) {
  return json{{"predicate", w.predicate}, {"elements", w.elements}, {"ideals", w.ideals}, {"note", w.note}};
}

json to_json(const StatementResult& s) {
  json out{{"id", s.id}, {"verdict", to_string(s.verdict)}, {"vacuous", s.vacuous}, {"detail", s.detail}};
  out["witnesses"] = json::array();
  for (const auto& w : s.witnesses) out["witnesses"].push_back(to_json(w));
  return out;
}

json to_json(const InvariantResult& i) {
  json out{{"id", i.id}, {"held", i.held}, {"detail", i.detail}};
  out["witnesses"] = json::array();
  for (const auto& w : i.witnesses) out["witnesses"].push_back(to_json(w));
  return out;
}

json to_json(const Fingerprint& f) {
  return json{{"order", f.order},   {"characteristic", f.characteristic}, {"units", f.units},
              {"ideals", f.ideals}, {"primes", f.primes},                 {"nilradical_size", f.nilradical_size}};
}

json to_json(const RingBattery& b) {
  json out{{"label", b.label}, {"order", b.order}, {"degenerate", b.degenerate}};
  out["fingerprint"] = b.fingerprint ? to_json(*b.fingerprint) : json(nullptr);
  out["star_method"] = b.star_method;
  out["statements"] = json::array();
  for (const auto& s : b.statements) out["statements"].push_back(to_json(s));
  out["invariants"] = json::array();
  for (const auto& i : b.invariants) out["invariants"].push_back(to_json(i));
  return out;
}

json to_json(const PidBattery& b) {
  const auto& t = b.zero_dim;
  auto ideal_list = [](const std::vector<pid::PIDIdeal>& v) {
    json a = json::array();
    for (const auto& i : v) a.push_back(i.to_string());
    return a;
  };
  json out{{"domain", b.domain.name()}};
  out["five_conditions"] = json{{"star", t.star},
                         {"zero_dimensional", t.zero_dimensional},
                         {"artinian", t.artinian},
                         {"pi_regular", t.pi_regular},
                         {"prime_family_condition", t.prime_family_condition},
                         {"consistent", t.consistent},
                         {"prime_chain", ideal_list(t.prime_chain)},
                         {"descending_chain", ideal_list(t.descending_chain.chain)},
                         {"radical_chain", ideal_list(t.radical_chain.chain)},
                         {"pi_certificate", t.pi_certificate}};
  out["all_primes"] = json{{"satisfied", b.all_primes.satisfied},
                           {"witness_subfamily", ideal_list(b.all_primes.witness_subfamily)},
                           {"witness_value", b.all_primes.witness_value.to_string()},
                           {"radical_of_intersection", b.all_primes.radical_of_intersection.to_string()},
                           {"certificate", b.all_primes.certificate}};
  out["prime_powers"] = json{{"satisfied", b.prime_powers.satisfied},
                             {"witness_subfamily", ideal_list(b.prime_powers.witness_subfamily)},
                             {"witness_value", b.prime_powers.witness_value.to_string()},
                             {"radical_of_intersection", b.prime_powers.radical_of_intersection.to_string()},
                             {"certificate", b.prime_powers.certificate}};
  out["a2_prime_powers"] = json{{"holds", b.a2_prime_powers.holds}, {"certificate", b.a2_prime_powers.certificate}};
  out["statements"] = json::array();
  for (const auto& s : b.statements) out["statements"].push_back(to_json(s));
  out["invariants"] = json::array();
  for (const auto& i : b.invariants) out["invariants"].push_back(to_json(i));
  return out;
}

json to_json(const SuiteResult& r) {
  json out{{"schema", kReportSchema}};
  out["corpus"] = json{{"max_order", r.max_order}, {"star_cap", r.star_cap}, {"rings", r.rings.size()}};

  // Per-statement tallies across the finite corpus and the symbolic domains.
  json statements = json::array();
  for (const auto& id : statement_ids()) {
    std::size_t evaluated = 0, vacuous = 0, refuted = 0;
    auto tally = [&](const std::vector<StatementResult>& st) {
      for (const auto& s : st) {
        if (s.id != id) continue;
        ++evaluated;
        vacuous += s.vacuous;
        refuted += s.verdict == Verdict::Refuted;
      }
    };
    for (const auto& b : r.rings) tally(b.statements);
    for (const auto& b : r.pid) tally(b.statements);
    statements.push_back(json{{"id", id},
                              {"verdict", refuted ? "refuted" : "consistent"},
                              {"evaluated", evaluated},
                              {"vacuous", vacuous},
                              {"refuted", refuted}});
  }
  out["statements"] = std::move(statements);

  std::map<std::string, std::pair<std::size_t, std::size_t>> inv;
  std::vector<std::string> inv_order;
  auto count = [&](const std::vector<InvariantResult>& v) {
    for (const auto& i : v) {
      if (!inv.count(i.id)) inv_order.push_back(i.id);
      auto& [checked, failed] = inv[i.id];
      ++checked;
      failed += !i.held;
    }
  };
  for (const auto& b : r.rings) count(b.invariants);
  for (const auto& b : r.pid) count(b.invariants);
  json invariants = json::array();
  for (const auto& id : inv_order)
    invariants.push_back(json{{"id", id}, {"checked", inv[id].first}, {"failed", inv[id].second}});
  out["invariants"] = std::move(invariants);

  out["rings"] = json::array();
  for (const auto& b : r.rings) out["rings"].push_back(to_json(b));
  out["pid"] = json::array();
  for (const auto& b : r.pid) out["pid"].push_back(to_json(b));
  out["summary"] = json{{"refuted", r.refuted},
                        {"invariants_held", r.invariants_held},
                        {"first_failure", r.first_failure ? json(*r.first_failure) : json(nullptr)},
                        {"exit_code", r.exit_code()}};
  return out;
}

std::string to_text(const SuiteResult& r) {
  const json j = to_json(r);
  std::ostringstream out;
  out << "theorem suite: " << r.rings.size() << " rings (max order " << r.max_order << ", star cap " << r.star_cap
      << "), " << r.pid.size() << " symbolic domains\n\n";
  out << "statements\n";
  for (const auto& s : j["statements"]) {
    out << "  " << s["id"].get<std::string>() << ": " << s["verdict"].get<std::string>() << " (evaluated "
        << s["evaluated"].get<std::size_t>() << ", vacuous " << s["vacuous"].get<std::size_t>() << ")\n";
  }
  out << "\ninvariants\n";
  for (const auto& i : j["invariants"]) {
    out << "  " << i["id"].get<std::string>() << ": " << (i["failed"].get<std::size_t>() == 0 ? "held" : "FAILED")
        << " (" << i["checked"].get<std::size_t>() << " checked, " << i["failed"].get<std::size_t>() << " failed)\n";
  }
  out << "\nsymbolic domains\n";
  for (const auto& b : r.pid) {
    const auto& t = b.zero_dim;
    out << "  " << b.domain.name() << ": star " << (t.star ? "holds" : "fails") << " via "
        << b.all_primes.witness_value.to_string() << " != " << b.all_primes.radical_of_intersection.to_string()
        << "; five conditions " << (t.consistent ? "agree" : "DISAGREE") << "; radical chain";
    for (const auto& i : t.radical_chain.chain) out << " " << i.to_string();
    out << "\n";
  }
  out << "\n";
  for (const auto& b : r.rings) {
    if (b.degenerate) out << "degenerate: " << b.label << "\n";
  }
  if (r.first_failure)
    out << "result: FAIL\nfirst failure: " << *r.first_failure << "\n";
  else
    out << "result: ok\n";
  return out.str();
}

json corpus_listing(const std::vector<RingPtr>& corpus) {
  json out = json::array();
  for (const auto& ring : corpus) out.push_back(json{{"label", ring->label()}, {"fingerprint", to_json(fingerprint(ring))}});
  return out;
}

}  // namespace rstar
