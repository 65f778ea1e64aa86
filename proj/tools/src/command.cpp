#include "rstar_cli/command.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rstar/battery.hpp"
#include "rstar/classify.hpp"
#include "rstar/corpus.hpp"
#include "rstar/derived_rings.hpp"
#include "rstar/error.hpp"
#include "rstar/pid.hpp"
#include "rstar/ring_spec.hpp"
#include "rstar/star.hpp"
#include "rstar/suite.hpp"
#include "rstar_cli/report_json.hpp"

namespace rstar::cli {

namespace {

struct Parser {
  CLI::App app{"Decide ideal-theoretic properties of finite commutative rings and PIDs", "rstar"};
  Command cmd;
  std::string format = "text";
  std::vector<unsigned> ideal;
  std::string element;
  std::vector<std::pair<CLI::App*, Verb>> verbs;

  Parser() {
    app.require_subcommand(1, 1);
    app.set_help_flag();
    app.fallthrough(false);
    auto common = [&](CLI::App* sub) {
      sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto ring_verb = [&](const char* name, const char* help, Verb v) {
      CLI::App* sub = app.add_subcommand(name, help);
      sub->add_option("ring", cmd.ring_spec, "Ring spec, e.g. Z/12 or F2[x]/(x^2) x Z/3")->required();
      common(sub);
      verbs.emplace_back(sub, v);
      return sub;
    };
    auto with_ideal = [&](CLI::App* sub, bool required) {
      auto* opt = sub->add_option("--ideal", ideal, "Comma-separated generator indices")->delimiter(',');
      if (required) opt->required();
    };

    ring_verb("info", "Ring order, characteristic, fingerprint and axiom check", Verb::Info);
    ring_verb("ideals", "Enumerate the ideal lattice", Verb::Ideals);
    with_ideal(ring_verb("radical", "Radical of the ideal generated by --ideal", Verb::Radical), true);
    ring_verb("classify", "Field/domain/reduced/VNR/pi-regular/dimension report", Verb::Classify);
    auto* star = ring_verb("star-check", "Check the star identity over the ideal lattice", Verb::StarCheck);
    star->add_option("--star-cap", cmd.star_cap, "Exhaustive subset cap")->check(CLI::Range(0, 30));
    with_ideal(ring_verb("decompose", "Primary decomposition of --ideal (default (0))", Verb::Decompose), false);
    with_ideal(ring_verb("localize", "Localize at the prime ideal generated by --ideal", Verb::Localize), true);

    auto pid_verb = [&](const char* name, const char* help, Verb v) {
      CLI::App* sub = app.add_subcommand(name, help);
      sub->add_option("--domain", cmd.domain, "Z or Fp[x] for p in {2,3,5,7}");
      sub->add_option("--family", cmd.family, "finite:a,b,... | all-primes | prime-powers:p")->required();
      common(sub);
      verbs.emplace_back(sub, v);
      return sub;
    };
    pid_verb("pid-star", "Symbolic star check over a PID", Verb::PidStar);
    pid_verb("pid-a2", "Symbolic A2 check over a PID", Verb::PidA2)
        ->add_option("--element", element, "Element a (defaults to p for prime-powers:p)");

    CLI::App* suite = app.add_subcommand("suite", "Run the theorem battery over the corpus");
    suite->add_option("--max-order", cmd.max_order, "Largest ring order in the corpus")->check(CLI::Range(1, 256));
    suite->add_option("--star-cap", cmd.star_cap, "Exhaustive subset cap")->check(CLI::Range(0, 30));
    suite->add_option("--jobs", cmd.jobs, "Worker threads")->check(CLI::Range(1, 256));
    suite->add_option("--out", cmd.out, "Write JSON to PATH and text to PATH with a .txt extension");
    suite->add_option("--ring", cmd.rings, "Replace the corpus with these ring specs");
    suite->add_flag("--list-corpus", cmd.list_corpus, "Print the corpus listing as JSON and exit");
    common(suite);
    verbs.emplace_back(suite, Verb::Suite);
  }
};

RingPtr load_ring(const std::string& spec) { return parse_ring_spec(spec); }

Ideal load_ideal(const RingPtr& ring, const std::vector<unsigned>& gens) {
  std::vector<Element> elems;
  for (unsigned g : gens) {
    if (g >= ring->order())
      throw std::invalid_argument("ideal generator " + std::to_string(g) + " is not an element of " + ring->label());
    elems.push_back(static_cast<Element>(g));
  }
  return generate_ideal(ring, elems);
}

std::string members_text(const Ideal& ideal) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (auto e : ideal.elements()) {
    out << (first ? "" : ",") << e;
    first = false;
  }
  out << "}";
  return out.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void emit(const Command& cmd, std::ostream& out, const json& j, const std::string& text) {
  if (cmd.format == Format::Json)
    out << j.dump(2) << "\n";
  else
    out << text;
}

int run_info(const Command& cmd, std::ostream& out) {
  const RingPtr ring = load_ring(cmd.ring_spec);
  const AxiomReport ax = validate_axioms(*ring);
  json j{{"ring", ring->label()}, {"order", ring->order()}, {"characteristic", ring->characteristic()}};
  j["axioms"] = axioms_json(ax);
  std::ostringstream t;
  t << ring->label() << "\n  order " << ring->order() << ", characteristic " << ring->characteristic() << "\n  axioms: "
    << ax.describe() << "\n";
  if (ax.ok) {
    const Fingerprint f = fingerprint(ring);
    j["fingerprint"] = to_json(f);
    t << "  fingerprint (order, char, units, ideals, primes, nil): (" << f.order << ", " << f.characteristic << ", "
      << f.units << ", " << f.ideals << ", " << f.primes << ", " << f.nilradical_size << ")\n";
  } else {
    j["fingerprint"] = nullptr;
  }
  emit(cmd, out, j, t.str());
  return ax.ok ? kExitOk : kExitFailure;
}

int run_ideals(const Command& cmd, std::ostream& out) {
  const RingPtr ring = load_ring(cmd.ring_spec);
  const IdealLattice lattice = enumerate_ideals(ring);
  const auto rads = radical_indices(lattice);
  json arr = json::array();
  std::ostringstream t;
  t << ring->label() << ": " << lattice.size() << " ideals\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Ideal& I = lattice[i];
    const bool prime = is_prime(I), primary = is_primary(I), maximal = is_maximal(I);
    json e = ideal_json(I);
    e["index"] = i;
    e["prime"] = prime;
    e["primary"] = primary;
    e["maximal"] = maximal;
    e["radical_index"] = rads[i];
    arr.push_back(std::move(e));
    t << "  [" << i << "] " << describe(I) << " size " << I.size() << (maximal ? " maximal" : prime ? " prime" : "")
      << (primary && !prime ? " primary" : "") << ", radical [" << rads[i] << "]\n";
  }
  emit(cmd, out, json{{"ring", ring->label()}, {"ideals", std::move(arr)}}, t.str());
  return kExitOk;
}

int run_radical(const Command& cmd, std::ostream& out) {
  const RingPtr ring = load_ring(cmd.ring_spec);
  const Ideal I = load_ideal(ring, *cmd.ideal);
  const Ideal r = radical(I);
  std::ostringstream t;
  t << "rad " << describe(I) << " = " << describe(r) << " " << members_text(r) << "\n";
  emit(cmd, out, json{{"ring", ring->label()}, {"ideal", ideal_json(I)}, {"radical", ideal_json(r)}}, t.str());
  return kExitOk;
}

int run_classify(const Command& cmd, std::ostream& out) {
  const RingPtr ring = load_ring(cmd.ring_spec);
  const auto rep = classify(enumerate_ideals(ring));
  std::ostringstream t;
  t << rep.label << " (order " << rep.order << (rep.degenerate ? ", zero ring" : "") << ")\n"
    << "  field " << yes_no(rep.is_field) << ", domain " << yes_no(rep.is_domain) << ", reduced "
    << yes_no(rep.is_reduced) << ", vnr " << yes_no(rep.is_vnr) << ", pi-regular " << yes_no(rep.is_pi_regular)
    << "\n  radical-injective " << yes_no(rep.radical_injective) << ", dcc on radical ideals "
    << yes_no(rep.dcc_radical_ideals) << ", krull dimension " << rep.krull_dimension << "\n  nilradical "
    << describe(rep.nilradical) << " " << members_text(rep.nilradical) << "\n";
  for (const auto& w : rep.witnesses) {
    t << "  not " << w.predicate << ": " << w.note;
    for (std::size_t i = 0; i < w.elements.size(); ++i) t << (i == 0 ? " (" : ", ") << w.elements[i];
    t << (w.elements.empty() ? "" : ")") << "\n";
  }
  emit(cmd, out, classification_json(rep), t.str());
  return kExitOk;
}

int run_star(const Command& cmd, std::ostream& out) {
  const RingPtr ring = load_ring(cmd.ring_spec);
  const IdealLattice lattice = enumerate_ideals(ring);
  const auto r = star_check_finite(lattice, cmd.star_cap);
  std::ostringstream t;
  t << ring->label() << ": star " << (r.satisfied ? "holds" : "FAILS") << " (" << to_string(r.method) << ", "
    << r.family_size << " ideals, " << r.checks << " checks)\n  S' =";
  for (auto k : r.witness_subset) t << " " << describe(lattice[k]);
  if (r.witness_subset.empty()) t << " {}";
  t << "\n  " << r.certificate << "\n";
  json j = star_json(r, lattice);
  j = json{{"ring", ring->label()}, {"star", std::move(j)}};
  emit(cmd, out, j, t.str());
  return r.satisfied ? kExitOk : kExitFailure;
}

int run_decompose(const Command& cmd, std::ostream& out) {
  const RingPtr ring = load_ring(cmd.ring_spec);
  const IdealLattice lattice = enumerate_ideals(ring);
  const Ideal target = cmd.ideal ? load_ideal(ring, *cmd.ideal) : Ideal::zero(ring);
  if (!target.is_proper()) throw std::invalid_argument("the unit ideal has no primary decomposition");
  const auto d = primary_decomposition(target, lattice);
  const bool ok = verify_decomposition(d);
  json comps = json::array();
  std::ostringstream t;
  t << describe(target) << " =";
  bool first = true;
  for (const auto& q : d.components) {
    json c = ideal_json(q);
    c["radical"] = ideal_json(radical(q));
    comps.push_back(std::move(c));
    t << (first ? " " : " cap ") << describe(q);
    first = false;
  }
  t << "\n  verified: " << yes_no(ok) << "\n";
  emit(cmd, out, json{{"ring", ring->label()}, {"target", ideal_json(target)}, {"components", std::move(comps)}, {"verified", ok}},
       t.str());
  return ok ? kExitOk : kExitFailure;
}

int run_localize(const Command& cmd, std::ostream& out) {
  const RingPtr ring = load_ring(cmd.ring_spec);
  const Ideal p = load_ideal(ring, *cmd.ideal);
  if (!is_prime(p)) throw std::invalid_argument(describe(p) + " is not a prime ideal of " + ring->label());
  const auto loc = localize_at_prime(p);
  const auto lattice = enumerate_ideals(loc.ring);
  std::size_t maximal = 0;
  for (const auto& I : lattice.ideals()) maximal += is_maximal(I);
  const Fingerprint f = fingerprint(lattice);
  std::ostringstream t;
  t << loc.ring->label() << "\n  kernel " << members_text(saturation_kernel(p)) << "\n  order " << f.order << ", "
    << maximal << " maximal ideal" << (maximal == 1 ? " (local)" : "s") << ", field " << yes_no(is_field(*loc.ring))
    << "\n";
  json j{{"ring", ring->label()},
         {"prime", ideal_json(p)},
         {"localization", loc.ring->label()},
         {"kernel", ideal_json(saturation_kernel(p))},
         {"order", f.order},
         {"maximal_ideals", maximal},
         {"local", maximal == 1},
         {"is_field", is_field(*loc.ring)},
         {"fingerprint", to_json(f)}};
  emit(cmd, out, j, t.str());
  return kExitOk;
}

int run_pid_star(const Command& cmd, std::ostream& out) {
  const auto d = pid::Domain::parse(cmd.domain);
  const auto spec = pid::FamilySpec::parse(d, cmd.family);
  const auto r = pid_star_check(spec);
  std::ostringstream t;
  t << "family " << spec.describe() << ": star " << (r.satisfied ? "holds" : "fails") << "\n  rad of meet "
    << r.radical_of_intersection.to_string() << ", finite subfamily";
  for (const auto& i : r.witness_subfamily) t << " " << i.to_string();
  t << " gives " << r.witness_value.to_string() << "\n  " << r.certificate << "\n";
  json j{{"domain", d.name()}, {"family", spec.describe()}};
  j["star"] = pid_star_json(r);
  emit(cmd, out, j, t.str());
  return kExitOk;
}

int run_pid_a2(const Command& cmd, std::ostream& out) {
  const auto d = pid::Domain::parse(cmd.domain);
  const auto spec = pid::FamilySpec::parse(d, cmd.family);
  pid::Generator a;
  if (cmd.element)
    a = d.parse_generator(*cmd.element);
  else if (spec.kind == pid::FamilyKind::PrimePowers)
    a = spec.base;
  else
    throw UsageError("pid-a2: --element is required unless the family is prime-powers:p");
  const auto r = pid_a2_check(spec, a);
  std::ostringstream t;
  t << "family " << spec.describe() << ", a = " << d.format(a) << ": A2 "
    << (r.holds ? "holds with n = " + std::to_string(r.uniform_exponent) : std::string("fails")) << "\n";
  for (const auto& [n, k] : r.refutations) t << "  n = " << n << " refuted by member index " << k << "\n";
  t << "  " << r.certificate << "\n";
  json j{{"domain", d.name()}, {"family", spec.describe()}, {"element", d.format(a)}};
  j["a2"] = pid_a2_json(r);
  emit(cmd, out, j, t.str());
  return kExitOk;
}

int run_suite_verb(const Command& cmd, std::ostream& out, std::ostream& err) {
  SuiteOptions opt;
  opt.max_order = cmd.max_order;
  opt.star_cap = cmd.star_cap;
  opt.jobs = cmd.jobs;
  for (const auto& spec : cmd.rings) opt.rings.push_back(load_ring(spec));
  if (cmd.list_corpus) {
    out << corpus_listing(opt.rings.empty() ? build_corpus(opt.max_order) : opt.rings).dump(2) << "\n";
    return kExitOk;
  }
  const SuiteResult r = run_suite(opt);
  const std::string js = to_json(r).dump(2) + "\n";
  const std::string text = to_text(r);
  if (cmd.out) {
    std::filesystem::path json_path(*cmd.out);
    std::filesystem::path text_path = json_path;
    text_path.replace_extension(".txt");
    if (text_path == json_path) text_path += ".txt";
    for (const auto& [path, body] : {std::pair{json_path, js}, std::pair{text_path, text}}) {
      std::ofstream f(path, std::ios::binary);
      f << body;
      if (!f) {
        err << "rstar: cannot write " << path.string() << "\n";
        return kExitFailure;
      }
    }
  }
  if (!cmd.out || cmd.format == Format::Text)
    out << (cmd.format == Format::Json ? js : text);
  else
    out << "wrote " << *cmd.out << "\n";
  if (r.first_failure) err << "rstar: " << *r.first_failure << "\n";
  return r.exit_code();
}

}  // namespace

std::string to_string(Verb v) {
  switch (v) {
    case Verb::Info: return "info";
    case Verb::Ideals: return "ideals";
    case Verb::Radical: return "radical";
    case Verb::Classify: return "classify";
    case Verb::StarCheck: return "star-check";
    case Verb::Decompose: return "decompose";
    case Verb::Localize: return "localize";
    case Verb::PidStar: return "pid-star";
    case Verb::PidA2: return "pid-a2";
    case Verb::Suite: return "suite";
  }
  return "?";
}

std::string usage() {
  Parser p;
  return p.app.help();
}

Command parse_command(const std::vector<std::string>& args) {
  Parser p;
  if (!args.empty() && !args.front().empty() && args.front()[0] != '-') {
    const bool known = std::any_of(p.verbs.begin(), p.verbs.end(),
                                   [&](const auto& v) { return v.first->get_name() == args.front(); });
    if (!known) throw UsageError("unknown verb '" + args.front() + "'");
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    p.app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (msg.empty()) msg = e.get_name();
    throw UsageError(msg);
  }
  for (const auto& [sub, verb] : p.verbs)
    if (sub->parsed()) p.cmd.verb = verb;
  p.cmd.format = p.format == "json" ? Format::Json : Format::Text;
  if (!p.ideal.empty()) p.cmd.ideal = p.ideal;
  if (!p.element.empty()) p.cmd.element = p.element;
  return p.cmd;
}

int run_command(const Command& cmd, std::ostream& out, std::ostream& err) {
  switch (cmd.verb) {
    case Verb::Info: return run_info(cmd, out);
    case Verb::Ideals: return run_ideals(cmd, out);
    case Verb::Radical: return run_radical(cmd, out);
    case Verb::Classify: return run_classify(cmd, out);
    case Verb::StarCheck: return run_star(cmd, out);
    case Verb::Decompose: return run_decompose(cmd, out);
    case Verb::Localize: return run_localize(cmd, out);
    case Verb::PidStar: return run_pid_star(cmd, out);
    case Verb::PidA2: return run_pid_a2(cmd, out);
    case Verb::Suite: return run_suite_verb(cmd, out, err);
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty() || args.front() == "--help" || args.front() == "-h") {
    (args.empty() ? err : out) << usage();
    return args.empty() ? kExitUsage : kExitOk;
  }
  if (std::any_of(args.begin() + 1, args.end(), [](const auto& a) { return a == "--help" || a == "-h"; })) {
    Parser p;
    for (const auto& [sub, verb] : p.verbs)
      if (sub->get_name() == args.front()) {
        out << sub->help();
        return kExitOk;
      }
  }
  try {
    return run_command(parse_command(args), out, err);
  } catch (const UsageError& e) {
    err << "rstar: usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "rstar: resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    err << "rstar: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "rstar: internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace rstar::cli
