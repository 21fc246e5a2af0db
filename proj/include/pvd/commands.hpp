#pragma once

// Command layer shared by the CLI binary and the tests: tokenized commands,
// strict per-verb flag sets, a canonical printer, and the dispatcher that
// maps library errors to exit codes. Exit 0 is success, 1 is a falsified
// check or a failed agreement, 2 is a rejected input, 3 is an honest
// resource refusal (precision loss, caps, infinite lattices).

#include <json.hpp>

#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pvd/checkers.hpp"
#include "pvd/dot.hpp"
#include "pvd/finite_ring.hpp"
#include "pvd/ideal_lattice.hpp"
#include "pvd/parser.hpp"

namespace pvd {

struct Command {
  std::string verb;
  std::vector<std::string> positionals;
  std::map<std::string, std::string> flags;

  bool operator==(const Command&) const = default;
};

namespace detail {

struct VerbSpec {
  std::size_t arity;
  std::set<std::string> flags;
};

inline const std::map<std::string, VerbSpec>& verb_table() {
  static const std::map<std::string, VerbSpec> table{
      {"info", {1, {"group", "format"}}},
      {"psi", {3, {"group", "precision", "format"}}},
      {"factor", {2, {"precision", "format"}}},
      {"divides", {3, {"ring", "group", "precision", "format"}}},
      {"lattice", {1, {"depth", "mode", "format"}}},
      {"check",
       {1,
        {"property", "group", "bound", "samples", "seed", "depth",
         "precision", "format"}}},
  };
  return table;
}

inline int flag_int(const Command& cmd, const std::string& name, int dflt,
                    int lo, int hi) {
  auto it = cmd.flags.find(name);
  if (it == cmd.flags.end()) return dflt;
  Cursor c{it->second, 0};
  Int v = parse_int(c);
  if (!c.done() || v < lo || v > hi) {
    fail(Errc::Validation, "--" + name + " must be an integer in [" +
                               std::to_string(lo) + ", " + std::to_string(hi) +
                               "]");
  }
  return static_cast<int>(v);
}

inline std::uint64_t flag_seed(const Command& cmd) {
  auto it = cmd.flags.find("seed");
  if (it == cmd.flags.end()) return kDefaultSeed;
  Cursor c{it->second, 0};
  Int v = parse_unsigned(c);
  if (!c.done() || v > Int(UINT64_MAX)) {
    fail(Errc::Validation, "--seed must be a nonnegative integer");
  }
  return static_cast<std::uint64_t>(v);
}

inline std::string flag_enum(const Command& cmd, const std::string& name,
                             const std::string& dflt,
                             const std::set<std::string>& allowed) {
  auto it = cmd.flags.find(name);
  std::string v = it == cmd.flags.end() ? dflt : it->second;
  if (!allowed.count(v)) {
    std::string opts;
    for (const std::string& a : allowed) {
      if (!opts.empty()) opts += "|";
      opts += a;
    }
    fail(Errc::Validation, "--" + name + " must be one of " + opts);
  }
  return v;
}

}  // namespace detail

inline Command parse_command(const std::vector<std::string>& argv) {
  if (argv.empty()) fail(Errc::Validation, "no command given");
  Command cmd;
  cmd.verb = argv[0];
  auto spec = detail::verb_table().find(cmd.verb);
  if (spec == detail::verb_table().end()) {
    fail(Errc::Validation, "unknown command " + cmd.verb);
  }
  for (std::size_t i = 1; i < argv.size(); ++i) {
    const std::string& tok = argv[i];
    if (tok.size() > 2 && tok.substr(0, 2) == "--") {
      std::string name = tok.substr(2);
      if (!spec->second.flags.count(name)) {
        fail(Errc::Validation, "flag --" + name + " does not apply to " +
                                   cmd.verb);
      }
      if (i + 1 >= argv.size()) {
        fail(Errc::Validation, "flag --" + name + " needs a value");
      }
      if (!cmd.flags.emplace(name, argv[++i]).second) {
        fail(Errc::Validation, "flag --" + name + " given twice");
      }
    } else {
      cmd.positionals.push_back(tok);
    }
  }
  if (cmd.positionals.size() != spec->second.arity) {
    fail(Errc::Validation, cmd.verb + " takes " +
                               std::to_string(spec->second.arity) +
                               " positional arguments");
  }
  return cmd;
}

inline Command parse_input(std::string_view line) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : line) {
    if (ch == ' ' || ch == '\t' || ch == '\n') {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return parse_command(tokens);
}

// canonical spelling: verb, positionals, then flags in sorted order
inline std::string print_command(const Command& cmd) {
  std::string out = cmd.verb;
  for (const std::string& p : cmd.positionals) out += " " + p;
  for (const auto& [name, value] : cmd.flags) {
    out += " --" + name + " " + value;
  }
  return out;
}

namespace detail {

inline GroupDescriptor flag_group(const Command& cmd) {
  auto it = cmd.flags.find("group");
  return group_of_string(it == cmd.flags.end() ? "z" : it->second);
}

inline std::string render_poset(const FinitePoset& p, const std::string& fmt,
                                nlohmann::json extra) {
  if (fmt == "dot") return poset_dot(p);
  nlohmann::json j = poset_json(p);
  for (auto& [k, v] : extra.items()) j[k] = v;
  if (fmt == "json") return j.dump() + "\n";
  std::string out;
  for (auto& [k, v] : extra.items()) {
    out += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  }
  out += "nodes: " + std::to_string(j["nodes"].size()) + "\n";
  for (const auto& n : j["nodes"]) {
    out += "node: " + n.get<std::string>() + "\n";
  }
  for (const auto& e : j["covers"]) {
    out += "cover: " + j["nodes"][e[1].get<int>()].get<std::string>() +
           " < " + j["nodes"][e[0].get<int>()].get<std::string>() + "\n";
  }
  return out;
}

inline int run_info(const Command& cmd, std::ostream& out) {
  ExtPtr ext = ext_of_string(cmd.positionals[0]);
  GroupDescriptor gamma = flag_group(cmd);
  std::string fmt = flag_enum(cmd, "format", "text", {"text", "json"});
  GroupDescriptor vg = value_group(ext, gamma);

  nlohmann::json j;
  j["extension"] = ext_str(*ext);
  j["field"] = field_str(ext->F);
  j["base"] = field_str(ext->K);
  j["degree"] = ext->dim;
  nlohmann::json basis = nlohmann::json::array();
  for (const FieldElement& b : ext->basis) basis.push_back(f_str(ext->F, b));
  j["basis"] = basis;
  if (ext->F.finite() && !ext->trivial()) {
    j["cosets"] = static_cast<long>(coset_reps(*ext).size());
  }
  j["exponents"] = group_str(gamma);
  j["value_group"] = ext->trivial() ? group_str(gamma) : group_str(vg);

  if (fmt == "json") {
    out << j.dump() << "\n";
    return 0;
  }
  out << "extension: " << j["extension"].get<std::string>() << "\n";
  out << "field: " << j["field"].get<std::string>() << "\n";
  out << "base: " << j["base"].get<std::string>() << "\n";
  out << "degree: " << ext->dim << "\n";
  std::string bs;
  for (const auto& b : j["basis"]) {
    if (!bs.empty()) bs += ", ";
    bs += b.get<std::string>();
  }
  out << "basis: " << bs << "\n";
  if (j.contains("cosets")) {
    out << "cosets: " << j["cosets"].get<long>() << "\n";
  }
  out << "exponents: " << j["exponents"].get<std::string>() << "\n";
  out << "value group: " << j["value_group"].get<std::string>() << "\n";
  return 0;
}

inline int run_psi(const Command& cmd, std::ostream& out) {
  ExtPtr ext = ext_of_string(cmd.positionals[0]);
  GroupDescriptor gamma = flag_group(cmd);
  std::string fmt = flag_enum(cmd, "format", "text", {"text", "json"});
  int precision = flag_int(cmd, "precision", 16, 2, 4096);
  GroupElement tau = default_tau(gamma, precision);

  Series num = series_of_string(cmd.positionals[1], ext, gamma, tau);
  Series den = series_of_string(cmd.positionals[2], ext, gamma, tau);
  DivClass d = psi(QuotientElement{num, den});

  if (fmt == "json") {
    nlohmann::json j;
    j["gamma"] = g_str(gamma, d.gamma);
    j["coset"] = ext_contains(*ext, d.coset)
                     ? "K#"
                     : f_str(ext->F, d.coset) + "*K#";
    j["display"] = div_class_str(ext, gamma, d);
    out << j.dump() << "\n";
    return 0;
  }
  out << "psi: " << div_class_str(ext, gamma, d) << "\n";
  return 0;
}

inline int run_factor(const Command& cmd, std::ostream& out) {
  ExtPtr ext = ext_of_string(cmd.positionals[0]);
  GroupDescriptor gamma = g_int();
  std::string fmt = flag_enum(cmd, "format", "text", {"text", "json"});
  int precision = flag_int(cmd, "precision", 16, 2, 4096);
  GroupElement tau = default_tau(gamma, precision);

  Series f = series_of_string(cmd.positionals[1], ext, gamma, tau);
  Factorization fac = factor_atoms(f);
  Int order = s_is_zero(f) ? Int(0) : s_min(f).as_int();

  if (fmt == "json") {
    nlohmann::json j;
    j["order"] = order.str();
    j["length"] = fac.atoms.size();
    j["unit"] = s_str(fac.unit);
    nlohmann::json atoms = nlohmann::json::array();
    for (const Series& a : fac.atoms) atoms.push_back(s_str(a));
    j["atoms"] = atoms;
    out << j.dump() << "\n";
    return 0;
  }
  out << "order: " << order.str() << "\n";
  out << "length: " << fac.atoms.size() << "\n";
  out << "unit: " << s_str(fac.unit) << "\n";
  for (const Series& a : fac.atoms) out << "atom: " << s_str(a) << "\n";
  return 0;
}

inline int run_divides(const Command& cmd, std::ostream& out) {
  ExtPtr ext = ext_of_string(cmd.positionals[0]);
  GroupDescriptor gamma = flag_group(cmd);
  std::string fmt = flag_enum(cmd, "format", "text", {"text", "json"});
  std::string ring_name = flag_enum(cmd, "ring", "s", {"r", "s"});
  int precision = flag_int(cmd, "precision", 16, 2, 4096);
  GroupElement tau = default_tau(gamma, precision);
  RingName ring = ring_name == "r" ? RingName::R : RingName::S;

  Series f = series_of_string(cmd.positionals[1], ext, gamma, tau);
  Series g = series_of_string(cmd.positionals[2], ext, gamma, tau);

  bool by_psi = divides(f, g, ring);
  std::optional<bool> by_trunc = truncated_divides(f, g, ring);
  if (by_trunc && *by_trunc != by_psi) {
    fail(Errc::Validation,
         "truncated division disagrees with the value-group route");
  }

  if (fmt == "json") {
    nlohmann::json j;
    j["divides"] = by_psi;
    j["ring"] = ring_name;
    j["truncated_conclusive"] = static_cast<bool>(by_trunc);
    out << j.dump() << "\n";
    return 0;
  }
  out << "divides: " << (by_psi ? "yes" : "no") << "\n";
  out << "routes: "
      << (by_trunc ? "value-group and truncated division agree"
                   : "truncated division inconclusive, value-group route used")
      << "\n";
  return 0;
}

inline int run_lattice(const Command& cmd, std::ostream& out) {
  ExtPtr ext = ext_of_string(cmd.positionals[0]);
  std::string fmt = flag_enum(cmd, "format", "text", {"text", "json", "dot"});
  std::string mode = flag_enum(cmd, "mode", "predicted",
                               {"predicted", "brute", "both", "fragment"});
  int depth = flag_int(cmd, "depth", 3, 1, 64);

  if (mode == "fragment") {
    // generators: the lines spanned by the K-basis elements, at level 1
    if (ext->trivial()) {
      fail(Errc::Validation, "fragment mode needs a proper extension");
    }
    std::vector<IdealNode> gens;
    for (const FieldElement& b : ext->basis) {
      gens.push_back(node_proper(1, make_subspace(*ext, {b})));
    }
    IdealLattice L = sublattice_generated(ext, gens, depth);
    out << render_poset(L.poset, fmt, {{"mode", "fragment"}});
    return 0;
  }
  if (mode == "predicted") {
    IdealLattice L = predicted_ideal_lattice(ext, depth);
    out << render_poset(L.poset, fmt, {{"mode", "predicted"}});
    return 0;
  }

  FiniteRing ring = make_finite_ring(ext, depth);
  BruteLattice brute = ideal_poset(ring, enumerate_ideals_by_growth(ring));
  if (mode == "brute") {
    out << render_poset(brute.poset, fmt, {{"mode", "brute"}});
    return 0;
  }

  // both: enumerate independently and compare against the prediction
  std::vector<IdealSet> cross = enumerate_ideals_by_sums(ring);
  bool strategies_agree =
      std::set<IdealSet>(brute.ideals.begin(), brute.ideals.end()) ==
      std::set<IdealSet>(cross.begin(), cross.end());
  IdealLattice predicted = predicted_ideal_lattice(ext, depth);
  auto edges = [](const FinitePoset& p) {
    std::set<std::pair<std::string, std::string>> e;
    for (auto [lo, hi] : cover_pairs(p)) e.insert({p.labels[lo], p.labels[hi]});
    return e;
  };
  bool agree = strategies_agree &&
               std::set<std::string>(brute.poset.labels.begin(),
                                     brute.poset.labels.end()) ==
                   std::set<std::string>(predicted.poset.labels.begin(),
                                         predicted.poset.labels.end()) &&
               edges(brute.poset) == edges(predicted.poset) &&
               poset_isomorphic(brute.poset, predicted.poset).iso;
  out << render_poset(predicted.poset, fmt,
                      {{"mode", "both"}, {"agreement", agree ? "yes" : "no"}});
  return agree ? 0 : 1;
}

inline int run_check(const Command& cmd, std::ostream& out) {
  ExtPtr ext = ext_of_string(cmd.positionals[0]);
  GroupDescriptor gamma = flag_group(cmd);
  std::string fmt = flag_enum(cmd, "format", "text", {"text", "json"});
  std::string property =
      flag_enum(cmd, "property", "classify",
                {"classify", "strongly-prime", "atomic", "boundary"});
  int bound = flag_int(cmd, "bound", 3, 1, 64);
  int depth = flag_int(cmd, "depth", 8, 1, 64);
  int precision = flag_int(cmd, "precision", 16, 2, 4096);
  long samples = flag_int(cmd, "samples", 200, 0, 1000000);
  std::uint64_t seed = flag_seed(cmd);

  CheckReport r;
  if (property == "classify") {
    r = classify_domain(ext, gamma);
  } else if (property == "strongly-prime") {
    r = check_strongly_prime(ext, gamma, bound, samples, seed);
  } else if (property == "atomic") {
    r = check_atomicity(ext, gamma, bound, depth, samples, seed);
  } else {
    if (gamma.kind != GroupKind::Int) {
      fail(Errc::UnsupportedGroup, "boundary check needs integer exponents");
    }
    r = check_boundary(ext, samples, seed, precision);
  }

  if (fmt == "json") {
    out << report_json(r).dump() << "\n";
  } else {
    out << report_text(r);
  }
  return r.verdict == Verdict::FailsWith ? 1 : 0;
}

}  // namespace detail

inline int exit_code_for(Errc c) {
  switch (c) {
    case Errc::PrecisionLoss:
    case Errc::TooLarge:
    case Errc::WindowExhausted:
    case Errc::DepthExceeded:
    case Errc::InfiniteLattice:
      return 3;
    default:
      return 2;
  }
}

inline int run_command(const Command& cmd, std::ostream& out,
                       std::ostream& err) {
  try {
    if (cmd.verb == "info") return detail::run_info(cmd, out);
    if (cmd.verb == "psi") return detail::run_psi(cmd, out);
    if (cmd.verb == "factor") return detail::run_factor(cmd, out);
    if (cmd.verb == "divides") return detail::run_divides(cmd, out);
    if (cmd.verb == "lattice") return detail::run_lattice(cmd, out);
    if (cmd.verb == "check") return detail::run_check(cmd, out);
    fail(Errc::Validation, "unknown command " + cmd.verb);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

inline const char* usage_text() {
  return
      "usage: pvd <command> [args] [flags]\n"
      "\n"
      "commands:\n"
      "  info <F/K>                     describe the ring S\n"
      "  psi <F/K> <num> <den>          divisibility class of a quotient\n"
      "  factor <F/K> <series>          atomic factorization (z exponents)\n"
      "  divides <F/K> <f> <g>          does f divide g\n"
      "  lattice <F/K>                  ideal lattice of the truncation\n"
      "  check <F/K> --property <p>     verify a property\n"
      "\n"
      "flags:\n"
      "  --group z|q|z*z      exponent group (default z)\n"
      "  --ring r|s           ambient ring for divides (default s)\n"
      "  --mode predicted|brute|both|fragment   lattice source\n"
      "  --property classify|strongly-prime|atomic|boundary\n"
      "  --depth N            truncation depth or atom-sum depth\n"
      "  --precision N        series precision (default 16)\n"
      "  --bound N            exponent window radius (default 3)\n"
      "  --samples N          sampling budget (default 200)\n"
      "  --seed N             rng seed (default 1729)\n"
      "  --format text|json|dot\n";
}

}  // namespace pvd
