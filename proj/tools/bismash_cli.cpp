// bismash: command-line front end for bismash products built from
// factorizations of permutation groups.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bismash.hpp"
#include "bismash/io.hpp"

namespace {

using namespace bismash;
using nlohmann::json;

enum ExitCode { kOk = 0, kInvalidInput = 2, kUnsupported = 3, kConsistency = 4 };

constexpr int kMaxN = 10;

struct RunConfig {
  std::string command;
  int n = 5;
  std::string variant = "J";
  std::size_t degree = 0;
  std::string L, F, G;
  std::string rows;
  std::string format = "table";
  std::string output;
  std::uint64_t seed = 20240601;
  int p = 5;
};

std::vector<Permutation> parse_generators(const std::string& text, std::size_t degree) {
  std::vector<Permutation> gens;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    gens.push_back(parse_cycles(item, degree));
  }
  return gens;
}

struct Built {
  Factorization fact;
  io::FactorizationInfo info;
};

Built build(const RunConfig& cfg) {
  const bool custom = !cfg.L.empty() || !cfg.F.empty() || !cfg.G.empty();
  if (custom) {
    if (cfg.degree == 0 || cfg.L.empty() || cfg.F.empty() || cfg.G.empty()) {
      throw InvalidInput("custom factorizations need --degree, --L, --F and --G");
    }
    if (cfg.degree > static_cast<std::size_t>(kMaxN)) throw InvalidInput("--degree above " + std::to_string(kMaxN));
    auto make = [&](const std::string& text) {
      return PermutationGroup::generate(cfg.degree, parse_generators(text, cfg.degree));
    };
    return {build_factorization(make(cfg.L), make(cfg.F), make(cfg.G)),
            {static_cast<int>(cfg.degree), "custom"}};
  }
  if (cfg.n < 2 || cfg.n > kMaxN) throw InvalidInput("--n must lie in [2, " + std::to_string(kMaxN) + "]");
  if (cfg.variant != "H" && cfg.variant != "J") throw InvalidInput("--variant must be H or J");
  const Variant v = cfg.variant == "H" ? Variant::H : Variant::J;
  return {standard_factorization(v, cfg.n), {cfg.n, cfg.variant}};
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

// -- commands ---------------------------------------------------------------

int cmd_orbits(const RunConfig& cfg, std::string& out) {
  const auto b = build(cfg);
  const auto& mp = b.fact.pair();
  std::vector<index_type> xs;
  for (const auto& x : parse_generators(cfg.rows, mp.G().degree())) {
    if (!mp.G().contains(x)) throw InvalidInput("row " + x.to_cycles() + " is not in G");
    xs.push_back(mp.G().index_of(x));
  }
  const auto table = io::orbit_table(mp, xs);
  if (cfg.format == "json") out = render_json(io::to_json(table));
  else if (cfg.format == "csv") out = io::to_csv(table);
  else out = io::to_text(table);
  return kOk;
}

int cmd_simples(const RunConfig& cfg, std::string& out) {
  const auto b = build(cfg);
  const auto sm = classify_simples(b.fact);
  const auto& G = b.fact.G();
  std::ostringstream os;
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& d : sm.descriptors()) {
      json s = {{"orbit_rep", G[d.representative].to_cycles()},
                {"orbit_size", d.orbit_size},
                {"stabilizer_order", d.stabilizer_order}};
      s["irrep"] = d.supported() ? json(to_string(*d.irrep)) : json("E_UNSUPPORTED_STABILIZER");
      s["dimension"] = d.supported() ? json(d.dimension) : json(nullptr);
      arr.push_back(std::move(s));
    }
    json doc = {{"factorization", {{"n", b.info.n}, {"variant", b.info.variant}}}, {"simples", arr}};
    if (!sm.complete()) doc["unsupported"] = sm.unsupported();
    os << render_json(doc);
  } else if (cfg.format == "csv") {
    os << "orbit_rep,orbit_size,stabilizer_order,irrep,dimension\n";
    for (const auto& d : sm.descriptors()) {
      os << io::csv_field(G[d.representative].to_cycles()) << ',' << d.orbit_size << ',' << d.stabilizer_order << ',';
      if (d.supported()) os << io::csv_field(to_string(*d.irrep)) << ',' << d.dimension << '\n';
      else os << "E_UNSUPPORTED_STABILIZER,\n";
    }
  } else {
    os << pad("orbit_rep", 20) << pad("|O_x|", 7) << pad("|F_x|", 7) << pad("irrep", 16) << "dim\n";
    std::int64_t total = 0;
    for (const auto& d : sm.descriptors()) {
      os << pad(G[d.representative].to_cycles(), 20) << pad(std::to_string(d.orbit_size), 7)
         << pad(std::to_string(d.stabilizer_order), 7);
      if (d.supported()) {
        os << pad(to_string(*d.irrep), 16) << d.dimension << '\n';
        total += d.dimension;
      } else {
        os << "E_UNSUPPORTED_STABILIZER\n";
      }
    }
    os << "simples: " << sm.descriptors().size() << "  sum of dimensions: " << total << '\n';
    for (const auto& u : sm.unsupported()) os << u << '\n';
  }
  out = os.str();
  return sm.complete() ? kOk : kUnsupported;
}

int cmd_indicators(const RunConfig& cfg, std::string& out) {
  const auto b = build(cfg);
  const auto rep = indicator_report(b.fact);
  const auto& G = b.fact.G();
  if (cfg.format == "json") {
    out = render_json(io::to_json(b.fact, b.info, rep));
  } else if (cfg.format == "csv") {
    out = io::to_csv(b.fact, rep);
  } else {
    std::ostringstream os;
    os << pad("orbit_rep", 20) << pad("|O_x|", 7) << pad("|F_x|", 7) << pad("irrep", 16) << pad("dim", 6) << "nu\n";
    for (const auto& d : rep.descriptors) {
      os << pad(G[d.representative].to_cycles(), 20) << pad(std::to_string(d.orbit_size), 7)
         << pad(std::to_string(d.stabilizer_order), 7);
      if (d.supported()) os << pad(to_string(*d.irrep), 16) << pad(std::to_string(d.dimension), 6) << *d.indicator << '\n';
      else os << "E_UNSUPPORTED_STABILIZER\n";
    }
    os << "trace_alpha: " << rep.trace_alpha << "\nsum_nu_dim: " << rep.sum_nu_dim << '\n';
    if (rep.m) os << "m0: " << rep.m->m0 << "\nm1: " << rep.m->m1 << '\n';
    for (const auto& u : rep.unsupported) os << u << '\n';
    out = os.str();
  }
  return rep.unsupported.empty() ? kOk : kUnsupported;
}

int cmd_counts(const RunConfig& cfg, std::string& out) {
  const auto b = build(cfg);
  const auto& mp = b.fact.pair();
  const auto gf = invariants_GF(mp);
  const auto i_L = count_involutions(b.fact.L());
  const auto trace = BismashProduct(b.fact.shared_pair()).antipode_trace();
  if (trace != i_L) throw ConsistencyError("Tr(α) = " + std::to_string(trace) + " differs from i_L = " + std::to_string(i_L));
  std::optional<MCounts> m;
  if (is_odd_prime(mp.order_F())) m = count_m(b.fact);
  std::optional<std::string> recursion;
  if (b.info.variant != "custom") {
    const BigInt i_n = involution_recursion(b.info.n);
    if (i_n != i_L) throw ConsistencyError("i_n recursion differs from the enumerated count");
    recursion = i_n.str();
  }
  json gf_elems = json::array();
  for (const auto& x : gf.elements()) gf_elems.push_back(x.to_cycles());

  std::ostringstream os;
  if (cfg.format == "json") {
    json doc = {{"factorization", {{"n", b.info.n}, {"variant", b.info.variant}}},
                {"order_L", b.fact.L().order()},
                {"order_F", mp.order_F()},
                {"order_G", mp.order_G()},
                {"i_L", i_L},
                {"trace_alpha", trace},
                {"i_n_recursion", recursion ? json(*recursion) : json(nullptr)},
                {"G_F", gf_elems},
                {"order_GF", gf.order()},
                {"i_GF", count_involutions(gf)},
                {"orbits", orbits(mp).size()},
                {"m0", m ? json(m->m0) : json(nullptr)},
                {"m1", m ? json(m->m1) : json(nullptr)}};
    os << render_json(doc);
  } else {
    const char sep = cfg.format == "csv" ? ',' : ' ';
    if (cfg.format == "csv") os << "quantity,value\n";
    auto line = [&](const std::string& k, const std::string& v) { os << k << (sep == ',' ? "," : ": ") << v << '\n'; };
    line("order_L", std::to_string(b.fact.L().order()));
    line("order_F", std::to_string(mp.order_F()));
    line("order_G", std::to_string(mp.order_G()));
    line("i_L", std::to_string(i_L));
    line("trace_alpha", std::to_string(trace));
    if (recursion) line("i_n_recursion", *recursion);
    line("order_GF", std::to_string(gf.order()));
    line("i_GF", std::to_string(count_involutions(gf)));
    line("orbits", std::to_string(orbits(mp).size()));
    if (m) {
      line("m0", std::to_string(m->m0));
      line("m1", std::to_string(m->m1));
    }
    std::string elems;
    for (const auto& x : gf.elements()) elems += (elems.empty() ? "" : " ") + x.to_cycles();
    line("G_F", cfg.format == "csv" ? io::csv_field(elems) : elems);
  }
  out = os.str();
  return kOk;
}

int cmd_ratio(const RunConfig& cfg, std::string& out) {
  const auto c = jp_counts(cfg.p);
  const Rational r = ratio(cfg.p);
  std::ostringstream frac;
  frac << r;
  const std::string dec = io::decimal(r, 6);
  const BigInt pp = BigInt(cfg.p) * cfg.p;
  const BigInt num = c.i_p + pp - 1;
  const BigInt den = factorial(cfg.p - 1) + (pp - 1) * (cfg.p - 1);
  std::vector<std::pair<std::string, std::string>> rows = {
      {"p", std::to_string(c.p)},           {"i_p", c.i_p.str()},
      {"m1", c.m1.str()},                   {"m0", c.m0.str()},
      {"dim1_total", c.dim1_total.str()},   {"dim1_plus", c.dim1_plus.str()},
      {"dimp_total", c.dimp_total.str()},   {"plus_total", c.plus_total.str()},
      {"simple_total", c.simple_total.str()}, {"ratio_numerator", num.str()},
      {"ratio_denominator", den.str()},     {"ratio", frac.str()},
      {"ratio_decimal", dec}};
  std::ostringstream os;
  if (cfg.format == "json") {
    json doc = json::object();
    for (const auto& [k, v] : rows) doc[k] = v;
    os << render_json(doc);
  } else if (cfg.format == "csv") {
    os << "quantity,value\n";
    for (const auto& [k, v] : rows) os << k << ',' << v << '\n';
  } else {
    for (const auto& [k, v] : rows) os << pad(k + ":", 15) << v << '\n';
  }
  out = os.str();
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::string& out) {
  const auto b = build(cfg);
  const auto& mp = b.fact.pair();
  struct Line {
    std::string name;
    bool ok;
    std::string detail;
  };
  std::vector<Line> lines;
  auto from_report = [&](const std::string& name, const VerificationReport& r) {
    std::string detail = std::to_string(r.checks) + " checks";
    if (!r.sampled.empty()) {
      detail += "; sampled:";
      for (const auto& s : r.sampled) detail += " [" + s + "]";
    }
    if (!r.ok) detail += "; " + r.witness;
    lines.push_back({name, r.ok, detail});
  };

  MatchedPairCheckOptions mpo;
  mpo.seed = cfg.seed;
  from_report("matched_pair_axioms", verify_matched_pair(mp, mpo));
  HopfCheckOptions ho;
  ho.seed = cfg.seed;
  from_report("hopf_axioms", BismashProduct(b.fact.shared_pair()).verify_hopf_axioms(ho));
  from_report("orbit_identities", verify_orbit_identities(mp));

  {
    bool ok = true;
    std::size_t tables = 0;
    std::string detail;
    for (const auto& od : orbits(mp)) {
      try {
        const auto t = irreducible_characters(od.stabilizer);
        ++tables;
        if (!is_orthonormal(t)) {
          ok = false;
          detail = "; fails for stabilizer of " + mp.G()[od.representative].to_cycles();
        }
      } catch (const UnsupportedStabilizer&) {
      }
    }
    lines.push_back({"character_orthogonality", ok, std::to_string(tables) + " stabilizer tables" + detail});
  }
  {
    const auto trace = BismashProduct(b.fact.shared_pair()).antipode_trace();
    const auto i_L = count_involutions(b.fact.L());
    lines.push_back({"trace_identity", trace == i_L,
                     "Tr(alpha) = " + std::to_string(trace) + ", i_L = " + std::to_string(i_L)});
  }

  bool all = true;
  for (const auto& l : lines) all = all && l.ok;
  std::ostringstream os;
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& l : lines) arr.push_back({{"check", l.name}, {"ok", l.ok}, {"detail", l.detail}});
    os << render_json({{"factorization", {{"n", b.info.n}, {"variant", b.info.variant}}}, {"checks", arr}, {"ok", all}});
  } else if (cfg.format == "csv") {
    os << "check,ok,detail\n";
    for (const auto& l : lines) os << l.name << ',' << (l.ok ? "true" : "false") << ',' << io::csv_field(l.detail) << '\n';
  } else {
    for (const auto& l : lines) os << (l.ok ? "PASS " : "FAIL ") << pad(l.name, 26) << l.detail << '\n';
  }
  out = os.str();
  return all ? kOk : kConsistency;
}

int run(const RunConfig& cfg, std::string& out) {
  if (cfg.command == "orbits") return cmd_orbits(cfg, out);
  if (cfg.command == "simples") return cmd_simples(cfg, out);
  if (cfg.command == "indicators") return cmd_indicators(cfg, out);
  if (cfg.command == "counts") return cmd_counts(cfg, out);
  if (cfg.command == "ratio") return cmd_ratio(cfg, out);
  if (cfg.command == "verify") return cmd_verify(cfg, out);
  throw InvalidInput("unknown command " + cfg.command);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Bismash products k^G # kF from factorized permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--n", cfg.n, "degree of S_n for the built-in factorizations")->capture_default_str();
  app.add_option("--variant", cfg.variant, "H: F = S_{n-1}, G = C_n; J: F = C_n, G = S_{n-1}")
      ->check(CLI::IsMember({"H", "J"}))
      ->capture_default_str();
  app.add_option("--degree", cfg.degree, "point count for a custom factorization");
  app.add_option("--L", cfg.L, "generators of L in cycle notation, ';'-separated");
  app.add_option("--F", cfg.F, "generators of F");
  app.add_option("--G", cfg.G, "generators of G");
  app.add_option("--format", cfg.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--output", cfg.output, "write the result to this file instead of stdout");
  app.add_option("--seed", cfg.seed, "seed for sampled verification")->capture_default_str();

  auto* orbits_cmd = app.add_subcommand("orbits", "orbit table of F acting on G");
  orbits_cmd->add_option("--rows", cfg.rows, "elements x of G to tabulate, ';'-separated (default: orbit representatives)");
  app.add_subcommand("simples", "classify the simple modules");
  app.add_subcommand("indicators", "Frobenius-Schur indicators of every simple module");
  app.add_subcommand("counts", "involution counts, invariants and orbit counts");
  auto* ratio_cmd = app.add_subcommand("ratio", "closed-form counts for J_p and the indicator-one ratio");
  ratio_cmd->add_option("--p", cfg.p, "odd prime")->capture_default_str();
  app.add_subcommand("verify", "check axioms and identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  std::string out;
  int code = kOk;
  try {
    code = run(cfg, out);
  } catch (const UnsupportedStabilizer& e) {
    std::cerr << e.what() << '\n';
    return kUnsupported;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency violation: " << e.what() << '\n';
    return kConsistency;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kConsistency;
  }

  if (cfg.output.empty()) {
    std::cout << out;
  } else {
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open " << cfg.output << '\n';
      return kInvalidInput;
    }
    f << out;
  }
  return code;
}
