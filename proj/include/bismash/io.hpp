#pragma once

// JSON and CSV renderings of orbit tables, character tables, algebra
// elements and indicator reports.

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "bismash/characters.hpp"
#include "bismash/hopf.hpp"
#include "bismash/indicators.hpp"
#include "bismash/matched_pair.hpp"

namespace bismash::io {

using nlohmann::json;

inline json one_line(const Permutation& p) {
  json arr = json::array();
  for (auto v : p.images()) arr.push_back(v);
  return arr;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string decimal(const Rational& r, int digits = 6) {
  std::ostringstream os;
  os << std::setprecision(digits) << static_cast<double>(r);
  return os.str();
}

// -- orbit tables -----------------------------------------------------------

struct OrbitTable {
  std::vector<std::string> columns;  // elements of F, canonical order
  struct Row {
    Permutation x;
    std::vector<Permutation> images;  // x ◁ a per column
    std::size_t stabilizer_order;
  };
  std::vector<Row> rows;
};

/// One row per listed x (orbit representatives when `xs` is empty).
inline OrbitTable orbit_table(const MatchedPair& mp, std::vector<index_type> xs = {}) {
  const auto orbs = orbits(mp);
  if (xs.empty())
    for (const auto& od : orbs) xs.push_back(od.representative);
  OrbitTable t;
  for (const auto& a : mp.F().elements()) t.columns.push_back(a.to_cycles());
  for (index_type x : xs) {
    OrbitTable::Row row{mp.G()[x], {}, orbs[orbit_of(orbs, x)].stabilizer.order()};
    for (index_type y : orbit_table_row(mp, x)) row.images.push_back(mp.G()[y]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline std::string to_csv(const OrbitTable& t) {
  std::ostringstream os;
  os << "x";
  for (const auto& c : t.columns) os << ',' << csv_field(c);
  os << ",stabilizer_order\n";
  for (const auto& r : t.rows) {
    os << csv_field(r.x.to_cycles());
    for (const auto& y : r.images) os << ',' << csv_field(y.to_cycles());
    os << ',' << r.stabilizer_order << '\n';
  }
  return os.str();
}

inline json to_json(const OrbitTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json imgs = json::array();
    for (const auto& y : r.images) imgs.push_back(y.to_cycles());
    rows.push_back({{"x", r.x.to_cycles()}, {"x_one_line", one_line(r.x)}, {"images", imgs},
                    {"stabilizer_order", r.stabilizer_order}});
  }
  return {{"columns", t.columns}, {"rows", rows}};
}

inline std::string to_text(const OrbitTable& t) {
  std::size_t w = 1;
  for (const auto& c : t.columns) w = std::max(w, c.size());
  for (const auto& r : t.rows) {
    w = std::max(w, r.x.to_cycles().size());
    for (const auto& y : r.images) w = std::max(w, y.to_cycles().size());
  }
  std::ostringstream os;
  auto cell = [&](const std::string& s) { os << std::left << std::setw(static_cast<int>(w) + 2) << s; };
  cell("x");
  os << "| ";
  for (const auto& c : t.columns) cell(c);
  os << "| |F_x|\n";
  for (const auto& r : t.rows) {
    cell(r.x.to_cycles());
    os << "| ";
    for (const auto& y : r.images) cell(y.to_cycles());
    os << "| " << r.stabilizer_order << '\n';
  }
  return os.str();
}

// -- algebra elements -------------------------------------------------------

inline json to_json(const MatchedPair& mp, const AlgebraElement& u) {
  json arr = json::array();
  for (const auto& [s, c] : u.terms()) {
    arr.push_back({{"x", mp.G()[s.x].to_cycles()}, {"a", mp.F()[s.a].to_cycles()}, {"coeff", c.to_string()}});
  }
  return arr;
}

// -- character tables -------------------------------------------------------

inline json character_table_json(const PermutationGroup& g) {
  const auto table = irreducible_characters(g);
  const auto reps = conjugacy_class_representatives(g);
  json cols = json::array();
  for (auto r : reps) cols.push_back(g[r].to_cycles());
  json rows = json::array();
  for (std::size_t k = 0; k < table.labels.size(); ++k) {
    json vals = json::array();
    for (auto r : reps) vals.push_back(table.characters[k](r).to_string());
    rows.push_back({{"irrep", to_string(table.labels[k])}, {"values", vals}});
  }
  return {{"classes", cols}, {"rows", rows}};
}

// -- indicator reports ------------------------------------------------------

struct FactorizationInfo {
  int n = 0;
  std::string variant = "custom";  // "H", "J" or "custom"
};

inline json to_json(const Factorization& f, const FactorizationInfo& info, const IndicatorReport& rep) {
  json simples = json::array();
  for (const auto& d : rep.descriptors) {
    json s = {{"orbit_rep", f.G()[d.representative].to_cycles()},
              {"orbit_size", d.orbit_size},
              {"stabilizer_order", d.stabilizer_order}};
    if (d.supported()) {
      s["irrep"] = to_string(*d.irrep);
      s["dimension"] = d.dimension;
      s["indicator"] = d.indicator ? json(*d.indicator) : json(nullptr);
    } else {
      s["irrep"] = "E_UNSUPPORTED_STABILIZER";
      s["dimension"] = nullptr;
      s["indicator"] = nullptr;
    }
    simples.push_back(std::move(s));
  }
  json out = {{"factorization", {{"n", info.n}, {"variant", info.variant}}},
              {"simples", simples},
              {"trace_alpha", rep.trace_alpha},
              {"sum_nu_dim", rep.sum_nu_dim},
              {"m0", rep.m ? json(rep.m->m0) : json(nullptr)},
              {"m1", rep.m ? json(rep.m->m1) : json(nullptr)}};
  if (!rep.unsupported.empty()) out["unsupported"] = rep.unsupported;
  return out;
}

inline std::string to_csv(const Factorization& f, const IndicatorReport& rep) {
  std::ostringstream os;
  os << "orbit_rep,orbit_size,stabilizer_order,irrep,dimension,indicator\n";
  for (const auto& d : rep.descriptors) {
    os << csv_field(f.G()[d.representative].to_cycles()) << ',' << d.orbit_size << ',' << d.stabilizer_order << ',';
    if (d.supported()) {
      os << csv_field(to_string(*d.irrep)) << ',' << d.dimension << ',' << (d.indicator ? std::to_string(*d.indicator) : "");
    } else {
      os << "E_UNSUPPORTED_STABILIZER,,";
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace bismash::io
