#pragma once

// Matched pairs (F, G, ▷, ◁) derived from exact factorizations L = F G.
//
// For x in G and a in F the product x a re-factors uniquely as
// (x ▷ a)(x ◁ a) with x ▷ a in F and x ◁ a in G. Both actions are stored as
// dense index tables so every downstream query is a lookup.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bismash/error.hpp"
#include "bismash/group.hpp"
#include "bismash/permutation.hpp"

namespace bismash {

using index_type = PermutationGroup::index_type;

/// Multiplication by index inside an enumerated group. Keeps a Cayley table
/// for small groups and falls back to compose-and-lookup otherwise.
class GroupArithmetic {
 public:
  static constexpr std::size_t kTableLimit = 1024;

  GroupArithmetic() = default;

  explicit GroupArithmetic(const PermutationGroup& g) : group_(&g), order_(g.order()) {
    inverse_.resize(order_);
    for (index_type i = 0; i < order_; ++i) inverse_[i] = g.index_of(g[i].inverse());
    if (order_ <= kTableLimit) {
      table_.resize(order_ * order_);
      for (index_type i = 0; i < order_; ++i)
        for (index_type j = 0; j < order_; ++j) table_[i * order_ + j] = g.index_of(g[i] * g[j]);
    }
  }

  index_type mul(index_type i, index_type j) const {
    if (!table_.empty()) return table_[i * order_ + j];
    return group_->index_of((*group_)[i] * (*group_)[j]);
  }
  index_type inv(index_type i) const { return inverse_[i]; }

 private:
  const PermutationGroup* group_ = nullptr;
  std::size_t order_ = 0;
  std::vector<index_type> inverse_;
  std::vector<index_type> table_;
};

class MatchedPair {
 public:
  /// `rhd[x * |F| + a]` is the F-index of x ▷ a; `lhd[x * |F| + a]` is the
  /// G-index of x ◁ a. Tables are taken as given; see verify_matched_pair.
  MatchedPair(PermutationGroup F, PermutationGroup G, std::vector<index_type> rhd, std::vector<index_type> lhd)
      : F_(std::make_shared<const PermutationGroup>(std::move(F))),
        G_(std::make_shared<const PermutationGroup>(std::move(G))),
        rhd_(std::move(rhd)),
        lhd_(std::move(lhd)) {
    const std::size_t n = F_->order() * G_->order();
    if (rhd_.size() != n || lhd_.size() != n) throw InvalidInput("action table size must be |F|*|G|");
    for (std::size_t i = 0; i < n; ++i) {
      if (rhd_[i] >= F_->order() || lhd_[i] >= G_->order()) throw InvalidInput("action table entry out of range");
    }
    arithF_ = std::make_shared<const GroupArithmetic>(*F_);
    arithG_ = std::make_shared<const GroupArithmetic>(*G_);
  }

  const PermutationGroup& F() const noexcept { return *F_; }
  const PermutationGroup& G() const noexcept { return *G_; }
  std::size_t order_F() const noexcept { return F_->order(); }
  std::size_t order_G() const noexcept { return G_->order(); }

  /// x ▷ a, by index.
  index_type rhd(index_type x, index_type a) const { return rhd_[x * F_->order() + a]; }
  /// x ◁ a, by index.
  index_type lhd(index_type x, index_type a) const { return lhd_[x * F_->order() + a]; }

  index_type mul_F(index_type a, index_type b) const { return arithF_->mul(a, b); }
  index_type mul_G(index_type x, index_type y) const { return arithG_->mul(x, y); }
  index_type inv_F(index_type a) const { return arithF_->inv(a); }
  index_type inv_G(index_type x) const { return arithG_->inv(x); }

  /// Copy with a single ◁ entry overwritten. Used to build negative controls.
  MatchedPair with_lhd_entry(index_type x, index_type a, index_type value) const {
    MatchedPair copy = *this;
    copy.lhd_.at(x * F_->order() + a) = value;
    return copy;
  }
  MatchedPair with_rhd_entry(index_type x, index_type a, index_type value) const {
    MatchedPair copy = *this;
    copy.rhd_.at(x * F_->order() + a) = value;
    return copy;
  }

 private:
  std::shared_ptr<const PermutationGroup> F_;
  std::shared_ptr<const PermutationGroup> G_;
  std::vector<index_type> rhd_;
  std::vector<index_type> lhd_;
  std::shared_ptr<const GroupArithmetic> arithF_;
  std::shared_ptr<const GroupArithmetic> arithG_;
};

/// x ◁ a for elements of G and F.
inline Permutation act_into_G(const MatchedPair& mp, const Permutation& x, const Permutation& a) {
  auto xi = mp.G().find(x);
  auto ai = mp.F().find(a);
  if (!xi || !ai) throw InvalidInput("act_into_G: x must lie in G and a in F");
  return mp.G()[mp.lhd(*xi, *ai)];
}

/// x ▷ a for elements of G and F.
inline Permutation act_into_F(const MatchedPair& mp, const Permutation& x, const Permutation& a) {
  auto xi = mp.G().find(x);
  auto ai = mp.F().find(a);
  if (!xi || !ai) throw InvalidInput("act_into_F: x must lie in G and a in F");
  return mp.F()[mp.rhd(*xi, *ai)];
}

/// L = F G with the unique factorization l = a x (a in F, x in G) tabulated.
class Factorization {
 public:
  struct Parts {
    index_type a;  // index in F
    index_type x;  // index in G
  };

  Factorization(PermutationGroup L, std::shared_ptr<const MatchedPair> pair, std::vector<Parts> table)
      : L_(std::move(L)), pair_(std::move(pair)), table_(std::move(table)) {}

  const PermutationGroup& L() const noexcept { return L_; }
  const PermutationGroup& F() const noexcept { return pair_->F(); }
  const PermutationGroup& G() const noexcept { return pair_->G(); }
  const MatchedPair& pair() const noexcept { return *pair_; }
  std::shared_ptr<const MatchedPair> shared_pair() const noexcept { return pair_; }

  /// Unique (a, x) with l = a x.
  Parts factor(const Permutation& l) const { return table_[L_.index_of(l)]; }
  const std::vector<Parts>& factor_table() const noexcept { return table_; }

 private:
  PermutationGroup L_;
  std::shared_ptr<const MatchedPair> pair_;
  std::vector<Parts> table_;
};

inline Factorization build_factorization(PermutationGroup L, PermutationGroup F, PermutationGroup G) {
  if (F.degree() != L.degree() || G.degree() != L.degree()) throw InvalidInput("factor degrees differ from L");
  if (!F.is_subgroup_of(L)) throw InvalidInput("F is not a subgroup of L");
  if (!G.is_subgroup_of(L)) throw InvalidInput("G is not a subgroup of L");
  for (const auto& g : G.elements()) {
    if (!g.is_identity() && F.contains(g)) throw InvalidInput("F and G intersect nontrivially at " + g.to_cycles());
  }
  if (F.order() * G.order() != L.order()) {
    throw InvalidInput("|F||G| = " + std::to_string(F.order() * G.order()) + " differs from |L| = " +
                       std::to_string(L.order()));
  }

  constexpr index_type kUnset = ~index_type{0};
  std::vector<Factorization::Parts> table(L.order(), {kUnset, kUnset});
  for (index_type a = 0; a < F.order(); ++a) {
    for (index_type x = 0; x < G.order(); ++x) {
      auto& slot = table[L.index_of(F[a] * G[x])];
      if (slot.a != kUnset) throw InvalidInput("element of L has more than one factorization a x");
      slot = {a, x};
    }
  }

  const std::size_t nF = F.order();
  std::vector<index_type> rhd(G.order() * nF), lhd(G.order() * nF);
  for (index_type x = 0; x < G.order(); ++x) {
    for (index_type a = 0; a < nF; ++a) {
      const auto parts = table[L.index_of(G[x] * F[a])];
      rhd[x * nF + a] = parts.a;
      lhd[x * nF + a] = parts.x;
    }
  }
  auto pair = std::make_shared<const MatchedPair>(std::move(F), std::move(G), std::move(rhd), std::move(lhd));
  return Factorization(std::move(L), std::move(pair), std::move(table));
}

/// S_n = S_{n-1} C_n with S_{n-1} the stabilizer of n and C_n = <(1 2 ... n)>.
/// Variant H takes F = S_{n-1}, G = C_n; variant J swaps them.
enum class Variant { H, J };

inline Factorization standard_factorization(Variant v, int n) {
  if (n < 2) throw InvalidInput("standard factorizations need n >= 2");
  const auto degree = static_cast<std::size_t>(n);
  auto L = symmetric_group(degree);
  auto S = symmetric_group(degree - 1, degree);
  auto C = cyclic_group(degree);
  if (v == Variant::H) return build_factorization(std::move(L), std::move(S), std::move(C));
  return build_factorization(std::move(L), std::move(C), std::move(S));
}

// ---------------------------------------------------------------------------
// Orbits of F on G under ◁

struct OrbitData {
  index_type representative;         // canonical minimum of the orbit (G-index)
  std::vector<index_type> members;   // ascending G-indices
  std::vector<index_type> stabilizer_indices;  // F-indices of F_x, ascending
  PermutationGroup stabilizer;

  bool contains(index_type y) const { return std::binary_search(members.begin(), members.end(), y); }
};

/// Partition of G into ◁-orbits, listed by ascending representative.
inline std::vector<OrbitData> orbits(const MatchedPair& mp) {
  const auto nG = mp.order_G();
  const auto nF = mp.order_F();
  std::vector<bool> assigned(nG, false);
  std::vector<OrbitData> result;
  for (index_type x = 0; x < nG; ++x) {
    if (assigned[x]) continue;
    OrbitData od;
    od.representative = x;
    std::vector<Permutation> stab;
    for (index_type a = 0; a < nF; ++a) {
      const index_type y = mp.lhd(x, a);
      if (!assigned[y]) {
        assigned[y] = true;
        od.members.push_back(y);
      }
      if (y == x) {
        od.stabilizer_indices.push_back(a);
        stab.push_back(mp.F()[a]);
      }
    }
    std::sort(od.members.begin(), od.members.end());
    if (od.members.front() != x) throw ConsistencyError("◁ orbits do not partition G");
    od.stabilizer = PermutationGroup::from_elements(mp.F().degree(), std::move(stab));
    result.push_back(std::move(od));
  }
  return result;
}

/// Index into `orbits` of the orbit containing G-index y.
inline std::size_t orbit_of(const std::vector<OrbitData>& orbs, index_type y) {
  for (std::size_t i = 0; i < orbs.size(); ++i) {
    if (orbs[i].contains(y)) return i;
  }
  throw InvalidInput("element not covered by the orbit list");
}

/// G^F = {x in G : x ◁ a = x for all a in F}.
inline PermutationGroup invariants_GF(const MatchedPair& mp) {
  std::vector<Permutation> fixed;
  for (index_type x = 0; x < mp.order_G(); ++x) {
    bool inv = true;
    for (index_type a = 0; a < mp.order_F() && inv; ++a) inv = mp.lhd(x, a) == x;
    if (inv) fixed.push_back(mp.G()[x]);
  }
  return PermutationGroup::from_elements(mp.G().degree(), std::move(fixed));
}

/// F_{y, y^{-1}} = {a in F : y ◁ a = y^{-1}}, as ascending F-indices.
inline std::vector<index_type> inversion_set(const MatchedPair& mp, index_type y) {
  std::vector<index_type> out;
  const index_type yinv = mp.inv_G(y);
  for (index_type a = 0; a < mp.order_F(); ++a) {
    if (mp.lhd(y, a) == yinv) out.push_back(a);
  }
  return out;
}

inline std::vector<Permutation> inversion_set(const MatchedPair& mp, const Permutation& y) {
  std::vector<Permutation> out;
  for (auto a : inversion_set(mp, mp.G().index_of(y))) out.push_back(mp.F()[a]);
  return out;
}

/// Row of an orbit table: x ◁ a for every a in F, in canonical order of F.
inline std::vector<index_type> orbit_table_row(const MatchedPair& mp, index_type x) {
  std::vector<index_type> row(mp.order_F());
  for (index_type a = 0; a < mp.order_F(); ++a) row[a] = mp.lhd(x, a);
  return row;
}

// ---------------------------------------------------------------------------
// Axiom verification

struct VerificationReport {
  bool ok = true;
  std::uint64_t checks = 0;
  std::string witness;               // first violation, empty when ok
  std::vector<std::string> sampled;  // laws checked on random samples only

  bool exhaustive() const noexcept { return sampled.empty(); }

  void fail(std::string what) {
    if (ok) witness = std::move(what);
    ok = false;
  }
};

struct MatchedPairCheckOptions {
  std::size_t exhaustive_limit = 10000;  // exhaustive when |F||G| does not exceed this
  std::size_t samples = 200000;          // triples per axiom when sampling
  std::uint64_t seed = 20240601;
};

/// Checks the matched-pair axioms
///   x ▷ ab = (x ▷ a)((x ◁ a) ▷ b)   and   xy ◁ a = (x ◁ (y ▷ a))(y ◁ a)
/// together with the unit laws x ▷ 1 = 1, 1 ◁ a = 1, 1 ▷ a = a, x ◁ 1 = x.
inline VerificationReport verify_matched_pair(const MatchedPair& mp, const MatchedPairCheckOptions& opt = {}) {
  VerificationReport rep;
  const auto nF = static_cast<index_type>(mp.order_F());
  const auto nG = static_cast<index_type>(mp.order_G());
  const auto& F = mp.F();
  const auto& G = mp.G();

  auto left_axiom = [&](index_type x, index_type a, index_type b) {
    ++rep.checks;
    const index_type lhs = mp.rhd(x, mp.mul_F(a, b));
    const index_type rhs = mp.mul_F(mp.rhd(x, a), mp.rhd(mp.lhd(x, a), b));
    if (lhs != rhs) {
      std::ostringstream os;
      os << "x ▷ ab axiom fails at x=" << G[x] << " a=" << F[a] << " b=" << F[b];
      rep.fail(os.str());
    }
  };
  auto right_axiom = [&](index_type x, index_type y, index_type a) {
    ++rep.checks;
    const index_type lhs = mp.lhd(mp.mul_G(x, y), a);
    const index_type rhs = mp.mul_G(mp.lhd(x, mp.rhd(y, a)), mp.lhd(y, a));
    if (lhs != rhs) {
      std::ostringstream os;
      os << "xy ◁ a axiom fails at x=" << G[x] << " y=" << G[y] << " a=" << F[a];
      rep.fail(os.str());
    }
  };

  // identities sit at index 0 in canonical order
  for (index_type x = 0; x < nG; ++x) {
    if (mp.rhd(x, 0) != 0) rep.fail("x ▷ 1 != 1 at x=" + G[x].to_cycles());
    if (mp.lhd(x, 0) != x) rep.fail("x ◁ 1 != x at x=" + G[x].to_cycles());
  }
  for (index_type a = 0; a < nF; ++a) {
    if (mp.lhd(0, a) != 0) rep.fail("1 ◁ a != 1 at a=" + F[a].to_cycles());
    if (mp.rhd(0, a) != a) rep.fail("1 ▷ a != a at a=" + F[a].to_cycles());
  }

  if (static_cast<std::size_t>(nF) * nG <= opt.exhaustive_limit) {
    for (index_type x = 0; x < nG; ++x)
      for (index_type a = 0; a < nF; ++a)
        for (index_type b = 0; b < nF; ++b) left_axiom(x, a, b);
    for (index_type x = 0; x < nG; ++x)
      for (index_type y = 0; y < nG; ++y)
        for (index_type a = 0; a < nF; ++a) right_axiom(x, y, a);
  } else {
    rep.sampled = {"x ▷ ab", "xy ◁ a"};
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<index_type> dF(0, nF - 1), dG(0, nG - 1);
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const auto x = dG(rng), y = dG(rng);
      const auto a = dF(rng), b = dF(rng);
      left_axiom(x, a, b);
      right_axiom(x, y, a);
    }
  }
  return rep;
}


/// Checks, for every y ∈ G and a ∈ F,
///   (y⁻¹ ◁ a)⁻¹ = y ◁ (y⁻¹ ▷ a),
///   a ∈ F_{y,y⁻¹}  iff  a⁻¹ ∈ F_{y⁻¹,y},
///   a ∈ F_{y⁻¹,y}  implies  (y⁻¹a)² = (y⁻¹ ▷ a) a ∈ F,
/// and, per orbit, orbit-stabilizer, closure of inverses, the odd-orbit
/// involution criterion and |F_{y,y⁻¹}| <= 1 on free orbits.
inline VerificationReport verify_orbit_identities(const MatchedPair& mp) {
  VerificationReport rep;
  const auto nF = static_cast<index_type>(mp.order_F());
  const auto nG = static_cast<index_type>(mp.order_G());
  const auto& F = mp.F();
  const auto& G = mp.G();

  for (index_type y = 0; y < nG; ++y) {
    const index_type yi = mp.inv_G(y);
    for (index_type a = 0; a < nF; ++a) {
      rep.checks += 3;
      if (mp.inv_G(mp.lhd(yi, a)) != mp.lhd(y, mp.rhd(yi, a))) {
        rep.fail("(y⁻¹ ◁ a)⁻¹ = y ◁ (y⁻¹ ▷ a) fails at y=" + G[y].to_cycles() + " a=" + F[a].to_cycles());
      }
      const bool in_forward = mp.lhd(y, a) == yi;
      const bool in_backward = mp.lhd(yi, mp.inv_F(a)) == y;
      if (in_forward != in_backward) {
        rep.fail("F_{y,y⁻¹} and F_{y⁻¹,y} are not inverse at y=" + G[y].to_cycles() + " a=" + F[a].to_cycles());
      }
      if (mp.lhd(yi, a) == y) {
        const Permutation t = G[yi] * F[a];
        const Permutation sq = t * t;
        if (sq != F[mp.rhd(yi, a)] * F[a] || !F.contains(sq)) {
          rep.fail("(y⁻¹a)² = (y⁻¹ ▷ a)a fails at y=" + G[y].to_cycles() + " a=" + F[a].to_cycles());
        }
      }
    }
  }

  for (const auto& od : orbits(mp)) {
    rep.checks += 4;
    const std::string at = " on orbit of " + G[od.representative].to_cycles();
    if (od.members.size() * od.stabilizer.order() != nF) rep.fail("orbit-stabilizer fails" + at);
    std::size_t with_inverse = 0;
    bool has_involution = false;
    for (index_type y : od.members) {
      if (od.contains(mp.inv_G(y))) ++with_inverse;
      if (mp.mul_G(y, y) == 0) has_involution = true;
    }
    if (with_inverse != 0 && with_inverse != od.members.size()) rep.fail("inverse closure is partial" + at);
    if (od.members.size() % 2 == 1 && (with_inverse != 0) != has_involution) {
      rep.fail("odd orbit: x⁻¹ ∈ O_x differs from existence of an involution" + at);
    }
    if (od.stabilizer.order() == 1) {
      for (index_type y : od.members) {
        if (inversion_set(mp, y).size() > 1) rep.fail("|F_{y,y⁻¹}| > 1 on a free orbit" + at);
      }
    }
  }
  return rep;
}

}  // namespace bismash
