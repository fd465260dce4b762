#pragma once

// Irreducible characters of the stabilizer groups that occur for bismash
// products built from S_n: trivial groups, cyclic groups and full symmetric
// groups on their support. Also coset transversals and induced-character
// values for the simple modules of k^G # kF.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bismash/cyclotomic.hpp"
#include "bismash/error.hpp"
#include "bismash/group.hpp"
#include "bismash/matched_pair.hpp"
#include "bismash/partition.hpp"

namespace bismash {

struct TrivialLabel {
  friend bool operator==(const TrivialLabel&, const TrivialLabel&) = default;
};
/// χ_j(g^k) = ζ_m^{jk} for a fixed generator g of C_m.
struct CyclicLabel {
  std::uint32_t j = 0;
  std::uint32_t m = 1;
  friend bool operator==(const CyclicLabel&, const CyclicLabel&) = default;
};
struct SymmetricLabel {
  Partition lambda;
  friend bool operator==(const SymmetricLabel&, const SymmetricLabel&) = default;
};

using IrrepLabel = std::variant<TrivialLabel, CyclicLabel, SymmetricLabel>;

inline std::string to_string(const IrrepLabel& label) {
  struct {
    std::string operator()(const TrivialLabel&) const { return "trivial"; }
    std::string operator()(const CyclicLabel& c) const {
      return "C" + std::to_string(c.m) + ":j=" + std::to_string(c.j);
    }
    std::string operator()(const SymmetricLabel& s) const {
      return "S" + std::to_string(s.lambda.weight()) + ":" + s.lambda.to_string();
    }
  } visitor;
  return std::visit(visitor, label);
}

/// A class function on an enumerated group; values[i] belongs to group[i].
struct ClassFunction {
  std::shared_ptr<const PermutationGroup> group;
  std::vector<Cyclotomic> values;

  const Cyclotomic& operator()(index_type i) const { return values[i]; }
  const Cyclotomic& at(const Permutation& g) const { return values[group->index_of(g)]; }
  std::int64_t degree() const { return values.front().to_integer(); }
};

enum class StabilizerKind { Trivial, Cyclic, Symmetric };

struct CharacterTable {
  StabilizerKind kind;
  std::vector<IrrepLabel> labels;
  std::vector<ClassFunction> characters;
};

/// Element of maximal order when it generates the group, else nullopt.
inline std::optional<index_type> find_cyclic_generator(const PermutationGroup& g) {
  for (index_type i = 0; i < g.order(); ++i) {
    if (g[i].order() == g.order()) return i;
  }
  return std::nullopt;
}

/// The m linear characters of a cyclic group, ordered by j = 0..m-1.
inline std::vector<ClassFunction> cyclic_characters(const PermutationGroup& g) {
  const auto gen = find_cyclic_generator(g);
  if (!gen) throw InvalidInput("group of order " + std::to_string(g.order()) + " is not cyclic");
  const auto m = static_cast<std::uint32_t>(g.order());
  auto shared = std::make_shared<const PermutationGroup>(g);
  std::vector<std::uint32_t> exponent(m);
  Permutation cur(g.degree());
  for (std::uint32_t k = 0; k < m; ++k) {
    exponent[g.index_of(cur)] = k;
    cur = cur * g[*gen];
  }
  std::vector<ClassFunction> chars;
  for (std::uint32_t j = 0; j < m; ++j) {
    ClassFunction cf{shared, {}};
    cf.values.reserve(m);
    for (std::uint32_t i = 0; i < m; ++i) cf.values.push_back(Cyclotomic::zeta(m, static_cast<std::int64_t>(j) * exponent[i]));
    chars.push_back(std::move(cf));
  }
  return chars;
}

/// Characters of C_m = <(1 2 ... m)>.
inline std::vector<ClassFunction> cyclic_characters(int m) {
  if (m < 1) throw InvalidInput("cyclic group order must be positive");
  return cyclic_characters(cyclic_group(static_cast<std::size_t>(m)));
}

/// Cycle type of p restricted to the given support points.
inline std::vector<int> cycle_type_on(const Permutation& p, const std::vector<int>& support) {
  std::vector<int> lengths;
  std::vector<bool> seen(p.degree() + 1, false);
  for (int s : support) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t j = static_cast<std::size_t>(s); !seen[j]; j = p(j)) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

inline bool is_full_symmetric_on_support(const PermutationGroup& g) {
  const auto k = static_cast<int>(g.support().size());
  return k >= 2 && factorial(k) == g.order();
}

/// Irreducible characters of a supported stabilizer. Throws
/// UnsupportedStabilizer for anything outside trivial / symmetric / cyclic.
inline CharacterTable irreducible_characters(const PermutationGroup& g) {
  auto shared = std::make_shared<const PermutationGroup>(g);
  if (g.order() == 1) {
    return {StabilizerKind::Trivial, {TrivialLabel{}}, {ClassFunction{shared, {Cyclotomic(1)}}}};
  }
  if (is_full_symmetric_on_support(g)) {
    const auto support = g.support();
    CharacterTable table{StabilizerKind::Symmetric, {}, {}};
    std::vector<std::vector<int>> types;
    types.reserve(g.order());
    for (const auto& e : g.elements()) types.push_back(cycle_type_on(e, support));
    for (auto& lambda : partitions(static_cast<int>(support.size()))) {
      ClassFunction cf{shared, {}};
      cf.values.reserve(g.order());
      for (const auto& t : types) cf.values.emplace_back(mn_character(lambda, t));
      table.labels.emplace_back(SymmetricLabel{std::move(lambda)});
      table.characters.push_back(std::move(cf));
    }
    return table;
  }
  if (find_cyclic_generator(g)) {
    CharacterTable table{StabilizerKind::Cyclic, {}, cyclic_characters(g)};
    const auto m = static_cast<std::uint32_t>(g.order());
    for (std::uint32_t j = 0; j < m; ++j) table.labels.emplace_back(CyclicLabel{j, m});
    return table;
  }
  std::string gens;
  for (const auto& gen : g.generators()) gens += gen.to_cycles() + " ";
  throw UnsupportedStabilizer("stabilizer of order " + std::to_string(g.order()) + " generated by " + gens +
                              "is neither trivial, cyclic, nor symmetric on its support");
}

/// Canonical minimum of each conjugacy class, ascending.
inline std::vector<index_type> conjugacy_class_representatives(const PermutationGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<index_type> reps;
  for (index_type i = 0; i < g.order(); ++i) {
    if (seen[i]) continue;
    reps.push_back(i);
    for (const auto& h : g.elements()) seen[g.index_of(h * g[i] * h.inverse())] = true;
  }
  return reps;
}

/// (1/|H|) Σ_h χ(h) conj(ψ(h)).
inline Cyclotomic inner_product(const ClassFunction& chi, const ClassFunction& psi) {
  Cyclotomic sum;
  for (std::size_t i = 0; i < chi.values.size(); ++i) sum += chi.values[i] * psi.values[i].conj();
  return sum / Rational(static_cast<std::int64_t>(chi.values.size()));
}

/// ⟨χ_i, χ_j⟩ = δ_ij over every pair of irreducibles in the table.
inline bool is_orthonormal(const CharacterTable& table) {
  for (std::size_t i = 0; i < table.characters.size(); ++i)
    for (std::size_t j = i; j < table.characters.size(); ++j)
      if (inner_product(table.characters[i], table.characters[j]) != Cyclotomic(i == j ? 1 : 0)) return false;
  return true;
}

/// Classical Frobenius–Schur indicator (1/|H|) Σ_h χ(h²).
inline Cyclotomic classical_indicator(const ClassFunction& chi) {
  const auto& g = *chi.group;
  Cyclotomic sum;
  for (const auto& h : g.elements()) sum += chi.values[g.index_of(h * h)];
  return sum / Rational(static_cast<std::int64_t>(g.order()));
}

/// One representative per coset b F_x of the subgroup in F, each the
/// canonical minimum of its coset, ascending (the identity comes first).
/// Returned as F-indices.
inline std::vector<index_type> transversal_indices(const PermutationGroup& F, const PermutationGroup& sub) {
  if (!sub.is_subgroup_of(F)) throw InvalidInput("transversal: not a subgroup");
  std::vector<bool> covered(F.order(), false);
  std::vector<index_type> reps;
  for (index_type b = 0; b < F.order(); ++b) {
    if (covered[b]) continue;
    reps.push_back(b);
    for (const auto& h : sub.elements()) covered[F.index_of(F[b] * h)] = true;
  }
  return reps;
}

inline std::vector<Permutation> transversal(const PermutationGroup& F, const PermutationGroup& sub) {
  std::vector<Permutation> out;
  for (auto i : transversal_indices(F, sub)) out.push_back(F[i]);
  return out;
}

/// Character of the simple module V̂ = kF ⊗_{kF_x} V attached to an orbit and
/// a character χ of its stabilizer:
///   χ̂(p_y # a) = Σ_{b ∈ T_x, b⁻¹ab ∈ F_x} δ_{y ◁ b, x} χ(b⁻¹ab).
class InducedCharacter {
 public:
  InducedCharacter(const MatchedPair& mp, const OrbitData& orbit, ClassFunction chi)
      : mp_(&mp), orbit_(&orbit), chi_(std::move(chi)) {
    reps_ = transversal_indices(mp.F(), orbit.stabilizer);
    stab_pos_.assign(mp.order_F(), -1);
    for (std::size_t i = 0; i < orbit.stabilizer_indices.size(); ++i) {
      // stabilizer elements and stabilizer_indices are both ascending
      stab_pos_[orbit.stabilizer_indices[i]] = static_cast<int>(i);
    }
  }

  const std::vector<index_type>& transversal() const noexcept { return reps_; }
  std::int64_t degree() const { return static_cast<std::int64_t>(reps_.size()) * chi_.degree(); }

  Cyclotomic operator()(index_type y, index_type a) const {
    Cyclotomic sum;
    if (!orbit_->contains(y)) return sum;
    for (index_type b : reps_) {
      if (mp_->lhd(y, b) != orbit_->representative) continue;
      const index_type conj = mp_->mul_F(mp_->mul_F(mp_->inv_F(b), a), b);
      const int pos = stab_pos_[conj];
      if (pos < 0) continue;
      sum += chi_.values[static_cast<std::size_t>(pos)];
    }
    return sum;
  }

 private:
  const MatchedPair* mp_;
  const OrbitData* orbit_;
  ClassFunction chi_;
  std::vector<index_type> reps_;
  std::vector<int> stab_pos_;
};

inline Cyclotomic induced_character_value(const MatchedPair& mp, const OrbitData& orbit, const ClassFunction& chi,
                                          const Permutation& y, const Permutation& a) {
  return InducedCharacter(mp, orbit, chi)(mp.G().index_of(y), mp.F().index_of(a));
}

}  // namespace bismash
