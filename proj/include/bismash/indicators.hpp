#pragma once

// Simple modules of k^G # kF and their Frobenius–Schur indicators.
//
// Simple modules are indexed by (orbit O_x of F on G, irrep V of F_x) and
// realised as V̂ = kF ⊗_{kF_x} V. The indicator is χ̂(Λ^[2]), which reduces to
//
//   ν(χ̂) = (1/|F|) Σ_{y ∈ O_x} Σ_{a ∈ F_{y⁻¹,y}} χ̂(p_y # (y⁻¹ ▷ a) a).
//
// For F ≅ C_p (p an odd prime) a combinatorial shortcut decides the value
// from the orbit alone; both routes are provided and cross-checked.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bismash/characters.hpp"
#include "bismash/cyclotomic.hpp"
#include "bismash/error.hpp"
#include "bismash/group.hpp"
#include "bismash/hopf.hpp"
#include "bismash/matched_pair.hpp"
#include "bismash/partition.hpp"

namespace bismash {

struct SimpleModuleDescriptor {
  std::size_t orbit = 0;           // index into SimpleModules::orbits()
  index_type representative = 0;  // G-index of x
  std::size_t orbit_size = 0;
  std::size_t stabilizer_order = 0;
  std::optional<IrrepLabel> irrep;  // empty when the stabilizer is unsupported
  std::size_t irrep_index = 0;      // position in the stabilizer's character table
  std::int64_t dimension = 0;       // [F : F_x] · dim V; 0 when unsupported
  std::optional<int> indicator;     // filled by SimpleModules::evaluate_indicators

  bool supported() const noexcept { return irrep.has_value(); }
};

inline bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

class SimpleModules {
 public:
  /// Classifies the simple modules. Orbits whose stabilizer has no supported
  /// character table get a single unsupported descriptor each and are listed
  /// in unsupported().
  explicit SimpleModules(std::shared_ptr<const MatchedPair> pair) : pair_(std::move(pair)) {
    orbits_ = bismash::orbits(*pair_);
    tables_.resize(orbits_.size());
    for (std::size_t i = 0; i < orbits_.size(); ++i) {
      const auto& od = orbits_[i];
      SimpleModuleDescriptor base;
      base.orbit = i;
      base.representative = od.representative;
      base.orbit_size = od.members.size();
      base.stabilizer_order = od.stabilizer.order();
      try {
        tables_[i] = irreducible_characters(od.stabilizer);
      } catch (const UnsupportedStabilizer& e) {
        unsupported_.push_back(e.what() + std::string(" (orbit of ") + pair_->G()[od.representative].to_cycles() + ")");
        descriptors_.push_back(base);
        continue;
      }
      for (std::size_t k = 0; k < tables_[i]->labels.size(); ++k) {
        SimpleModuleDescriptor d = base;
        d.irrep = tables_[i]->labels[k];
        d.irrep_index = k;
        d.dimension = static_cast<std::int64_t>(base.orbit_size) * tables_[i]->characters[k].degree();
        descriptors_.push_back(std::move(d));
      }
    }
  }

  const MatchedPair& pair() const noexcept { return *pair_; }
  std::shared_ptr<const MatchedPair> shared_pair() const noexcept { return pair_; }
  const std::vector<OrbitData>& orbits() const noexcept { return orbits_; }
  const std::vector<SimpleModuleDescriptor>& descriptors() const noexcept { return descriptors_; }
  const std::vector<std::string>& unsupported() const noexcept { return unsupported_; }
  bool complete() const noexcept { return unsupported_.empty(); }

  /// Character χ̂ of a supported simple module.
  InducedCharacter character(const SimpleModuleDescriptor& d) const {
    require_supported(d);
    return InducedCharacter(*pair_, orbits_[d.orbit], tables_[d.orbit]->characters[d.irrep_index]);
  }

  const ClassFunction& stabilizer_character(const SimpleModuleDescriptor& d) const {
    require_supported(d);
    return tables_[d.orbit]->characters[d.irrep_index];
  }

  /// χ̂ extended linearly to an algebra element.
  Cyclotomic character_on(const SimpleModuleDescriptor& d, const AlgebraElement& u) const {
    const auto chi = character(d);
    Cyclotomic sum;
    for (const auto& [s, c] : u.terms()) {
      auto v = chi(s.x, s.a);
      if (!v.is_zero()) sum += c * v;
    }
    return sum;
  }

  /// Indicator by the general orbit-sum formula; certified to be -1, 0 or 1.
  int indicator_generic(const SimpleModuleDescriptor& d) const {
    const auto chi = character(d);
    const auto& od = orbits_[d.orbit];
    Cyclotomic sum;
    for (index_type y : od.members) {
      const index_type yinv = pair_->inv_G(y);
      for (index_type a : inversion_set(*pair_, yinv)) {
        sum += chi(y, pair_->mul_F(pair_->rhd(yinv, a), a));
      }
    }
    const Cyclotomic nu = sum / Rational(static_cast<std::int64_t>(pair_->order_F()));
    if (!nu.is_rational_integer()) throw ConsistencyError("indicator evaluated to non-integer " + nu.to_string());
    const auto v = nu.to_integer();
    if (v < -1 || v > 1) throw ConsistencyError("indicator evaluated to " + std::to_string(v));
    return static_cast<int>(v);
  }

  /// Shortcut for F ≅ C_p, p an odd prime:
  ///   x = 1:                 1 for the trivial irrep, else 0
  ///   x ∈ G^F, x ≠ 1:        1 iff x² = 1
  ///   free orbit (F_x = 1):  1 iff the orbit contains an element squaring to 1
  int indicator_cp(const SimpleModuleDescriptor& d) const {
    const auto p = pair_->order_F();
    if (!is_odd_prime(p)) throw InvalidInput("indicator_cp needs |F| an odd prime, got " + std::to_string(p));
    require_supported(d);
    const auto& od = orbits_[d.orbit];
    auto squares_to_one = [&](index_type y) { return pair_->mul_G(y, y) == 0; };
    if (od.stabilizer.order() == p) {
      if (od.representative == 0) {
        const auto* label = std::get_if<CyclicLabel>(&*d.irrep);
        return (label && label->j == 0) ? 1 : 0;
      }
      return squares_to_one(od.representative) ? 1 : 0;
    }
    if (od.stabilizer.order() != 1) throw ConsistencyError("stabilizer of a C_p action is neither 1 nor C_p");
    return std::any_of(od.members.begin(), od.members.end(), squares_to_one) ? 1 : 0;
  }

  /// Fills every supported descriptor's indicator by the generic route.
  void evaluate_indicators() {
    for (auto& d : descriptors_)
      if (d.supported() && !d.indicator) d.indicator = indicator_generic(d);
  }

 private:
  void require_supported(const SimpleModuleDescriptor& d) const {
    if (!d.supported()) throw UnsupportedStabilizer("no character table for orbit of " + pair_->G()[d.representative].to_cycles());
  }

  std::shared_ptr<const MatchedPair> pair_;
  std::vector<OrbitData> orbits_;
  std::vector<std::optional<CharacterTable>> tables_;
  std::vector<SimpleModuleDescriptor> descriptors_;
  std::vector<std::string> unsupported_;
};

inline SimpleModules classify_simples(const Factorization& f) { return SimpleModules(f.shared_pair()); }

// ---------------------------------------------------------------------------

struct MCounts {
  std::uint64_t m0 = 0;  // free orbits without an element squaring to 1
  std::uint64_t m1 = 0;  // free orbits containing one
  std::uint64_t i_L = 0;
  std::uint64_t i_GF = 0;
  std::uint64_t order_GF = 0;
};

/// Counts the two kinds of free orbits for F ≅ C_p and asserts
///   i_L = 1 + p (i_{G^F} - 1) + p m1   and   m0 + m1 = (|G| - |G^F|) / p.
inline MCounts count_m(const Factorization& f) {
  const auto& mp = f.pair();
  const auto p = mp.order_F();
  if (!is_odd_prime(p)) throw InvalidInput("count_m needs |F| an odd prime, got " + std::to_string(p));
  MCounts out;
  for (const auto& od : orbits(mp)) {
    if (od.stabilizer.order() != 1) continue;
    const bool has_involution =
        std::any_of(od.members.begin(), od.members.end(), [&](index_type y) { return mp.mul_G(y, y) == 0; });
    (has_involution ? out.m1 : out.m0) += 1;
  }
  const auto gf = invariants_GF(mp);
  out.i_L = count_involutions(f.L());
  out.i_GF = count_involutions(gf);
  out.order_GF = gf.order();
  if (out.i_L != 1 + p * (out.i_GF - 1) + p * out.m1) {
    throw ConsistencyError("i_L = 1 + p(i_GF - 1) + p m1 fails: " + std::to_string(out.i_L) + " vs " +
                           std::to_string(1 + p * (out.i_GF - 1) + p * out.m1));
  }
  if ((mp.order_G() - out.order_GF) % p != 0 || out.m0 + out.m1 != (mp.order_G() - out.order_GF) / p) {
    throw ConsistencyError("m0 + m1 = (|G| - |G^F|)/p fails");
  }
  return out;
}

/// Closed-form counts for J_p = k^{S_{p-1}} # kC_p, from i_p alone.
struct JpCounts {
  int p = 0;
  BigInt i_p;
  BigInt m1;            // p-dimensional simples with indicator 1
  BigInt m0;            // p-dimensional simples with indicator 0
  BigInt dim1_total;    // p(p-1)
  BigInt dim1_plus;     // p + 1
  BigInt dimp_total;    // (p-1)((p-2)! - 1)/p
  BigInt plus_total;    // M_{p,1}
  BigInt simple_total;  // M_p
};

inline constexpr int kMaxArithmeticPrime = 2000;

inline JpCounts jp_counts(int p) {
  if (p < 3 || p > kMaxArithmeticPrime || !is_odd_prime(static_cast<std::uint64_t>(p))) {
    throw InvalidInput("jp_counts needs an odd prime p <= " + std::to_string(kMaxArithmeticPrime));
  }
  JpCounts c;
  c.p = p;
  c.i_p = involution_recursion(p);
  if ((c.i_p - 1) % p != 0) throw ConsistencyError("p does not divide i_p - 1");
  c.m1 = (c.i_p - 1) / p - 1;
  const BigInt numer = BigInt(p - 1) * (factorial(p - 2) - 1);
  if (numer % p != 0) throw ConsistencyError("p does not divide (p-1)((p-2)! - 1)");
  c.dimp_total = numer / p;
  c.m0 = c.dimp_total - c.m1;
  c.dim1_total = BigInt(p) * (p - 1);
  c.dim1_plus = p + 1;
  c.plus_total = c.m1 + c.dim1_plus;
  c.simple_total = c.dimp_total + c.dim1_total;
  return c;
}

/// M_{p,1} / M_p = (i_p + p² - 1) / ((p-1)! + (p² - 1)(p - 1)).
inline Rational ratio(int p) {
  if (p < 3 || p > kMaxArithmeticPrime || !is_odd_prime(static_cast<std::uint64_t>(p))) {
    throw InvalidInput("ratio needs an odd prime p <= " + std::to_string(kMaxArithmeticPrime));
  }
  const BigInt pp = BigInt(p) * p;
  const BigInt num = involution_recursion(p) + pp - 1;
  const BigInt den = factorial(p - 1) + (pp - 1) * (p - 1);
  return Rational(num, den);
}

// ---------------------------------------------------------------------------

struct IndicatorReport {
  std::vector<SimpleModuleDescriptor> descriptors;
  std::uint64_t trace_alpha = 0;
  std::int64_t sum_nu_dim = 0;
  std::optional<MCounts> m;  // present when |F| is an odd prime
  std::vector<std::string> unsupported;
};

/// Classifies, evaluates every indicator generically, and asserts
/// Σ ν(χ) χ(1) = Tr(α) when the classification is complete. For F ≅ C_p the
/// shortcut is checked against the generic value for every simple and the
/// orbit counts are attached.
inline IndicatorReport indicator_report(const Factorization& f) {
  SimpleModules sm(f.shared_pair());
  sm.evaluate_indicators();
  IndicatorReport rep;
  rep.trace_alpha = BismashProduct(f.shared_pair()).antipode_trace();
  rep.unsupported = sm.unsupported();
  for (const auto& d : sm.descriptors())
    if (d.indicator) rep.sum_nu_dim += *d.indicator * d.dimension;
  if (sm.complete() && rep.sum_nu_dim != static_cast<std::int64_t>(rep.trace_alpha)) {
    throw ConsistencyError("Σ ν(χ)χ(1) = " + std::to_string(rep.sum_nu_dim) + " differs from Tr(α) = " +
                           std::to_string(rep.trace_alpha));
  }
  if (is_odd_prime(f.pair().order_F())) {
    for (const auto& d : sm.descriptors()) {
      if (d.supported() && sm.indicator_cp(d) != *d.indicator) {
        throw ConsistencyError("C_p shortcut disagrees with the generic indicator at orbit of " +
                               f.G()[d.representative].to_cycles());
      }
    }
    rep.m = count_m(f);
  }
  rep.descriptors = sm.descriptors();
  return rep;
}

/// Tr(α) = Σ χ(1) over the simples iff every indicator is 1. When the
/// classification is complete, the verdict is cross-checked against the
/// individual indicators.
inline bool total_orthogonality(const SimpleModules& sm) {
  if (!sm.complete()) throw UnsupportedStabilizer(sm.unsupported().front());
  const auto trace = BismashProduct(sm.shared_pair()).antipode_trace();
  std::int64_t dims = 0;
  bool all_one = true;
  for (const auto& d : sm.descriptors()) {
    dims += d.dimension;
    const int nu = d.indicator ? *d.indicator : sm.indicator_generic(d);
    all_one = all_one && nu == 1;
  }
  const bool verdict = static_cast<std::int64_t>(trace) == dims;
  if (verdict != all_one) throw ConsistencyError("trace criterion disagrees with per-module indicators");
  return verdict;
}

inline bool total_orthogonality(const Factorization& f) { return total_orthogonality(SimpleModules(f.shared_pair())); }

// ---------------------------------------------------------------------------
// Counting statements for S_n = S_{n-1} C_n

/// The units r mod n with x_r(i) = i r mod n on 1..n-1 (n fixed). When
/// n <= 8 the set is checked against G^F of the explicitly built J_n.
inline std::vector<std::pair<int, Permutation>> sn_invariant_elements(int n) {
  if (n < 2) throw InvalidInput("sn_invariant_elements needs n >= 2");
  std::vector<std::pair<int, Permutation>> out;
  for (int r = 1; r < n; ++r) {
    if (std::gcd(r, n) != 1) continue;
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i) img[i - 1] = (i * r) % n;
    img[n - 1] = n;
    out.emplace_back(r, Permutation::from_images(std::span<const int>(img)));
  }
  if (n <= 8) {
    const auto gf = invariants_GF(standard_factorization(Variant::J, n).pair());
    std::vector<Permutation> ours;
    for (const auto& [r, x] : out) ours.push_back(x);
    std::sort(ours.begin(), ours.end());
    if (ours != gf.elements()) throw ConsistencyError("x_r list differs from G^F of J_" + std::to_string(n));
  }
  return out;
}

/// Dimensions of the simple H_n-modules: d_{n-1,i} and (n-1) d_{n-2,i},
/// ascending. Asserts that they sum to i_n.
inline std::vector<std::uint64_t> hn_dimension_profile(int n) {
  if (n < 3) throw InvalidInput("hn_dimension_profile needs n >= 3");
  std::vector<std::uint64_t> dims;
  for (const auto& lambda : partitions(n - 1)) dims.push_back(hook_length_dimension(lambda));
  for (const auto& lambda : partitions(n - 2)) dims.push_back(static_cast<std::uint64_t>(n - 1) * hook_length_dimension(lambda));
  std::sort(dims.begin(), dims.end());
  BigInt sum = 0;
  for (auto d : dims) sum += d;
  if (sum != involution_recursion(n)) throw ConsistencyError("H_n dimensions do not sum to i_n");
  return dims;
}

}  // namespace bismash
