#pragma once

// The bismash product H = k^G # kF on the basis {p_x # a}:
//
//   (p_x # a)(p_y # b) = δ_{y, x◁a} p_x # ab
//   Δ(p_x # a)         = Σ_{y ∈ G} p_{xy⁻¹} # (y ▷ a) ⊗ p_y # a
//   ε(p_x # a)         = δ_{x, 1}
//   α(p_x # a)         = p_{(x◁a)⁻¹} # (x ▷ a)⁻¹
//
// Elements are sparse; the multiplication table is never materialised.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bismash/cyclotomic.hpp"
#include "bismash/error.hpp"
#include "bismash/matched_pair.hpp"

namespace bismash {

struct BasisSymbol {
  index_type x = 0;  // G-index
  index_type a = 0;  // F-index
  friend auto operator<=>(const BasisSymbol&, const BasisSymbol&) = default;
};

class AlgebraElement {
 public:
  using Terms = std::map<BasisSymbol, Cyclotomic>;

  explicit AlgebraElement(const MatchedPair* ambient = nullptr) : ambient_(ambient) {}

  const MatchedPair* ambient() const noexcept { return ambient_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Cyclotomic coefficient(BasisSymbol s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Cyclotomic() : it->second;
  }

  /// Adds c · s, dropping the entry if it cancels.
  void add(BasisSymbol s, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check_same(o);
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    a.check_same(b);
    for (const auto& [s, c] : b.terms_) a.add(s, -c);
    return a;
  }
  friend AlgebraElement operator*(const Cyclotomic& k, const AlgebraElement& u) {
    AlgebraElement r(u.ambient_);
    for (const auto& [s, c] : u.terms_) r.add(s, k * c);
    return r;
  }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

  void check_same(const AlgebraElement& o) const {
    if (ambient_ && o.ambient_ && ambient_ != o.ambient_) throw InvalidInput("algebra elements from different ambients");
  }

 private:
  const MatchedPair* ambient_;
  Terms terms_;
};

class TensorElement {
 public:
  using Key = std::pair<BasisSymbol, BasisSymbol>;
  using Terms = std::map<Key, Cyclotomic>;

  explicit TensorElement(const MatchedPair* ambient = nullptr) : ambient_(ambient) {}

  const MatchedPair* ambient() const noexcept { return ambient_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  void add(BasisSymbol s, BasisSymbol t, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Key{s, t}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms_ == b.terms_; }

 private:
  const MatchedPair* ambient_;
  Terms terms_;
};

struct HopfCheckOptions {
  std::uint64_t exhaustive_budget = 100'000'000;  // basis-level operations per law
  std::size_t sample_size = 20000;
  std::uint64_t seed = 20240601;
};

class BismashProduct {
 public:
  explicit BismashProduct(std::shared_ptr<const MatchedPair> pair) : pair_(std::move(pair)) {
    if (!pair_) throw InvalidInput("null matched pair");
  }

  const MatchedPair& pair() const noexcept { return *pair_; }
  std::size_t dimension() const noexcept { return pair_->order_F() * pair_->order_G(); }

  AlgebraElement zero() const { return AlgebraElement(pair_.get()); }

  AlgebraElement basis(BasisSymbol s, const Cyclotomic& c = Cyclotomic(1)) const {
    AlgebraElement u(pair_.get());
    u.add(s, c);
    return u;
  }

  AlgebraElement basis(const Permutation& x, const Permutation& a) const {
    return basis(BasisSymbol{pair_->G().index_of(x), pair_->F().index_of(a)});
  }

  /// 1 = Σ_x p_x # 1.
  AlgebraElement one() const {
    AlgebraElement u(pair_.get());
    for (index_type x = 0; x < pair_->order_G(); ++x) u.add({x, 0}, Cyclotomic(1));
    return u;
  }

  // -- basis-level structure maps ------------------------------------------

  std::optional<BasisSymbol> multiply_basis(BasisSymbol u, BasisSymbol v) const {
    if (v.x != pair_->lhd(u.x, u.a)) return std::nullopt;
    return BasisSymbol{u.x, pair_->mul_F(u.a, v.a)};
  }

  /// Δ of a basis symbol as |G| pairs, each with coefficient 1.
  std::vector<std::pair<BasisSymbol, BasisSymbol>> comultiply_basis(BasisSymbol u) const {
    std::vector<std::pair<BasisSymbol, BasisSymbol>> out;
    out.reserve(pair_->order_G());
    for (index_type y = 0; y < pair_->order_G(); ++y) {
      const index_type left_x = pair_->mul_G(u.x, pair_->inv_G(y));
      out.push_back({BasisSymbol{left_x, pair_->rhd(y, u.a)}, BasisSymbol{y, u.a}});
    }
    return out;
  }

  BasisSymbol antipode_basis(BasisSymbol u) const {
    return BasisSymbol{pair_->inv_G(pair_->lhd(u.x, u.a)), pair_->inv_F(pair_->rhd(u.x, u.a))};
  }

  int counit_basis(BasisSymbol u) const { return u.x == 0 ? 1 : 0; }

  // -- linear extensions ----------------------------------------------------

  AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v) const {
    check(u);
    check(v);
    AlgebraElement r(pair_.get());
    for (const auto& [s, c] : u.terms()) {
      // only v-terms with y = x ◁ a survive
      const index_type y = pair_->lhd(s.x, s.a);
      auto lo = v.terms().lower_bound(BasisSymbol{y, 0});
      for (auto it = lo; it != v.terms().end() && it->first.x == y; ++it) {
        r.add(BasisSymbol{s.x, pair_->mul_F(s.a, it->first.a)}, c * it->second);
      }
    }
    return r;
  }

  TensorElement comultiply(const AlgebraElement& u) const {
    check(u);
    TensorElement t(pair_.get());
    for (const auto& [s, c] : u.terms()) {
      for (const auto& [l, r] : comultiply_basis(s)) t.add(l, r, c);
    }
    return t;
  }

  /// m : H ⊗ H → H.
  AlgebraElement multiply_tensor(const TensorElement& t) const {
    AlgebraElement r(pair_.get());
    for (const auto& [k, c] : t.terms()) {
      if (auto p = multiply_basis(k.first, k.second)) r.add(*p, c);
    }
    return r;
  }

  Cyclotomic counit(const AlgebraElement& u) const {
    check(u);
    Cyclotomic sum;
    for (const auto& [s, c] : u.terms())
      if (s.x == 0) sum += c;
    return sum;
  }

  AlgebraElement antipode(const AlgebraElement& u) const {
    check(u);
    AlgebraElement r(pair_.get());
    for (const auto& [s, c] : u.terms()) r.add(antipode_basis(s), c);
    return r;
  }

  /// Λ = (1/|F|) Σ_a p_1 # a.
  AlgebraElement integral() const {
    AlgebraElement r(pair_.get());
    const Cyclotomic c(Rational(1, static_cast<std::int64_t>(pair_->order_F())));
    for (index_type a = 0; a < pair_->order_F(); ++a) r.add({0, a}, c);
    return r;
  }

  /// Λ^[2] = m(Δ(Λ)) in closed form:
  ///   (1/|F|) Σ_{y ∈ G} Σ_{a ∈ F_{y⁻¹,y}} p_y # (y⁻¹ ▷ a) a.
  AlgebraElement lambda_squared() const {
    AlgebraElement r(pair_.get());
    const Cyclotomic c(Rational(1, static_cast<std::int64_t>(pair_->order_F())));
    for (index_type y = 0; y < pair_->order_G(); ++y) {
      const index_type yinv = pair_->inv_G(y);
      for (index_type a : inversion_set(*pair_, yinv)) {
        r.add({y, pair_->mul_F(pair_->rhd(yinv, a), a)}, c);
      }
    }
    return r;
  }

  /// Tr(α): α permutes the basis, so the trace counts its fixed symbols.
  std::uint64_t antipode_trace() const {
    std::uint64_t fixed = 0;
    for (index_type x = 0; x < pair_->order_G(); ++x)
      for (index_type a = 0; a < pair_->order_F(); ++a) {
        const BasisSymbol s{x, a};
        if (antipode_basis(s) == s) ++fixed;
      }
    return fixed;
  }

  VerificationReport verify_hopf_axioms(const HopfCheckOptions& opt = {}) const;

 private:
  void check(const AlgebraElement& u) const {
    if (u.ambient() && u.ambient() != pair_.get()) throw InvalidInput("algebra element from a different bismash product");
  }

  std::shared_ptr<const MatchedPair> pair_;
};

// ---------------------------------------------------------------------------

namespace detail {

inline std::string symbol_text(const MatchedPair& mp, BasisSymbol s) {
  return "p_" + mp.G()[s.x].to_cycles() + " # " + mp.F()[s.a].to_cycles();
}

}  // namespace detail

/// Checks α² = id, the unit and counit laws, the antipode laws
/// m(α⊗id)Δ = ηε = m(id⊗α)Δ, associativity, coassociativity, and
/// multiplicativity of Δ and ε. Each law runs exhaustively over the basis
/// when its cost fits the budget and on seeded random samples otherwise.
inline VerificationReport BismashProduct::verify_hopf_axioms(const HopfCheckOptions& opt) const {
  VerificationReport rep;
  const auto& mp = *pair_;
  const auto nF = static_cast<index_type>(mp.order_F());
  const auto nG = static_cast<index_type>(mp.order_G());
  const std::uint64_t dim = dimension();
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<index_type> dF(0, nF - 1), dG(0, nG - 1);
  auto random_symbol = [&] { return BasisSymbol{dG(rng), dF(rng)}; };
  auto text = [&](BasisSymbol s) { return detail::symbol_text(mp, s); };

  // iterate every symbol when `cost_per_symbol * dim` fits, else sample
  auto for_symbols = [&](const char* law, std::uint64_t cost_per_symbol, auto&& body) {
    if (cost_per_symbol * dim <= opt.exhaustive_budget) {
      for (index_type x = 0; x < nG; ++x)
        for (index_type a = 0; a < nF; ++a) body(BasisSymbol{x, a});
    } else {
      rep.sampled.emplace_back(law);
      for (std::size_t i = 0; i < opt.sample_size; ++i) body(random_symbol());
    }
  };

  using Counts = std::map<BasisSymbol, std::int64_t>;

  // α² = id, unit, counit, antipode
  for_symbols("unit/counit/antipode", 4 * nG, [&](BasisSymbol u) {
    ++rep.checks;
    if (antipode_basis(antipode_basis(u)) != u) rep.fail("α² != id at " + text(u));

    // 1 · u = u = u · 1
    Counts left, right;
    for (index_type x = 0; x < nG; ++x) {
      if (auto p = multiply_basis({x, 0}, u)) ++left[*p];
      if (auto p = multiply_basis(u, {x, 0})) ++right[*p];
    }
    const Counts just_u{{u, 1}};
    if (left != just_u || right != just_u) rep.fail("unit law fails at " + text(u));

    const auto delta = comultiply_basis(u);
    Counts eps_left, eps_right, s_left, s_right;
    for (const auto& [l, r] : delta) {
      if (counit_basis(l)) ++eps_left[r];
      if (counit_basis(r)) ++eps_right[l];
      if (auto p = multiply_basis(antipode_basis(l), r)) ++s_left[*p];
      if (auto p = multiply_basis(l, antipode_basis(r))) ++s_right[*p];
    }
    if (eps_left != just_u || eps_right != just_u) rep.fail("counit law fails at " + text(u));
    Counts expected;
    if (counit_basis(u))
      for (index_type x = 0; x < nG; ++x) expected[{x, 0}] = 1;
    std::erase_if(s_left, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(s_right, [](const auto& kv) { return kv.second == 0; });
    if (s_left != expected) rep.fail("m(α⊗id)Δ != ηε at " + text(u));
    if (s_right != expected) rep.fail("m(id⊗α)Δ != ηε at " + text(u));
  });

  // associativity. A product of basis symbols is nonzero only when the right
  // factor sits at x ◁ a, so beyond the structural zeros it suffices to range
  // over u = (x, a), v = (x ◁ a, b), w = (z, c) with z ∈ {x◁a◁b, x◁ab}.
  auto assoc = [&](BasisSymbol u, BasisSymbol v, BasisSymbol w) {
    ++rep.checks;
    std::optional<BasisSymbol> lhs, rhs;
    if (auto uv = multiply_basis(u, v)) lhs = multiply_basis(*uv, w);
    if (auto vw = multiply_basis(v, w)) rhs = multiply_basis(u, *vw);
    if (lhs != rhs) rep.fail("associativity fails at " + text(u) + ", " + text(v) + ", " + text(w));
  };
  if (dim * nF * 2 * nF <= opt.exhaustive_budget) {
    for (index_type x = 0; x < nG; ++x)
      for (index_type a = 0; a < nF; ++a)
        for (index_type b = 0; b < nF; ++b) {
          const BasisSymbol u{x, a}, v{mp.lhd(x, a), b};
          const index_type z1 = mp.lhd(v.x, b), z2 = mp.lhd(x, mp.mul_F(a, b));
          for (index_type c = 0; c < nF; ++c) {
            assoc(u, v, {z1, c});
            if (z2 != z1) assoc(u, v, {z2, c});
          }
        }
  } else {
    rep.sampled.emplace_back("associativity");
    for (std::size_t i = 0; i < opt.sample_size; ++i) {
      const BasisSymbol u = random_symbol();
      const BasisSymbol v{mp.lhd(u.x, u.a), dF(rng)};
      const index_type z = (i % 2 == 0) ? mp.lhd(v.x, v.a) : mp.lhd(u.x, mp.mul_F(u.a, v.a));
      assoc(u, v, {z, dF(rng)});
      assoc(random_symbol(), random_symbol(), random_symbol());
    }
  }

  // coassociativity: (Δ⊗id)Δ = (id⊗Δ)Δ as multisets of basis triples
  using Triple = std::array<BasisSymbol, 3>;
  for_symbols("coassociativity", std::uint64_t{nG} * nG, [&](BasisSymbol u) {
    ++rep.checks;
    std::vector<Triple> lhs, rhs;
    lhs.reserve(std::size_t{nG} * nG);
    rhs.reserve(std::size_t{nG} * nG);
    for (const auto& [l, r] : comultiply_basis(u)) {
      for (const auto& [ll, lr] : comultiply_basis(l)) lhs.push_back({ll, lr, r});
      for (const auto& [rl, rr] : comultiply_basis(r)) rhs.push_back({l, rl, rr});
    }
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs) rep.fail("coassociativity fails at " + text(u));
  });

  // Δ(uv) = Δ(u)Δ(v) and ε(uv) = ε(u)ε(v). In Δ(u)Δ(v) a right factor of Δ(u)
  // pairs with at most one right factor of Δ(v), found by its G-grading.
  {
    using Delta = std::vector<std::pair<BasisSymbol, BasisSymbol>>;
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    // by_right[w]: position of the term whose right factor has grading w
    auto index_by_right = [&](const Delta& d) {
      std::vector<std::size_t> by_right(nG, none);
      for (std::size_t t = 0; t < d.size(); ++t) {
        auto& slot = by_right[d[t].second.x];
        if (slot != none) rep.fail("Δ has two terms with the same right grading");
        slot = t;
      }
      return by_right;
    };
    auto multiplicative = [&](BasisSymbol u, BasisSymbol v, const Delta& du, const Delta& dv, const std::vector<std::size_t>& dv_right, const Delta* duv) {
      ++rep.checks;
      const auto uv = multiply_basis(u, v);
      Delta lhs, rhs;
      if (uv) lhs = duv ? *duv : comultiply_basis(*uv);
      for (const auto& [ul, ur] : du) {
        const std::size_t t = dv_right[mp.lhd(ur.x, ur.a)];
        if (t == none) continue;
        const auto r = multiply_basis(ur, dv[t].second);
        const auto l = r ? multiply_basis(ul, dv[t].first) : std::nullopt;
        if (l) rhs.emplace_back(*l, *r);
      }
      if (!lhs.empty() || !rhs.empty()) {
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        if (lhs != rhs) rep.fail("Δ is not multiplicative at " + text(u) + ", " + text(v));
      }
      const int eps_uv = uv ? counit_basis(*uv) : 0;
      if (eps_uv != counit_basis(u) * counit_basis(v)) rep.fail("ε is not multiplicative at " + text(u) + ", " + text(v));
    };

    if (dim * dim * nG <= opt.exhaustive_budget) {
      auto flat = [&](BasisSymbol s) { return std::size_t{s.x} * nF + s.a; };
      std::vector<Delta> deltas(dim);
      std::vector<std::vector<std::size_t>> right(dim);
      for (index_type x = 0; x < nG; ++x)
        for (index_type a = 0; a < nF; ++a) {
          deltas[flat({x, a})] = comultiply_basis({x, a});
          right[flat({x, a})] = index_by_right(deltas[flat({x, a})]);
        }
      for (index_type x = 0; x < nG; ++x)
        for (index_type a = 0; a < nF; ++a)
          for (index_type y = 0; y < nG; ++y)
            for (index_type b = 0; b < nF; ++b) {
              const BasisSymbol u{x, a}, v{y, b};
              const auto uv = multiply_basis(u, v);
              multiplicative(u, v, deltas[flat(u)], deltas[flat(v)], right[flat(v)], uv ? &deltas[flat(*uv)] : nullptr);
            }
    } else {
      rep.sampled.emplace_back("multiplicativity of Δ and ε");
      for (std::size_t i = 0; i < opt.sample_size; ++i) {
        const BasisSymbol u = random_symbol();
        const auto du = comultiply_basis(u);
        for (const BasisSymbol v : {BasisSymbol{mp.lhd(u.x, u.a), dF(rng)}, random_symbol()}) {
          const auto dv = comultiply_basis(v);
          multiplicative(u, v, du, dv, index_by_right(dv), nullptr);
        }
      }
    }
  }
  return rep;
}

}  // namespace bismash
