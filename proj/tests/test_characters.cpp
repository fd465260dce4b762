#include <gtest/gtest.h>

#include <random>

#include "bismash.hpp"
#include "oracles.hpp"

using namespace bismash;

namespace {

Permutation C(const char* s, std::size_t n) { return parse_cycles(s, n); }

Cyclotomic random_cyclotomic(std::mt19937_64& rng, std::uint32_t n) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<Rational> powers(n);
  for (auto& c : powers) c = Rational(d(rng), 1 + (d(rng) + 3) % 3);
  return Cyclotomic::from_powers(n, powers);
}

void expect_close(std::complex<double> a, std::complex<double> b) {
  EXPECT_NEAR(a.real(), b.real(), 1e-9);
  EXPECT_NEAR(a.imag(), b.imag(), 1e-9);
}

}  // namespace

// -- cyclotomic arithmetic -----------------------------------------------------

TEST(Cyclotomic, RootsOfUnity) {
  for (std::uint32_t n = 1; n <= 30; ++n) {
    Cyclotomic prod(1), sum;
    const auto z = Cyclotomic::zeta(n, 1);
    for (std::uint32_t k = 0; k < n; ++k) {
      sum += Cyclotomic::zeta(n, k);
      prod *= z;
    }
    EXPECT_EQ(prod, Cyclotomic(1)) << n;
    if (n > 1) EXPECT_TRUE(sum.is_zero()) << n;
  }
}

TEST(Cyclotomic, MixedConductors) {
  EXPECT_EQ(Cyclotomic::zeta(6, 2), Cyclotomic::zeta(3, 1));
  EXPECT_EQ(Cyclotomic::zeta(4, 2), Cyclotomic(-1));
  EXPECT_EQ(Cyclotomic::zeta(2, 1) + Cyclotomic::zeta(3, 1) * Cyclotomic::zeta(3, 2), Cyclotomic(0));
  EXPECT_EQ(Cyclotomic::zeta(12, 3) * Cyclotomic::zeta(12, 3), Cyclotomic(-1));
  // ζ_5 + ζ_5⁴ is real but irrational
  const auto r = Cyclotomic::zeta(5, 1) + Cyclotomic::zeta(5, 4);
  EXPECT_EQ(r, r.conj());
  EXPECT_FALSE(r.is_rational());
  EXPECT_THROW(r.to_integer(), ConsistencyError);
}

TEST(Cyclotomic, RingLawsAgainstComplexEvaluation) {
  std::mt19937_64 rng(5);
  for (std::uint32_t n : {1u, 2u, 3u, 4u, 5u, 6u, 7u, 8u, 9u, 10u, 12u, 15u}) {
    for (int t = 0; t < 10; ++t) {
      const auto a = random_cyclotomic(rng, n), b = random_cyclotomic(rng, n), c = random_cyclotomic(rng, 2 * n);
      expect_close(oracle::to_complex(a * b), oracle::to_complex(a) * oracle::to_complex(b));
      expect_close(oracle::to_complex(a + c), oracle::to_complex(a) + oracle::to_complex(c));
      expect_close(oracle::to_complex(a.conj()), std::conj(oracle::to_complex(a)));
      EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
      EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
      EXPECT_EQ(a.conj().conj(), a);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_TRUE((a - a).is_zero());
    }
  }
}

TEST(Cyclotomic, RationalHandling) {
  const Cyclotomic half(Rational(1, 2));
  EXPECT_TRUE(half.is_rational());
  EXPECT_FALSE(half.is_rational_integer());
  EXPECT_EQ(half + half, Cyclotomic(1));
  EXPECT_EQ((Cyclotomic(6) / Rational(3)).to_integer(), 2);
  EXPECT_EQ(Cyclotomic(-4).to_string(), "-4");
}

// -- partitions and symmetric characters ---------------------------------------

TEST(Partitions, Enumeration) {
  EXPECT_EQ(partitions(4).size(), 5u);
  EXPECT_EQ(partitions(8).size(), 22u);
  EXPECT_EQ(partitions(4).front(), Partition({4}));
  EXPECT_EQ(partitions(4).back(), Partition({1, 1, 1, 1}));
  EXPECT_THROW(Partition({1, 2}), InvalidInput);
  EXPECT_THROW(Partition({2, 0}), InvalidInput);
  EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
}

TEST(HookLength, SmallDegrees) {
  auto dims = [](int m) {
    std::vector<std::uint64_t> d;
    for (const auto& l : partitions(m)) d.push_back(hook_length_dimension(l));
    std::sort(d.begin(), d.end());
    return d;
  };
  EXPECT_EQ(dims(4), (std::vector<std::uint64_t>{1, 1, 2, 3, 3}));
  EXPECT_EQ(dims(3), (std::vector<std::uint64_t>{1, 1, 2}));
  EXPECT_EQ(hook_length_dimension(Partition({6})), 1u);
}

TEST(HookLength, SumOfSquaresIsFactorial) {
  for (int m = 1; m <= 8; ++m) {
    BigInt sum = 0;
    for (const auto& l : partitions(m)) sum += BigInt(hook_length_dimension(l)) * hook_length_dimension(l);
    EXPECT_EQ(sum, factorial(m)) << m;
  }
}

TEST(MurnaghanNakayama, MatchesDeterminantalOracle) {
  for (int m = 1; m <= 7; ++m) {
    for (const auto& lambda : partitions(m))
      for (const auto& mu : partitions(m))
        ASSERT_EQ(mn_character(lambda, mu.parts()), oracle::sn_character(lambda.parts(), mu.parts()))
            << lambda.to_string() << " at " << mu.to_string();
  }
}

TEST(MurnaghanNakayama, Examples) {
  EXPECT_EQ(mn_character(Partition({4}), {3, 1}), 1);
  EXPECT_EQ(mn_character(Partition({2, 2}), {2, 2}), 2);
  EXPECT_EQ(mn_character(Partition({2, 2}), {1, 1, 1, 1}), 2);
  EXPECT_EQ(mn_character(Partition({1, 1, 1}), {2, 1}), -1);
  EXPECT_EQ(mn_character(Partition({3, 1}), {1, 3}), 0);  // order of μ is irrelevant
  for (const auto& l : partitions(6)) EXPECT_EQ(mn_character(l, {1, 1, 1, 1, 1, 1}), static_cast<std::int64_t>(hook_length_dimension(l)));
  EXPECT_THROW(mn_character(Partition({2, 1}), {2, 2}), InvalidInput);
}

TEST(MurnaghanNakayama, SignTwist) {
  // χ^{λ'} = sgn · χ^λ
  for (const auto& lambda : partitions(6))
    for (const auto& mu : partitions(6)) {
      const int sign = (6 - static_cast<int>(mu.length())) % 2 ? -1 : 1;
      EXPECT_EQ(mn_character(lambda.conjugate(), mu.parts()), sign * mn_character(lambda, mu.parts()));
    }
}

// -- character tables ------------------------------------------------------------

TEST(CyclicCharacters, Examples) {
  const auto one = cyclic_characters(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0](0), Cyclotomic(1));
  const auto c5 = cyclic_characters(5);
  ASSERT_EQ(c5.size(), 5u);
  for (const auto& v : c5[0].values) EXPECT_EQ(v, Cyclotomic(1));
  for (index_type g = 1; g < 5; ++g) {
    Cyclotomic sum;
    for (const auto& chi : c5) sum += chi(g);
    EXPECT_TRUE(sum.is_zero());
  }
  // C_5 canonical order lists the powers of the generator
  EXPECT_EQ(c5[1](1), Cyclotomic::zeta(5, 1));
  EXPECT_THROW(cyclic_characters(0), InvalidInput);
  EXPECT_THROW(cyclic_characters(symmetric_group(3)), InvalidInput);
}

TEST(CharacterTables, OrthonormalAndClassConstant) {
  std::vector<PermutationGroup> groups = {
      enumerate_group(1, {}),
      cyclic_group(6),
      enumerate_group(6, {C("(1 4)(2 5)(3 6)", 6)}),
      enumerate_group(7, {C("(1 3 2 6 4 5)", 7)}),
      symmetric_group(3, 5),
      symmetric_group(4),
      symmetric_group(5, 6),
      enumerate_group(6, {C("(2 5)", 6), C("(2 3 5)", 6)}),  // S_3 on {2,3,5}
  };
  for (const auto& g : groups) {
    const auto table = irreducible_characters(g);
    EXPECT_TRUE(is_orthonormal(table));
    std::uint64_t sq = 0;
    for (const auto& chi : table.characters) {
      EXPECT_GT(chi.degree(), 0);
      sq += static_cast<std::uint64_t>(chi.degree() * chi.degree());
      for (index_type i = 0; i < g.order(); ++i)
        for (const auto& h : g.elements()) ASSERT_EQ(chi(i), chi.at(h * g[i] * h.inverse()));
    }
    EXPECT_EQ(sq, g.order());
    EXPECT_EQ(table.characters.size(), conjugacy_class_representatives(g).size());
  }
}

TEST(CharacterTables, KindDetection) {
  EXPECT_EQ(irreducible_characters(enumerate_group(4, {})).kind, StabilizerKind::Trivial);
  EXPECT_EQ(irreducible_characters(cyclic_group(5)).kind, StabilizerKind::Cyclic);
  EXPECT_EQ(irreducible_characters(symmetric_group(4, 5)).kind, StabilizerKind::Symmetric);
  // S_2 is symmetric on its support and cyclic; the symmetric reading wins
  EXPECT_EQ(irreducible_characters(symmetric_group(2, 5)).kind, StabilizerKind::Symmetric);
  const auto D4 = enumerate_group(4, {C("(1 2 3 4)", 4), C("(1 3)", 4)});
  EXPECT_THROW(irreducible_characters(D4), UnsupportedStabilizer);
  const auto V4 = enumerate_group(4, {C("(1 2)(3 4)", 4), C("(1 3)(2 4)", 4)});
  EXPECT_THROW(irreducible_characters(V4), UnsupportedStabilizer);
}

TEST(CharacterTables, ClassicalIndicatorsOfSymmetricGroups) {
  // every irreducible character of S_m is real, so indicators are all 1
  for (std::size_t m = 2; m <= 5; ++m) {
    for (const auto& chi : irreducible_characters(symmetric_group(m)).characters)
      EXPECT_EQ(classical_indicator(chi), Cyclotomic(1));
  }
  const auto c3 = cyclic_characters(3);
  EXPECT_EQ(classical_indicator(c3[0]), Cyclotomic(1));
  EXPECT_EQ(classical_indicator(c3[1]), Cyclotomic(0));
}

// -- transversals ----------------------------------------------------------------

TEST(Transversal, Examples) {
  const auto S4 = symmetric_group(4);
  EXPECT_EQ(transversal(S4, S4), (std::vector<Permutation>{Permutation(4)}));
  EXPECT_EQ(transversal(S4, enumerate_group(4, {})), S4.elements());
  const auto stab3 = enumerate_group(4, {C("(1 2)", 4), C("(1 2 4)", 4)});
  const auto t = transversal(S4, stab3);
  ASSERT_EQ(t.size(), 4u);
  EXPECT_TRUE(t.front().is_identity());
  // one representative per coset b·F_x; the cosets are separated by b(3)
  std::set<int> images;
  for (const auto& b : t) images.insert(b(3));
  EXPECT_EQ(images.size(), 4u);
  EXPECT_THROW(transversal(stab3, S4), InvalidInput);
}

TEST(Transversal, MinimalRepresentatives) {
  const auto F = symmetric_group(5);
  const auto H = enumerate_group(5, {C("(1 2 3)", 5), C("(4 5)", 5)});
  const auto reps = transversal(F, H);
  EXPECT_EQ(reps.size(), F.order() / H.order());
  for (const auto& b : reps)
    for (const auto& h : H.elements()) EXPECT_LE(b, b * h);
}

// -- induced characters ------------------------------------------------------------

TEST(InducedCharacter, VanishesOffOrbit) {
  const auto f = standard_factorization(Variant::J, 6);
  const auto& mp = f.pair();
  const auto orbs = orbits(mp);
  for (const auto& od : orbs) {
    const auto table = irreducible_characters(od.stabilizer);
    for (const auto& chi : table.characters) {
      InducedCharacter ind(mp, od, chi);
      for (index_type y = 0; y < mp.order_G(); ++y) {
        if (od.contains(y)) continue;
        for (index_type a = 0; a < mp.order_F(); ++a) ASSERT_TRUE(ind(y, a).is_zero());
      }
    }
  }
}

TEST(InducedCharacter, IdentityValuesGiveDegree) {
  const auto f = standard_factorization(Variant::J, 6);
  const auto& mp = f.pair();
  for (const auto& od : orbits(mp)) {
    for (const auto& chi : irreducible_characters(od.stabilizer).characters) {
      InducedCharacter ind(mp, od, chi);
      Cyclotomic total;
      for (auto y : od.members) total += ind(y, 0);
      EXPECT_EQ(total, Cyclotomic(ind.degree()));
      EXPECT_EQ(ind(od.representative, 0), Cyclotomic(chi.degree()));
    }
  }
}

TEST(InducedCharacter, FixedOrbitRestrictsToStabilizerCharacter) {
  const auto f = standard_factorization(Variant::H, 5);
  const auto& mp = f.pair();
  const auto orbs = orbits(mp);
  const auto& od = orbs[0];
  ASSERT_EQ(od.representative, 0u);
  for (const auto& chi : irreducible_characters(od.stabilizer).characters) {
    for (index_type a = 0; a < mp.order_F(); ++a)
      EXPECT_EQ(induced_character_value(mp, od, chi, Permutation(5), mp.F()[a]), chi(a));
  }
}

TEST(InducedCharacter, MatchesExplicitModuleTraces) {
  // one-dimensional stabilizer characters: compare with traces of matrices
  // built directly from permutations, and check the module is a representation
  for (int n : {5, 6}) {
    const auto f = standard_factorization(Variant::J, n);
    const auto& mp = f.pair();
    const auto& Fe = mp.F().elements();
    const auto& Ge = mp.G().elements();
    std::mt19937_64 rng(17);
    for (const auto& od : orbits(mp)) {
      const auto table = irreducible_characters(od.stabilizer);
      for (const auto& chi : table.characters) {
        oracle::InducedModule mod(Fe, Ge, mp.G()[od.representative], od.stabilizer.elements(), chi.values);
        InducedCharacter ind(mp, od, chi);
        ASSERT_EQ(mod.dimension() * static_cast<std::size_t>(chi.degree()), static_cast<std::size_t>(ind.degree()));
        for (index_type y = 0; y < mp.order_G(); ++y)
          for (index_type a = 0; a < mp.order_F(); ++a)
            ASSERT_EQ(ind(y, a), oracle::InducedModule::trace(mod.rho(Ge[y], Fe[a])));
        // ρ(p_y#a) ρ(p_z#b) = δ_{z, y◁a} ρ(p_y#ab) on sampled pairs
        std::uniform_int_distribution<index_type> dG(0, mp.order_G() - 1), dF(0, mp.order_F() - 1);
        for (int s = 0; s < 40; ++s) {
          const auto y = dG(rng), a = dF(rng), b = dF(rng);
          const auto z = s % 2 ? mp.lhd(y, a) : dG(rng);
          const auto lhs = oracle::InducedModule::product(mod.rho(Ge[y], Fe[a]), mod.rho(Ge[z], Fe[b]));
          auto rhs = mod.rho(Ge[y], Fe[mp.mul_F(a, b)]);
          if (z != mp.lhd(y, a))
            for (auto& row : rhs)
              for (auto& v : row) v = Cyclotomic();
          ASSERT_EQ(lhs, rhs);
        }
      }
    }
  }
}

TEST(InducedCharacter, IndependentOfTransversalChoice) {
  // replacing each representative b by b·h (h ∈ F_x) leaves χ̂ unchanged
  const auto f = standard_factorization(Variant::J, 6);
  const auto& mp = f.pair();
  const auto orbs = orbits(mp);
  const auto& od = orbs[orbit_of(orbs, mp.G().index_of(C("(1 4)", 6)))];
  const auto table = irreducible_characters(od.stabilizer);
  const auto reps = transversal_indices(mp.F(), od.stabilizer);
  const auto h = mp.F().index_of(C("(1 4)(2 5)(3 6)", 6));
  for (const auto& chi : table.characters) {
    InducedCharacter ind(mp, od, chi);
    for (index_type y = 0; y < mp.order_G(); ++y)
      for (index_type a = 0; a < mp.order_F(); ++a) {
        Cyclotomic alt;
        for (auto b0 : reps) {
          const auto b = mp.mul_F(b0, h);
          if (mp.lhd(y, b) != od.representative) continue;
          const auto conj = mp.mul_F(mp.mul_F(mp.inv_F(b), a), b);
          const auto pos = std::find(od.stabilizer_indices.begin(), od.stabilizer_indices.end(), conj);
          if (pos == od.stabilizer_indices.end()) continue;
          alt += chi(static_cast<index_type>(pos - od.stabilizer_indices.begin()));
        }
        ASSERT_EQ(ind(y, a), alt);
      }
  }
}
