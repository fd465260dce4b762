#include <gtest/gtest.h>

#include <map>

#include "bismash.hpp"
#include "oracles.hpp"

using namespace bismash;

namespace {

Permutation C(const char* s, std::size_t n) { return parse_cycles(s, n); }

std::vector<std::int64_t> sorted_dims(const SimpleModules& sm) {
  std::vector<std::int64_t> d;
  for (const auto& s : sm.descriptors()) d.push_back(s.dimension);
  std::sort(d.begin(), d.end());
  return d;
}

// (dimension, indicator) -> count
std::map<std::pair<std::int64_t, int>, int> profile(const IndicatorReport& rep) {
  std::map<std::pair<std::int64_t, int>, int> out;
  for (const auto& d : rep.descriptors) ++out[{d.dimension, *d.indicator}];
  return out;
}

const SimpleModuleDescriptor& at_orbit_of(const SimpleModules& sm, const Permutation& x, std::size_t k = 0) {
  const auto& mp = sm.pair();
  const auto orbit = orbit_of(sm.orbits(), mp.G().index_of(x));
  for (const auto& d : sm.descriptors())
    if (d.orbit == orbit && d.irrep_index == k) return d;
  throw std::logic_error("descriptor not found");
}

}  // namespace

TEST(Classify, H5) {
  const auto sm = classify_simples(standard_factorization(Variant::H, 5));
  EXPECT_EQ(sm.descriptors().size(), 8u);
  EXPECT_EQ(sorted_dims(sm), (std::vector<std::int64_t>{1, 1, 2, 3, 3, 4, 4, 8}));
  EXPECT_TRUE(sm.complete());
}

TEST(Classify, JpCountsOfSimples) {
  for (auto [p, ones, big] : {std::tuple{5, 20, 4}, std::tuple{7, 42, 102}}) {
    const auto sm = classify_simples(standard_factorization(Variant::J, p));
    int n1 = 0, np = 0;
    for (const auto& d : sm.descriptors()) {
      if (d.dimension == 1) ++n1;
      else if (d.dimension == p) ++np;
      else ADD_FAILURE() << "unexpected dimension " << d.dimension;
    }
    EXPECT_EQ(n1, ones);
    EXPECT_EQ(np, big);
  }
}

TEST(Classify, SumOfSquaredDimensions) {
  for (int n = 3; n <= 6; ++n) {
    for (auto v : {Variant::H, Variant::J}) {
      const auto f = standard_factorization(v, n);
      const auto sm = classify_simples(f);
      std::int64_t sq = 0;
      for (const auto& d : sm.descriptors()) {
        sq += d.dimension * d.dimension;
        EXPECT_EQ(d.dimension, static_cast<std::int64_t>(d.orbit_size) * sm.stabilizer_character(d).degree());
      }
      EXPECT_EQ(sq, static_cast<std::int64_t>(f.L().order()));
    }
  }
}

TEST(Classify, UnsupportedStabilizerIsReportedPartially) {
  const auto L = symmetric_group(4);
  const auto F = enumerate_group(4, {C("(1 2 3 4)", 4), C("(1 3)", 4)});
  const auto G = enumerate_group(4, {C("(1 2 3)", 4)});
  const auto f = build_factorization(L, F, G);
  const auto sm = classify_simples(f);
  EXPECT_FALSE(sm.complete());
  EXPECT_FALSE(sm.unsupported().empty());
  EXPECT_NE(sm.unsupported().front().find("E_UNSUPPORTED_STABILIZER"), std::string::npos);
  for (const auto& d : sm.descriptors()) {
    if (d.supported()) continue;
    EXPECT_THROW(sm.indicator_generic(d), UnsupportedStabilizer);
  }
  EXPECT_THROW(total_orthogonality(f), UnsupportedStabilizer);
  const auto rep = indicator_report(f);
  EXPECT_FALSE(rep.unsupported.empty());
}

TEST(Indicators, H5AllOne) {
  const auto sm = classify_simples(standard_factorization(Variant::H, 5));
  for (const auto& d : sm.descriptors()) EXPECT_EQ(sm.indicator_generic(d), 1);
}

TEST(Indicators, J5Examples) {
  const auto sm = classify_simples(standard_factorization(Variant::J, 5));
  EXPECT_EQ(sm.indicator_generic(at_orbit_of(sm, C("(1 2)", 5))), 1);
  for (std::size_t k = 0; k < 5; ++k) {
    EXPECT_EQ(sm.indicator_generic(at_orbit_of(sm, C("(1 2 4 3)", 5), k)), 0);
    EXPECT_EQ(sm.indicator_generic(at_orbit_of(sm, C("(1 3 4 2)", 5), k)), 0);
    EXPECT_EQ(sm.indicator_generic(at_orbit_of(sm, C("(1 4)(2 3)", 5), k)), 1);
    EXPECT_EQ(sm.indicator_cp(at_orbit_of(sm, C("(1 4)(2 3)", 5), k)), 1);
    EXPECT_EQ(sm.indicator_generic(at_orbit_of(sm, Permutation(5), k)), k == 0 ? 1 : 0);
  }
}

TEST(Indicators, GenericEqualsFastPath) {
  for (int p : {3, 5, 7}) {
    const auto sm = classify_simples(standard_factorization(Variant::J, p));
    for (const auto& d : sm.descriptors()) ASSERT_EQ(sm.indicator_generic(d), sm.indicator_cp(d));
  }
  const auto h = classify_simples(standard_factorization(Variant::H, 5));
  EXPECT_THROW(h.indicator_cp(h.descriptors().front()), InvalidInput);
}

TEST(Indicators, SecondRouteThroughLambdaSquared) {
  // χ̂ evaluated on the algebra element Λ^[2] = m(Δ(Λ))
  for (auto [v, n] : {std::pair{Variant::J, 5}, std::pair{Variant::J, 6}, std::pair{Variant::H, 5}}) {
    const auto f = standard_factorization(v, n);
    const BismashProduct H(f.shared_pair());
    const auto L2 = H.multiply_tensor(H.comultiply(H.integral()));
    const auto sm = classify_simples(f);
    for (const auto& d : sm.descriptors()) ASSERT_EQ(sm.character_on(d, L2), Cyclotomic(sm.indicator_generic(d)));
  }
}

TEST(Indicators, ExplicitModuleOracle) {
  // ν = trace of ρ(Λ^[2]) with ρ built from permutations and Λ^[2] built from
  // the search-oracle actions
  const auto f = standard_factorization(Variant::J, 6);
  const auto& mp = f.pair();
  const auto& Fe = mp.F().elements();
  const auto& Ge = mp.G().elements();
  // Λ^[2] = (1/|F|) Σ_a Σ_y p_{y⁻¹} # (y ▷ a) · p_y # a
  std::map<std::pair<Permutation, Permutation>, Rational> l2;
  for (const auto& a : Fe)
    for (const auto& y : Ge) {
      const auto yi = y.inverse();
      const auto [ya, y_after] = oracle::actions_by_search(Fe, Ge, y, a);
      (void)y_after;
      if (oracle::actions_by_search(Fe, Ge, yi, ya).second != y) continue;
      l2[{yi, ya * a}] += Rational(1, static_cast<std::int64_t>(Fe.size()));
    }
  const auto sm = classify_simples(f);
  for (const auto& d : sm.descriptors()) {
    const auto& od = sm.orbits()[d.orbit];
    oracle::InducedModule mod(Fe, Ge, Ge[od.representative], od.stabilizer.elements(),
                              sm.stabilizer_character(d).values);
    Cyclotomic nu;
    for (const auto& [key, c] : l2) nu += Cyclotomic(c) * oracle::InducedModule::trace(mod.rho(key.first, key.second));
    ASSERT_EQ(nu, Cyclotomic(sm.indicator_generic(d)));
  }
}

TEST(Indicators, FreeOrbitCriterion) {
  // F_x = 1: ν = 1 iff x⁻¹ ∈ O_x
  for (int n : {5, 6, 7}) {
    const auto sm = classify_simples(standard_factorization(Variant::J, n));
    const auto& mp = sm.pair();
    for (const auto& d : sm.descriptors()) {
      const auto& od = sm.orbits()[d.orbit];
      if (od.stabilizer.order() != 1) continue;
      ASSERT_EQ(sm.indicator_generic(d), od.contains(mp.inv_G(od.representative)) ? 1 : 0);
    }
  }
}

TEST(Indicators, IdentityOrbitIsClassical) {
  for (auto [v, n] : {std::pair{Variant::H, 5}, std::pair{Variant::J, 6}, std::pair{Variant::H, 6}}) {
    const auto sm = classify_simples(standard_factorization(v, n));
    for (const auto& d : sm.descriptors()) {
      if (sm.orbits()[d.orbit].representative != 0) continue;
      EXPECT_EQ(Cyclotomic(sm.indicator_generic(d)), classical_indicator(sm.stabilizer_character(d)));
    }
  }
}

TEST(Indicators, InvariantNonInvolutionGivesZero) {
  const auto f = standard_factorization(Variant::J, 6);
  const auto sm = classify_simples(f);
  const auto& mp = sm.pair();
  for (const auto& d : sm.descriptors()) {
    const auto x = sm.orbits()[d.orbit].representative;
    if (sm.orbits()[d.orbit].members.size() == 1 && mp.mul_G(x, x) != 0) EXPECT_EQ(sm.indicator_generic(d), 0);
  }
}

TEST(Counts, CountM) {
  const auto m5 = count_m(standard_factorization(Variant::J, 5));
  EXPECT_EQ(m5.m0, 0u);
  EXPECT_EQ(m5.m1, 4u);
  EXPECT_EQ(m5.i_L, 26u);
  EXPECT_EQ(m5.i_GF, 2u);
  EXPECT_EQ(1 + 5 * (m5.i_GF - 1) + 5 * m5.m1, m5.i_L);
  const auto m7 = count_m(standard_factorization(Variant::J, 7));
  EXPECT_EQ(m7.m0, 70u);
  EXPECT_EQ(m7.m1, 32u);
  EXPECT_EQ(m7.order_GF, 6u);
  EXPECT_THROW(count_m(standard_factorization(Variant::J, 6)), InvalidInput);
}

TEST(Counts, JpClosedForm) {
  const auto c5 = jp_counts(5);
  EXPECT_EQ(c5.m1, 4);
  EXPECT_EQ(c5.dim1_total, 20);
  EXPECT_EQ(c5.dim1_plus, 6);
  const auto c7 = jp_counts(7);
  EXPECT_EQ(c7.m1, 32);
  EXPECT_EQ(c7.m0, 70);
  EXPECT_EQ(c7.dim1_total, 42);
  EXPECT_EQ(c7.dim1_plus, 8);
  EXPECT_EQ(jp_counts(11).m1, 3244);
  EXPECT_THROW(jp_counts(9), InvalidInput);
  EXPECT_THROW(jp_counts(2), InvalidInput);
  EXPECT_THROW(jp_counts(kMaxArithmeticPrime + 1), InvalidInput);
  for (int p : {5, 7}) EXPECT_EQ(jp_counts(p).m1, BigInt(count_m(standard_factorization(Variant::J, p)).m1));
}

TEST(Counts, Ratio) {
  EXPECT_EQ(ratio(5), Rational(10, 24));
  EXPECT_EQ(ratio(7), Rational(40, 144));
  EXPECT_EQ(ratio(11), Rational(35816, 3630000));
  Rational prev = 1;
  for (int p : {5, 7, 11, 13, 17, 19}) {
    EXPECT_LT(ratio(p), prev) << p;
    prev = ratio(p);
  }
  // ratio from the enumerated J_p profile
  for (int p : {5, 7}) {
    const auto rep = indicator_report(standard_factorization(Variant::J, p));
    std::int64_t plus = 0;
    for (const auto& d : rep.descriptors) plus += *d.indicator == 1;
    EXPECT_EQ(Rational(plus, static_cast<std::int64_t>(rep.descriptors.size())), ratio(p));
  }
}

TEST(Report, J5AndJ7Profiles) {
  const auto r5 = indicator_report(standard_factorization(Variant::J, 5));
  EXPECT_EQ(profile(r5), (std::map<std::pair<std::int64_t, int>, int>{{{1, 0}, 14}, {{1, 1}, 6}, {{5, 1}, 4}}));
  EXPECT_EQ(r5.trace_alpha, 26u);
  EXPECT_EQ(r5.sum_nu_dim, 26);
  const auto r7 = indicator_report(standard_factorization(Variant::J, 7));
  EXPECT_EQ(profile(r7),
            (std::map<std::pair<std::int64_t, int>, int>{{{1, 0}, 34}, {{1, 1}, 8}, {{7, 0}, 70}, {{7, 1}, 32}}));
  ASSERT_TRUE(r7.m.has_value());
  EXPECT_EQ(r7.m->m1, 32u);
}

TEST(Report, J6IsComplete) {
  const auto rep = indicator_report(standard_factorization(Variant::J, 6));
  EXPECT_TRUE(rep.unsupported.empty());
  EXPECT_EQ(rep.trace_alpha, 76u);
  EXPECT_EQ(rep.sum_nu_dim, 76);
  EXPECT_FALSE(rep.m.has_value());
  std::set<std::size_t> stab_orders;
  for (const auto& d : rep.descriptors) stab_orders.insert(d.stabilizer_order);
  EXPECT_EQ(stab_orders, (std::set<std::size_t>{1, 2, 3, 6}));
}

TEST(TotalOrthogonality, Verdicts) {
  for (int n = 4; n <= 6; ++n) EXPECT_TRUE(total_orthogonality(standard_factorization(Variant::H, n))) << n;
  EXPECT_FALSE(total_orthogonality(standard_factorization(Variant::J, 5)));
  // L = F = S_3, G = 1: the group algebra of S_3
  const auto S3 = symmetric_group(3);
  const auto one = enumerate_group(3, {});
  const auto f = build_factorization(S3, S3, one);
  EXPECT_TRUE(total_orthogonality(f));
  // brute force: classical indicators from the determinantal character oracle
  for (const auto& lambda : partitions(3)) {
    Rational s = 0;
    for (const auto& g : S3.elements()) s += oracle::sn_character(lambda.parts(), (g * g).cycle_type());
    EXPECT_EQ(s / 6, 1);
  }
  // L = G = S_3, F = 1: functions on S_3, not totally orthogonal
  EXPECT_FALSE(total_orthogonality(build_factorization(S3, one, S3)));
}

TEST(InvariantElements, Examples) {
  const auto e7 = sn_invariant_elements(7);
  EXPECT_EQ(e7.size(), 6u);
  const auto it = std::find_if(e7.begin(), e7.end(), [](const auto& p) { return p.first == 3; });
  ASSERT_NE(it, e7.end());
  EXPECT_EQ(it->second, C("(1 3 2 6 4 5)", 7));
  const auto e6 = sn_invariant_elements(6);
  ASSERT_EQ(e6.size(), 2u);
  EXPECT_TRUE(e6[0].second.is_identity());
  EXPECT_EQ(e6[1].second, C("(1 5)(2 4)", 6));
  std::set<Permutation> e5;
  for (const auto& [r, x] : sn_invariant_elements(5)) e5.insert(x);
  EXPECT_EQ(e5, (std::set<Permutation>{Permutation(5), C("(1 2 4 3)", 5), C("(1 4)(2 3)", 5), C("(1 3 4 2)", 5)}));
  for (int n = 2; n <= 8; ++n) EXPECT_NO_THROW(sn_invariant_elements(n));
}

TEST(DimensionProfile, Examples) {
  EXPECT_EQ(hn_dimension_profile(5), (std::vector<std::uint64_t>{1, 1, 2, 3, 3, 4, 4, 8}));
  EXPECT_EQ(hn_dimension_profile(4), (std::vector<std::uint64_t>{1, 1, 2, 3, 3}));
  EXPECT_EQ(hn_dimension_profile(3), (std::vector<std::uint64_t>{1, 1, 2}));
  for (int n = 3; n <= 7; ++n) {
    const auto sm = classify_simples(standard_factorization(Variant::H, n));
    std::vector<std::uint64_t> dims;
    for (const auto& d : sm.descriptors()) dims.push_back(static_cast<std::uint64_t>(d.dimension));
    std::sort(dims.begin(), dims.end());
    EXPECT_EQ(dims, hn_dimension_profile(n)) << n;
  }
}
