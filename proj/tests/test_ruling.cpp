#include <gtest/gtest.h>

#include <stdexcept>

#include "augrule/dga.hpp"
#include "augrule/errors.hpp"
#include "augrule/ruling.hpp"
#include "oracles.hpp"

using namespace augrule;

namespace {

const PlatDiagram kTrefoil{2, {2, 2, 2}};
const PlatDiagram kUnknot{1, {}};
const PlatDiagram kKinked{2, {1, 2}};

std::vector<std::string> patterns(const std::vector<Ruling>& rs) {
  std::vector<std::string> out;
  for (const Ruling& r : rs) out.push_back(r.pattern());
  return out;
}

}  // namespace

TEST(Rulings, Trefoil) {
  MaslovData m = maslov(kTrefoil);
  auto rs = enumerate_rulings(kTrefoil, m, 0);
  ASSERT_EQ(rs.size(), 3u);
  // Canonical order is lexicographic on the switch set: {0}, {0,1,2}, {2}.
  EXPECT_EQ(patterns(rs), (std::vector<std::string>{"SDR", "SSS", "DRS"}));
  EXPECT_EQ(rs[1].theta, -1);
  EXPECT_EQ(rs[0].theta, 1);
  EXPECT_EQ(rs[2].theta, 1);
  EXPECT_EQ(rs[0].s, 1);
  EXPECT_EQ(rs[0].d, 1);
  EXPECT_EQ(rs[0].r, 1);
  EXPECT_EQ(theta_multiset(rs), (std::vector<int>{-1, 1, 1}));
}

TEST(Rulings, Unknots) {
  auto u = enumerate_rulings(kUnknot, maslov(kUnknot), 0);
  ASSERT_EQ(u.size(), 1u);
  EXPECT_TRUE(u[0].switches.empty());
  EXPECT_EQ(u[0].theta, 1);

  PlatDiagram two{2, {2}};
  auto t = enumerate_rulings(two, maslov(two), 0);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].pattern(), "S");
  EXPECT_EQ(t[0].theta, 1);

  EXPECT_TRUE(enumerate_rulings(kKinked, maslov(kKinked), 1).empty());
  EXPECT_TRUE(theta_multiset(enumerate_rulings(kKinked, maslov(kKinked), 1)).empty());
  EXPECT_THROW(enumerate_rulings(kKinked, maslov(kKinked), 0), RhoIncompatible);
}

TEST(Rulings, MatchExhaustiveSwitchSets) {
  std::size_t compared = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const PlatDiagram& d : oracle::all_plats(n, n == 4 ? 6 : 8)) {
      MaslovData m = maslov(d);
      for (int rho : {0, 1, 2, 3}) {
        if (rho == 0 ? m.modulus != 0 : m.modulus % rho != 0) continue;
        auto expected = oracle::rulings(d, m, rho);
        auto got = enumerate_rulings(d, m, rho);
        ASSERT_EQ(got.size(), expected.size()) << to_text(d) << " rho=" << rho;
        for (std::size_t i = 0; i < got.size(); ++i) {
          EXPECT_EQ(got[i].switches, expected[i].switches);
          EXPECT_EQ(got[i].pattern(), expected[i].pattern) << to_text(d);
          EXPECT_EQ(got[i].theta, expected[i].theta);
        }
        ++compared;
      }
    }
  }
  EXPECT_GT(compared, 1000u);
}

TEST(MakeRuling, Validation) {
  MaslovData m = maslov(kTrefoil);
  EXPECT_EQ(make_ruling(kTrefoil, m, 0, {2, 0, 1}).pattern(), "SSS");
  EXPECT_THROW(make_ruling(kTrefoil, m, 0, {}), std::invalid_argument);
  EXPECT_THROW(make_ruling(kTrefoil, m, 0, {1}), std::invalid_argument);
  EXPECT_THROW(make_ruling(kTrefoil, m, 0, {5}), IndexError);
  MaslovData k = maslov(kKinked);
  EXPECT_THROW(make_ruling(kKinked, k, 1, {}), std::invalid_argument);
}

TEST(Polynomial, Examples) {
  EXPECT_EQ(to_string(ruling_polynomial(kTrefoil, maslov(kTrefoil), 0)), "z^-1 + 2z");
  EXPECT_EQ(to_string(ruling_polynomial(kUnknot, maslov(kUnknot), 0)), "z");
  EXPECT_TRUE(ruling_polynomial(kKinked, maslov(kKinked), 1).is_zero());
  EXPECT_EQ(to_string(LaurentPolynomial()), "0");
  LaurentPolynomial p = LaurentPolynomial::monomial(2, 3);
  p += LaurentPolynomial::monomial(2, -3);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(LaurentPolynomial::monomial(1).shifted(-2), LaurentPolynomial::monomial(-1));
}

TEST(Polynomial, MatchesEnumeration) {
  for (int n = 1; n <= 4; ++n) {
    for (const PlatDiagram& d : oracle::all_plats(n, n == 4 ? 6 : 8)) {
      MaslovData m = maslov(d);
      for (int rho : {0, 1, 2}) {
        if (rho == 0 ? m.modulus != 0 : m.modulus % rho != 0) continue;
        LaurentPolynomial sum;
        for (const Ruling& r : enumerate_rulings(d, m, rho)) sum += LaurentPolynomial::monomial(r.theta);
        EXPECT_EQ(ruling_polynomial(d, m, rho), sum) << to_text(d);
      }
    }
  }
}

TEST(Interlacing, TrefoilTraces) {
  MaslovData m = maslov(kTrefoil);
  auto rs = enumerate_rulings(kTrefoil, m, 0);
  // Slices: after the left cusps, then after each crossing.
  EXPECT_EQ(interlacing_trace(kTrefoil, m, rs[0], 0), (std::vector<int>{0, 0, 1, 0}));
  EXPECT_EQ(interlacing_trace(kTrefoil, m, rs[1], 0), (std::vector<int>{0, 0, 0, 0}));
  EXPECT_EQ(interlacing_trace(kTrefoil, m, rs[2], 0), (std::vector<int>{0, 1, 0, 0}));
  EXPECT_EQ(interlacing_trace(kTrefoil, m, rs[0], 1), (std::vector<int>{0, 0, 1, 0}));
}

TEST(Interlacing, EvenRhoRefused) {
  PlatDiagram d{2, {1, 2}};
  Ruling empty;
  EXPECT_THROW(interlacing_trace(d, maslov(d), empty, 2), EvenRhoUnsupported);
}

TEST(Interlacing, StepTable) {
  // Degrees with step +1: ..., -5, -3, -1, 2, 4, 6, ...; step -1: ..., -6, -4, -2, 1, 3, 5, ...
  for (int k : {-5, -3, -1, 2, 4, 6}) EXPECT_EQ(interlacing_step(k, CrossingType::Ineligible), 1) << k;
  for (int k : {-6, -4, -2, 1, 3, 5}) EXPECT_EQ(interlacing_step(k, CrossingType::Ineligible), -1) << k;
  EXPECT_EQ(interlacing_step(0, CrossingType::Departure), 1);
  EXPECT_EQ(interlacing_step(0, CrossingType::Return), -1);
  EXPECT_EQ(interlacing_step(0, CrossingType::Switch), 0);
}

TEST(RulingCounts, ReturnCountAndBalanceOnSmallKnots) {
  for (int n = 1; n <= 3; ++n) {
    for (const PlatDiagram& d : oracle::all_plats(n, 7)) {
      MaslovData m = maslov(d);
      Dga g = build_dga(d, m);
      for (int rho : {0, 1, 3}) {
        if (rho == 0 ? m.modulus != 0 : m.modulus % rho != 0) continue;
        const std::int64_t chi = chi_star(g, rho);
        for (const Ruling& r : enumerate_rulings(d, m, rho)) {
          ASSERT_EQ((r.theta + chi) % 2, 0) << to_text(d);
          const std::int64_t expect = rho == 1 ? (r.theta + chi) / 2 - d.cusps : (r.theta + chi) / 2;
          EXPECT_EQ(r.r, expect) << to_text(d) << " " << r.pattern();
          if (rho == 1) {
            EXPECT_EQ(r.d, r.r);
          }
          auto trace = interlacing_trace(d, m, r, rho);
          EXPECT_EQ(trace.front(), 0);
          EXPECT_EQ(trace.back(), 0) << to_text(d) << " " << r.pattern();
        }
      }
    }
  }
}
