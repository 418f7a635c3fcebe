#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "crystal_poly/inequality_engine.hpp"
#include "crystal_poly/shapes.hpp"
#include "test_util.hpp"

using namespace crystal_poly;
using testutil::ctx;
using testutil::form;

namespace {

bool contains(const std::vector<LinearForm>& v, const LinearForm& f) {
  return std::find(v.begin(), v.end(), f) != v.end();
}

}  // namespace

TEST(Beta, FlatAndPairedAgree) {
  for (auto fam : {Family::A1, Family::C1, Family::A2, Family::D2}) {
    for (auto word : {std::vector<int>{2, 1, 3}, std::vector<int>{3, 1, 2}, std::vector<int>{1, 2, 3, 2}}) {
      if (!check_adapted(word, CartanData({fam, 3})).ok) continue;
      auto c = ctx(fam, 3, word);
      for (int s = 1; s <= 4; ++s)
        for (int k = 1; k <= 3; ++k) EXPECT_EQ(beta(c, c.pos(s, k)), beta_pair(c, s, k)) << s << "," << k;
    }
  }
}

TEST(Beta, ExplicitValues) {
  auto c = ctx(Family::A1, 3, {2, 1, 3});
  // beta_1 = x_1 + a(2,1) x_2 + a(2,3) x_3 + x_4
  EXPECT_EQ(beta(c, 1), LinearForm::var(1) - LinearForm::var(2) - LinearForm::var(3) + LinearForm::var(4));
  EXPECT_TRUE(beta(c, 0).is_zero());
  auto lam = WeightSpec::fundamental(3, 1);
  // r = 2 is the first 1: beta^(-) = -<h_1,lambda> + a(1,2) x_1 + x_2
  EXPECT_EQ(beta_minus(c, 2, lam), LinearForm(-1) - LinearForm::var(1) + LinearForm::var(2));
  EXPECT_EQ(beta_minus(c, 5, lam), beta(c, 2));
}

TEST(Rewriting, SPrimeCases) {
  auto c = ctx(Family::A1, 3, {2, 1, 3});
  auto x1 = LinearForm::var(1);
  EXPECT_EQ(S_prime(c, 1, x1), x1 - beta(c, 1));
  EXPECT_EQ(S_prime(c, 2, x1), x1);
  auto g = -LinearForm::var(4);
  EXPECT_EQ(S_prime(c, 4, g), g + beta(c, 1));
  // r^(-) = 0 and a negative coefficient: S' adds beta_0 = 0.
  EXPECT_EQ(S_prime(c, 1, -x1), -x1);
}

TEST(Rewriting, SeedsOfLambdaSets) {
  auto c = ctx(Family::A1, 3, {2, 1, 3});
  auto lam = WeightSpec::fundamental(3, 1).add(2, 3);
  EXPECT_EQ(lambda_k(c, lam, 2), form(c, 3, {{1, 2, -1}}));
  EXPECT_EQ(lambda_k(c, lam, 1), form(c, 1, {{1, 2, 1}, {1, 1, -1}}));
  EXPECT_EQ(xi_k(c, 3), form(c, 0, {{1, 2, 1}, {1, 1, 1}, {1, 3, -1}}));
}

// The B(infinity) inequalities listed for A_2^(1), iota = (..., 3, 1, 2), at s = 1.
TEST(Generation, WorkedInfinityForms) {
  auto c = ctx(Family::A1, 3, {2, 1, 3});
  auto g = generate_xi_infinity(c, 3 * 3);
  EXPECT_TRUE(g.converged);
  std::vector<LinearForm> expected = {
      form(c, 0, {{1, 1, 1}}),
      form(c, 0, {{2, 2, 1}, {1, 3, 1}, {2, 1, -1}}),
      form(c, 0, {{2, 3, 1}, {1, 3, 1}, {3, 2, -1}}),
      form(c, 0, {{2, 2, 2}, {2, 3, -1}}),
      form(c, 0, {{2, 2, 1}, {2, 1, 1}, {3, 2, -1}}),
      form(c, 0, {{2, 2, 1}, {2, 3, 1}, {3, 1, -1}}),
      form(c, 0, {{1, 2, 1}}),
      form(c, 0, {{1, 1, 1}, {1, 3, 1}, {2, 2, -1}}),
      form(c, 0, {{1, 1, 1}, {2, 1, 1}, {2, 3, -1}}),
      form(c, 0, {{1, 3, 2}, {2, 1, -1}}),
      form(c, 0, {{1, 3, 1}, {2, 2, 1}, {2, 3, -1}}),
      form(c, 0, {{1, 3, 1}, {2, 1, 1}, {3, 2, -1}}),
      form(c, 0, {{1, 3, 1}}),
      form(c, 0, {{2, 1, 1}, {2, 2, 1}, {2, 3, -1}}),
      form(c, 0, {{3, 2, 1}, {2, 2, 1}, {3, 1, -1}}),
      form(c, 0, {{2, 1, 2}, {3, 2, -1}}),
      form(c, 0, {{2, 1, 1}, {2, 3, 1}, {3, 1, -1}}),
      form(c, 0, {{2, 1, 1}, {3, 2, 1}, {3, 3, -1}}),
  };
  for (const auto& f : expected) EXPECT_TRUE(contains(g.forms, f)) << to_string(f, c.seq());
}

TEST(Generation, CapReportsNonConvergence) {
  auto c = ctx(Family::A1, 3, {2, 1, 3});
  auto g = generate_xi_infinity(c, 15, 10);
  EXPECT_FALSE(g.converged);
  auto ok = generate_xi_infinity(c, 6);
  EXPECT_TRUE(ok.converged);
  EXPECT_GT(ok.pruned, 0u);
}

TEST(Generation, DeterministicAcrossWorkerCounts) {
  auto c = ctx(Family::C1, 3, {3, 1, 2});
  setenv("CRYSTAL_POLY_THREADS", "1", 1);
  auto a = generate_xi_infinity(c, 12);
  auto al = generate_xi_lambda_k(c, WeightSpec::fundamental(3, 2), 2, 12);
  setenv("CRYSTAL_POLY_THREADS", "4", 1);
  auto b = generate_xi_infinity(c, 12);
  auto bl = generate_xi_lambda_k(c, WeightSpec::fundamental(3, 2), 2, 12);
  unsetenv("CRYSTAL_POLY_THREADS");
  EXPECT_EQ(a.forms, b.forms);
  EXPECT_EQ(al.forms, bl.forms);
  EXPECT_TRUE(std::is_sorted(a.forms.begin(), a.forms.end()));
}

TEST(Checks, PositivityStrictAmple) {
  for (auto fam : {Family::A1, Family::C1, Family::A2, Family::D2}) {
    auto c = ctx(fam, 3, {2, 1, 3});
    const int R = 12;
    auto inf = generate_xi_infinity(c, R);
    EXPECT_TRUE(check_positivity(c, inf.forms).ok);
    std::vector<std::vector<LinearForm>> per_k;
    for (int k = 1; k <= 3; ++k) per_k.push_back(generate_xi_k(c, k, R).forms);
    EXPECT_TRUE(check_strict_positivity(c, per_k, inf.forms).ok);
    auto lam = WeightSpec::fundamental(3, 1).add(2, 1);
    for (int k = 1; k <= 3; ++k) EXPECT_TRUE(check_ample(generate_xi_lambda_k(c, lam, k, R).forms).ok);
  }
  auto c = ctx(Family::A1, 3, {2, 1, 3});
  auto bad = check_positivity(c, {LinearForm::var(4), -LinearForm::var(2)});
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.position, 2);
  EXPECT_FALSE(check_ample({LinearForm(-1) + LinearForm::var(1)}).ok);
}

TEST(Membership, WitnessAndEpsilonStar) {
  auto c = ctx(Family::A1, 3, {2, 1, 3});
  auto forms = comb_infinity(c, 9).forms();
  ZVector x({3, 3, 2, 3, 2, 1});
  EXPECT_TRUE(membership(x, forms).member);
  auto m = membership(ZVector({0, 0, 0, 1}), forms);
  EXPECT_FALSE(m.member);
  ASSERT_TRUE(m.witness.has_value());
  EXPECT_LT(m.witness->eval(ZVector({0, 0, 0, 1})), 0);

  // eps*(x) = (1, 3, 0), with Comb_2[0] = {-x_{1,2}}.
  EXPECT_EQ(epsilon_star_forms(c, x, 1), 1);
  EXPECT_EQ(epsilon_star_forms(c, x, 2), 3);
  EXPECT_EQ(epsilon_star_forms(c, x, 3), 0);
  EXPECT_EQ(comb_lambda(c, 2, WeightSpec::zero(3), 9).forms(), std::vector<LinearForm>{-LinearForm::var(1)});
  EpsilonStarForms cached(c);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(cached(x, k), epsilon_star_forms(c, x, k));
  for (int margin = 0; margin <= 3; ++margin) EXPECT_EQ(epsilon_star_forms(c, x, 1, margin), 1);
  EXPECT_EQ(epsilon_star_from(ZVector{}, forms), 0);
}
