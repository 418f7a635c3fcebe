#include <gtest/gtest.h>

#include "crystal_poly/cartan.hpp"
#include "test_util.hpp"

using namespace crystal_poly;
using testutil::ctx;

TEST(Cartan, FamiliesAtRankThree) {
  using M = std::vector<std::vector<int>>;
  EXPECT_EQ(cartan_matrix({Family::A1, 3}).rows(), (M{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
  EXPECT_EQ(cartan_matrix({Family::C1, 3}).rows(), (M{{2, -1, 0}, {-2, 2, -2}, {0, -1, 2}}));
  EXPECT_EQ(cartan_matrix({Family::A2, 3}).rows(), (M{{2, -1, 0}, {-2, 2, -1}, {0, -2, 2}}));
  EXPECT_EQ(cartan_matrix({Family::D2, 3}).rows(), (M{{2, -2, 0}, {-1, 2, -1}, {0, -2, 2}}));
}

TEST(Cartan, SmallAndLargerRanks) {
  using M = std::vector<std::vector<int>>;
  EXPECT_EQ(cartan_matrix({Family::A1, 2}).rows(), (M{{2, -2}, {-2, 2}}));
  auto c4 = cartan_matrix({Family::C1, 4});
  EXPECT_EQ(c4(2, 1), -2);
  EXPECT_EQ(c4(1, 2), -1);
  EXPECT_EQ(c4(3, 4), -2);
  EXPECT_EQ(c4(4, 3), -1);
  EXPECT_EQ(c4(2, 3), -1);
  auto a4 = cartan_matrix({Family::A1, 4});
  EXPECT_EQ(a4(1, 4), -1);
  EXPECT_EQ(a4(1, 3), 0);
}

TEST(Cartan, RankValidation) {
  EXPECT_THROW(validate({Family::A1, 1}), std::invalid_argument);
  EXPECT_THROW(validate({Family::C1, 2}), std::invalid_argument);
  EXPECT_THROW(validate({Family::A2, 2}), std::invalid_argument);
  EXPECT_THROW(validate({Family::D2, 2}), std::invalid_argument);
  EXPECT_NO_THROW(validate({Family::A1, 2}));
  EXPECT_THROW(parse_family("B1"), std::invalid_argument);
  EXPECT_EQ(display_name({Family::A2, 3}), "A_4^(2)");
  EXPECT_EQ(display_name({Family::D2, 3}), "D_3^(2)");
}

TEST(Cartan, FoldingMaps) {
  auto table = [](Family x, int n, int from, int to) {
    std::vector<int> v;
    for (int t = from; t <= to; ++t) v.push_back(pi_X(x, n, t));
    return v;
  };
  EXPECT_EQ(table(Family::A1, 3, -1, 4), (std::vector<int>{2, 3, 1, 2, 3, 1}));
  EXPECT_EQ(table(Family::C1, 3, 1, 8), (std::vector<int>{1, 2, 3, 2, 1, 2, 3, 2}));
  EXPECT_EQ(table(Family::A2, 3, 1, 10), (std::vector<int>{1, 2, 3, 2, 1, 1, 2, 3, 2, 1}));
  EXPECT_EQ(table(Family::D2, 3, 1, 12), (std::vector<int>{1, 2, 3, 3, 2, 1, 1, 2, 3, 3, 2, 1}));
  EXPECT_EQ(pi_X(Family::D2, 3, 0), 1);
  EXPECT_EQ(pi_X(Family::A2, 3, 0), 1);
  std::vector<int> pp;
  for (int l = 1; l <= 8; ++l) pp.push_back(pi_prime(3, l));
  EXPECT_EQ(pp, (std::vector<int>{1, 2, 3, 2, 1, 2, 3, 2}));
  EXPECT_THROW(pi_prime(3, 0), std::invalid_argument);
}

TEST(Cartan, IndexSets) {
  EXPECT_TRUE(in_IX(Family::A1, 3, 1));
  EXPECT_FALSE(in_IX(Family::A2, 3, 1));
  EXPECT_TRUE(in_IX(Family::A2, 3, 3));
  EXPECT_FALSE(in_IX(Family::D2, 3, 3));
  EXPECT_TRUE(in_IX(Family::D2, 3, 2));
  EXPECT_EQ(dual_family(Family::C1), Family::D2);
  EXPECT_EQ(dual_family(Family::D2), Family::C1);
}

TEST(Adapted, AcceptsAndRejects) {
  CartanData a3({Family::A1, 3});
  EXPECT_TRUE(check_adapted({2, 1, 3}, a3).ok);
  EXPECT_TRUE(check_adapted({3, 1, 2}, a3).ok);
  EXPECT_FALSE(check_adapted({1, 1, 2, 3}, a3).ok);
  EXPECT_FALSE(check_adapted({1, 2}, a3).ok);
  EXPECT_FALSE(check_adapted({1, 2, 4}, a3).ok);
  EXPECT_FALSE(check_adapted({}, a3).ok);
  // Cyclic wrap: i_L = i_1 is a repetition of the periodic word.
  EXPECT_FALSE(check_adapted({1, 2, 3, 1}, a3).ok);

  CartanData c4({Family::C1, 4});
  auto rep = check_adapted({1, 3, 2, 4, 3}, c4);
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.i, 2);
  EXPECT_EQ(rep.j, 3);
  EXPECT_TRUE(check_adapted({1, 2, 3, 4}, c4).ok);
  EXPECT_THROW(ctx(Family::C1, 4, {1, 3, 2, 4, 3}), std::invalid_argument);
  EXPECT_THROW(p_matrix(AdaptedSequence({1, 3, 2, 4, 3}, 4), c4), std::invalid_argument);
}

TEST(Sequence, PositionsRoundTrip) {
  AdaptedSequence seq({2, 1, 3, 1}, 3);
  EXPECT_EQ(seq.per_period(1), 2);
  EXPECT_EQ(seq.pos_of(1, 2), 1);
  EXPECT_EQ(seq.pos_of(1, 1), 2);
  EXPECT_EQ(seq.pos_of(2, 1), 4);
  EXPECT_EQ(seq.pos_of(3, 1), 6);
  EXPECT_EQ(seq.pos_of(2, 3), 7);
  for (int r = 1; r <= 40; ++r) {
    auto [s, k] = seq.pair_of(r);
    EXPECT_EQ(seq.pos_of(s, k), r);
    EXPECT_EQ(seq.color(r), k);
    EXPECT_EQ(seq.color(seq.next_same(r)), k);
    EXPECT_GT(seq.next_same(r), r);
    if (s > 1) EXPECT_EQ(seq.next_same(seq.prev_same(r)), r);
    else EXPECT_EQ(seq.prev_same(r), 0);
  }
}

TEST(Sequence, PMatrixFromFirstOccurrence) {
  // iota = (..., 3, 1, 2): i_1 = 2, i_2 = 1, i_3 = 3.
  auto c = ctx(Family::A1, 3, {2, 1, 3});
  const auto& p = c.p();
  EXPECT_EQ(p(2, 1), 1);
  EXPECT_EQ(p(2, 3), 1);
  EXPECT_EQ(p(1, 3), 1);
  EXPECT_EQ(p(1, 2), 0);
  EXPECT_EQ(p(3, 1), 0);
  EXPECT_EQ(p(3, 3), 0);
  EXPECT_EQ(c.pos(0, 1), 0);
  EXPECT_EQ(c.pos(2, 3), 6);
}

// P values printed for A_2^(1) and A_4^(2) with iota = (..., 3, 1, 2).
TEST(PTables, WorkedExamples) {
  auto a1 = ctx(Family::A1, 3, {2, 1, 3});
  EXPECT_EQ(a1.P(1, -1), 1);
  EXPECT_EQ(a1.P(1, 0), 0);
  EXPECT_EQ(a1.P(1, 1), 0);
  EXPECT_EQ(a1.P(1, 2), 1);
  EXPECT_EQ(a1.P(1, 3), 1);
  EXPECT_EQ(a1.P(1, 4), 2);
  for (int m = 5; m < 30; ++m) EXPECT_GE(a1.P(1, m), 3);
  EXPECT_EQ(a1.P(2, -1), 1);
  EXPECT_EQ(a1.P(2, 0), 0);
  EXPECT_EQ(a1.P(2, 1), 0);
  EXPECT_EQ(a1.P(2, 2), 0);
  EXPECT_EQ(a1.P(2, 3), 0);
  EXPECT_EQ(a1.P(2, 4), 1);
  EXPECT_EQ(a1.P(3, 1), 1);
  EXPECT_EQ(a1.P(3, 2), 1);
  EXPECT_EQ(a1.P(3, 3), 0);
  EXPECT_EQ(a1.P(3, 4), 1);
  EXPECT_EQ(a1.P(3, 5), 2);

  auto a2 = ctx(Family::A2, 3, {2, 1, 3});
  EXPECT_TRUE(a2.uses_wall(1));
  EXPECT_EQ(a2.P(1, 1), 0);
  EXPECT_EQ(a2.P(1, 2), 1);
  EXPECT_EQ(a2.P(1, 3), 1);
  EXPECT_EQ(a2.P(1, 4), 2);
  EXPECT_THROW(a2.P(1, 0), std::invalid_argument);
  EXPECT_EQ(a2.P(2, -1), 1);
  EXPECT_EQ(a2.P(2, 0), 0);
  EXPECT_EQ(a2.P(2, 1), 0);
  EXPECT_EQ(a2.P(2, 2), 0);
  EXPECT_EQ(a2.P(2, 3), 0);
  EXPECT_EQ(a2.P(2, 4), 1);
  EXPECT_EQ(a2.P(3, 1), 1);
  EXPECT_EQ(a2.P(3, 2), 1);
  EXPECT_EQ(a2.P(3, 3), 0);
  EXPECT_EQ(a2.P(3, 4), 1);
  EXPECT_EQ(a2.P(3, 5), 1);
}

TEST(PTables, MatchReferenceOracle) {
  const auto& tables = testutil::frozen().at("P");
  int checked = 0;
  for (auto it = tables.begin(); it != tables.end(); ++it) {
    const std::string key = it.key();
    const auto colon = key.find(':');
    auto c = ctx(testutil::family_of(key.substr(0, colon)), 3, testutil::word_of(key.substr(colon + 1)));
    for (auto kt = it.value().begin(); kt != it.value().end(); ++kt) {
      const int k = std::stoi(kt.key());
      const int from = kt.value().at("from").get<int>();
      const auto values = kt.value().at("values").get<std::vector<int>>();
      for (std::size_t d = 0; d < values.size(); ++d) {
        EXPECT_EQ(c.P(k, from + static_cast<long>(d)), values[d]) << key << " k=" << k << " t=" << from + d;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 400);
}
