#include <gtest/gtest.h>

#include <algorithm>
#include <unordered_set>

#include "crystal_poly/crystal_z.hpp"
#include "crystal_poly/linear_form.hpp"
#include "test_util.hpp"

using namespace crystal_poly;

TEST(ZVector, CanonicalTrim) {
  ZVector a({1, 0, 2, 0, 0});
  EXPECT_EQ(a.max_pos(), 3);
  EXPECT_EQ(a, ZVector({1, 0, 2}));
  EXPECT_EQ(a.total(), 3);
  EXPECT_EQ(a[3], 2);
  EXPECT_EQ(a[0], 0);
  EXPECT_EQ(a[99], 0);
  ZVector z({0, 0});
  EXPECT_TRUE(z.is_zero());
  a.add(3, -2);
  EXPECT_EQ(a.max_pos(), 1);
  a.add(5, -1);
  EXPECT_FALSE(a.nonnegative());
  EXPECT_EQ(ZVectorHash{}(ZVector({4})), ZVectorHash{}(ZVector({4, 0})));
}

TEST(ZVector, ParseBothNotations) {
  AdaptedSequence seq({2, 1, 3}, 3);
  auto a = parse_zvector("[3,3,2,3,2,1]", seq);
  auto b = parse_zvector("{(1,2):3, (1,1):3, (1,3):2, (2,2):3, (2,1):2, (2,3):1}", seq);
  EXPECT_EQ(a, b);
  EXPECT_EQ(format_flat(a), "[3,3,2,3,2,1]");
  EXPECT_EQ(format_pairs(ZVector({0, 1}), seq), "{(1,1):1}");
  EXPECT_TRUE(parse_zvector("[]", seq).is_zero());
  EXPECT_TRUE(parse_zvector("{}", seq).is_zero());
  EXPECT_THROW(parse_zvector("[1,x]", seq), std::invalid_argument);
  EXPECT_THROW(parse_zvector("{(0,1):2}", seq), std::invalid_argument);
  EXPECT_THROW(parse_zvector("{(1,4):2}", seq), std::invalid_argument);
  EXPECT_EQ(parse_zvector("3 3 2, 3 2 1", seq), a);
  EXPECT_TRUE(parse_zvector("0", seq).is_zero());
  EXPECT_THROW(parse_zvector("3 x", seq), std::invalid_argument);
}

TEST(LinearForm, ArithmeticAndCanonicalTerms) {
  LinearForm f = LinearForm::var(3, 2) + LinearForm::var(1) - LinearForm(4);
  EXPECT_EQ(f.coeff(3), 2);
  EXPECT_EQ(f.coeff(2), 0);
  EXPECT_EQ(f.constant(), -4);
  EXPECT_EQ(f.min_pos(), 1);
  EXPECT_EQ(f.max_pos(), 3);
  LinearForm g = f - LinearForm::var(3, 2);
  EXPECT_EQ(g.max_pos(), 1);
  EXPECT_EQ((f - f), LinearForm{});
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ(f.scaled(-1), -f);
  EXPECT_EQ(f.eval(ZVector({5, 7, 1})), 5 + 2 - 4);
  LinearForm h;
  h.add_term(0, 5);
  h.add_term(-2, 1);
  EXPECT_TRUE(h.homogeneous_zero());
  EXPECT_EQ(LinearFormHash{}(f), LinearFormHash{}(LinearForm::var(1) + LinearForm::var(3, 2) + LinearForm(-4)));
}

TEST(LinearForm, OrderByMaxPositionFirst) {
  std::vector<LinearForm> v{LinearForm::var(5), LinearForm::var(2) - LinearForm::var(3), LinearForm::var(1),
                            LinearForm::var(3)};
  std::sort(v.begin(), v.end());
  EXPECT_EQ(v.front(), LinearForm::var(1));
  EXPECT_EQ(v.back(), LinearForm::var(5));
  EXPECT_LT(v[1].max_pos(), v[3].max_pos() + 1);
}

TEST(LinearForm, Rendering) {
  auto c = testutil::ctx(Family::A1, 3, {2, 1, 3});
  auto f = testutil::form(c, 1, {{1, 2, 1}, {1, 1, -1}});
  EXPECT_EQ(to_string(f, c.seq()), "x[1,2] - x[1,1] + 1");
  EXPECT_EQ(to_string_flat(f), "x1 - x2 + 1");
  EXPECT_EQ(to_string(LinearForm{}, c.seq()), "0");
  EXPECT_EQ(to_string(testutil::form(c, 0, {{2, 3, -2}}), c.seq()), "-2*x[2,3]");
  // s < 1 is the zero variable.
  EXPECT_TRUE(testutil::form(c, 0, {{0, 2, 1}}).homogeneous_zero());
}
