// Copyright 2026 The permgrid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "permgrid/poly.h"

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

namespace permgrid {
namespace {

const std::vector<std::string> kX = {"x"};
const std::vector<std::string> kAbc = {"a", "b", "c"};

MPoly M(const char* s, const std::vector<std::string>& names = kAbc) {
  return MPoly::Parse(s, names);
}

TEST(UPolyTest, Arithmetic) {
  const ZPoly a({1, -1});      // 1 - x
  const ZPoly b({1, 1});       // 1 + x
  EXPECT_EQ(a * b, ZPoly({1, 0, -1}));
  EXPECT_EQ(a + b, ZPoly({2}));
  EXPECT_EQ(a - a, ZPoly());
  EXPECT_EQ((a * b).degree(), 2);
  EXPECT_EQ(ZPoly({3, 0, 1}).Evaluate(Integer(2)), Integer(7));
  EXPECT_EQ(ZPoly({3, 0, 1}).Derivative(), ZPoly({0, 2}));
}

TEST(UPolyTest, DivisionAndGcd) {
  const QPoly a = to_rational(ZPoly({-1, 0, 1}));  // x^2 - 1
  const QPoly b = to_rational(ZPoly({1, 1}));      // x + 1
  auto [q, r] = divmod(a, b);
  EXPECT_EQ(q, to_rational(ZPoly({-1, 1})));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(a, to_rational(ZPoly({-1, 1}) * ZPoly({2, 1}))),
            to_rational(ZPoly({-1, 1})));
  EXPECT_EQ(exact_divide(ZPoly({-1, 0, 1}), ZPoly({1, 1})), ZPoly({-1, 1}));
  EXPECT_THROW(exact_divide(ZPoly({1, 0, 1}), ZPoly({1, 1})), std::domain_error);
  EXPECT_EQ(primitive_integer(QPoly({Rational(1, 2), Rational(-1, 3)})),
            ZPoly({-3, 2}));
}

TEST(MPolyTest, ParseAndPrint) {
  const MPoly p = M("(1 - a)*(1 + a) + 2*b^2*c");
  EXPECT_EQ(p, M("1 - a^2 + 2*c*b^2"));
  EXPECT_EQ(p.degree_in(0), 2);
  EXPECT_EQ(p.total_degree(), 3);
  EXPECT_EQ(M(p.ToString(kAbc).c_str()), p);
  EXPECT_THROW(M("1 + z"), std::invalid_argument);
  EXPECT_THROW(M("(1 + a"), std::invalid_argument);
}

TEST(MPolyTest, RingAxiomsOnRandomPolynomials) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3), exp(0, 2);
  auto random_poly = [&] {
    MPoly p(3);
    for (int t = 0; t < 4; ++t) {
      p.AddTerm(p.MakeKey({exp(rng), exp(rng), exp(rng)}), Integer(coef(rng)));
    }
    return p;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const MPoly a = random_poly(), b = random_poly(), c = random_poly();
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    if (!b.is_zero()) ASSERT_EQ(exact_divide(a * b, b), a);
  }
}

TEST(MPolyTest, GcdOfProducts) {
  const MPoly g = M("1 - a*b - c");
  const MPoly u = M("2 + a");
  const MPoly v = M("b - c^2");
  // Normalized to a positive leading coefficient in lex order.
  EXPECT_EQ(gcd(g * u, g * v), -g);
  EXPECT_EQ(gcd(u, v), M("1"));
}

TEST(MPolyTest, Substitute) {
  const MPoly p = M("a*b + c");
  const MPoly x = MPoly::Parse("x", kX);
  const MPoly got = p.Substitute({x, x, MPoly::Parse("1 + x", kX)});
  EXPECT_EQ(got, MPoly::Parse("x^2 + x + 1", kX));
}

TEST(DeterminantTest, AgreesWithCofactorExpansion) {
  std::vector<std::vector<MPoly>> m = {
      {M("a"), M("1"), M("0")},
      {M("b"), M("c"), M("1")},
      {M("1"), M("a"), M("b")}};
  // a(cb - a) - 1(b*b - 1) + 0
  EXPECT_EQ(determinant(m), M("a*b*c - a^2 - b^2 + 1"));
  std::vector<std::vector<MPoly>> singular = {{M("a"), M("b")},
                                              {M("2*a"), M("2*b")}};
  EXPECT_TRUE(determinant(singular).is_zero());
}

TEST(RationalFunctionTest, NormalizesToLowestTerms) {
  const auto r = RationalFunction::Parse("(1 - x^2) / (2 - 2*x)", kX);
  EXPECT_EQ(r, RationalFunction::Parse("(1 + x) / 2", kX));
  const auto s = RationalFunction::Parse("(-x) / (x - 1)", kX);
  EXPECT_EQ(s, RationalFunction::Parse("x / (1 - x)", kX));
  // The denominator constant term is positive.
  EXPECT_EQ(s.denominator().constant_term(), Integer(1));
  EXPECT_EQ(RationalFunction::Parse(s.ToString(), kX), s);
}

TEST(RationalFunctionTest, FactoredAndExpandedFormsNormalizeEqually) {
  const auto factored = RationalFunction::Parse(
      "(1 - 6*x + 11*x^2 - 5*x^3) / ((1 - x)*(1 - 3*x)*(1 - 3*x + x^2))", kX);
  const auto expanded = RationalFunction::Parse(
      "(1 - 6*x + 11*x^2 - 5*x^3) / (1 - 7*x + 16*x^2 - 13*x^3 + 3*x^4)", kX);
  EXPECT_EQ(factored, expanded);
}

TEST(RationalFunctionTest, Specialize) {
  const auto r = RationalFunction::Parse("a*b / (1 - a - c)", kAbc);
  EXPECT_EQ(r.Specialize("x"), RationalFunction::Parse("x^2 / (1 - 2*x)", kX));
}

}  // namespace
}  // namespace permgrid
