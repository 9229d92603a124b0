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

#ifndef PERMGRID_SERIES_H_
#define PERMGRID_SERIES_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "permgrid/poly.h"

namespace permgrid {

// Thrown for constant-term violations and unsolvable series equations.
class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Truncated power series with exact rational coefficients, known through
// x^order. Binary operations truncate to the smaller order.
class PowerSeries {
 public:
  explicit PowerSeries(int order = 0);
  PowerSeries(std::vector<Rational> coeffs, int order);
  static PowerSeries FromIntegers(const std::vector<Integer>& coeffs, int order);
  static PowerSeries FromPoly(const ZPoly& p, int order);
  static PowerSeries Constant(const Rational& c, int order);
  static PowerSeries X(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int i) const { return c_.at(i); }
  Rational& operator[](int i) { return c_.at(i); }
  const std::vector<Rational>& coeffs() const { return c_; }
  // -1 when every known coefficient is zero.
  int valuation() const;

  PowerSeries Truncate(int order) const;
  // Multiplies by x^k, keeping the order.
  PowerSeries ShiftUp(int k) const;
  // Divides by x^k; the low k coefficients must vanish. Order drops by k.
  PowerSeries ShiftDown(int k) const;

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) {
    return a += b;
  }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) {
    return a -= b;
  }
  friend PowerSeries operator-(PowerSeries a);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Rational& s, PowerSeries a);
  // Requires a nonzero constant term in b.
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.c_ == b.c_;
  }

  PowerSeries Pow(int e) const;
  // Square root of a series with constant term 1.
  PowerSeries Sqrt() const;

  bool IsIntegral() const;
  // Throws SeriesError if some coefficient is not an integer.
  std::vector<Integer> IntegerCoefficients() const;
  // Decimal strings (integers, or p/q when not integral).
  std::vector<std::string> ToStrings() const;

 private:
  std::vector<Rational> c_;
};

// outer(inner); requires inner(0) = 0.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

// x + x^2 + 2x^3 + 5x^4 + ...: nonempty 213-avoiders.
PowerSeries catalan_series(int order);
// (1-4x)^(1/2).
PowerSeries sqrt_one_minus_4x(int order);
// x/(1-x): nonempty monotone permutations.
PowerSeries monotone_series(int order);

// Polynomial in an unknown series f with coefficients in Z[x]:
// sum_i coeffs[i](x) f^i.
class PolyInF {
 public:
  PolyInF() = default;
  explicit PolyInF(std::vector<ZPoly> coeffs);
  // Polynomial syntax over the variables x and f.
  static PolyInF Parse(std::string_view text);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<ZPoly>& coeffs() const { return c_; }
  PolyInF DerivativeInF() const;
  PowerSeries Evaluate(const PowerSeries& f) const;
  std::string ToString() const;

 private:
  std::vector<ZPoly> c_;
};

// True iff P(f) vanishes modulo x^(order+1).
bool verify_annihilator(const PolyInF& p, const PowerSeries& f, int order);

// Extends `seed` (coefficients of x^0..x^k) to the unique root of p through
// x^order, one coefficient at a time. Throws SeriesError when the seed is
// inconsistent or an extension step is not uniquely determined.
PowerSeries solve_algebraic(const PolyInF& p, const std::vector<Rational>& seed,
                            int order);

// Substitutes series for the named variables of r.
PowerSeries eval_multivariate(const RationalFunction& r,
                              const std::map<std::string, PowerSeries>& values);

// Univariate view of a one-variable MPoly and back.
ZPoly to_zpoly(const MPoly& p);
MPoly to_mpoly(const ZPoly& p);

ZPoly resultant(const std::vector<ZPoly>& a, const std::vector<ZPoly>& b);
// Discriminant of P with respect to f, a polynomial in x.
ZPoly discriminant_in_f(const PolyInF& p);

struct RootInterval {
  Rational lo;
  Rational hi;
  // Set when the root was recognised as an exact rational.
  std::optional<Rational> exact;

  double midpoint() const { return Rational((lo + hi) / 2).get_d(); }
};

// Isolates the least positive real root of p (multiple roots included) in an
// interval of width <= tol using a Sturm sequence of the square-free part.
RootInterval smallest_positive_root(const ZPoly& p, const Rational& tol);

}  // namespace permgrid

#endif  // PERMGRID_SERIES_H_
