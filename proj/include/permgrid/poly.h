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

// Exact polynomial arithmetic: dense univariate polynomials over Z or Q and
// sparse multivariate polynomials over Z with gcd, plus the rational
// functions built from them.

#ifndef PERMGRID_POLY_H_
#define PERMGRID_POLY_H_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permgrid {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense univariate polynomial, coefficients lowest degree first. Trailing
// zeros are always trimmed, so the zero polynomial has no coefficients.
template <typename Coeff>
class UPoly {
 public:
  UPoly() = default;
  UPoly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { Trim(); }
  UPoly(std::initializer_list<Coeff> coeffs) : c_(coeffs) { Trim(); }

  static UPoly Constant(const Coeff& c) { return UPoly(std::vector<Coeff>{c}); }
  static UPoly Monomial(const Coeff& c, int degree) {
    std::vector<Coeff> v(degree + 1);
    v[degree] = c;
    return UPoly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Coeff coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Coeff(0);
  }
  const Coeff& leading() const { return c_.back(); }
  const std::vector<Coeff>& coeffs() const { return c_; }
  // Lowest exponent with a nonzero coefficient, -1 for zero.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] != 0) return static_cast<int>(i);
    }
    return -1;
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    Trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    Trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Coeff> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        out[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return UPoly(std::move(out));
  }
  friend UPoly operator*(const Coeff& s, UPoly a) {
    for (auto& x : a.c_) x *= s;
    a.Trim();
    return a;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) {
    return a.c_ == b.c_;
  }

  template <typename T>
  T Evaluate(const T& x) const {
    T acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  UPoly Derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Coeff> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * int(i);
    return UPoly(std::move(out));
  }

  std::string ToString(std::string_view var = "x") const;

 private:
  void Trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Coeff> c_;
};

using ZPoly = UPoly<Integer>;
using QPoly = UPoly<Rational>;

// Polynomial long division over Q. Throws std::domain_error on a zero
// divisor.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly gcd(QPoly a, QPoly b);  // monic, or zero
// Exact division over Z; throws std::domain_error if `b` does not divide `a`.
ZPoly exact_divide(const ZPoly& a, const ZPoly& b);
QPoly to_rational(const ZPoly& p);
// Clears denominators and content; the leading coefficient is positive.
ZPoly primitive_integer(const QPoly& p);

// Sparse polynomial over Z in up to 8 variables. Exponent vectors are packed
// one byte per variable, variable 0 most significant, so integer order on the
// packed key is lexicographic order with x_0 > x_1 > ...
class MPoly {
 public:
  using Key = std::uint64_t;
  static constexpr int kMaxVars = 8;
  static constexpr int kMaxExponent = 255;

  MPoly() : nvars_(0) {}
  explicit MPoly(int nvars) : nvars_(nvars) { CheckVars(); }
  static MPoly Constant(int nvars, const Integer& c);
  static MPoly Variable(int nvars, int var);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const std::map<Key, Integer>& terms() const { return terms_; }
  Integer constant_term() const;

  static int Exponent(Key k, int var) {
    return static_cast<int>((k >> Shift(var)) & 0xff);
  }
  Key MakeKey(const std::vector<int>& exps) const;

  void AddTerm(Key k, const Integer& c);
  int degree_in(int var) const;  // -1 for zero
  int total_degree() const;      // -1 for zero
  // Coefficient of var^k, as a polynomial not involving var.
  MPoly coeff_in(int var, int k) const;
  Integer content() const;  // nonnegative integer content

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(MPoly a);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Integer& s, const MPoly& a);
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  // Divides every coefficient by s exactly.
  MPoly DivideScalar(const Integer& s) const;

  // Maps variable i of this polynomial to polynomial images[i].
  MPoly Substitute(const std::vector<MPoly>& images) const;

  // Human readable, highest total degree last ("1 - a*c - b*d").
  std::string ToString(const std::vector<std::string>& names) const;

  // Parses sums of products of integers and named variables, with ^ powers
  // and parentheses: "(1-x)*(1-3*x) + 2*a^2*b".
  static MPoly Parse(std::string_view text,
                     const std::vector<std::string>& names);

 private:
  static int Shift(int var) { return 8 * (kMaxVars - 1 - var); }
  void CheckVars() const {
    if (nvars_ < 0 || nvars_ > kMaxVars) {
      throw std::invalid_argument("MPoly supports at most 8 variables");
    }
  }
  int nvars_;
  std::map<Key, Integer> terms_;
};

// Exact quotient; throws std::domain_error if b does not divide a.
MPoly exact_divide(const MPoly& a, const MPoly& b);
// Greatest common divisor with positive leading coefficient.
MPoly gcd(const MPoly& a, const MPoly& b);
// Fraction-free (Bareiss) determinant.
MPoly determinant(std::vector<std::vector<MPoly>> m);

// numerator / denominator over Z[vars], kept in lowest terms with integer
// content removed and a positive denominator constant term.
class RationalFunction {
 public:
  RationalFunction(MPoly numerator, MPoly denominator,
                   std::vector<std::string> names);
  // Parses "num / den" (or a bare polynomial) with MPoly::Parse syntax.
  static RationalFunction Parse(std::string_view text,
                                std::vector<std::string> names);

  const MPoly& numerator() const { return num_; }
  const MPoly& denominator() const { return den_; }
  const std::vector<std::string>& names() const { return names_; }

  // Maps every variable to the single variable `name`.
  RationalFunction Specialize(const std::string& name) const;

  std::string ToString() const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void Normalize();
  MPoly num_;
  MPoly den_;
  std::vector<std::string> names_;
};

}  // namespace permgrid

#endif  // PERMGRID_POLY_H_
