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

#include "permgrid/series.h"

#include <algorithm>

namespace permgrid {

PowerSeries::PowerSeries(int order) : c_(std::max(order, 0) + 1) {
  if (order < 0) throw SeriesError("negative series order");
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs, int order)
    : c_(std::move(coeffs)) {
  if (order < 0) throw SeriesError("negative series order");
  c_.resize(order + 1);
}

PowerSeries PowerSeries::FromIntegers(const std::vector<Integer>& coeffs,
                                      int order) {
  std::vector<Rational> c;
  for (const auto& x : coeffs) c.emplace_back(x);
  return PowerSeries(std::move(c), order);
}

PowerSeries PowerSeries::FromPoly(const ZPoly& p, int order) {
  return FromIntegers(p.coeffs(), order);
}

PowerSeries PowerSeries::Constant(const Rational& c, int order) {
  PowerSeries s(order);
  s.c_[0] = c;
  return s;
}

PowerSeries PowerSeries::X(int order) {
  PowerSeries s(order);
  if (order >= 1) s.c_[1] = 1;
  return s;
}

int PowerSeries::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

PowerSeries PowerSeries::Truncate(int order) const {
  return PowerSeries(std::vector<Rational>(
                         c_.begin(), c_.begin() + std::min<std::size_t>(
                                                      c_.size(), order + 1)),
                     order);
}

PowerSeries PowerSeries::ShiftUp(int k) const {
  PowerSeries s(order());
  for (int i = 0; i + k <= order(); ++i) s.c_[i + k] = c_[i];
  return s;
}

PowerSeries PowerSeries::ShiftDown(int k) const {
  if (k > order()) throw SeriesError("shift exceeds series order");
  for (int i = 0; i < k; ++i) {
    if (c_[i] != 0) throw SeriesError("division by x^k of a series of lower valuation");
  }
  return PowerSeries(std::vector<Rational>(c_.begin() + k, c_.end()),
                     order() - k);
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

PowerSeries operator-(PowerSeries a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  PowerSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.c_[j] != 0) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

PowerSeries operator*(const Rational& s, PowerSeries a) {
  for (auto& x : a.c_) x *= s;
  return a;
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
  if (b.c_[0] == 0) throw SeriesError("series division by a non-unit");
  const int n = std::min(a.order(), b.order());
  PowerSeries q(n);
  for (int k = 0; k <= n; ++k) {
    Rational acc = a.c_[k];
    for (int j = 1; j <= k; ++j) {
      if (b.c_[j] != 0) acc -= b.c_[j] * q.c_[k - j];
    }
    q.c_[k] = acc / b.c_[0];
  }
  return q;
}

PowerSeries PowerSeries::Pow(int e) const {
  if (e < 0) throw SeriesError("negative power");
  PowerSeries result = Constant(1, order());
  PowerSeries base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

PowerSeries PowerSeries::Sqrt() const {
  if (c_[0] != 1) throw SeriesError("sqrt requires constant term 1");
  PowerSeries s(order());
  s.c_[0] = 1;
  for (int k = 1; k <= order(); ++k) {
    Rational acc = c_[k];
    for (int i = 1; i < k; ++i) acc -= s.c_[i] * s.c_[k - i];
    s.c_[k] = acc / 2;
  }
  return s;
}

bool PowerSeries::IsIntegral() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rational& x) { return x.get_den() == 1; });
}

std::vector<Integer> PowerSeries::IntegerCoefficients() const {
  std::vector<Integer> out;
  for (const auto& x : c_) {
    if (x.get_den() != 1) {
      throw SeriesError("series coefficient " + x.get_str() + " is not an integer");
    }
    out.push_back(x.get_num());
  }
  return out;
}

std::vector<std::string> PowerSeries::ToStrings() const {
  std::vector<std::string> out;
  for (const auto& x : c_) out.push_back(x.get_str());
  return out;
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
  if (inner[0] != 0) throw SeriesError("compose: inner series has a constant term");
  const int n = std::min(outer.order(), inner.order());
  PowerSeries acc = PowerSeries::Constant(outer[n], n);
  PowerSeries in = inner.Truncate(n);
  for (int k = n - 1; k >= 0; --k) {
    acc = acc * in;
    acc[0] += outer[k];
  }
  return acc;
}

PowerSeries sqrt_one_minus_4x(int order) {
  PowerSeries s = PowerSeries::Constant(1, order);
  if (order >= 1) s[1] = -4;
  return s.Sqrt();
}

PowerSeries catalan_series(int order) {
  PowerSeries num = PowerSeries::Constant(1, order + 1);
  if (order + 1 >= 1) num[1] = -2;
  num -= sqrt_one_minus_4x(order + 1);
  return Rational(1, 2) * num.ShiftDown(1);
}

PowerSeries monotone_series(int order) {
  PowerSeries s(order);
  for (int i = 1; i <= order; ++i) s[i] = 1;
  return s;
}

// ------------------------------------------------------------- PolyInF

PolyInF::PolyInF(std::vector<ZPoly> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyInF PolyInF::Parse(std::string_view text) {
  const MPoly p = MPoly::Parse(text, {"x", "f"});
  std::vector<ZPoly> coeffs;
  for (int k = 0; k <= p.degree_in(1); ++k) {
    const MPoly c = p.coeff_in(1, k);
    std::vector<Integer> z(std::max(c.degree_in(0), 0) + 1);
    for (const auto& [key, v] : c.terms()) z[MPoly::Exponent(key, 0)] = v;
    coeffs.emplace_back(std::move(z));
  }
  return PolyInF(std::move(coeffs));
}

PolyInF PolyInF::DerivativeInF() const {
  std::vector<ZPoly> out;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    out.push_back(Integer(static_cast<long>(i)) * c_[i]);
  }
  return PolyInF(std::move(out));
}

PowerSeries PolyInF::Evaluate(const PowerSeries& f) const {
  const int n = f.order();
  PowerSeries acc(n);
  for (int i = degree(); i >= 0; --i) {
    acc = acc * f + PowerSeries::FromPoly(c_[i], n);
  }
  return acc;
}

std::string PolyInF::ToString() const {
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[i].ToString() + ")";
    if (i >= 1) out += "*f";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

bool verify_annihilator(const PolyInF& p, const PowerSeries& f, int order) {
  if (f.order() < order) throw SeriesError("series known to lower order than requested");
  const PowerSeries r = p.Evaluate(f.Truncate(order));
  return r.valuation() < 0;
}

PowerSeries solve_algebraic(const PolyInF& p, const std::vector<Rational>& seed,
                            int order) {
  if (seed.empty()) throw SeriesError("solve_algebraic: empty seed");
  const int known = static_cast<int>(seed.size()) - 1;
  const PolyInF dp = p.DerivativeInF();
  const PowerSeries seed_series(seed, std::max(order, known) + 1);
  const PowerSeries d = dp.Evaluate(seed_series);
  const int v = d.valuation();
  if (v < 0 || v > known) {
    throw SeriesError("solve_algebraic: derivative valuation not determined by seed");
  }
  const Rational pivot = d[v];
  const int work = std::max(order, known) + v;
  PowerSeries f(seed, work);
  // Everything below x^(known+1+v) must already vanish.
  {
    const PowerSeries r = p.Evaluate(f).Truncate(known + v);
    if (r.valuation() >= 0) {
      throw SeriesError("solve_algebraic: inconsistent seed (residual at x^" +
                        std::to_string(r.valuation()) + ")");
    }
  }
  for (int j = known + 1; j <= order; ++j) {
    if (j <= v) throw SeriesError("solve_algebraic: ambiguous extension");
    const PowerSeries r = p.Evaluate(f.Truncate(j + v));
    for (int m = 0; m < j + v; ++m) {
      if (r[m] != 0) {
        throw SeriesError("solve_algebraic: residual at x^" + std::to_string(m) +
                          " while solving for x^" + std::to_string(j));
      }
    }
    f[j] = -r[j + v] / pivot;
  }
  return f.Truncate(order);
}

PowerSeries eval_multivariate(const RationalFunction& r,
                              const std::map<std::string, PowerSeries>& values) {
  const auto& names = r.names();
  int n = -1;
  std::vector<const PowerSeries*> vars;
  for (const auto& name : names) {
    auto it = values.find(name);
    if (it == values.end()) throw SeriesError("no series for variable " + name);
    vars.push_back(&it->second);
    n = (n < 0) ? it->second.order() : std::min(n, it->second.order());
  }
  if (n < 0) n = 0;
  std::vector<std::vector<PowerSeries>> powers(names.size());
  auto power = [&](int v, int e) -> const PowerSeries& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(PowerSeries::Constant(1, n));
    while (static_cast<int>(cache.size()) <= e) {
      cache.push_back(cache.back() * vars[v]->Truncate(n));
    }
    return cache[e];
  };
  auto eval = [&](const MPoly& poly) {
    PowerSeries acc(n);
    for (const auto& [key, c] : poly.terms()) {
      PowerSeries t = PowerSeries::Constant(Rational(c), n);
      for (int v = 0; v < static_cast<int>(names.size()); ++v) {
        const int e = MPoly::Exponent(key, v);
        if (e > 0) t = t * power(v, e);
      }
      acc += t;
    }
    return acc;
  };
  const PowerSeries num = eval(r.numerator());
  const PowerSeries den = eval(r.denominator());
  if (den[0] == 0) throw SeriesError("substituted denominator is not a unit");
  return num / den;
}

ZPoly to_zpoly(const MPoly& p) {
  std::vector<Integer> c(std::max(p.degree_in(0), 0) + 1);
  for (const auto& [key, v] : p.terms()) c[MPoly::Exponent(key, 0)] = v;
  return ZPoly(std::move(c));
}

MPoly to_mpoly(const ZPoly& p) {
  MPoly out(1);
  for (int i = 0; i <= p.degree(); ++i) {
    out.AddTerm(out.MakeKey({i}), p.coeff(i));
  }
  return out;
}

ZPoly resultant(const std::vector<ZPoly>& a, const std::vector<ZPoly>& b) {
  const int m = static_cast<int>(a.size()) - 1;
  const int n = static_cast<int>(b.size()) - 1;
  if (m < 0 || n < 0) return ZPoly();
  const int size = m + n;
  if (size == 0) return ZPoly::Constant(1);
  std::vector<std::vector<MPoly>> syl(size, std::vector<MPoly>(size, MPoly(1)));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) syl[r][r + i] = to_mpoly(a[m - i]);
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) syl[n + r][r + i] = to_mpoly(b[n - i]);
  }
  return to_zpoly(determinant(std::move(syl)));
}

ZPoly discriminant_in_f(const PolyInF& p) {
  const int d = p.degree();
  if (d < 2) throw SeriesError("discriminant needs degree >= 2 in f");
  ZPoly res = resultant(p.coeffs(), p.DerivativeInF().coeffs());
  ZPoly disc = exact_divide(res, p.coeffs().back());
  if ((d * (d - 1) / 2) % 2 == 1) disc = -disc;
  return disc;
}

namespace {

int SignAt(const QPoly& p, const Rational& x) {
  return sgn(p.Evaluate(x));
}

int Variations(const std::vector<QPoly>& sturm, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const auto& s : sturm) {
    int sign = SignAt(s, x);
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++count;
    last = sign;
  }
  return count;
}

}  // namespace

RootInterval smallest_positive_root(const ZPoly& p, const Rational& tol) {
  if (p.is_zero()) throw SeriesError("zero polynomial has no isolated roots");
  const int val = p.valuation();
  QPoly q = to_rational(ZPoly(std::vector<Integer>(p.coeffs().begin() + val,
                                                   p.coeffs().end())));
  const QPoly g = gcd(q, q.Derivative());
  q = divmod(q, g).first;  // square-free part, same roots
  const ZPoly qz = primitive_integer(q);
  q = to_rational(qz);
  if (q.degree() < 1) throw SeriesError("no positive root");

  std::vector<QPoly> sturm{q, q.Derivative()};
  while (sturm.back().degree() > 0) {
    QPoly r = divmod(sturm[sturm.size() - 2], sturm.back()).second;
    if (r.is_zero()) break;
    sturm.push_back(-r);
  }

  Rational bound = 0;
  for (int i = 0; i < q.degree(); ++i) {
    Rational r = abs(q.coeff(i) / q.leading());
    if (r > bound) bound = r;
  }
  bound += 1;
  Rational lo = 0;
  Rational hi = bound;
  const int v_lo = Variations(sturm, lo);
  if (v_lo - Variations(sturm, hi) == 0) throw SeriesError("no positive root");

  // A rational root k/lead must be pinned to a window narrower than 1/lead.
  const Rational lead_abs = abs(Rational(qz.leading()));
  const Rational exact_width = Rational(1) / (2 * lead_abs);
  while (hi - lo > tol || hi - lo > exact_width) {
    Rational mid = (lo + hi) / 2;
    if (Variations(sturm, lo) - Variations(sturm, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  RootInterval out{lo, hi, std::nullopt};
  // Candidates k/lead inside (lo, hi].
  Rational scaled_lo = lo * lead_abs;
  Integer k = scaled_lo.get_num() / scaled_lo.get_den();
  for (Integer kk = k; Rational(kk) <= hi * lead_abs; ++kk) {
    Rational cand = Rational(kk) / lead_abs;
    if (cand > lo && cand <= hi && q.Evaluate(cand) == 0) {
      out.lo = out.hi = cand;
      out.exact = cand;
      break;
    }
  }
  return out;
}

}  // namespace permgrid
