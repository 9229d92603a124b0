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

#include <algorithm>
#include <cctype>
#include <sstream>

namespace permgrid {
namespace {

template <typename Coeff>
std::string TermString(const Coeff& c, int degree, std::string_view var,
                       bool first) {
  std::string out;
  Coeff mag = c < 0 ? Coeff(-c) : c;
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += (c < 0) ? " - " : " + ";
  }
  const bool unit = (mag == 1);
  if (!unit || degree == 0) out += mag.get_str();
  if (degree > 0) {
    if (!unit) out += "*";
    out += var;
    if (degree > 1) out += "^" + std::to_string(degree);
  }
  return out;
}

}  // namespace

template <typename Coeff>
std::string UPoly<Coeff>::ToString(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    out += TermString(c_[i], static_cast<int>(i), var, first);
    first = false;
  }
  return out;
}

template class UPoly<Integer>;
template class UPoly<Rational>;

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<Rational> quo(a.degree() - db + 1);
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Rational q = rem[i] / b.leading();
    quo[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
  }
  rem.resize(db);
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational lead = a.leading();
  std::vector<Rational> c = a.coeffs();
  for (auto& x : c) x /= lead;
  return QPoly(std::move(c));
}

ZPoly exact_divide(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return ZPoly();
  const int db = b.degree();
  if (a.degree() < db) throw std::domain_error("inexact polynomial division");
  std::vector<Integer> rem = a.coeffs();
  std::vector<Integer> quo(a.degree() - db + 1);
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), b.leading().get_mpz_t())) {
      throw std::domain_error("inexact polynomial division");
    }
    Integer q = rem[i] / b.leading();
    quo[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
  }
  for (int i = 0; i < db; ++i) {
    if (rem[i] != 0) throw std::domain_error("inexact polynomial division");
  }
  return ZPoly(std::move(quo));
}

QPoly to_rational(const ZPoly& p) {
  std::vector<Rational> c;
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return QPoly(std::move(c));
}

ZPoly primitive_integer(const QPoly& p) {
  if (p.is_zero()) return ZPoly();
  Integer den = 1;
  for (const auto& x : p.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<Integer> c;
  Integer g = 0;
  for (const auto& x : p.coeffs()) {
    Integer v = x.get_num() * (den / x.get_den());
    c.push_back(v);
    g = gcd(g, v);
  }
  if (p.leading() < 0) g = -g;
  for (auto& x : c) x /= g;
  return ZPoly(std::move(c));
}

// ---------------------------------------------------------------- MPoly

MPoly MPoly::Constant(int nvars, const Integer& c) {
  MPoly p(nvars);
  p.AddTerm(0, c);
  return p;
}

MPoly MPoly::Variable(int nvars, int var) {
  if (var < 0 || var >= nvars) throw std::out_of_range("MPoly::Variable");
  MPoly p(nvars);
  p.AddTerm(Key{1} << Shift(var), 1);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Integer MPoly::constant_term() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? Integer(0) : it->second;
}

MPoly::Key MPoly::MakeKey(const std::vector<int>& exps) const {
  Key k = 0;
  for (int v = 0; v < static_cast<int>(exps.size()); ++v) {
    if (exps[v] < 0 || exps[v] > kMaxExponent) {
      throw std::overflow_error("MPoly exponent out of range");
    }
    k |= Key(exps[v]) << Shift(v);
  }
  return k;
}

void MPoly::AddTerm(Key k, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, Exponent(k, var));
  return d;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) {
    int t = 0;
    for (int v = 0; v < nvars_; ++v) t += Exponent(k, v);
    d = std::max(d, t);
  }
  return d;
}

MPoly MPoly::coeff_in(int var, int k) const {
  MPoly out(nvars_);
  const Key mask = Key{0xff} << Shift(var);
  for (const auto& [key, c] : terms_) {
    if (Exponent(key, var) == k) out.terms_.emplace(key & ~mask, c);
  }
  return out;
}

Integer MPoly::content() const {
  Integer g = 0;
  for (const auto& [k, c] : terms_) g = gcd(g, c);
  return g;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [k, c] : o.terms_) AddTerm(k, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [k, c] : o.terms_) AddTerm(k, -c);
  return *this;
}

MPoly operator-(MPoly a) {
  for (auto& [k, c] : a.terms_) c = -c;
  return a;
}

namespace {

bool KeyDivides(MPoly::Key a, MPoly::Key b, int nvars) {
  for (int v = 0; v < nvars; ++v) {
    if (MPoly::Exponent(a, v) > MPoly::Exponent(b, v)) return false;
  }
  return true;
}

void CheckProductKey(MPoly::Key a, MPoly::Key b, int nvars) {
  for (int v = 0; v < nvars; ++v) {
    if (MPoly::Exponent(a, v) + MPoly::Exponent(b, v) > MPoly::kMaxExponent) {
      throw std::overflow_error("MPoly exponent overflow");
    }
  }
}

}  // namespace

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out(std::max(a.nvars_, b.nvars_));
  Integer t;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      CheckProductKey(ka, kb, out.nvars_);
      t = ca * cb;
      out.AddTerm(ka + kb, t);
    }
  }
  return out;
}

MPoly operator*(const Integer& s, const MPoly& a) {
  MPoly out(a.nvars_);
  if (s == 0) return out;
  for (const auto& [k, c] : a.terms_) out.terms_.emplace(k, s * c);
  return out;
}

MPoly MPoly::DivideScalar(const Integer& s) const {
  MPoly out(nvars_);
  for (const auto& [k, c] : terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), s.get_mpz_t())) {
      throw std::domain_error("inexact scalar division");
    }
    out.terms_.emplace(k, c / s);
  }
  return out;
}

MPoly MPoly::Substitute(const std::vector<MPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_) {
    throw std::invalid_argument("MPoly::Substitute: wrong image count");
  }
  const int out_vars = images.empty() ? 0 : images[0].nvars();
  MPoly out(out_vars);
  for (const auto& [k, c] : terms_) {
    MPoly term = Constant(out_vars, c);
    for (int v = 0; v < nvars_; ++v) {
      for (int e = Exponent(k, v); e > 0; --e) term = term * images[v];
    }
    out += term;
  }
  return out;
}

std::string MPoly::ToString(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  // Graded order: constant first, then by total degree, then lex descending.
  std::vector<std::pair<Key, Integer>> items(terms_.begin(), terms_.end());
  auto tdeg = [&](Key k) {
    int t = 0;
    for (int v = 0; v < nvars_; ++v) t += Exponent(k, v);
    return t;
  };
  std::stable_sort(items.begin(), items.end(), [&](const auto& x, const auto& y) {
    int dx = tdeg(x.first), dy = tdeg(y.first);
    if (dx != dy) return dx < dy;
    return x.first > y.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [k, c] : items) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int v = 0; v < nvars_; ++v) {
      int e = Exponent(k, v);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& names)
      : s_(text), names_(names) {}

  MPoly ParseAll() {
    MPoly p = Expr();
    Skip();
    if (pos_ != s_.size()) Fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error (" + what + ") in \"" +
                                std::string(s_) + "\"");
  }
  void Skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool Eat(char c) {
    Skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  int nvars() const { return static_cast<int>(names_.size()); }

  MPoly Expr() {
    MPoly acc(nvars());
    bool negate = false;
    if (Eat('-')) {
      negate = true;
    } else {
      Eat('+');
    }
    MPoly t = Term();
    acc = negate ? -t : t;
    while (true) {
      if (Eat('+')) {
        acc += Term();
      } else if (Eat('-')) {
        acc -= Term();
      } else {
        break;
      }
    }
    return acc;
  }

  MPoly Term() {
    MPoly acc = Power();
    while (Eat('*')) acc = acc * Power();
    return acc;
  }

  MPoly Power() {
    MPoly base = Atom();
    if (Eat('^')) {
      Skip();
      int e = Number();
      MPoly out = MPoly::Constant(nvars(), 1);
      for (int i = 0; i < e; ++i) out = out * base;
      return out;
    }
    return base;
  }

  int Number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_) Fail("expected number");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  MPoly Atom() {
    Skip();
    if (Eat('(')) {
      MPoly p = Expr();
      if (!Eat(')')) Fail("expected )");
      return p;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      return MPoly::Constant(nvars(),
                             Integer(std::string(s_.substr(start, pos_ - start))));
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_) Fail("unexpected character");
    std::string name(s_.substr(start, pos_ - start));
    for (int v = 0; v < nvars(); ++v) {
      if (names_[v] == name) return MPoly::Variable(nvars(), v);
    }
    Fail("unknown variable " + name);
  }

  std::string_view s_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly MPoly::Parse(std::string_view text, const std::vector<std::string>& names) {
  return PolyParser(text, names).ParseAll();
}

MPoly exact_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  const int nv = std::max(a.nvars(), b.nvars());
  MPoly quotient(nv);
  MPoly rem = a;
  const auto& [lead_key, lead_coeff] = *b.terms().rbegin();
  while (!rem.is_zero()) {
    const auto& [rk, rc] = *rem.terms().rbegin();
    if (!KeyDivides(lead_key, rk, nv) ||
        !mpz_divisible_p(rc.get_mpz_t(), lead_coeff.get_mpz_t())) {
      throw std::domain_error("inexact multivariate division");
    }
    MPoly t(nv);
    t.AddTerm(rk - lead_key, rc / lead_coeff);
    quotient += t;
    rem -= t * b;
  }
  return quotient;
}

namespace {

int MainVariable(const MPoly& a, const MPoly& b) {
  for (int v = std::max(a.nvars(), b.nvars()) - 1; v >= 0; --v) {
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  }
  return -1;
}

MPoly PositiveLead(MPoly p) {
  if (!p.is_zero() && p.terms().rbegin()->second < 0) return -p;
  return p;
}

MPoly ContentIn(const MPoly& p, int var);

// Multiplies p by var^e.
MPoly ShiftVar(const MPoly& p, int var, int e) {
  MPoly out(p.nvars());
  std::vector<int> exps(p.nvars(), 0);
  exps[var] = e;
  MPoly mono(p.nvars());
  mono.AddTerm(mono.MakeKey(exps), 1);
  return p * mono;
}

MPoly PseudoRemainder(MPoly a, const MPoly& b, int var) {
  const int db = b.degree_in(var);
  const MPoly lb = b.coeff_in(var, db);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const int da = a.degree_in(var);
    MPoly la = a.coeff_in(var, da);
    a = lb * a - ShiftVar(la * b, var, da - db);
  }
  return a;
}

MPoly PrimitivePartIn(const MPoly& p, int var) {
  if (p.is_zero()) return p;
  return exact_divide(p, ContentIn(p, var));
}

MPoly ContentIn(const MPoly& p, int var) {
  MPoly g(p.nvars());
  for (int k = p.degree_in(var); k >= 0; --k) {
    MPoly c = p.coeff_in(var, k);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant() && g.constant_term() == 1) break;
  }
  return g;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return PositiveLead(b);
  if (b.is_zero()) return PositiveLead(a);
  const int nv = std::max(a.nvars(), b.nvars());
  const int var = MainVariable(a, b);
  if (var < 0) {
    return MPoly::Constant(nv, gcd(a.content(), b.content()));
  }
  if (a.degree_in(var) <= 0) return gcd(a, ContentIn(b, var));
  if (b.degree_in(var) <= 0) return gcd(ContentIn(a, var), b);

  const MPoly ca = ContentIn(a, var);
  const MPoly cb = ContentIn(b, var);
  MPoly p = exact_divide(a, ca);
  MPoly q = exact_divide(b, cb);
  const MPoly content_gcd = gcd(ca, cb);
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
  while (!q.is_zero()) {
    MPoly r = PseudoRemainder(p, q, var);
    p = std::move(q);
    q = PrimitivePartIn(r, var);
    if (!q.is_zero() && q.degree_in(var) == 0) {
      p = MPoly::Constant(nv, 1);
      break;
    }
  }
  return PositiveLead(content_gcd * PrimitivePartIn(p, var));
}

MPoly determinant(std::vector<std::vector<MPoly>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return MPoly::Constant(0, 1);
  const int nv = m[0][0].nvars();
  bool negate = false;
  MPoly prev = MPoly::Constant(nv, 1);
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (!m[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return MPoly(nv);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        MPoly t = m[k][k] * m[i][j];
        if (!m[i][k].is_zero() && !m[k][j].is_zero()) t -= m[i][k] * m[k][j];
        m[i][j] = (prev.is_constant() && prev.constant_term() == 1)
                      ? std::move(t)
                      : exact_divide(t, prev);
      }
    }
    prev = m[k][k];
  }
  MPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

// ------------------------------------------------------ RationalFunction

RationalFunction::RationalFunction(MPoly numerator, MPoly denominator,
                                   std::vector<std::string> names)
    : num_(std::move(numerator)),
      den_(std::move(denominator)),
      names_(std::move(names)) {
  Normalize();
}

void RationalFunction::Normalize() {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (num_.is_zero()) {
    den_ = MPoly::Constant(den_.nvars(), 1);
    return;
  }
  MPoly g = gcd(num_, den_);
  if (!(g.is_constant() && g.constant_term() == 1)) {
    num_ = exact_divide(num_, g);
    den_ = exact_divide(den_, g);
  }
  Integer c = gcd(num_.content(), den_.content());
  Integer d0 = den_.constant_term();
  if (d0 == 0) {
    throw std::domain_error("rational function denominator vanishes at 0");
  }
  if (d0 < 0) c = -c;
  if (c != 1) {
    num_ = num_.DivideScalar(c);
    den_ = den_.DivideScalar(c);
  }
}

RationalFunction RationalFunction::Parse(std::string_view text,
                                         std::vector<std::string> names) {
  // Split at the top-level '/'.
  int depth = 0;
  std::size_t slash = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '/' && depth == 0) {
      if (slash != std::string_view::npos) {
        throw std::invalid_argument("more than one top-level '/'");
      }
      slash = i;
    }
  }
  if (slash == std::string_view::npos) {
    MPoly num = MPoly::Parse(text, names);
    int nv = static_cast<int>(names.size());
    return RationalFunction(num, MPoly::Constant(nv, 1), std::move(names));
  }
  MPoly num = MPoly::Parse(text.substr(0, slash), names);
  MPoly den = MPoly::Parse(text.substr(slash + 1), names);
  return RationalFunction(std::move(num), std::move(den), std::move(names));
}

RationalFunction RationalFunction::Specialize(const std::string& name) const {
  std::vector<MPoly> images(num_.nvars(), MPoly::Variable(1, 0));
  return RationalFunction(num_.Substitute(images), den_.Substitute(images),
                          {name});
}

std::string RationalFunction::ToString() const {
  std::string n = num_.ToString(names_);
  std::string d = den_.ToString(names_);
  if (den_.is_constant() && den_.constant_term() == 1) return n;
  return "(" + n + ") / (" + d + ")";
}

}  // namespace permgrid
