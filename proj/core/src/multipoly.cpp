#include "quadrint/multipoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "quadrint/error.hpp"

namespace quadrint {

int Monomial::degree() const noexcept {
  int d = 0;
  for (auto e : exps) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const noexcept {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) m.exps[i] = static_cast<std::uint8_t>(exps[i] + o.exps[i]);
  return m;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const noexcept {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  return a.exps < b.exps;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t var, int left) {
    if (var + 1 == nvars) {
      cur.exps[var] = static_cast<std::uint8_t>(left);
      out.push_back(cur);
      cur.exps[var] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur.exps[var] = static_cast<std::uint8_t>(e);
      rec(var + 1, left - e);
    }
    cur.exps[var] = 0;
  };
  if (nvars == 0) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  rec(0, d);
  return out;
}

MultiPoly::MultiPoly(PrimeField field, std::size_t nvars) : field_(field), nvars_(nvars) {
  if (nvars > kMaxVariables) throw Error(ErrorKind::BadDimension, "too many variables");
}

MultiPoly MultiPoly::constant(PrimeField field, std::size_t nvars, Elem c) {
  MultiPoly p(field, nvars);
  p.add_term(Monomial{}, c % field.modulus());
  return p;
}

MultiPoly MultiPoly::variable(PrimeField field, std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw Error(ErrorKind::BadDimension, "variable index out of range");
  MultiPoly p(field, nvars);
  Monomial m;
  m.exps[i] = 1;
  p.add_term(m, 1);
  return p;
}

MultiPoly MultiPoly::linear(PrimeField field, std::span<const Elem> coeffs) {
  MultiPoly p(field, coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Monomial m;
    m.exps[i] = 1;
    p.add_term(m, coeffs[i] % field.modulus());
  }
  return p;
}

int MultiPoly::total_degree() const noexcept {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

bool MultiPoly::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
  MultiPoly out(field_, nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

Elem MultiPoly::coefficient(const Monomial& m) const noexcept {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void MultiPoly::add_term(const Monomial& m, Elem c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Elem MultiPoly::eval(std::span<const Elem> point) const {
  if (point.size() != nvars_) throw Error(ErrorKind::BadDimension, "evaluation point has wrong length");
  Elem acc = 0;
  for (const auto& [m, c] : terms_) {
    Elem t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m.exps[i] != 0) t = field_.mul(t, field_.pow(point[i] % field_.modulus(), m.exps[i]));
    acc = field_.add(acc, t);
  }
  return acc;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= nvars_) throw Error(ErrorKind::BadDimension, "variable index out of range");
  MultiPoly out(field_, nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.exps[var] == 0) continue;
    Monomial d = m;
    d.exps[var] = static_cast<std::uint8_t>(d.exps[var] - 1);
    out.add_term(d, field_.mul(c, static_cast<Elem>(m.exps[var]) % field_.modulus()));
  }
  return out;
}

MultiPoly MultiPoly::scaled(Elem s) const {
  MultiPoly out(field_, nvars_);
  s %= field_.modulus();
  if (s == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, field_.mul(c, s));
  return out;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (!(field_ == o.field_) || nvars_ != o.nvars_) throw Error(ErrorKind::BadDimension, "incompatible polynomials");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly out = *this;
  out += o;
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, field_.neg(c));
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly out(field_, nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, field_.mul(ca, cb));
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second;
    for (std::size_t i = 0; i < nvars_; ++i) {
      const int e = it->first.exps[i];
      if (e == 0) continue;
      os << "*x" << i;
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace quadrint
