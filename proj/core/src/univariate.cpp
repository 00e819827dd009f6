#include "quadrint/univariate.hpp"

#include <algorithm>

#include "quadrint/error.hpp"
#include "quadrint/rng.hpp"

namespace quadrint {

UniPoly::UniPoly(PrimeField field, std::vector<Elem> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= field_.modulus();
  trim();
}

UniPoly UniPoly::constant(PrimeField field, Elem c) { return UniPoly(field, {c}); }

UniPoly UniPoly::monomial(PrimeField field, std::size_t k, Elem c) {
  std::vector<Elem> v(k + 1, 0);
  v[k] = c;
  return UniPoly(field, std::move(v));
}

void UniPoly::trim() noexcept {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Elem UniPoly::eval(Elem t) const noexcept {
  Elem acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, t), *it);
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Elem> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(field_.mul(c_[k], field_.from_int(static_cast<std::int64_t>(k % field_.modulus()))));
  return UniPoly(field_, std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(lead()));
}

UniPoly UniPoly::scaled(Elem s) const {
  std::vector<Elem> v(c_);
  for (auto& c : v) c = field_.mul(c, s);
  return UniPoly(field_, std::move(v));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Elem> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = field_.add(coeff(k), o.coeff(k));
  return UniPoly(field_, std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Elem> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = field_.sub(coeff(k), o.coeff(k));
  return UniPoly(field_, std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly(field_);
  std::vector<Elem> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = field_.add(v[i + j], field_.mul(c_[i], o.c_[j]));
  }
  return UniPoly(field_, std::move(v));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DegenerateInput, "polynomial division by zero");
  const PrimeField& f = a.field();
  std::vector<Elem> rem(a.coeffs());
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(f), a};
  std::vector<Elem> quo(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const Elem inv_lead = f.inv(b.lead());
  for (int k = a.degree(); k >= db; --k) {
    const Elem c = f.mul(rem[static_cast<std::size_t>(k)], inv_lead);
    quo[static_cast<std::size_t>(k - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      auto idx = static_cast<std::size_t>(k - db + j);
      rem[idx] = f.sub(rem[idx], f.mul(c, b.coeffs()[static_cast<std::size_t>(j)]));
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(f, std::move(quo)), UniPoly(f, std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly powmod(const UniPoly& base, std::uint64_t exp, const UniPoly& m) {
  UniPoly result = divmod(UniPoly::constant(base.field(), 1), m).second;
  UniPoly b = divmod(base, m).second;
  while (exp != 0) {
    if (exp & 1U) result = divmod(result * b, m).second;
    exp >>= 1U;
    if (exp != 0) b = divmod(b * b, m).second;
  }
  return result;
}

UniPoly radical(const UniPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::DegenerateInput, "radical of the zero polynomial");
  const PrimeField& field = f.field();
  UniPoly fm = f.monic();
  if (fm.degree() <= 0) return UniPoly::constant(field, 1);
  UniPoly d = fm.derivative();
  if (d.is_zero()) {
    // f(t) = g(t^p) = g(t)^p since the Frobenius fixes GF(p).
    const auto p = static_cast<std::size_t>(field.modulus());
    std::vector<Elem> g;
    for (std::size_t k = 0; k < fm.coeffs().size(); k += p) g.push_back(fm.coeffs()[k]);
    return radical(UniPoly(field, std::move(g)));
  }
  UniPoly g = gcd(fm, d);
  if (g.degree() == 0) return fm;
  UniPoly w = divmod(fm, g).first;
  UniPoly r = radical(g);
  UniPoly common = gcd(w, r);
  return divmod(w * r, common).first.monic();
}

namespace {

void split_linear(const UniPoly& g, Rng& rng, std::vector<Elem>& out) {
  const PrimeField& field = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    // t + c  ->  root -c
    out.push_back(field.neg(field.div(g.coeffs()[0], g.coeffs()[1])));
    return;
  }
  const std::uint64_t half = (field.modulus() - 1) / 2;
  for (;;) {
    UniPoly shift(field, {rng.element(field), 1});
    UniPoly h = powmod(shift, half, g) - UniPoly::constant(field, 1);
    UniPoly d = gcd(g, h);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, rng, out);
      split_linear(divmod(g, d).first, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Elem> roots_by_splitting(const UniPoly& f, Rng& rng) {
  if (f.is_zero()) throw Error(ErrorKind::DegenerateInput, "roots of the zero polynomial");
  const PrimeField& field = f.field();
  std::vector<Elem> out;
  if (f.degree() <= 0) return out;
  UniPoly t = UniPoly::monomial(field, 1);
  UniPoly frob = powmod(t, field.modulus(), f) - t;
  UniPoly g = gcd(f, frob);
  split_linear(g, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> distinct_degree_profile(const UniPoly& squarefree) {
  const PrimeField& field = squarefree.field();
  std::vector<int> degrees;
  UniPoly rest = squarefree.monic();
  UniPoly t = UniPoly::monomial(field, 1);
  UniPoly h = divmod(t, rest.is_zero() ? t : rest).second;
  for (int k = 1; rest.degree() >= 2 * k; ++k) {
    h = powmod(h, field.modulus(), rest);
    UniPoly g = gcd(rest, h - t);
    if (g.degree() > 0) {
      for (int j = 0; j < g.degree() / k; ++j) degrees.push_back(k);
      rest = divmod(rest, g).first;
      h = divmod(h, rest).second;
    }
  }
  if (rest.degree() > 0) degrees.push_back(rest.degree());
  std::sort(degrees.rbegin(), degrees.rend());
  return degrees;
}

}  // namespace quadrint
