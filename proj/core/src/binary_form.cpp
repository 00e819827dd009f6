#include "quadrint/binary_form.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "quadrint/error.hpp"
#include "quadrint/rng.hpp"

namespace quadrint {

BinaryForm::BinaryForm(PrimeField field, std::vector<Elem> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= field_.modulus();
  if (std::all_of(c_.begin(), c_.end(), [](Elem c) { return c == 0; })) c_.clear();
}

BinaryForm BinaryForm::monomial(PrimeField field, int lambda_exp, int mu_exp, Elem c) {
  std::vector<Elem> v(static_cast<std::size_t>(lambda_exp + mu_exp + 1), 0);
  v[static_cast<std::size_t>(lambda_exp)] = c;
  return BinaryForm(field, std::move(v));
}

BinaryForm BinaryForm::linear(PrimeField field, Elem a, Elem b) { return BinaryForm(field, {b, a}); }

BinaryForm BinaryForm::constant(PrimeField field, Elem c) { return BinaryForm(field, {c}); }

BinaryForm BinaryForm::homogenize(const UniPoly& f, int degree) {
  if (f.is_zero()) return BinaryForm(f.field());
  if (f.degree() > degree) throw Error(ErrorKind::BadDimension, "homogenisation degree below polynomial degree");
  std::vector<Elem> v(static_cast<std::size_t>(degree + 1), 0);
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) v[k] = f.coeffs()[k];
  return BinaryForm(f.field(), std::move(v));
}

int BinaryForm::degree() const {
  if (c_.empty()) throw Error(ErrorKind::DegenerateInput, "the zero form has no degree");
  return static_cast<int>(c_.size()) - 1;
}

Elem BinaryForm::coeff(int lambda_exp) const noexcept {
  if (lambda_exp < 0 || static_cast<std::size_t>(lambda_exp) >= c_.size()) return 0;
  return c_[static_cast<std::size_t>(lambda_exp)];
}

Elem BinaryForm::eval(Elem lambda, Elem mu) const noexcept {
  Elem acc = 0;
  Elem mu_pow = 1;
  // Horner in lambda with mu powers accumulated from the top coefficient down.
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = field_.add(field_.mul(acc, lambda), field_.mul(*it, mu_pow));
    mu_pow = field_.mul(mu_pow, mu);
  }
  return acc;
}

UniPoly BinaryForm::dehomogenize() const { return UniPoly(field_, c_); }

int BinaryForm::mu_multiplicity() const { return degree() - dehomogenize().degree(); }

BinaryForm BinaryForm::d_lambda() const {
  if (c_.size() <= 1) return BinaryForm(field_);
  std::vector<Elem> v(c_.size() - 1, 0);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = field_.mul(c_[k], static_cast<Elem>(k) % field_.modulus());
  return BinaryForm(field_, std::move(v));
}

BinaryForm BinaryForm::d_mu() const {
  if (c_.size() <= 1) return BinaryForm(field_);
  const std::size_t d = c_.size() - 1;
  std::vector<Elem> v(d, 0);
  for (std::size_t k = 0; k < d; ++k) v[k] = field_.mul(c_[k], static_cast<Elem>(d - k) % field_.modulus());
  return BinaryForm(field_, std::move(v));
}

BinaryForm BinaryForm::monic() const {
  if (c_.empty()) return *this;
  auto top = std::find_if(c_.rbegin(), c_.rend(), [](Elem c) { return c != 0; });
  return scaled(field_.inv(*top));
}

BinaryForm BinaryForm::scaled(Elem s) const {
  if (c_.empty()) return *this;
  std::vector<Elem> v(c_);
  for (auto& c : v) c = field_.mul(c, s);
  return BinaryForm(field_, std::move(v));
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (c_.size() != o.c_.size()) throw Error(ErrorKind::BadDimension, "adding binary forms of different degrees");
  std::vector<Elem> v(c_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = field_.add(c_[k], o.c_[k]);
  return BinaryForm(field_, std::move(v));
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const { return *this + o.scaled(field_.neg(1)); }

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  if (is_zero() || o.is_zero()) return BinaryForm(field_);
  std::vector<Elem> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = field_.add(v[i + j], field_.mul(c_[i], o.c_[j]));
  }
  return BinaryForm(field_, std::move(v));
}

std::string BinaryForm::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  const int d = static_cast<int>(c_.size()) - 1;
  bool first = true;
  for (int k = d; k >= 0; --k) {
    const Elem c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c;
    if (k > 0) os << "*l" << (k > 1 ? "^" + std::to_string(k) : "");
    if (d - k > 0) os << "*m" << (d - k > 1 ? "^" + std::to_string(d - k) : "");
  }
  return os.str();
}

BinaryForm exact_divide(const BinaryForm& f, const BinaryForm& g) {
  if (g.is_zero()) throw Error(ErrorKind::DegenerateInput, "division by the zero form");
  if (f.is_zero()) return f;
  if (g.degree() > f.degree()) throw Error(ErrorKind::DegenerateInput, "divisor degree exceeds dividend degree");
  // Work in t = lambda/mu after stripping the mu-powers.
  const int fm = f.mu_multiplicity();
  const int gm = g.mu_multiplicity();
  if (gm > fm) throw Error(ErrorKind::DegenerateInput, "form does not divide");
  auto [q, r] = divmod(f.dehomogenize(), g.dehomogenize());
  if (!r.is_zero()) throw Error(ErrorKind::DegenerateInput, "form does not divide");
  return BinaryForm::homogenize(q, f.degree() - g.degree());
}

bool divides(const BinaryForm& g, const BinaryForm& f) {
  try {
    (void)exact_divide(f, g);
    return true;
  } catch (const Error&) {
    return false;
  }
}

BinaryForm binary_gcd(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::DegenerateInput, "gcd of two zero forms");
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  UniPoly u = gcd(f.dehomogenize(), g.dehomogenize());
  const int m = std::min(f.mu_multiplicity(), g.mu_multiplicity());
  return BinaryForm::homogenize(u, u.degree() + m);
}

BinaryForm binary_gcd(const std::vector<BinaryForm>& forms) {
  std::optional<BinaryForm> acc;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    acc = acc ? binary_gcd(*acc, f) : f.monic();
  }
  if (!acc) throw Error(ErrorKind::DegenerateInput, "gcd of zero forms");
  return *acc;
}

BinaryForm squarefree_part(const BinaryForm& f) {
  if (f.is_zero()) throw Error(ErrorKind::DegenerateInput, "squarefree part of the zero form");
  UniPoly u = f.dehomogenize();
  UniPoly r = u.degree() > 0 ? radical(u) : UniPoly::constant(f.field(), 1);
  const int extra = f.mu_multiplicity() > 0 ? 1 : 0;
  return BinaryForm::homogenize(r, r.degree() + extra).monic();
}

int distinct_root_count(const BinaryForm& f) { return squarefree_part(f).degree(); }

bool is_squarefree(const BinaryForm& f) { return distinct_root_count(f) == f.degree(); }

std::vector<ProjectiveRoot> rational_roots(const BinaryForm& f, RootMethod method) {
  if (f.is_zero()) throw Error(ErrorKind::DegenerateInput, "roots of the zero form");
  const PrimeField& field = f.field();
  const std::uint64_t p = field.modulus();
  if (method == RootMethod::Auto) method = p <= (1ULL << 20U) ? RootMethod::Enumerate : RootMethod::Splitting;

  UniPoly u = f.dehomogenize();
  std::vector<Elem> candidates;
  if (u.degree() > 0) {
    if (method == RootMethod::Enumerate) {
      for (Elem t = 0; t < p; ++t)
        if (u.eval(t) == 0) candidates.push_back(t);
    } else {
      Rng rng(0x5EEDULL);
      candidates = roots_by_splitting(u, rng);
    }
  }
  std::vector<ProjectiveRoot> out;
  for (Elem t : candidates) {
    int mult = 0;
    UniPoly rest = u;
    const UniPoly factor(field, {field.neg(t), 1});
    for (;;) {
      auto [q, r] = divmod(rest, factor);
      if (!r.is_zero()) break;
      ++mult;
      rest = q;
    }
    out.push_back({t, 1, mult});
  }
  if (const int inf = f.mu_multiplicity(); inf > 0) out.push_back({1, 0, inf});
  return out;
}

std::vector<int> factor_degree_profile(const BinaryForm& f) {
  if (f.is_zero()) throw Error(ErrorKind::DegenerateInput, "factor profile of the zero form");
  std::vector<int> degrees(static_cast<std::size_t>(f.mu_multiplicity()), 1);
  UniPoly rest = f.dehomogenize().monic();
  while (rest.degree() > 0) {
    UniPoly r = radical(rest);
    auto part = distinct_degree_profile(r);
    degrees.insert(degrees.end(), part.begin(), part.end());
    rest = divmod(rest, r).first;
  }
  std::sort(degrees.rbegin(), degrees.rend());
  return degrees;
}

}  // namespace quadrint
