#include "quadrint/quadric.hpp"

#include <array>

#include "quadrint/error.hpp"

namespace quadrint {

QuadricForm::QuadricForm(Matrix symmetric, std::string label) : m_(std::move(symmetric)), label_(std::move(label)) {
  if (!m_.is_symmetric()) throw Error(ErrorKind::BadDimension, "quadric matrix must be square and symmetric");
}

QuadricForm QuadricForm::from_coefficients(const PrimeField& field, std::size_t n, std::span<const std::int64_t> coeffs,
                                           std::string label) {
  if (coeffs.size() != n * (n + 1) / 2) throw Error(ErrorKind::BadDimension, "wrong number of quadric coefficients");
  Matrix m(field, n, n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++k) {
      const Elem c = field.from_int(coeffs[k]);
      if (i == j) {
        m(i, i) = c;
      } else {
        m(i, j) = m(j, i) = field.mul(c, field.half());
      }
    }
  return QuadricForm(std::move(m), std::move(label));
}

QuadricForm QuadricForm::from_terms(const PrimeField& field, std::size_t n, std::initializer_list<Term> terms,
                                    std::string label) {
  std::vector<std::int64_t> coeffs(n * (n + 1) / 2, 0);
  auto index = [n](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i - 1) / 2 + (j - i);
  };
  for (const auto& t : terms) {
    if (t.i >= n || t.j >= n) throw Error(ErrorKind::BadDimension, "quadric term index out of range");
    coeffs[index(t.i, t.j)] += t.c;
  }
  return from_coefficients(field, n, coeffs, std::move(label));
}

std::vector<Elem> QuadricForm::coefficients() const {
  const PrimeField& f = field();
  std::vector<Elem> out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i; j < dim(); ++j) out.push_back(i == j ? m_(i, i) : f.add(m_(i, j), m_(i, j)));
  return out;
}

Elem QuadricForm::value(std::span<const Elem> x) const { return polar(x, x); }

Elem QuadricForm::polar(std::span<const Elem> x, std::span<const Elem> y) const {
  const Vec by = m_.apply(y);
  const PrimeField& f = field();
  Elem acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc = f.add(acc, f.mul(x[i], by[i]));
  return acc;
}

QuadricForm QuadricForm::congruent(const Matrix& g) const { return QuadricForm(g.transpose() * m_ * g, label_); }

QuadricForm QuadricForm::operator+(const QuadricForm& o) const { return QuadricForm(m_ + o.m_); }

QuadricForm QuadricForm::scaled(Elem s) const { return QuadricForm(m_.scaled(s), label_); }

bool QuadricForm::proportional(const QuadricForm& o) const {
  if (dim() != o.dim() || m_.is_zero() || o.m_.is_zero()) return false;
  std::vector<Vec> rows{coefficients(), o.coefficients()};
  return quadrint::rank(Matrix::from_rows(field(), rows)) == 1;
}

Matrix restrict(const QuadricForm& q, const std::vector<Vec>& spanning) {
  if (spanning.empty()) throw Error(ErrorKind::BadDimension, "empty spanning set");
  Matrix s = Matrix::from_columns(q.field(), spanning);
  if (s.rows() != q.dim()) throw Error(ErrorKind::BadDimension, "spanning vectors have the wrong length");
  if (quadrint::rank(s) != spanning.size()) throw Error(ErrorKind::BadDimension, "spanning vectors are dependent");
  return s.transpose() * q.matrix() * s;
}

BinaryForm restrict_to_line(const QuadricForm& q, const Vec& u, const Vec& w) {
  Matrix r = restrict(q, {u, w});
  const PrimeField& f = q.field();
  // q(s u + t w) = s^2 r00 + 2 s t r01 + t^2 r11, with lambda = s, mu = t.
  return BinaryForm(f, {r(1, 1), f.add(r(0, 1), r(0, 1)), r(0, 0)});
}

Pencil::Pencil(QuadricForm a1, QuadricForm a2) : a1_(std::move(a1)), a2_(std::move(a2)) {
  if (a1_.dim() != a2_.dim() || !(a1_.field() == a2_.field()))
    throw Error(ErrorKind::DegenerateInput, "pencil generators differ in size or field");
  std::vector<Vec> rows{a1_.coefficients(), a2_.coefficients()};
  if (rank(Matrix::from_rows(a1_.field(), rows)) != 2)
    throw Error(ErrorKind::DegenerateInput, "pencil generators are dependent");
}

QuadricForm Pencil::member(Elem lambda, Elem mu) const {
  return QuadricForm(a1_.matrix().scaled(lambda) + a2_.matrix().scaled(mu));
}

PolyMatrix Pencil::symbolic() const {
  const std::size_t n = a1_.dim();
  PolyMatrix m(field(), 2, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const std::array<Elem, 2> coeffs{a1_.matrix()(r, c), a2_.matrix()(r, c)};
      m(r, c) = MultiPoly::linear(field(), coeffs);
    }
  return m;
}

BinaryForm to_binary_form(const MultiPoly& f) {
  if (f.nvars() != 2) throw Error(ErrorKind::BadDimension, "binary form needs exactly two variables");
  if (f.is_zero()) return BinaryForm(f.field());
  if (!f.is_homogeneous()) throw Error(ErrorKind::BadDimension, "binary form must be homogeneous");
  const int d = f.total_degree();
  std::vector<Elem> c(static_cast<std::size_t>(d + 1), 0);
  for (const auto& [m, v] : f.terms()) c[m.exps[0]] = v;
  return BinaryForm(f.field(), std::move(c));
}

BinaryForm Pencil::det_form() const { return to_binary_form(determinant(symbolic())); }

std::vector<BinaryForm> Pencil::submaximal_minors() const {
  std::vector<BinaryForm> out;
  for (const auto& m : minors(symbolic(), a1_.dim() - 1)) out.push_back(to_binary_form(m));
  return out;
}

Pencil Pencil::congruent(const Matrix& g) const { return Pencil(a1_.congruent(g), a2_.congruent(g)); }

Pencil Pencil::rebased(const Matrix& c) const {
  if (c.rows() != 2 || c.cols() != 2 || determinant(c) == 0)
    throw Error(ErrorKind::DegenerateInput, "pencil basis change must be invertible 2 x 2");
  return Pencil(QuadricForm(a1_.matrix().scaled(c(0, 0)) + a2_.matrix().scaled(c(1, 0))),
                QuadricForm(a1_.matrix().scaled(c(0, 1)) + a2_.matrix().scaled(c(1, 1))));
}

bool pencil_in_Z(const Pencil& pencil) { return pencil.det_form().is_zero(); }

Rank3Locus rank3_locus(const Pencil& pencil) {
  if (!pencil_in_Z(pencil)) throw Error(ErrorKind::NotInZ, "pencil has a smooth member");
  const auto forms = pencil.submaximal_minors();
  bool any = false;
  for (const auto& f : forms) any = any || !f.is_zero();
  if (!any) throw Error(ErrorKind::DegeneratePencil, "every member has corank >= 2");
  BinaryForm g = binary_gcd(forms);
  Rank3Locus out{g, distinct_root_count(g), {}};
  if (g.degree() > 0) out.rational_points = rational_roots(g);
  return out;
}

}  // namespace quadrint
