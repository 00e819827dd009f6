#include "quadrint/singularity.hpp"

#include <map>
#include <optional>

#include "quadrint/error.hpp"
#include "quadrint/rng.hpp"

namespace quadrint {

TransversalSlice standard_a1_slice(const PrimeField& field) {
  auto base = QuadricForm::from_terms(field, 5, {{0, 0, 1}, {1, 1, -1}, {2, 2, -1}}, "x0^2-x1^2-x2^2");
  auto d1 = QuadricForm::from_terms(field, 5, {{3, 3, 1}}).matrix();
  auto d2 = QuadricForm::from_terms(field, 5, {{3, 4, 1}}).matrix();
  auto d3 = QuadricForm::from_terms(field, 5, {{4, 4, 1}}).matrix();
  return {base, {d1, d2, d3}};
}

bool is_transversal(const TransversalSlice& slice) {
  const PrimeField& f = slice.base.field();
  const auto ker = slice.base.vertex();
  if (ker.size() != 2) return false;
  std::vector<Vec> images;
  for (const auto& d : slice.directions) {
    Matrix r = restrict(QuadricForm(d), ker);
    images.push_back({r(0, 0), r(0, 1), r(1, 1)});
  }
  return rank(Matrix::from_rows(f, images)) == 3;
}

namespace {

Matrix random_symmetric(const PrimeField& f, Rng& rng) {
  Matrix m(f, 5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i; j < 5; ++j) m(i, j) = m(j, i) = rng.element(f);
  return m;
}

Matrix random_invertible(const PrimeField& f, Rng& rng) {
  for (;;) {
    Matrix g(f, 5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) g(i, j) = rng.element(f);
    if (determinant(g) != 0) return g;
  }
}

}  // namespace

TransversalSlice random_a1_slice(const PrimeField& field, Rng& rng, int max_attempts) {
  Matrix diag(field, 5, 5);
  for (std::size_t i = 0; i < 3; ++i) diag(i, i) = rng.nonzero(field);
  QuadricForm base = QuadricForm(diag).congruent(random_invertible(field, rng));
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    TransversalSlice slice{base, {random_symmetric(field, rng), random_symmetric(field, rng), random_symmetric(field, rng)}};
    if (is_transversal(slice)) return slice;
  }
  throw Error(ErrorKind::SliceNotTransversal, "no transversal slice within the retry cap");
}

A1Result a1_transversal_check(const TransversalSlice& slice) {
  const PrimeField& f = slice.base.field();
  if (slice.base.dim() != 5 || slice.base.rank() != 3)
    throw Error(ErrorKind::NotApplicable, "base quadric must have rank exactly 3");
  PolyMatrix m(f, 3, 5, 5);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 5; ++c) {
      MultiPoly e = MultiPoly::constant(f, 3, slice.base.matrix()(r, c));
      for (std::size_t k = 0; k < 3; ++k) e += MultiPoly::variable(f, 3, k).scaled(slice.directions[k](r, c));
      m(r, c) = std::move(e);
    }
  const MultiPoly det = determinant(m);
  if (!det.homogeneous_part(0).is_zero() || !det.homogeneous_part(1).is_zero())
    throw Error(ErrorKind::SliceNotTransversal, "determinant has nonzero order <= 1 part");
  const MultiPoly quad = det.homogeneous_part(2);
  Matrix gram(f, 3, 3);
  for (const auto& [mono, c] : quad.terms()) {
    std::vector<std::size_t> vars;
    for (std::size_t k = 0; k < 3; ++k)
      for (int e = 0; e < mono.exps[k]; ++e) vars.push_back(k);
    if (vars[0] == vars[1]) {
      gram(vars[0], vars[0]) = c;
    } else {
      gram(vars[0], vars[1]) = gram(vars[1], vars[0]) = f.mul(c, f.half());
    }
  }
  const std::size_t r = rank(gram);
  return {gram, r, r == 3};
}

std::size_t local_colength(const std::vector<MultiPoly>& generators, int max_order) {
  if (generators.empty()) throw Error(ErrorKind::DegenerateInput, "no generators");
  const PrimeField& f = generators.front().field();
  const std::size_t n = generators.front().nvars();
  std::optional<std::size_t> previous;
  for (int order = 1; order <= max_order; ++order) {
    // Basis of C[t]/m^order: monomials of degree < order.
    std::vector<Monomial> basis;
    for (int d = 0; d < order; ++d)
      for (const auto& m : monomials_of_degree(n, d)) basis.push_back(m);
    std::map<Monomial, std::size_t, GrlexLess> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    std::vector<Vec> rows;
    for (const auto& g : generators)
      for (const auto& m : basis) {
        Vec row(basis.size(), 0);
        bool any = false;
        for (const auto& [gm, c] : g.terms()) {
          auto it = index.find(gm * m);
          if (it == index.end()) continue;
          row[it->second] = f.add(row[it->second], c);
          any = true;
        }
        if (any) rows.push_back(std::move(row));
      }
    const std::size_t r = rows.empty() ? 0 : rank(Matrix::from_rows(f, rows));
    const std::size_t colength = basis.size() - r;
    if (previous && *previous == colength) return colength;
    previous = colength;
  }
  throw Error(ErrorKind::InconclusiveRange, "origin is not an isolated point of the ideal");
}

MiniversalResult miniversal_length2_check(const PrimeField& field) {
  // Gram matrix of x0^2 + t1 x0 x1 + t2 x1^2 + x2^2 + x3^2 + x4^2 over the (t1, t2)-plane.
  PolyMatrix family(field, 2, 5, 5);
  const MultiPoly one = MultiPoly::constant(field, 2, 1);
  const MultiPoly t1 = MultiPoly::variable(field, 2, 0);
  const MultiPoly t2 = MultiPoly::variable(field, 2, 1);
  family(0, 0) = one;
  family(0, 1) = family(1, 0) = t1.scaled(field.half());
  family(1, 1) = t2;
  for (std::size_t i = 2; i < 5; ++i) family(i, i) = one;

  // Rank <= 4: det of the family. Vertex on H = {x0 = 0}: det of the restriction to H.
  const MultiPoly singular = determinant(family);
  PolyMatrix on_h(field, 2, 4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) on_h(r, c) = family(r + 1, c + 1);
  const MultiPoly vertex_on_h = determinant(on_h);

  const std::size_t colength = local_colength({singular, vertex_on_h});
  return {colength, colength == 2};
}

}  // namespace quadrint
