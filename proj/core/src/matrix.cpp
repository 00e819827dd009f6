#include "quadrint/matrix.hpp"

#include <algorithm>
#include <unordered_map>

#include "quadrint/error.hpp"

namespace quadrint {

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix::Matrix(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::BadDimension, "ragged matrix literal");
    for (auto v : r) a_.push_back(field_.from_int(v));
  }
}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(PrimeField field, const std::vector<Vec>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw Error(ErrorKind::BadDimension, "ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j] % field.modulus();
  }
  return m;
}

Matrix Matrix::from_columns(PrimeField field, const std::vector<Vec>& cols) {
  return from_rows(field, cols).transpose();
}

Vec Matrix::row(std::size_t r) const {
  return Vec(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_), a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::BadDimension, "matrix product shape mismatch");
  Matrix m(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) m(i, j) = field_.add(m(i, j), field_.mul(x, o(k, j)));
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::BadDimension, "matrix sum shape mismatch");
  Matrix m(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = field_.add(a_[i], o.a_[i]);
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(field_.neg(1)); }

Matrix Matrix::scaled(Elem s) const {
  Matrix m(*this);
  for (auto& x : m.a_) x = field_.mul(x, s);
  return m;
}

Vec Matrix::apply(std::span<const Elem> v) const {
  if (v.size() != cols_) throw Error(ErrorKind::BadDimension, "matrix-vector shape mismatch");
  Vec out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] = field_.add(out[r], field_.mul((*this)(r, c), v[c]));
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorKind::BadDimension, "block out of range");
  Matrix m(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(a_.begin(), a_.end(), [](Elem x) { return x == 0; });
}

bool Matrix::is_symmetric() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

Echelon rref(const Matrix& a) {
  const PrimeField& f = a.field();
  Matrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const Elem inv = f.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Elem factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {m.block(0, 0, row, m.cols()), std::move(pivots)};
}

RankKernel rank_kernel(const Matrix& a) {
  const PrimeField& f = a.field();
  Echelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> kernel;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = f.neg(e.reduced(r, free));
    kernel.push_back(std::move(v));
  }
  return {e.pivots.size(), std::move(kernel)};
}

std::size_t rank(const Matrix& a) {
  // Elimination without back-substitution; cheaper than rref for the hot rank tests.
  const PrimeField& f = a.field();
  Matrix m = a;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const Elem inv = f.inv(m(row, col));
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      const Elem factor = f.mul(m(r, col), inv);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    ++row;
  }
  return row;
}

Elem determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::BadDimension, "determinant of a non-square matrix");
  const PrimeField& f = a.field();
  Matrix m = a;
  Elem det = 1;
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m(sel, col) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(m(sel, c), m(col, c));
      det = f.neg(det);
    }
    det = f.mul(det, m(col, col));
    const Elem inv = f.inv(m(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Elem factor = f.mul(m(r, col), inv);
      for (std::size_t c = col; c < n; ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(col, c)));
    }
  }
  return det;
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::BadDimension, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(a.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw Error(ErrorKind::DegenerateInput, "singular matrix");
  return e.reduced.block(0, n, n, n);
}

std::vector<Vec> complete_basis(const PrimeField& field, const std::vector<Vec>& independent, std::size_t n) {
  std::vector<Vec> basis = independent;
  if (!basis.empty() && rank(Matrix::from_rows(field, basis)) != basis.size())
    throw Error(ErrorKind::BadDimension, "vectors to extend are dependent");
  for (std::size_t i = 0; i < n && basis.size() < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    basis.push_back(e);
    if (rank(Matrix::from_rows(field, basis)) != basis.size()) basis.pop_back();
  }
  return basis;
}

Vec normalize_projective(const PrimeField& field, Vec v) {
  auto it = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
  if (it == v.end()) throw Error(ErrorKind::DegenerateInput, "zero vector has no projective class");
  const Elem inv = field.inv(*it);
  for (auto& x : v) x = field.mul(x, inv);
  return v;
}

PolyMatrix::PolyMatrix(PrimeField field, std::size_t nvars, std::size_t rows, std::size_t cols)
    : field_(field), nvars_(nvars), rows_(rows), cols_(cols), a_(rows * cols, MultiPoly(field, nvars)) {}

Matrix PolyMatrix::eval(std::span<const Elem> point) const {
  Matrix m(field_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).eval(point);
  return m;
}

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Laplace expansion along the chosen rows in order, memoised on the set of
// columns still available; rows consumed so far are implied by its size.
class MinorExpander {
 public:
  MinorExpander(const PolyMatrix& a, std::vector<std::size_t> rows) : a_(a), rows_(std::move(rows)) {}

  const MultiPoly& det(std::uint32_t colmask) {
    if (auto it = memo_.find(colmask); it != memo_.end()) return it->second;
    const std::size_t k = static_cast<std::size_t>(__builtin_popcount(colmask));
    const std::size_t depth = rows_.size() - k;
    MultiPoly acc(a_.field(), a_.nvars());
    if (k == 0) {
      acc = MultiPoly::constant(a_.field(), a_.nvars(), 1);
    } else {
      const std::size_t r = rows_[depth];
      int sign = 0;
      for (std::size_t c = 0; c < a_.cols(); ++c) {
        if ((colmask & (1U << c)) == 0) continue;
        const MultiPoly& entry = a_(r, c);
        if (!entry.is_zero()) {
          const MultiPoly& sub = det(colmask & ~(1U << c));
          if (!sub.is_zero()) {
            MultiPoly term = entry * sub;
            acc += (sign % 2 == 0) ? term : term.scaled(a_.field().neg(1));
          }
        }
        ++sign;
      }
    }
    return memo_.emplace(colmask, std::move(acc)).first->second;
  }

 private:
  const PolyMatrix& a_;
  std::vector<std::size_t> rows_;
  std::unordered_map<std::uint32_t, MultiPoly> memo_;
};

}  // namespace

std::vector<MultiPoly> minors(const PolyMatrix& a, std::size_t k) {
  if (k == 0 || k > std::min(a.rows(), a.cols()) || a.cols() > 31)
    throw Error(ErrorKind::BadDimension, "minor size out of range");
  std::vector<MultiPoly> out;
  const auto col_sets = subsets(a.cols(), k);
  for (const auto& rs : subsets(a.rows(), k)) {
    MinorExpander ex(a, rs);
    for (const auto& cs : col_sets) {
      std::uint32_t mask = 0;
      for (auto c : cs) mask |= 1U << c;
      out.push_back(ex.det(mask));
    }
  }
  return out;
}

MultiPoly determinant(const PolyMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::BadDimension, "determinant of a non-square matrix");
  return minors(a, a.rows()).front();
}

}  // namespace quadrint
