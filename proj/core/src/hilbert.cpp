#include "quadrint/hilbert.hpp"

#include <map>

#include "quadrint/error.hpp"
#include "quadrint/matrix.hpp"

namespace quadrint {

namespace {

// Incremental row echelon over a prime below 2^32, where products fit in 64 bits.
class SmallPrimeEchelon {
 public:
  SmallPrimeEchelon(std::uint64_t p, std::size_t cols) : p_(p), pivot_row_(cols, -1) {}

  void add(std::vector<std::uint64_t> row) {
    const std::size_t n = row.size();
    for (std::size_t c = 0; c < n; ++c) {
      if (row[c] == 0) continue;
      const int pr = pivot_row_[c];
      if (pr < 0) {
        const std::uint64_t inv = inverse(row[c]);
        for (std::size_t k = c; k < n; ++k) row[k] = row[k] * inv % p_;
        pivot_row_[c] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        return;
      }
      const auto& piv = rows_[static_cast<std::size_t>(pr)];
      const std::uint64_t factor = p_ - row[c];
      for (std::size_t k = c; k < n; ++k)
        if (piv[k] != 0) row[k] = (row[k] + factor * piv[k]) % p_;
    }
  }

  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  std::uint64_t inverse(std::uint64_t a) const {
    std::uint64_t r = 1, e = p_ - 2;
    while (e) {
      if (e & 1U) r = r * a % p_;
      a = a * a % p_;
      e >>= 1U;
    }
    return r;
  }

  std::uint64_t p_;
  std::vector<int> pivot_row_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

}  // namespace

std::int64_t hilbert_value(const std::vector<MultiPoly>& generators, std::size_t nvars, int d) {
  const auto cols = monomials_of_degree(nvars, d);
  std::map<Monomial, std::size_t, GrlexLess> index;
  for (std::size_t k = 0; k < cols.size(); ++k) index[cols[k]] = k;
  const auto total = static_cast<std::int64_t>(cols.size());
  if (generators.empty()) return total;
  const PrimeField& f = generators.front().field();

  std::vector<std::vector<Elem>> rows;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw Error(ErrorKind::BadParameter, "Hilbert function needs homogeneous generators");
    const int shift = d - g.total_degree();
    if (shift < 0) continue;
    for (const auto& m : monomials_of_degree(nvars, shift)) {
      std::vector<Elem> row(cols.size(), 0);
      for (const auto& [mono, c] : g.terms()) row[index.at(mono * m)] = c;
      rows.push_back(std::move(row));
    }
  }
  std::size_t r = 0;
  if (f.modulus() < (1ULL << 32U)) {
    SmallPrimeEchelon e(f.modulus(), cols.size());
    for (auto& row : rows) {
      e.add(std::move(row));
      if (e.rank() == cols.size()) break;
    }
    r = e.rank();
  } else if (!rows.empty()) {
    r = rank(Matrix::from_rows(f, rows));
  }
  return total - static_cast<std::int64_t>(r);
}

std::optional<HilbertFit> fit_hilbert(const std::vector<int>& degrees, const std::vector<std::int64_t>& values) {
  std::vector<std::int64_t> diff = values;
  for (int k = 0; diff.size() >= 3; ++k) {
    const std::size_t n = diff.size();
    if (diff[n - 1] == diff[n - 2] && diff[n - 2] == diff[n - 3]) {
      std::size_t start = n - 3;
      while (start > 0 && diff[start - 1] == diff[n - 1]) --start;
      const int dim = diff[n - 1] == 0 ? -1 : k;
      // The k-th difference at index i involves values i..i+k.
      return HilbertFit{dim, diff[n - 1], degrees[start]};
    }
    std::vector<std::int64_t> next;
    for (std::size_t i = 0; i + 1 < n; ++i) next.push_back(diff[i + 1] - diff[i]);
    diff = std::move(next);
  }
  return std::nullopt;
}

HilbertProfile hilbert_profile(const std::vector<MultiPoly>& generators, std::size_t nvars, int dmin, int dmax) {
  if (dmin < 0 || dmax < dmin) throw Error(ErrorKind::BadParameter, "empty Hilbert degree range");
  HilbertProfile out{nvars, {}, {}, {}, false};
  auto sample = [&](int from, int to) {
    for (int d = from; d <= to; ++d) {
      out.degrees.push_back(d);
      out.values.push_back(hilbert_value(generators, nvars, d));
    }
  };
  sample(dmin, dmax);
  auto fit = fit_hilbert(out.degrees, out.values);
  if (!fit) {
    sample(dmax + 1, dmax + 4);
    out.extended = true;
    fit = fit_hilbert(out.degrees, out.values);
  }
  if (!fit) {
    std::string raw;
    for (std::size_t k = 0; k < out.values.size(); ++k)
      raw += (k ? ", " : "") + std::to_string(out.degrees[k]) + ":" + std::to_string(out.values[k]);
    throw Error(ErrorKind::InconclusiveRange, "Hilbert function not polynomial within range; values " + raw);
  }
  out.fit = *fit;
  return out;
}

}  // namespace quadrint
