#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace quadrint {

/// Class sum c_ij h1^i h2^j in Z[h1, h2] / (h1^(M+1), h2^(N+1)), the Chow ring
/// of P^M x P^N. Products are truncated to the index box.
template <int M, int N>
class ChowClass {
 public:
  static_assert(M >= 0 && N >= 0);

  ChowClass() = default;

  static ChowClass unit() { return monomial(0, 0); }
  static ChowClass monomial(int i, int j, std::int64_t c = 1) {
    ChowClass x;
    if (i <= M && j <= N) x.at(i, j) = c;
    return x;
  }
  /// a*h1 + b*h2, written (a, b).
  static ChowClass divisor(std::int64_t a, std::int64_t b) { return monomial(1, 0, a) + monomial(0, 1, b); }

  std::int64_t coeff(int i, int j) const { return (i <= M && j <= N && i >= 0 && j >= 0) ? c_[idx(i, j)] : 0; }

  ChowClass operator+(const ChowClass& o) const {
    ChowClass x;
    for (std::size_t k = 0; k < c_.size(); ++k) x.c_[k] = c_[k] + o.c_[k];
    return x;
  }
  ChowClass operator-(const ChowClass& o) const { return *this + o * static_cast<std::int64_t>(-1); }
  ChowClass operator*(std::int64_t s) const {
    ChowClass x;
    for (std::size_t k = 0; k < c_.size(); ++k) x.c_[k] = c_[k] * s;
    return x;
  }
  ChowClass operator*(const ChowClass& o) const {
    ChowClass x;
    for (int i = 0; i <= M; ++i)
      for (int j = 0; j <= N; ++j) {
        const std::int64_t a = coeff(i, j);
        if (a == 0) continue;
        for (int k = 0; i + k <= M; ++k)
          for (int l = 0; j + l <= N; ++l) x.at(i + k, j + l) += a * o.coeff(k, l);
      }
    return x;
  }
  ChowClass pow(int e) const {
    ChowClass x = unit();
    for (int k = 0; k < e; ++k) x = x * *this;
    return x;
  }
  bool operator==(const ChowClass&) const = default;

  /// Coefficient of the point class h1^M h2^N.
  std::int64_t degree() const { return coeff(M, N); }

  /// Nonzero terms as ((i, j), c), i ascending then j ascending.
  std::vector<std::pair<std::pair<int, int>, std::int64_t>> terms() const {
    std::vector<std::pair<std::pair<int, int>, std::int64_t>> out;
    for (int i = 0; i <= M; ++i)
      for (int j = 0; j <= N; ++j)
        if (coeff(i, j) != 0) out.push_back({{i, j}, coeff(i, j)});
    return out;
  }

 private:
  static constexpr std::size_t idx(int i, int j) { return static_cast<std::size_t>(i * (N + 1) + j); }
  std::int64_t& at(int i, int j) { return c_[idx(i, j)]; }

  std::array<std::int64_t, static_cast<std::size_t>((M + 1) * (N + 1))> c_{};
};

/// Chow ring of P^4 x P^5; h1 = h4 pulled back from P^4, h2 = h5 from P^5.
using Chow45 = ChowClass<4, 5>;

struct Bidegree {
  std::int64_t a;
  std::int64_t b;
};

/// Divisor classes on the incidence variety Y, represented by their bidegrees.
inline constexpr Bidegree kExceptionalOverP4{5, -1};
inline constexpr Bidegree kExceptionalOverP5{-2, 4};

/// [Y] for the complete intersection of five (1,1) divisors: (h4 + h5)^5.
Chow45 incidence_class();
/// (1,0)^3 [E5] (1,1)^5: degree of the branch hypersurface in P^4.
std::int64_t branch_degree(Bidegree e5 = kExceptionalOverP5);
/// (1,0)^2 [E4] (0,1) (1,1)^5: degree of the determinantal surface.
std::int64_t surface_degree(Bidegree e4 = kExceptionalOverP4);
/// (1,0)^2 [E4] [E5] (1,1)^5.
std::int64_t exceptional_pairing(Bidegree e4 = kExceptionalOverP4, Bidegree e5 = kExceptionalOverP5);
/// deg det(Q|_H) times deg of the quintic, halved for the length-2 contact.
std::int64_t vertex_divisor_degree(std::int64_t restricted_det_degree = 4, std::int64_t quintic_degree = 5,
                                   std::int64_t contact_length = 2);

struct IntersectionNumbers {
  std::int64_t deg_R;
  std::int64_t deg_S;
  std::int64_t mult_S_in_Y_x4;
  std::int64_t deg_DH;
};

IntersectionNumbers intersection_numbers();

}  // namespace quadrint
