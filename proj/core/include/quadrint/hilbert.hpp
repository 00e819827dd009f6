#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quadrint/multipoly.hpp"

namespace quadrint {

/// dim of the degree-d part of k[x_0..x_{n-1}] / (generators).
std::int64_t hilbert_value(const std::vector<MultiPoly>& generators, std::size_t nvars, int d);

struct HilbertFit {
  int dimension;        // projective dimension, -1 for the empty scheme
  std::int64_t degree;  // leading coefficient times dimension!
  int stable_from;      // first sampled degree inside the polynomial tail
};

/// Smallest k whose k-th differences are constant on at least the last three
/// values; nullopt if no such k is visible in the data.
std::optional<HilbertFit> fit_hilbert(const std::vector<int>& degrees, const std::vector<std::int64_t>& values);

struct HilbertProfile {
  std::size_t nvars;
  std::vector<int> degrees;
  std::vector<std::int64_t> values;
  HilbertFit fit;
  bool extended;  // the range was extended once before the fit succeeded
};

/// Samples HF(d) for d in [dmin, dmax] and fits the eventual polynomial. When the
/// fit fails the range is extended once by four degrees; after that
/// InconclusiveRange is thrown with the raw values in the message.
HilbertProfile hilbert_profile(const std::vector<MultiPoly>& generators, std::size_t nvars, int dmin, int dmax);

}  // namespace quadrint
