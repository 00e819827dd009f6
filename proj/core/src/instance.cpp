#include "quadrint/instance.hpp"

#include <json.hpp>

#include "quadrint/error.hpp"
#include "quadrint/rng.hpp"

namespace quadrint {

Instance::Instance(PrimeField field, std::uint64_t seed, const Tensor& tensor, int reseeds)
    : field_(field), seed_(seed), reseeds_(reseeds), a_(tensor), det_(field, 6) {
  for (std::size_t l = 0; l < 5; ++l)
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        if (a_[l][i][j] >= field_.modulus()) throw Error(ErrorKind::BadParameter, "tensor entry outside [0, p)");
        if (a_[l][i][j] != a_[i][l][j])
          throw Error(ErrorKind::BadParameter, "tensor is not symmetric in (l, i) at l=" + std::to_string(l) +
                                                   " i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
  det_ = determinant(M_symbolic());
  if (det_.is_zero()) throw Error(ErrorKind::DegenerateInstance, "det M(x) vanishes identically");
}

Matrix Instance::M(std::span<const Elem> x) const {
  Matrix m(field_, 5, 5);
  for (std::size_t l = 0; l < 5; ++l)
    for (std::size_t i = 0; i < 5; ++i) {
      Elem acc = 0;
      for (std::size_t j = 0; j < 6; ++j) acc = field_.add(acc, field_.mul(a_[l][i][j], x[j]));
      m(l, i) = acc;
    }
  return m;
}

Matrix Instance::N(std::span<const Elem> y) const {
  Matrix n(field_, 6, 5);
  for (std::size_t j = 0; j < 6; ++j)
    for (std::size_t l = 0; l < 5; ++l) {
      Elem acc = 0;
      for (std::size_t i = 0; i < 5; ++i) acc = field_.add(acc, field_.mul(a_[l][i][j], y[i]));
      n(j, l) = acc;
    }
  return n;
}

PolyMatrix Instance::M_symbolic() const {
  PolyMatrix m(field_, 6, 5, 5);
  for (std::size_t l = 0; l < 5; ++l)
    for (std::size_t i = 0; i < 5; ++i) m(l, i) = MultiPoly::linear(field_, a_[l][i]);
  return m;
}

PolyMatrix Instance::N_symbolic() const {
  PolyMatrix n(field_, 5, 6, 5);
  for (std::size_t j = 0; j < 6; ++j)
    for (std::size_t l = 0; l < 5; ++l) {
      Vec c(5);
      for (std::size_t i = 0; i < 5; ++i) c[i] = a_[l][i][j];
      n(j, l) = MultiPoly::linear(field_, c);
    }
  return n;
}

std::string Instance::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = field_.modulus();
  j["seed"] = seed_;
  j["tensor"] = a_;
  return j.dump();
}

Instance Instance::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Config, std::string("instance file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("p") || !j.contains("seed") || !j.contains("tensor"))
    throw Error(ErrorKind::Config, "instance file needs keys p, seed, tensor");
  for (const auto& [key, value] : j.items())
    if (key != "p" && key != "seed" && key != "tensor") throw Error(ErrorKind::Config, "unknown instance key: " + key);
  if (!j["p"].is_number_unsigned() || !j["seed"].is_number_unsigned())
    throw Error(ErrorKind::Config, "p and seed must be non-negative integers");
  PrimeField field(j["p"].get<std::uint64_t>());
  const auto& t = j["tensor"];
  Tensor a{};
  auto shape_error = [] { return Error(ErrorKind::Config, "tensor must have shape 5 x 5 x 6"); };
  if (!t.is_array() || t.size() != 5) throw shape_error();
  for (std::size_t l = 0; l < 5; ++l) {
    if (!t[l].is_array() || t[l].size() != 5) throw shape_error();
    for (std::size_t i = 0; i < 5; ++i) {
      if (!t[l][i].is_array() || t[l][i].size() != 6) throw shape_error();
      for (std::size_t k = 0; k < 6; ++k) {
        const auto& v = t[l][i][k];
        if (!v.is_number_integer()) throw Error(ErrorKind::Config, "tensor entries must be integers");
        if (v.is_number_unsigned()) {
          a[l][i][k] = v.get<std::uint64_t>();
        } else {
          throw Error(ErrorKind::BadParameter, "tensor entry outside [0, p)");
        }
      }
    }
  }
  return Instance(field, j["seed"].get<std::uint64_t>(), a);
}

Instance gen_instance(std::uint64_t seed, const PrimeField& field) {
  for (int attempt = 0; attempt < 10; ++attempt) {
    Rng rng(attempt == 0 ? seed : splitmix64(seed + static_cast<std::uint64_t>(attempt)));
    Instance::Tensor a{};
    for (std::size_t l = 0; l < 5; ++l)
      for (std::size_t i = l; i < 5; ++i)
        for (std::size_t j = 0; j < 6; ++j) a[l][i][j] = a[i][l][j] = rng.element(field);
    try {
      return Instance(field, seed, a, attempt);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateInstance) throw;
    }
  }
  throw Error(ErrorKind::DegenerateInstance, "ten consecutive degenerate nets");
}

bool duality_identity_check(const Instance& inst, Rng& rng, int trials) {
  const PrimeField& f = inst.field();
  for (int t = 0; t < trials; ++t) {
    Vec x(6), y(5);
    for (auto& v : x) v = rng.element(f);
    for (auto& v : y) v = rng.element(f);
    if (inst.M(x).apply(y) != inst.N(y).transpose().apply(x)) return false;
  }
  return true;
}

}  // namespace quadrint
