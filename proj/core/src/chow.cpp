#include "quadrint/chow.hpp"

#include "quadrint/error.hpp"

namespace quadrint {

namespace {

Chow45 h4() { return Chow45::monomial(1, 0); }
Chow45 h5() { return Chow45::monomial(0, 1); }
Chow45 cls(Bidegree d) { return Chow45::divisor(d.a, d.b); }

}  // namespace

Chow45 incidence_class() { return (h4() + h5()).pow(5); }

std::int64_t branch_degree(Bidegree e5) { return (h4().pow(3) * cls(e5) * incidence_class()).degree(); }

std::int64_t surface_degree(Bidegree e4) { return (h4().pow(2) * cls(e4) * h5() * incidence_class()).degree(); }

std::int64_t exceptional_pairing(Bidegree e4, Bidegree e5) {
  return (h4().pow(2) * cls(e4) * cls(e5) * incidence_class()).degree();
}

std::int64_t vertex_divisor_degree(std::int64_t restricted_det_degree, std::int64_t quintic_degree,
                                   std::int64_t contact_length) {
  const std::int64_t total = restricted_det_degree * quintic_degree;
  if (contact_length <= 0 || total % contact_length != 0)
    throw Error(ErrorKind::InternalInconsistency, "intersection not divisible by the contact length");
  return total / contact_length;
}

IntersectionNumbers intersection_numbers() {
  return {branch_degree(), surface_degree(), exceptional_pairing(), vertex_divisor_degree()};
}

}  // namespace quadrint
