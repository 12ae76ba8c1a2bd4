#include "cranklab/truncated_series.hpp"

namespace cranklab {

ResidueSeries reduce_series(const LaurentSeries& s, const QuotientRing& ring) {
  if (s.ring().generators() != 1) {
    throw GeneratorMismatch("only one-generator series reduce modulo a cyclotomic modulus");
  }
  return s.map_coefficients(ring, [&](const LaurentPolynomial& p) { return ring.reduce(p); });
}

VerificationReport series_congruent(const LaurentSeries& lhs, const LaurentSeries& rhs,
                                    const CyclotomicModulus& m, std::string name) {
  const QuotientRing ring(m);
  return compare_series(std::move(name), reduce_series(lhs, ring), reduce_series(rhs, ring),
                        m.name());
}

}  // namespace cranklab
