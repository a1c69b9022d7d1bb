#include "localh/local_h.hpp"

#include <stdexcept>

namespace localh {

FVector f_vector(const Triangulation& t) {
  FVector out;
  out.counts.assign(static_cast<std::size_t>(t.d() + 1), Int(0));
  out.counts[0] = 1;
  for (int k = 0; k <= t.dim(); ++k) {
    out.counts[static_cast<std::size_t>(k + 1)] = Int(t.faces(k).size());
  }
  return out;
}

IntPolynomial h_polynomial(const FVector& f) {
  // sum_i h_i y^{d-i} = sum_i f_{i-1} (y-1)^{d-i}; read h off the
  // left-hand side after expanding the right.
  const int d = f.d();
  IntPolynomial rhs;
  for (int i = 0; i <= d; ++i) {
    rhs = rhs + IntPolynomial::constant(f.f(i - 1)) * binomial_power(Int(-1), static_cast<std::size_t>(d - i));
  }
  std::vector<Int> h(static_cast<std::size_t>(d + 1), Int(0));
  for (int i = 0; i <= d; ++i) h[static_cast<std::size_t>(i)] = rhs.coeff(static_cast<std::size_t>(d - i));
  return IntPolynomial(std::move(h));
}

IntPolynomial h_polynomial(const Triangulation& t) { return h_polynomial(f_vector(t)); }

IntPolynomial local_h_mobius(const Triangulation& t) {
  const int d = t.d();
  IntPolynomial total;
  // Empty face: codim d, h(empty triangulation) = 1.
  total = total + IntPolynomial::constant(Int(d % 2 == 0 ? 1 : -1));
  const unsigned limit = 1u << d;
  for (unsigned mask = 1; mask < limit; ++mask) {
    std::vector<int> positions;
    for (int i = 0; i < d; ++i) {
      if (mask & (1u << i)) positions.push_back(i);
    }
    IntPolynomial h = (mask + 1 == limit && positions.size() == static_cast<std::size_t>(d))
                          ? h_polynomial(t)
                          : h_polynomial(t.restrict_to(positions));
    const int codim = d - static_cast<int>(positions.size());
    if (codim % 2 != 0) h = -h;
    total = total + h;
  }
  return total;
}

IntPolynomial local_h_excess(const Triangulation& t) {
  const int d = t.d();
  IntPolynomial total;
  // Empty face: dim -1, sigma(empty) = empty, excess 0, codim d.
  total = total + IntPolynomial::monomial(Int(d % 2 == 0 ? 1 : -1), static_cast<std::size_t>(d));
  for (int k = 0; k <= t.dim(); ++k) {
    const int codim = d - 1 - k;
    const Int sign(codim % 2 == 0 ? 1 : -1);
    for (const Face& g : t.faces(k)) {
      const PositionMask mask = t.face_carrier_mask(g);
      const int carrier_dim = static_cast<int>(mask_to_positions(mask).size()) - 1;
      const int excess = carrier_dim - k;
      IntPolynomial term =
          IntPolynomial::monomial(sign, static_cast<std::size_t>(d - excess)) *
          binomial_power(Int(-1), static_cast<std::size_t>(excess));
      total = total + term;
    }
  }
  return total;
}

FlagCounts flag_counts(const Triangulation& t) {
  const int d = t.d();
  FlagCounts out;
  out.d = d;
  out.table.assign(static_cast<std::size_t>(d + 1),
                   std::vector<Int>(static_cast<std::size_t>(d + 1), Int(0)));
  out.table[0][0] = 1;  // the empty face is carried by the empty face
  for (int k = 0; k <= t.dim(); ++k) {
    for (const Face& g : t.faces(k)) {
      const PositionMask mask = t.face_carrier_mask(g);
      const int carrier_dim = static_cast<int>(mask_to_positions(mask).size()) - 1;
      out.table[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(carrier_dim + 1)] += 1;
    }
  }
  return out;
}

Int ell2_formula(const FlagCounts& fc, int d) {
  if (d < 2) throw std::invalid_argument("ell2_formula requires d >= 2");
  if (fc.d != d) throw std::invalid_argument("ell2_formula: flag table dimension mismatch");
  return fc.entry(1, d - 1) - fc.entry(0, d - 2) - Int(d - 1) * fc.entry(0, d - 1);
}

}  // namespace localh
