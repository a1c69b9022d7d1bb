#pragma once

#include <vector>

#include "localh/polynomial.hpp"
#include "localh/triangulation.hpp"

namespace localh {

/// Face counts per dimension; entry(k) = f_{k-1}, so entry(0) = f_{-1} = 1.
struct FVector {
  std::vector<Int> counts;  // counts[i] = number of (i-1)-dimensional faces

  int d() const { return static_cast<int>(counts.size()) - 1; }
  /// f_k for k in [-1, d-1].
  const Int& f(int k) const { return counts[static_cast<std::size_t>(k + 1)]; }
  bool operator==(const FVector& other) const { return counts == other.counts; }
};

/// The numbers f_i^j of i-faces carried by j-faces of the reference
/// simplex, for -1 <= i <= j <= d-1.
struct FlagCounts {
  int d = 0;
  std::vector<std::vector<Int>> table;  // table[i+1][j+1]

  const Int& entry(int face_dim, int carrier_dim) const {
    return table[static_cast<std::size_t>(face_dim + 1)][static_cast<std::size_t>(carrier_dim + 1)];
  }
};

FVector f_vector(const Triangulation& t);

/// The h-polynomial: the unique h with
///   sum_i h_i (x+1)^{d-i} = sum_i f_{i-1} x^{d-i}.
IntPolynomial h_polynomial(const FVector& f);
IntPolynomial h_polynomial(const Triangulation& t);

/// Local h-polynomial as the alternating sum of h-polynomials of the
/// restrictions to faces of the reference simplex (Mobius inversion),
/// with the empty face contributing (-1)^d.
IntPolynomial local_h_mobius(const Triangulation& t);

/// Local h-polynomial as the excess sum over the faces of the
/// triangulation. Independent of the Mobius route; the two must agree.
IntPolynomial local_h_excess(const Triangulation& t);

FlagCounts flag_counts(const Triangulation& t);

/// Closed form for the x^2 coefficient of the local h-polynomial:
/// f_1^{d-1} - f_0^{d-2} - (d-1) f_0^{d-1}. Requires d >= 2.
Int ell2_formula(const FlagCounts& fc, int d);

}  // namespace localh
