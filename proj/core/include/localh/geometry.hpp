#pragma once

#include <optional>
#include <vector>

#include "localh/point.hpp"
#include "localh/rational.hpp"

namespace localh {

using Matrix = std::vector<std::vector<Rational>>;

/// Exact determinant by fraction-free Gaussian elimination. Square input.
Rational determinant(Matrix m);

/// Solves M x = rhs exactly (M is rows x cols, rows >= cols expected).
/// Returns the unique solution, or nullopt when the system is inconsistent
/// or underdetermined.
std::optional<std::vector<Rational>> solve_linear(Matrix m, std::vector<Rational> rhs);

/// Rank of the matrix over the rationals.
int matrix_rank(Matrix m);

/// Barycentric coordinates of p with respect to the given simplex vertices:
/// the unique lambda with sum(lambda) = 1 and sum(lambda_i * v_i) = p.
/// Throws std::invalid_argument when the simplex vertices are affinely
/// dependent; returns nullopt when p lies outside their affine hull.
std::optional<std::vector<Rational>> barycentric_coords(const Point& p,
                                                        const std::vector<Point>& simplex);

/// True iff the points span an affine space of dimension count-1.
/// The empty set is vacuously independent.
bool affinely_independent(const std::vector<Point>& points);

/// Signed k-volume of a full-dimensional simplex on k+1 points in ambient
/// dimension k: det of edge vectors divided by k!. Throws when the point
/// count does not match the ambient dimension + 1.
Rational signed_volume(const std::vector<Point>& simplex);

/// Gram determinant of the edge vectors: the squared-volume proxy
/// ((k! * vol_k)^2) that stays rational for k below the ambient dimension.
/// Invariant under permutation of the input points.
Rational gram_sq_volume(const std::vector<Point>& simplex);

}  // namespace localh
