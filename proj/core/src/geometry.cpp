#include "localh/geometry.hpp"

#include <stdexcept>

namespace localh {

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  }
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = Rational(1) / m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      const Rational factor = m[row][col] * inv;
      for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

std::optional<std::vector<Rational>> solve_linear(Matrix m, std::vector<Rational> rhs) {
  const std::size_t rows = m.size();
  if (rhs.size() != rows) throw std::invalid_argument("solve_linear: rhs size mismatch");
  const std::size_t cols = rows == 0 ? 0 : m[0].size();

  std::vector<std::size_t> pivot_col_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    std::swap(rhs[pivot], rhs[row]);
    const Rational inv = Rational(1) / m[row][col];
    for (std::size_t k = col; k < cols; ++k) m[row][k] *= inv;
    rhs[row] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t k = col; k < cols; ++k) m[r][k] -= factor * m[row][k];
      rhs[r] -= factor * rhs[row];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  // Inconsistent if a zero row has nonzero rhs.
  for (std::size_t r = row; r < rows; ++r) {
    if (rhs[r] != 0) return std::nullopt;
  }
  // Underdetermined if some column has no pivot.
  if (pivot_col_of_row.size() != cols) return std::nullopt;

  std::vector<Rational> solution(cols, Rational(0));
  for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
    solution[pivot_col_of_row[r]] = rhs[r];
  }
  return solution;
}

int matrix_rank(Matrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    const Rational inv = Rational(1) / m[row][col];
    for (std::size_t k = col; k < cols; ++k) m[row][k] *= inv;
    for (std::size_t r = row + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t k = col; k < cols; ++k) m[r][k] -= factor * m[row][k];
    }
    ++rank;
    ++row;
  }
  return rank;
}

namespace {

void check_common_dimension(const std::vector<Point>& points) {
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].dim() != points[0].dim())
      throw std::invalid_argument("points live in different ambient dimensions");
  }
}

}  // namespace

std::optional<std::vector<Rational>> barycentric_coords(const Point& p,
                                                        const std::vector<Point>& simplex) {
  if (simplex.empty()) throw std::invalid_argument("barycentric_coords: empty simplex");
  check_common_dimension(simplex);
  const std::size_t ambient = simplex[0].dim();
  if (p.dim() != ambient)
    throw std::invalid_argument("barycentric_coords: ambient dimension mismatch");
  if (!affinely_independent(simplex))
    throw std::invalid_argument("barycentric_coords: degenerate simplex");

  // Columns are the simplex vertices; a final all-ones row forces sum = 1.
  const std::size_t k = simplex.size();
  Matrix m(ambient + 1, std::vector<Rational>(k, Rational(0)));
  std::vector<Rational> rhs(ambient + 1, Rational(0));
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t r = 0; r < ambient; ++r) m[r][c] = simplex[c].coords[r];
    m[ambient][c] = 1;
  }
  for (std::size_t r = 0; r < ambient; ++r) rhs[r] = p.coords[r];
  rhs[ambient] = 1;
  return solve_linear(std::move(m), std::move(rhs));
}

bool affinely_independent(const std::vector<Point>& points) {
  if (points.size() <= 1) return true;
  check_common_dimension(points);
  const std::size_t ambient = points[0].dim();
  const std::size_t k = points.size() - 1;
  if (k > ambient) return false;
  Matrix edges(k, std::vector<Rational>(ambient, Rational(0)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < ambient; ++c) {
      edges[i][c] = points[i + 1].coords[c] - points[0].coords[c];
    }
  }
  return matrix_rank(std::move(edges)) == static_cast<int>(k);
}

Rational signed_volume(const std::vector<Point>& simplex) {
  if (simplex.empty()) throw std::invalid_argument("signed_volume: empty simplex");
  check_common_dimension(simplex);
  const std::size_t ambient = simplex[0].dim();
  if (simplex.size() != ambient + 1)
    throw std::invalid_argument("signed_volume: need ambient+1 points for a full-dimensional simplex");
  Matrix edges(ambient, std::vector<Rational>(ambient, Rational(0)));
  for (std::size_t i = 0; i < ambient; ++i) {
    for (std::size_t c = 0; c < ambient; ++c) {
      edges[i][c] = simplex[i + 1].coords[c] - simplex[0].coords[c];
    }
  }
  Rational det = determinant(std::move(edges));
  Int factorial(1);
  for (std::size_t i = 2; i <= ambient; ++i) factorial *= Int(i);
  return det / Rational(factorial);
}

Rational gram_sq_volume(const std::vector<Point>& simplex) {
  if (simplex.empty()) throw std::invalid_argument("gram_sq_volume: empty simplex");
  check_common_dimension(simplex);
  const std::size_t ambient = simplex[0].dim();
  const std::size_t k = simplex.size() - 1;
  if (k > ambient) return Rational(0);
  if (k == 0) return Rational(1);
  Matrix edges(k, std::vector<Rational>(ambient, Rational(0)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < ambient; ++c) {
      edges[i][c] = simplex[i + 1].coords[c] - simplex[0].coords[c];
    }
  }
  Matrix gram(k, std::vector<Rational>(k, Rational(0)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      Rational dot(0);
      for (std::size_t c = 0; c < ambient; ++c) dot += edges[i][c] * edges[j][c];
      gram[i][j] = dot;
      gram[j][i] = dot;
    }
  }
  return determinant(std::move(gram));
}

}  // namespace localh
