#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "localh/geometry.hpp"
#include "localh/point.hpp"
#include "localh/rational.hpp"

namespace localh {

using VertexId = std::int32_t;
/// A maximal face: sorted list of d distinct point indices.
using Cell = std::vector<VertexId>;
/// Bit i set = reference position i belongs to the set.
using PositionMask = std::uint64_t;

/// A face of the triangulation: sorted vertex indices, generated by cells.
struct Face {
  std::vector<VertexId> ids;

  Face() = default;
  explicit Face(std::vector<VertexId> v) : ids(std::move(v)) {}

  int dimension() const { return static_cast<int>(ids.size()) - 1; }
  bool operator==(const Face& other) const { return ids == other.ids; }
  bool operator<(const Face& other) const { return ids < other.ids; }
};

/// The simplex being subdivided: d affinely independent vertices,
/// dimension d-1.
class ReferenceSimplex {
 public:
  explicit ReferenceSimplex(std::vector<Point> vertices);

  /// conv{e_1, ..., e_d} in R^d.
  static ReferenceSimplex standard(int d);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int dim() const { return vertex_count() - 1; }
  int ambient_dim() const { return static_cast<int>(vertices_[0].dim()); }
  const std::vector<Point>& vertices() const { return vertices_; }

  bool operator==(const ReferenceSimplex& other) const { return vertices_ == other.vertices_; }

 private:
  std::vector<Point> vertices_;
};

struct Violation {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

struct CarrierReport {
  Face face;
  std::vector<int> carrier;  // sorted reference positions
  int excess = 0;
  bool interior = false;
};

enum class ValidationLevel {
  Fast,  // everything except the pairwise common-face check
  Full,
};

/// A geometric triangulation of a reference simplex: exact-coordinate
/// points plus the maximal cells. Immutable; derived data (face lists)
/// is memoized per instance and shared across copies.
class Triangulation {
 public:
  /// Structural checks happen here and throw std::invalid_argument:
  /// coordinate duplicates, bad cell sizes/indices, duplicate cells.
  /// Geometric validity is the job of validate().
  Triangulation(ReferenceSimplex reference, std::vector<Point> points, std::vector<Cell> cells);

  const ReferenceSimplex& reference() const { return ref_; }
  const std::vector<Point>& points() const { return points_; }
  const Point& point(VertexId v) const { return points_[static_cast<std::size_t>(v)]; }
  const std::vector<Cell>& cells() const { return cells_; }
  int point_count() const { return static_cast<int>(points_.size()); }
  /// Number of reference vertices (the paper's d); the triangulated
  /// simplex has dimension d-1.
  int d() const { return ref_.vertex_count(); }
  int dim() const { return ref_.dim(); }
  int ambient_dim() const { return ref_.ambient_dim(); }

  /// Barycentric coordinates of a point w.r.t. the reference simplex;
  /// nullopt when the point is outside the reference affine hull.
  const std::optional<std::vector<Rational>>& chart(VertexId v) const {
    return charts_[static_cast<std::size_t>(v)];
  }
  PositionMask point_carrier_mask(VertexId v) const { return carriers_[static_cast<std::size_t>(v)]; }
  PositionMask full_mask() const { return (PositionMask{1} << d()) - 1; }

  /// Indices of reference vertices inside points(), position by position.
  const std::vector<VertexId>& reference_vertex_ids() const { return ref_ids_; }

  ValidationReport validate(ValidationLevel level = ValidationLevel::Full) const;

  /// All k-faces generated by the cells; k = -1 yields the single empty
  /// face. Memoized. Throws on k out of [-1, dim()].
  const std::vector<Face>& faces(int k) const;

  /// Carrier of a face: union of the vertex barycentric supports.
  CarrierReport carrier(const Face& f) const;
  PositionMask face_carrier_mask(const Face& f) const;

  /// Induced triangulation on the reference face spanned by the given
  /// positions (sorted, nonempty).
  Triangulation restrict_to(const std::vector<int>& positions) const;

  bool is_trivial() const {
    return static_cast<int>(points_.size()) == d() && cells_.size() == 1;
  }

  bool is_face(const Face& f) const;
  /// True iff some cell other than `cell` contains all ids in `sub`.
  bool face_shared_with_other_cell(const Cell& cell, const std::vector<VertexId>& sub) const;
  bool has_cell(const Cell& cell) const;
  std::optional<VertexId> find_point(const Point& p) const;

  /// Volume of the cell relative to the reference simplex: |det| of the
  /// barycentric rows. Zero for degenerate cells.
  Rational cell_relative_volume(const Cell& cell) const;

  /// Equality as labelled structures (same reference, point list, cells).
  bool operator==(const Triangulation& other) const;
  /// Equality as geometric complexes: identical point coordinate sets and
  /// identical cells up to relabeling by coordinates.
  bool same_complex(const Triangulation& other) const;

 private:
  struct FaceCache;

  void ensure_faces() const;

  ReferenceSimplex ref_;
  std::vector<Point> points_;
  std::vector<Cell> cells_;
  std::vector<std::optional<std::vector<Rational>>> charts_;
  std::vector<PositionMask> carriers_;
  std::vector<VertexId> ref_ids_;
  std::shared_ptr<FaceCache> cache_;
};

std::vector<int> mask_to_positions(PositionMask mask);
PositionMask positions_to_mask(const std::vector<int>& positions);

}  // namespace localh
