#include "localh/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "localh/linprog.hpp"

namespace localh {

namespace {

std::string ids_to_string(const std::vector<VertexId>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ids[i]);
  }
  out += "}";
  return out;
}

}  // namespace

ReferenceSimplex::ReferenceSimplex(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("reference simplex needs at least one vertex");
  for (const auto& v : vertices_) {
    if (v.dim() != vertices_[0].dim())
      throw std::invalid_argument("reference simplex vertices have mixed ambient dimensions");
  }
  if (!affinely_independent(vertices_))
    throw std::invalid_argument("reference simplex vertices are affinely dependent");
}

ReferenceSimplex ReferenceSimplex::standard(int d) {
  if (d < 1) throw std::invalid_argument("standard simplex needs d >= 1");
  std::vector<Point> verts;
  verts.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    std::vector<Rational> c(static_cast<std::size_t>(d), Rational(0));
    c[static_cast<std::size_t>(i)] = 1;
    verts.emplace_back(std::move(c));
  }
  return ReferenceSimplex(std::move(verts));
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (const auto& v : violations) out << "[" << v.code << "] " << v.message << "\n";
  return out.str();
}

struct Triangulation::FaceCache {
  std::once_flag once;
  std::vector<std::vector<Face>> by_dim;  // index k+1 holds the k-faces
};

Triangulation::Triangulation(ReferenceSimplex reference, std::vector<Point> points,
                             std::vector<Cell> cells)
    : ref_(std::move(reference)),
      points_(std::move(points)),
      cells_(std::move(cells)),
      cache_(std::make_shared<FaceCache>()) {
  const int d = ref_.vertex_count();
  if (points_.empty()) throw std::invalid_argument("triangulation needs points");
  if (cells_.empty()) throw std::invalid_argument("triangulation needs at least one cell");
  for (const auto& p : points_) {
    if (static_cast<int>(p.dim()) != ref_.ambient_dim())
      throw std::invalid_argument("point ambient dimension differs from the reference simplex");
  }
  {
    std::set<Point> seen;
    for (const auto& p : points_) {
      if (!seen.insert(p).second)
        throw std::invalid_argument("duplicate point coordinates: " + p.to_string());
    }
  }
  for (auto& cell : cells_) {
    if (static_cast<int>(cell.size()) != d)
      throw std::invalid_argument("cell " + ids_to_string(cell) + " must have exactly d=" +
                                  std::to_string(d) + " vertices");
    std::sort(cell.begin(), cell.end());
    for (std::size_t i = 0; i < cell.size(); ++i) {
      if (cell[i] < 0 || cell[i] >= static_cast<VertexId>(points_.size()))
        throw std::invalid_argument("cell index out of range in " + ids_to_string(cell));
      if (i > 0 && cell[i] == cell[i - 1])
        throw std::invalid_argument("repeated vertex in cell " + ids_to_string(cell));
    }
  }
  std::sort(cells_.begin(), cells_.end());
  for (std::size_t i = 1; i < cells_.size(); ++i) {
    if (cells_[i] == cells_[i - 1])
      throw std::invalid_argument("duplicate cell " + ids_to_string(cells_[i]));
  }

  charts_.reserve(points_.size());
  carriers_.reserve(points_.size());
  for (const auto& p : points_) {
    auto lambda = barycentric_coords(p, ref_.vertices());
    PositionMask mask = 0;
    if (lambda) {
      for (int i = 0; i < d; ++i) {
        if ((*lambda)[static_cast<std::size_t>(i)] != 0) mask |= PositionMask{1} << i;
      }
    }
    charts_.push_back(std::move(lambda));
    carriers_.push_back(mask);
  }

  ref_ids_.assign(static_cast<std::size_t>(d), -1);
  for (int pos = 0; pos < d; ++pos) {
    const auto& v = ref_.vertices()[static_cast<std::size_t>(pos)];
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (points_[i] == v) {
        ref_ids_[static_cast<std::size_t>(pos)] = static_cast<VertexId>(i);
        break;
      }
    }
  }
}

Rational Triangulation::cell_relative_volume(const Cell& cell) const {
  Matrix rows;
  rows.reserve(cell.size());
  for (VertexId v : cell) {
    const auto& lambda = charts_[static_cast<std::size_t>(v)];
    if (!lambda) return Rational(0);
    rows.push_back(*lambda);
  }
  Rational det = determinant(std::move(rows));
  return det < 0 ? Rational(-det) : det;
}

ValidationReport Triangulation::validate(ValidationLevel level) const {
  ValidationReport report;
  const int d = this->d();

  for (int pos = 0; pos < d; ++pos) {
    if (ref_ids_[static_cast<std::size_t>(pos)] < 0) {
      report.violations.push_back(
          {"reference-vertex-missing",
           "reference vertex at position " + std::to_string(pos) + " is not a point of the triangulation"});
    }
  }

  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& lambda = charts_[i];
    if (!lambda) {
      report.violations.push_back({"point-outside-hull",
                                   "point " + std::to_string(i) + " " + points_[i].to_string() +
                                       " lies outside the reference affine hull"});
      continue;
    }
    for (int pos = 0; pos < d; ++pos) {
      if ((*lambda)[static_cast<std::size_t>(pos)] < 0) {
        report.violations.push_back({"point-outside-simplex",
                                     "point " + std::to_string(i) + " " + points_[i].to_string() +
                                         " has negative barycentric coordinate at position " +
                                         std::to_string(pos)});
        break;
      }
    }
  }

  std::vector<bool> used(points_.size(), false);
  Rational volume_sum(0);
  std::vector<Rational> cell_volume(cells_.size(), Rational(0));
  for (std::size_t ci = 0; ci < cells_.size(); ++ci) {
    for (VertexId v : cells_[ci]) used[static_cast<std::size_t>(v)] = true;
    cell_volume[ci] = cell_relative_volume(cells_[ci]);
    if (cell_volume[ci] == 0) {
      report.violations.push_back({"degenerate-cell",
                                   "cell " + ids_to_string(cells_[ci]) +
                                       " is affinely dependent (zero volume)"});
    }
    volume_sum += cell_volume[ci];
  }
  if (volume_sum != 1) {
    report.violations.push_back(
        {"volume-sum", "cell volumes sum to " + rational_to_string(volume_sum) +
                           " of the reference volume (deficit " +
                           rational_to_string(Rational(1) - volume_sum) + ")"});
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!used[i]) {
      report.violations.push_back(
          {"unused-point", "point " + std::to_string(i) + " " + points_[i].to_string() +
                               " occurs in no cell"});
    }
  }

  if (level == ValidationLevel::Full) {
    // Pairwise common-face property, exact. Bounding boxes in the
    // barycentric chart prune distant pairs; cells sharing a facet get a
    // two-sided orientation test; everything else goes through an exact
    // rational LP deciding whether the hulls meet outside the shared face.
    std::vector<std::vector<Rational>> box_min(cells_.size()), box_max(cells_.size());
    bool charts_ok = true;
    for (const auto& lambda : charts_) {
      if (!lambda) charts_ok = false;
    }
    if (charts_ok) {
      for (std::size_t ci = 0; ci < cells_.size(); ++ci) {
        box_min[ci].assign(static_cast<std::size_t>(d), Rational(0));
        box_max[ci].assign(static_cast<std::size_t>(d), Rational(0));
        for (int c = 0; c < d; ++c) {
          bool first = true;
          for (VertexId v : cells_[ci]) {
            const Rational& x = (*charts_[static_cast<std::size_t>(v)])[static_cast<std::size_t>(c)];
            if (first || x < box_min[ci][static_cast<std::size_t>(c)])
              box_min[ci][static_cast<std::size_t>(c)] = x;
            if (first || x > box_max[ci][static_cast<std::size_t>(c)])
              box_max[ci][static_cast<std::size_t>(c)] = x;
            first = false;
          }
        }
      }
      for (std::size_t i = 0; i + 1 < cells_.size(); ++i) {
        if (cell_volume[i] == 0) continue;
        for (std::size_t j = i + 1; j < cells_.size(); ++j) {
          if (cell_volume[j] == 0) continue;
          bool box_disjoint = false;
          for (int c = 0; c < d && !box_disjoint; ++c) {
            if (box_max[i][static_cast<std::size_t>(c)] < box_min[j][static_cast<std::size_t>(c)] ||
                box_max[j][static_cast<std::size_t>(c)] < box_min[i][static_cast<std::size_t>(c)])
              box_disjoint = true;
          }
          if (box_disjoint) continue;

          std::vector<VertexId> shared;
          std::set_intersection(cells_[i].begin(), cells_[i].end(), cells_[j].begin(),
                                cells_[j].end(), std::back_inserter(shared));

          bool proper = true;
          if (static_cast<int>(shared.size()) == d - 1) {
            // Shared facet: the two apexes must lie strictly on opposite
            // sides of the facet hyperplane.
            Matrix rows;
            for (VertexId v : shared) rows.push_back(*charts_[static_cast<std::size_t>(v)]);
            auto side = [&](VertexId v) {
              Matrix m = rows;
              m.push_back(*charts_[static_cast<std::size_t>(v)]);
              return determinant(std::move(m));
            };
            VertexId apex_i = -1, apex_j = -1;
            for (VertexId v : cells_[i])
              if (!std::binary_search(shared.begin(), shared.end(), v)) apex_i = v;
            for (VertexId v : cells_[j])
              if (!std::binary_search(shared.begin(), shared.end(), v)) apex_j = v;
            const Rational si = side(apex_i);
            const Rational sj = side(apex_j);
            proper = (si > 0 && sj < 0) || (si < 0 && sj > 0);
          } else {
            // maximize total barycentric weight of cell i off the shared
            // face over all common points; proper iff the optimum is 0
            // (or the hulls are disjoint when no vertex is shared).
            const std::size_t nv = 2 * static_cast<std::size_t>(d);
            Matrix a(static_cast<std::size_t>(d + 1), std::vector<Rational>(nv, Rational(0)));
            std::vector<Rational> b(static_cast<std::size_t>(d + 1), Rational(0));
            for (int c = 0; c + 1 < d; ++c) {
              for (int k = 0; k < d; ++k) {
                a[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)] =
                    (*charts_[static_cast<std::size_t>(cells_[i][static_cast<std::size_t>(k)])])
                        [static_cast<std::size_t>(c)];
                a[static_cast<std::size_t>(c)][static_cast<std::size_t>(d + k)] =
                    -(*charts_[static_cast<std::size_t>(cells_[j][static_cast<std::size_t>(k)])])
                        [static_cast<std::size_t>(c)];
              }
            }
            for (int k = 0; k < d; ++k) {
              a[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(k)] = 1;
              a[static_cast<std::size_t>(d)][static_cast<std::size_t>(d + k)] = 1;
            }
            b[static_cast<std::size_t>(d - 1)] = 1;
            b[static_cast<std::size_t>(d)] = 1;
            std::vector<Rational> c_obj(nv, Rational(0));
            for (int k = 0; k < d; ++k) {
              if (!std::binary_search(shared.begin(), shared.end(),
                                      cells_[i][static_cast<std::size_t>(k)]))
                c_obj[static_cast<std::size_t>(k)] = 1;
            }
            const LpResult lp = lp_maximize(a, b, c_obj);
            if (lp.status == LpStatus::Infeasible) {
              proper = shared.empty();
            } else {
              proper = !shared.empty() && lp.objective == 0;
            }
          }
          if (!proper) {
            report.violations.push_back({"cells-intersect-off-face",
                                         "cells " + ids_to_string(cells_[i]) + " and " +
                                             ids_to_string(cells_[j]) +
                                             " intersect outside their common face " +
                                             ids_to_string(shared)});
          }
        }
      }
    }
  }

  return report;
}

void Triangulation::ensure_faces() const {
  std::call_once(cache_->once, [this]() {
    std::set<std::vector<VertexId>> all;
    const int d = this->d();
    for (const auto& cell : cells_) {
      const unsigned total = 1u << d;
      for (unsigned mask = 1; mask < total; ++mask) {
        std::vector<VertexId> sub;
        for (int k = 0; k < d; ++k) {
          if (mask & (1u << k)) sub.push_back(cell[static_cast<std::size_t>(k)]);
        }
        all.insert(std::move(sub));
      }
    }
    cache_->by_dim.assign(static_cast<std::size_t>(d + 1), {});
    cache_->by_dim[0].push_back(Face{});  // the empty face at k = -1
    for (const auto& ids : all) {
      cache_->by_dim[ids.size()].push_back(Face{ids});
    }
  });
}

const std::vector<Face>& Triangulation::faces(int k) const {
  if (k < -1 || k > dim())
    throw std::invalid_argument("faces: dimension " + std::to_string(k) + " out of range");
  ensure_faces();
  return cache_->by_dim[static_cast<std::size_t>(k + 1)];
}

PositionMask Triangulation::face_carrier_mask(const Face& f) const {
  PositionMask mask = 0;
  for (VertexId v : f.ids) mask |= carriers_[static_cast<std::size_t>(v)];
  return mask;
}

CarrierReport Triangulation::carrier(const Face& f) const {
  if (f.ids.empty())
    throw std::invalid_argument("carrier: the empty face has no carrier report");
  if (!is_face(f))
    throw std::invalid_argument("carrier: " + ids_to_string(f.ids) + " is not a face");
  for (VertexId v : f.ids) {
    if (!charts_[static_cast<std::size_t>(v)])
      throw std::invalid_argument("carrier: face vertex outside the reference hull");
  }
  CarrierReport report;
  report.face = f;
  const PositionMask mask = face_carrier_mask(f);
  report.carrier = mask_to_positions(mask);
  report.excess = static_cast<int>(report.carrier.size()) - 1 - f.dimension();
  report.interior = mask == full_mask();
  return report;
}

bool Triangulation::is_face(const Face& f) const {
  if (f.ids.empty()) return true;
  for (const auto& cell : cells_) {
    if (std::includes(cell.begin(), cell.end(), f.ids.begin(), f.ids.end())) return true;
  }
  return false;
}

bool Triangulation::face_shared_with_other_cell(const Cell& cell,
                                                const std::vector<VertexId>& sub) const {
  for (const auto& other : cells_) {
    if (other == cell) continue;
    if (std::includes(other.begin(), other.end(), sub.begin(), sub.end())) return true;
  }
  return false;
}

bool Triangulation::has_cell(const Cell& cell) const {
  return std::binary_search(cells_.begin(), cells_.end(), cell);
}

std::optional<VertexId> Triangulation::find_point(const Point& p) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i] == p) return static_cast<VertexId>(i);
  }
  return std::nullopt;
}

Triangulation Triangulation::restrict_to(const std::vector<int>& positions) const {
  if (positions.empty())
    throw std::invalid_argument("restrict_to: empty position set (use the l(empty)=1 convention)");
  std::vector<int> sorted = positions;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int pos : sorted) {
    if (pos < 0 || pos >= d())
      throw std::invalid_argument("restrict_to: position " + std::to_string(pos) + " out of range");
  }
  const PositionMask mask = positions_to_mask(sorted);

  std::vector<Point> sub_ref;
  for (int pos : sorted) sub_ref.push_back(ref_.vertices()[static_cast<std::size_t>(pos)]);

  std::vector<Point> sub_points;
  std::vector<VertexId> new_id(points_.size(), -1);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!charts_[i]) throw std::logic_error("restrict_to: triangulation has points outside the hull");
    if ((carriers_[i] & ~mask) == 0) {
      new_id[i] = static_cast<VertexId>(sub_points.size());
      sub_points.push_back(points_[i]);
    }
  }

  std::set<Cell> sub_cells;
  const std::size_t want = sorted.size();
  for (const auto& cell : cells_) {
    Cell trace;
    for (VertexId v : cell) {
      if (new_id[static_cast<std::size_t>(v)] >= 0) trace.push_back(new_id[static_cast<std::size_t>(v)]);
    }
    if (trace.size() == want) sub_cells.insert(std::move(trace));
  }
  if (sub_cells.empty())
    throw std::logic_error("restrict_to: no cells land in the requested face");

  return Triangulation(ReferenceSimplex(std::move(sub_ref)), std::move(sub_points),
                       std::vector<Cell>(sub_cells.begin(), sub_cells.end()));
}

bool Triangulation::operator==(const Triangulation& other) const {
  return ref_ == other.ref_ && points_ == other.points_ && cells_ == other.cells_;
}

bool Triangulation::same_complex(const Triangulation& other) const {
  if (!(ref_ == other.ref_)) return false;
  std::vector<Point> mine = points_, theirs = other.points_;
  std::sort(mine.begin(), mine.end());
  std::sort(theirs.begin(), theirs.end());
  if (mine != theirs) return false;

  auto cell_coords = [](const Triangulation& t) {
    std::set<std::vector<Point>> out;
    for (const auto& cell : t.cells_) {
      std::vector<Point> pts;
      for (VertexId v : cell) pts.push_back(t.points_[static_cast<std::size_t>(v)]);
      std::sort(pts.begin(), pts.end());
      out.insert(std::move(pts));
    }
    return out;
  };
  return cell_coords(*this) == cell_coords(other);
}

std::vector<int> mask_to_positions(PositionMask mask) {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i) {
    if (mask & (PositionMask{1} << i)) out.push_back(i);
  }
  return out;
}

PositionMask positions_to_mask(const std::vector<int>& positions) {
  PositionMask mask = 0;
  for (int p : positions) mask |= PositionMask{1} << p;
  return mask;
}

}  // namespace localh
