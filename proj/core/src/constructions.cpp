#include "localh/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

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

void require_fast_valid(const Triangulation& t, const char* who) {
  const ValidationReport report = t.validate(ValidationLevel::Fast);
  if (!report.ok())
    throw std::invalid_argument(std::string(who) + ": result is not a valid triangulation:\n" +
                                report.to_string());
}

}  // namespace

std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

CertificateBase CertificateBase::triforce_standard() {
  const ReferenceSimplex ref = ReferenceSimplex::standard(3);
  std::vector<Point> mids;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    std::vector<Rational> c(3, Rational(0));
    for (int x = 0; x < 3; ++x) {
      c[static_cast<std::size_t>(x)] =
          (ref.vertices()[static_cast<std::size_t>(j)].coords[static_cast<std::size_t>(x)] +
           ref.vertices()[static_cast<std::size_t>(k)].coords[static_cast<std::size_t>(x)]) /
          Rational(2);
    }
    mids.emplace_back(std::move(c));
  }
  return CertificateBase{BaseKind::Triforce, ref, std::move(mids)};
}

Triangulation trivial(const ReferenceSimplex& ref) {
  Cell cell(static_cast<std::size_t>(ref.vertex_count()));
  for (int i = 0; i < ref.vertex_count(); ++i) cell[static_cast<std::size_t>(i)] = i;
  return Triangulation(ref, ref.vertices(), {cell});
}

Triangulation triforce_like(const ReferenceSimplex& ref, const std::vector<Point>& edge_points) {
  if (ref.vertex_count() != 3)
    throw std::invalid_argument("triforce_like: reference must be a triangle (d = 3)");
  if (edge_points.size() != 3)
    throw std::invalid_argument("triforce_like: need exactly three edge points");
  std::vector<Point> points = ref.vertices();
  points.insert(points.end(), edge_points.begin(), edge_points.end());
  std::vector<Cell> cells = {{0, 4, 5}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}};
  Triangulation t(ref, std::move(points), std::move(cells));
  // edge_points[i] must lie strictly inside the edge opposite vertex i
  for (int i = 0; i < 3; ++i) {
    const PositionMask expected = t.full_mask() & ~(PositionMask{1} << i);
    if (t.point_carrier_mask(static_cast<VertexId>(3 + i)) != expected)
      throw std::invalid_argument(
          "triforce_like: edge point " + std::to_string(i) +
          " is not strictly inside the edge opposite reference vertex " + std::to_string(i));
  }
  const ValidationReport report = t.validate(ValidationLevel::Full);
  if (!report.ok())
    throw std::invalid_argument("triforce_like: invalid configuration:\n" + report.to_string());
  return t;
}

Triangulation triforce() {
  const CertificateBase base = CertificateBase::triforce_standard();
  return triforce_like(base.reference, base.base_points);
}

Triangulation segment_family(int n) {
  if (n < 0) throw std::invalid_argument("segment_family: n must be nonnegative");
  const ReferenceSimplex ref = ReferenceSimplex::standard(2);
  std::vector<Point> points = ref.vertices();
  for (int i = 1; i <= n; ++i) {
    const Rational s(i, n + 1);
    points.push_back(Point({Rational(1) - s, s}));
  }
  std::vector<Cell> cells;
  VertexId prev = 0;
  for (int i = 1; i <= n; ++i) {
    cells.push_back({prev, static_cast<VertexId>(1 + i)});
    prev = static_cast<VertexId>(1 + i);
  }
  cells.push_back({prev, 1});
  Triangulation t(ref, std::move(points), std::move(cells));
  require_fast_valid(t, "segment_family");
  return t;
}

Triangulation join(const Triangulation& a, const Triangulation& b) {
  const int da = a.d(), db = b.d();
  const int ambient = da + db;
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(a.point_count() + b.point_count()));
  for (VertexId i = 0; i < a.point_count(); ++i) {
    const auto& lambda = a.chart(i);
    if (!lambda) throw std::invalid_argument("join: left factor has a point outside its hull");
    std::vector<Rational> c(static_cast<std::size_t>(ambient), Rational(0));
    for (int k = 0; k < da; ++k) c[static_cast<std::size_t>(k)] = (*lambda)[static_cast<std::size_t>(k)];
    points.emplace_back(std::move(c));
  }
  for (VertexId j = 0; j < b.point_count(); ++j) {
    const auto& lambda = b.chart(j);
    if (!lambda) throw std::invalid_argument("join: right factor has a point outside its hull");
    std::vector<Rational> c(static_cast<std::size_t>(ambient), Rational(0));
    for (int k = 0; k < db; ++k)
      c[static_cast<std::size_t>(da + k)] = (*lambda)[static_cast<std::size_t>(k)];
    points.emplace_back(std::move(c));
  }
  std::vector<Cell> cells;
  cells.reserve(a.cells().size() * b.cells().size());
  for (const Cell& ca : a.cells()) {
    for (const Cell& cb : b.cells()) {
      Cell cell = ca;
      for (VertexId v : cb) cell.push_back(static_cast<VertexId>(v + a.point_count()));
      cells.push_back(std::move(cell));
    }
  }
  Triangulation t(ReferenceSimplex::standard(ambient), std::move(points), std::move(cells));
  require_fast_valid(t, "join");
  return t;
}

Triangulation cone(const Triangulation& b) {
  const ReferenceSimplex apex(std::vector<Point>{Point({Rational(1)})});
  return join(b, trivial(apex));
}

Triangulation facet_refine(const Triangulation& t, const Cell& cell,
                           const Triangulation& replacement) {
  Cell target = cell;
  std::sort(target.begin(), target.end());
  if (!t.has_cell(target))
    throw std::invalid_argument("facet_refine: " + ids_to_string(target) + " is not a cell");

  // The replacement must triangulate exactly this cell.
  std::vector<Point> cell_points;
  for (VertexId v : target) cell_points.push_back(t.point(v));
  {
    std::vector<Point> lhs = cell_points, rhs = replacement.reference().vertices();
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs)
      throw std::invalid_argument(
          "facet_refine: replacement reference simplex differs from the cell");
  }
  {
    const ValidationReport report = replacement.validate(ValidationLevel::Fast);
    if (!report.ok())
      throw std::invalid_argument("facet_refine: replacement is invalid:\n" + report.to_string());
  }

  // Map replacement vertices to global ids; reference vertices of the
  // replacement coincide with the cell's points, everything else is new.
  std::vector<VertexId> repl_to_global(static_cast<std::size_t>(replacement.point_count()), -1);
  std::vector<Point> new_points = t.points();
  for (VertexId r = 0; r < replacement.point_count(); ++r) {
    const Point& p = replacement.point(r);
    std::optional<VertexId> existing;
    for (VertexId v : target) {
      if (t.point(v) == p) {
        existing = v;
        break;
      }
    }
    if (existing) {
      repl_to_global[static_cast<std::size_t>(r)] = *existing;
      continue;
    }
    // New point: the smallest cell face carrying it must be private to
    // this cell, otherwise the refinement subdivides a shared face.
    const auto& lambda = replacement.chart(r);
    if (!lambda)
      throw std::invalid_argument("facet_refine: replacement point outside the cell hull");
    std::vector<VertexId> carrier_face;
    for (int pos = 0; pos < replacement.d(); ++pos) {
      if ((*lambda)[static_cast<std::size_t>(pos)] != 0) {
        const Point& ref_vertex = replacement.reference().vertices()[static_cast<std::size_t>(pos)];
        for (VertexId v : target) {
          if (t.point(v) == ref_vertex) {
            carrier_face.push_back(v);
            break;
          }
        }
      }
    }
    std::sort(carrier_face.begin(), carrier_face.end());
    if (t.face_shared_with_other_cell(target, carrier_face))
      throw std::invalid_argument("facet_refine: replacement subdivides face " +
                                  ids_to_string(carrier_face) + " shared with another cell");
    repl_to_global[static_cast<std::size_t>(r)] = static_cast<VertexId>(new_points.size());
    new_points.push_back(p);
  }

  std::vector<Cell> new_cells;
  for (const Cell& c : t.cells()) {
    if (c != target) new_cells.push_back(c);
  }
  for (const Cell& rc : replacement.cells()) {
    Cell mapped;
    for (VertexId r : rc) mapped.push_back(repl_to_global[static_cast<std::size_t>(r)]);
    std::sort(mapped.begin(), mapped.end());
    new_cells.push_back(std::move(mapped));
  }
  Triangulation result(t.reference(), std::move(new_points), std::move(new_cells));
  require_fast_valid(result, "facet_refine");
  return result;
}

Triangulation conical_facet_refine(const Triangulation& t, const RefinementStep& step) {
  Cell target = step.target_cell;
  std::sort(target.begin(), target.end());
  if (!t.has_cell(target))
    throw std::invalid_argument("conical_facet_refine: target cell " + ids_to_string(target) +
                                " is not a cell");
  if (!std::binary_search(target.begin(), target.end(), step.apex))
    throw std::invalid_argument("conical_facet_refine: apex " + std::to_string(step.apex) +
                                " is not a vertex of the target cell");
  if (step.new_points.empty())
    throw std::invalid_argument("conical_facet_refine: step introduces no new points");

  std::vector<VertexId> h_ids;
  for (VertexId v : target) {
    if (v != step.apex) h_ids.push_back(v);
  }
  if (t.face_shared_with_other_cell(target, h_ids))
    throw std::invalid_argument("conical_facet_refine: non-conical-eligible face " +
                                ids_to_string(h_ids) + " is shared with another cell");

  std::vector<Point> base_points;
  for (VertexId v : h_ids) base_points.push_back(t.point(v));
  const std::size_t h_size = base_points.size();
  base_points.insert(base_points.end(), step.new_points.begin(), step.new_points.end());

  std::vector<Cell> base_cells;
  for (const auto& bc : step.base_cells) {
    Cell cell;
    for (int local : bc) {
      if (local < 0 || local >= static_cast<int>(base_points.size()))
        throw std::invalid_argument("conical_facet_refine: base cell index out of range");
      cell.push_back(static_cast<VertexId>(local));
    }
    base_cells.push_back(std::move(cell));
  }
  std::vector<Point> h_points(base_points.begin(), base_points.begin() + static_cast<long>(h_size));
  Triangulation base(ReferenceSimplex(std::move(h_points)), base_points, base_cells);
  {
    const ValidationReport report = base.validate(ValidationLevel::Fast);
    if (!report.ok())
      throw std::invalid_argument("conical_facet_refine: invalid base subdivision:\n" +
                                  report.to_string());
  }

  // Cone: every base cell plus the apex.
  std::vector<Point> repl_points = base_points;
  repl_points.push_back(t.point(step.apex));
  const VertexId apex_local = static_cast<VertexId>(repl_points.size() - 1);
  std::vector<Cell> repl_cells;
  for (const Cell& bc : base_cells) {
    Cell cell = bc;
    cell.push_back(apex_local);
    repl_cells.push_back(std::move(cell));
  }
  std::vector<Point> target_points;
  for (VertexId v : target) target_points.push_back(t.point(v));
  Triangulation replacement(ReferenceSimplex(std::move(target_points)), std::move(repl_points),
                            std::move(repl_cells));
  return facet_refine(t, target, replacement);
}

Triangulation base_triangulation(const CertificateBase& base) {
  switch (base.kind) {
    case BaseKind::Trivial:
      return trivial(base.reference);
    case BaseKind::Triforce:
      return triforce_like(base.reference, base.base_points);
  }
  throw std::logic_error("base_triangulation: unknown base kind");
}

Triangulation replay(const Certificate& cert) {
  Triangulation t = base_triangulation(cert.base);
  std::size_t index = 0;
  for (const RefinementStep& step : cert.steps) {
    try {
      t = conical_facet_refine(t, step);
    } catch (const std::exception& e) {
      throw std::invalid_argument("replay: step " + std::to_string(index) +
                                  " failed: " + e.what());
    }
    ++index;
  }
  return t;
}

Triangulation stellar_subdivide(const Triangulation& t, const std::vector<VertexId>& face,
                                const Point& p) {
  std::vector<VertexId> f = face;
  std::sort(f.begin(), f.end());
  if (f.size() < 2)
    throw std::invalid_argument("stellar_subdivide: face needs at least two vertices");
  if (!t.is_face(Face{f}))
    throw std::invalid_argument("stellar_subdivide: " + ids_to_string(f) + " is not a face");
  if (t.find_point(p))
    throw std::invalid_argument("stellar_subdivide: point already present");

  std::vector<Point> points = t.points();
  const VertexId fresh = static_cast<VertexId>(points.size());
  points.push_back(p);
  std::vector<Cell> cells;
  for (const Cell& cell : t.cells()) {
    if (!std::includes(cell.begin(), cell.end(), f.begin(), f.end())) {
      cells.push_back(cell);
      continue;
    }
    for (VertexId s : f) {
      Cell split;
      for (VertexId v : cell) {
        if (v != s) split.push_back(v);
      }
      split.push_back(fresh);
      std::sort(split.begin(), split.end());
      cells.push_back(std::move(split));
    }
  }
  Triangulation result(t.reference(), std::move(points), std::move(cells));
  require_fast_valid(result, "stellar_subdivide");
  return result;
}

Triangulation random_face_subdivision(const Triangulation& t, const Cell& cell,
                                      const std::vector<VertexId>& face_ids, int moves,
                                      Rng& rng) {
  std::vector<VertexId> face = face_ids;
  std::sort(face.begin(), face.end());
  std::vector<Point> face_points;
  for (VertexId v : face) face_points.push_back(t.point(v));
  Triangulation sub = trivial(ReferenceSimplex(std::move(face_points)));

  for (int move = 0; move < moves; ++move) {
    // Candidate stellar centers: faces of the current subdivision whose
    // carrier (a face of conv(face)) is not shared with another cell of t.
    std::vector<Face> candidates;
    for (int k = 1; k <= sub.dim(); ++k) {
      for (const Face& g : sub.faces(k)) {
        const PositionMask mask = sub.face_carrier_mask(g);
        std::vector<VertexId> carrier_global;
        for (int pos : mask_to_positions(mask))
          carrier_global.push_back(face[static_cast<std::size_t>(pos)]);
        if (!t.face_shared_with_other_cell(cell, carrier_global)) candidates.push_back(g);
      }
    }
    if (candidates.empty()) break;
    const Face& g = candidates[uniform_below(rng, candidates.size())];
    Rational total(0);
    std::vector<Rational> weights;
    for (std::size_t i = 0; i < g.ids.size(); ++i) {
      weights.emplace_back(1 + static_cast<long>(uniform_below(rng, 3)));
      total += weights.back();
    }
    std::vector<Rational> coords(static_cast<std::size_t>(sub.ambient_dim()), Rational(0));
    for (std::size_t i = 0; i < g.ids.size(); ++i) {
      const Point& q = sub.point(g.ids[i]);
      for (std::size_t c = 0; c < coords.size(); ++c) coords[c] += weights[i] / total * q.coords[c];
    }
    sub = stellar_subdivide(sub, g.ids, Point(std::move(coords)));
  }
  return sub;
}

GeneratedInstance random_iterated(const CertificateBase& base, int steps, std::uint64_t seed) {
  if (steps < 0) throw std::invalid_argument("random_iterated: steps must be nonnegative");
  Rng rng(seed);
  Triangulation t = base_triangulation(base);
  Certificate cert{base, {}, seed, steps};

  for (int s = 0; s < steps; ++s) {
    std::vector<std::pair<Cell, VertexId>> candidates;
    for (const Cell& cell : t.cells()) {
      for (VertexId apex : cell) {
        std::vector<VertexId> h;
        for (VertexId v : cell) {
          if (v != apex) h.push_back(v);
        }
        if (h.size() < 2) continue;  // a point admits no nontrivial subdivision
        if (!t.face_shared_with_other_cell(cell, h)) candidates.emplace_back(cell, apex);
      }
    }
    if (candidates.empty())
      throw std::logic_error("random_iterated: no eligible conical refinement exists");
    const auto& [cell, apex] = candidates[uniform_below(rng, candidates.size())];
    std::vector<VertexId> h;
    for (VertexId v : cell) {
      if (v != apex) h.push_back(v);
    }
    const int moves = 1 + (uniform_below(rng, 4) == 0 ? 1 : 0);
    const Triangulation base_sub = random_face_subdivision(t, cell, h, moves, rng);

    RefinementStep step;
    step.target_cell = cell;
    step.apex = apex;
    for (VertexId r = static_cast<VertexId>(h.size()); r < base_sub.point_count(); ++r)
      step.new_points.push_back(base_sub.point(r));
    for (const Cell& bc : base_sub.cells()) {
      std::vector<int> local(bc.begin(), bc.end());
      step.base_cells.push_back(std::move(local));
    }
    t = conical_facet_refine(t, step);
    cert.steps.push_back(std::move(step));
  }
  return {std::move(t), std::move(cert)};
}

}  // namespace localh
