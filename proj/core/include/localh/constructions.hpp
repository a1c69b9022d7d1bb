#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "localh/triangulation.hpp"

namespace localh {

using Rng = std::mt19937_64;

/// Deterministic, platform-independent draw from [0, n).
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);

enum class BaseKind { Trivial, Triforce };

/// Starting triangulation of a certificate: the trivial subdivision of
/// the stored reference simplex, or a triforce-class subdivision given by
/// one point on each edge (base_points[i] lies on the edge opposite
/// reference vertex i).
struct CertificateBase {
  BaseKind kind = BaseKind::Trivial;
  ReferenceSimplex reference;
  std::vector<Point> base_points;  // triforce only

  static CertificateBase trivial(ReferenceSimplex ref) {
    return CertificateBase{BaseKind::Trivial, std::move(ref), {}};
  }
  static CertificateBase trivial_standard(int d) {
    return trivial(ReferenceSimplex::standard(d));
  }
  static CertificateBase triforce_standard();
};

/// One conical facet refinement: replace target_cell by the cone from
/// apex over a subdivision of the opposite facet H = target_cell \ {apex}.
/// base_cells use local indices: 0..|H|-1 are H's vertices in ascending
/// global order, |H|+k is new_points[k].
struct RefinementStep {
  Cell target_cell;
  VertexId apex = -1;
  std::vector<Point> new_points;
  std::vector<std::vector<int>> base_cells;
};

struct Certificate {
  CertificateBase base;
  std::vector<RefinementStep> steps;
  std::optional<std::uint64_t> seed;    // reproducibility metadata
  std::optional<int> requested_steps;
};

Triangulation trivial(const ReferenceSimplex& ref);

/// The standard 2-simplex subdivided at its three edge midpoints.
Triangulation triforce();

/// Triforce-class subdivision with arbitrary edge points; edge_points[i]
/// must lie strictly inside the edge opposite reference vertex i.
Triangulation triforce_like(const ReferenceSimplex& ref, const std::vector<Point>& edge_points);

/// The 1-simplex with n equally spaced interior vertices (n+1 cells).
Triangulation segment_family(int n);

/// Geometric join: both factors are mapped to their barycentric charts in
/// coordinate-disjoint blocks, so the join reference is the standard
/// simplex of dimension d_a + d_b - 1.
Triangulation join(const Triangulation& a, const Triangulation& b);

/// Join with a fresh apex point.
Triangulation cone(const Triangulation& b);

/// Replace one cell by a triangulation of it. The replacement must not
/// subdivide any face the cell shares with another cell.
Triangulation facet_refine(const Triangulation& t, const Cell& cell,
                           const Triangulation& replacement);

/// Apply one conical facet refinement step.
Triangulation conical_facet_refine(const Triangulation& t, const RefinementStep& step);

Triangulation base_triangulation(const CertificateBase& base);

/// Replay a certificate from its base; every step is validated.
Triangulation replay(const Certificate& cert);

/// Stellar subdivision of the whole complex at a point in the relative
/// interior of the given face: every cell containing the face is split.
Triangulation stellar_subdivide(const Triangulation& t, const std::vector<VertexId>& face,
                                const Point& p);

/// Random triangulation of conv(face_ids) (a face of `cell`), built from
/// the trivial subdivision by stellar moves whose carriers avoid faces
/// shared with other cells of t. Used for refinement bases and for
/// replacement generation; deterministic given the rng state.
Triangulation random_face_subdivision(const Triangulation& t, const Cell& cell,
                                      const std::vector<VertexId>& face_ids, int moves,
                                      Rng& rng);

struct GeneratedInstance {
  Triangulation triangulation;
  Certificate certificate;
};

/// Seeded sequence of random conical facet refinements from the base.
/// Reproducible: the same (base, steps, seed) yields identical output.
GeneratedInstance random_iterated(const CertificateBase& base, int steps, std::uint64_t seed);

}  // namespace localh
