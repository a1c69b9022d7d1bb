#pragma once

#include <string>
#include <vector>

#include "localh/constructions.hpp"
#include "localh/triangulation.hpp"

namespace localh {

/// A full-dimensional sub-simplex F spanned by existing vertices, tiled
/// exactly by member cells, with the induced subdivision trivial on the
/// relative boundary of F. Coarsening replaces the members by F itself.
struct CoarsenableRegion {
  std::vector<VertexId> support;  // d vertex ids spanning F, sorted
  std::vector<Cell> member_cells; // sorted
};

/// All proper coarsenable regions with a nontrivial induced subdivision,
/// ordered by member count then lexicographic support. The improper
/// region F = Delta is excluded by convention.
std::vector<CoarsenableRegion> find_coarsenable_regions(const Triangulation& t);

/// The induced triangulation of the region (reference = its support).
Triangulation region_triangulation(const Triangulation& t, const CoarsenableRegion& r);

/// Replace the region's cells by the single cell F. Checks the exact
/// additivity law l(t) = l(coarsened) + l(region) and throws if it fails.
Triangulation coarsen(const Triangulation& t, const CoarsenableRegion& r);

/// Decomposition of a triangulation of a triangle (d = 3) with vanishing
/// local h-polynomial into a certificate over the trivial or triforce
/// base. Follows the internal-edge-graph case split.
Certificate decompose_dim2(const Triangulation& t);

/// Decomposition of a triangulation of a tetrahedron (d = 4) with
/// vanishing local h-polynomial into a certificate over the trivial base,
/// by searching for cone-shaped coarsenable regions (with backtracking).
Certificate decompose_dim3(const Triangulation& t);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> diff;

  std::string to_string() const;
};

/// Independent checker: replays the certificate step by step, validating
/// conical eligibility and local-h invariance of every step, then compares
/// the result with the target by exact coordinate sets.
VerifyResult verify_certificate(const Certificate& cert, const Triangulation& target);

}  // namespace localh
