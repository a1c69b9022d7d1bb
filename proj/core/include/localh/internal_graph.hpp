#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "localh/rational.hpp"
#include "localh/triangulation.hpp"

namespace localh {

/// The graph of edges of the triangulation carried by the full reference
/// simplex, together with the vertices incident to them.
struct InternalEdgeGraph {
  int d = 0;
  std::vector<VertexId> vertices;                        // sorted
  std::vector<int> vertex_excess;                        // parallel to vertices
  std::vector<std::pair<VertexId, VertexId>> edges;      // sorted pairs, a < b
  std::vector<std::vector<VertexId>> components;         // sorted ids per component

  bool empty() const { return edges.empty(); }
  int excess_of(VertexId v) const;
};

enum class ComponentClass {
  TREE_UNIQUE_LOW_EXCESS,
  DIM3_UNIQUE_3CYCLE,
  OTHER,
};

std::string to_string(ComponentClass c);

struct ComponentReport {
  int component_id = 0;
  int vertex_count = 0;
  int edge_count = 0;
  int euler_characteristic = 0;
  std::vector<VertexId> low_excess_vertices;              // excess < d-2
  std::vector<std::array<VertexId, 3>> simple_3_cycles;   // triangles, lex order
  ComponentClass classification = ComponentClass::OTHER;
  Int f0_facet_carried;   // vertices of excess exactly d-2
  Int f0_low_excess;      // vertices of excess < d-2
  Int f1_interior;        // edges (all are interior by construction)
};

/// Builds the internal edge graph. Requires d >= 2.
InternalEdgeGraph internal_edge_graph(const Triangulation& t);

std::vector<ComponentReport> component_reports(const InternalEdgeGraph& g,
                                               const Triangulation& t);

struct CheckResult {
  bool ok = true;
  std::string detail;                      // witness description on failure
  std::optional<int> component_id;
  std::optional<Cell> cell;
};

/// For d >= 4 with l1 = l2 = 0: the internal edge graph must be a union
/// of trees, each containing exactly one vertex supported on a face of
/// codimension at least 2 (excess < d-2). Throws when the precondition
/// fails, naming the offending coefficient.
CheckResult check_tree_structure(const Triangulation& t);

struct ConnectivityReport {
  bool connected = true;
  bool empty = false;
};

/// Connectivity of the internal edge graph for triangulations of a
/// triangle (d = 3). An empty graph reports connected with the empty flag.
ConnectivityReport is_connected_dim2(const Triangulation& t);

struct PyramidReport {
  Cell cell;
  bool is_pyramid = false;
  std::vector<int> witness_face;     // reference positions of a proper face
  VertexId exceptional_vertex = -1;  // the vertex left out
};

/// For each cell, whether some proper face of the reference simplex
/// contains every vertex of the cell except one.
std::vector<PyramidReport> pyramid_facets(const Triangulation& t);

/// For d >= 4 with l1 = l2 = 0: every cell containing an interior edge
/// must be a pyramid. Throws on precondition failure.
CheckResult check_interior_edge_pyramids(const Triangulation& t);

int count_non_pyramid_facets(const Triangulation& t);

}  // namespace localh
