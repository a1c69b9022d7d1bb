#include "localh/internal_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "localh/local_h.hpp"

namespace localh {

int InternalEdgeGraph::excess_of(VertexId v) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v)
    throw std::invalid_argument("excess_of: vertex not in the internal edge graph");
  return vertex_excess[static_cast<std::size_t>(it - vertices.begin())];
}

std::string to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::TREE_UNIQUE_LOW_EXCESS: return "TREE_UNIQUE_LOW_EXCESS";
    case ComponentClass::DIM3_UNIQUE_3CYCLE: return "DIM3_UNIQUE_3CYCLE";
    case ComponentClass::OTHER: return "OTHER";
  }
  return "OTHER";
}

InternalEdgeGraph internal_edge_graph(const Triangulation& t) {
  if (t.d() < 2) throw std::invalid_argument("internal_edge_graph requires d >= 2");
  InternalEdgeGraph g;
  g.d = t.d();
  const PositionMask full = t.full_mask();
  std::set<VertexId> verts;
  for (const Face& e : t.faces(1)) {
    if (t.face_carrier_mask(e) != full) continue;
    g.edges.emplace_back(e.ids[0], e.ids[1]);
    verts.insert(e.ids[0]);
    verts.insert(e.ids[1]);
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.vertices.assign(verts.begin(), verts.end());
  g.vertex_excess.reserve(g.vertices.size());
  for (VertexId v : g.vertices) {
    const int carrier_dim =
        static_cast<int>(mask_to_positions(t.point_carrier_mask(v)).size()) - 1;
    g.vertex_excess.push_back(carrier_dim);  // excess of a 0-face = dim of its carrier
  }

  // Connected components by union-find over the edge list.
  std::map<VertexId, VertexId> parent;
  for (VertexId v : g.vertices) parent[v] = v;
  std::function<VertexId(VertexId)> find = [&](VertexId v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const auto& [a, b] : g.edges) parent[find(a)] = find(b);
  std::map<VertexId, std::vector<VertexId>> comps;
  for (VertexId v : g.vertices) comps[find(v)].push_back(v);
  for (auto& [root, members] : comps) {
    std::sort(members.begin(), members.end());
    g.components.push_back(members);
  }
  std::sort(g.components.begin(), g.components.end());
  return g;
}

std::vector<ComponentReport> component_reports(const InternalEdgeGraph& g,
                                               const Triangulation& t) {
  std::vector<ComponentReport> reports;
  const int d = t.d();
  std::map<VertexId, std::set<VertexId>> adjacency;
  for (const auto& [a, b] : g.edges) {
    adjacency[a].insert(b);
    adjacency[b].insert(a);
  }
  for (std::size_t ci = 0; ci < g.components.size(); ++ci) {
    const auto& members = g.components[ci];
    ComponentReport r;
    r.component_id = static_cast<int>(ci);
    r.vertex_count = static_cast<int>(members.size());
    std::set<VertexId> member_set(members.begin(), members.end());
    int edges = 0;
    for (const auto& [a, b] : g.edges) {
      if (member_set.count(a)) ++edges;
    }
    r.edge_count = edges;
    r.euler_characteristic = r.vertex_count - r.edge_count;

    bool all_exactly_facet_excess = true;
    for (VertexId v : members) {
      const int e = g.excess_of(v);
      if (e < d - 2) {
        r.low_excess_vertices.push_back(v);
        r.f0_low_excess += 1;
      } else if (e == d - 2) {
        r.f0_facet_carried += 1;
      }
      if (e != d - 2) all_exactly_facet_excess = false;
    }
    r.f1_interior = Int(edges);

    for (const auto& [a, b] : g.edges) {
      if (!member_set.count(a)) continue;
      for (VertexId c : adjacency[a]) {
        if (c <= b) continue;
        if (adjacency[b].count(c)) r.simple_3_cycles.push_back({a, b, c});
      }
    }
    std::sort(r.simple_3_cycles.begin(), r.simple_3_cycles.end());

    if (r.euler_characteristic == 1 && r.low_excess_vertices.size() == 1) {
      r.classification = ComponentClass::TREE_UNIQUE_LOW_EXCESS;
    } else if (d == 3 && all_exactly_facet_excess && r.euler_characteristic == 0 &&
               r.simple_3_cycles.size() == 1) {
      r.classification = ComponentClass::DIM3_UNIQUE_3CYCLE;
    } else {
      r.classification = ComponentClass::OTHER;
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

namespace {

void require_low_local_h(const Triangulation& t, const char* who) {
  const IntPolynomial l = local_h_excess(t);
  if (l.coeff(1) != 0)
    throw std::invalid_argument(std::string(who) + ": precondition failed, l1 = " +
                                l.coeff(1).str() + " is nonzero");
  if (l.coeff(2) != 0)
    throw std::invalid_argument(std::string(who) + ": precondition failed, l2 = " +
                                l.coeff(2).str() + " is nonzero");
}

}  // namespace

CheckResult check_tree_structure(const Triangulation& t) {
  if (t.d() < 4) throw std::invalid_argument("check_tree_structure requires d >= 4");
  require_low_local_h(t, "check_tree_structure");
  const InternalEdgeGraph g = internal_edge_graph(t);
  CheckResult result;
  for (const ComponentReport& r : component_reports(g, t)) {
    if (r.classification != ComponentClass::TREE_UNIQUE_LOW_EXCESS) {
      result.ok = false;
      result.component_id = r.component_id;
      result.detail = "component " + std::to_string(r.component_id) + " has chi=" +
                      std::to_string(r.euler_characteristic) + " and " +
                      std::to_string(r.low_excess_vertices.size()) +
                      " low-excess vertices (expected a tree with exactly one)";
      return result;
    }
  }
  return result;
}

ConnectivityReport is_connected_dim2(const Triangulation& t) {
  if (t.d() != 3) throw std::invalid_argument("is_connected_dim2 requires d = 3");
  const InternalEdgeGraph g = internal_edge_graph(t);
  ConnectivityReport r;
  if (g.empty()) {
    r.empty = true;
    r.connected = true;
    return r;
  }
  r.connected = g.components.size() == 1;
  return r;
}

std::vector<PyramidReport> pyramid_facets(const Triangulation& t) {
  std::vector<PyramidReport> reports;
  const PositionMask full = t.full_mask();
  for (const Cell& cell : t.cells()) {
    PyramidReport r;
    r.cell = cell;
    for (VertexId w : cell) {
      PositionMask rest = 0;
      for (VertexId v : cell) {
        if (v != w) rest |= t.point_carrier_mask(v);
      }
      if (rest != full) {
        r.is_pyramid = true;
        r.witness_face = mask_to_positions(rest);
        r.exceptional_vertex = w;
        break;
      }
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

CheckResult check_interior_edge_pyramids(const Triangulation& t) {
  if (t.d() < 4) throw std::invalid_argument("check_interior_edge_pyramids requires d >= 4");
  require_low_local_h(t, "check_interior_edge_pyramids");
  const PositionMask full = t.full_mask();
  const auto pyramids = pyramid_facets(t);
  CheckResult result;
  for (const PyramidReport& r : pyramids) {
    bool has_interior_edge = false;
    for (std::size_t i = 0; i < r.cell.size() && !has_interior_edge; ++i) {
      for (std::size_t j = i + 1; j < r.cell.size() && !has_interior_edge; ++j) {
        const PositionMask mask =
            t.point_carrier_mask(r.cell[i]) | t.point_carrier_mask(r.cell[j]);
        if (mask == full) has_interior_edge = true;
      }
    }
    if (has_interior_edge && !r.is_pyramid) {
      result.ok = false;
      result.cell = r.cell;
      result.detail = "cell with an interior edge is not a pyramid";
      return result;
    }
  }
  return result;
}

int count_non_pyramid_facets(const Triangulation& t) {
  int count = 0;
  for (const PyramidReport& r : pyramid_facets(t)) {
    if (!r.is_pyramid) ++count;
  }
  return count;
}

}  // namespace localh
