#include "singgraph/blowdown.hpp"

#include <algorithm>
#include <map>

#include "singgraph/rdp.hpp"

namespace sg {

BlowdownStep tjurina_contract(const DualGraph& g, const Cycle& z) {
  if (arithmetic_genus(g, z) != 0) {
    throw not_rational();
  }
  const auto profile = intersection_profile(g, z);

  BlowdownStep step;
  for (int v = 0; v < g.size(); ++v) {
    if (profile[static_cast<size_t>(v)] == 0) {
      step.contracted.push_back(v);
    } else {
      step.surviving.push_back(v);
    }
  }

  // Connected components of the contracted set, each packaged as a
  // standalone graph with ids and weights inherited verbatim.
  std::map<int, int> comp;
  int n_comp = 0;
  for (int v : step.contracted) {
    if (comp.count(v)) continue;
    const int c = n_comp++;
    std::vector<int> stack{v};
    comp[v] = c;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(cur)) {
        if (profile[static_cast<size_t>(u)] == 0 && !comp.count(u)) {
          comp[u] = c;
          stack.push_back(u);
        }
      }
    }
  }

  std::vector<std::vector<int>> members(static_cast<size_t>(n_comp));
  for (int v : step.contracted) members[static_cast<size_t>(comp[v])].push_back(v);
  // step.contracted is ascending, so each member list is ascending and the
  // components are already ordered by smallest contained vertex.

  for (const auto& fiber_vertices : members) {
    std::vector<VertexId> ids;
    std::vector<long long> weights;
    for (int v : fiber_vertices) {
      ids.push_back(g.id(v));
      weights.push_back(g.weight(v));
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int v : fiber_vertices) {
      for (int u : g.neighbors(v)) {
        if (u > v && comp.count(u) && comp[u] == comp[v]) {
          edges.emplace_back(g.id(v), g.id(u));
        }
      }
    }
    step.fibers.push_back(DualGraph::from_parts(std::move(ids), std::move(weights), edges));
  }
  return step;
}

namespace {

TowerNode build_node(const DualGraph& g, bool is_root) {
  auto seq = fundamental_cycle(g);
  TowerNode node(g, seq.final());
  node.inv = scalar_invariants(g, seq);
  if (!node.inv.rational) {
    if (is_root) throw not_rational();
    // Sub-singularities of rational singularities are rational.
    throw InternalError("fiber_not_rational",
                        "a blowdown fiber of a rational graph failed the rationality check");
  }

  if (node.inv.e == 3) {
    node.rdp = ade_name(g);
    return node;
  }

  node.step = tjurina_contract(g, node.z);
  node.children.reserve(node.step.fibers.size());
  for (const auto& fiber : node.step.fibers) {
    node.children.push_back(build_node(fiber, false));
  }
  return node;
}

}  // namespace

TowerNode blowdown_tower(const DualGraph& g) { return build_node(g, true); }

}  // namespace sg
