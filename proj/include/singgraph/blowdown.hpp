#pragma once

#include <optional>
#include <string>
#include <vector>

#include "singgraph/correction.hpp"
#include "singgraph/cycles.hpp"

namespace sg {

// One Tjurina contraction: the blowup of X is obtained from the minimal
// resolution by contracting exactly the curves with Z*E = 0. Each connected
// component of the contracted set is the resolution graph of one singular
// point of the blowup, with self-intersections inherited unchanged.
struct BlowdownStep {
  std::vector<int> contracted;  // vertex indices, ascending
  std::vector<int> surviving;
  std::vector<DualGraph> fibers;  // ordered by smallest contained vertex index
};

// Throws DomainError("not_rational") when p_a(Z) != 0.
BlowdownStep tjurina_contract(const DualGraph& g, const Cycle& z);

// Recursive blowdown data for one graph. A node with e = 3 is a rational
// double point: terminal, tagged with its ADE name and tau = vertex count
// (dim T^2 = 0, hypersurface). Otherwise the node records its contraction
// step and recurses into each fiber.
struct TowerNode {
  DualGraph graph;
  Cycle z;
  ScalarInvariants inv;
  std::optional<std::string> rdp;  // set exactly when inv.e == 3
  BlowdownStep step;               // empty for terminal nodes
  std::vector<TowerNode> children;

  TowerNode(DualGraph graph_, Cycle z_) : graph(std::move(graph_)), z(std::move(z_)) {}
};

// Throws DomainError("not_rational") for a non-rational root; a non-rational
// fiber of a rational graph cannot occur and raises InternalError.
TowerNode blowdown_tower(const DualGraph& g);

}  // namespace sg
