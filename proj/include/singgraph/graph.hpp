#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "singgraph/errors.hpp"

namespace sg {

// Exact integer used for every intersection-theoretic computation. Pairings,
// determinants and genera are evaluated in arbitrary precision and only
// narrowed at serialization boundaries.
using Int = boost::multiprecision::cpp_int;

using VertexId = std::string;

// Narrow an exact integer to int64, throwing instead of truncating.
long long to_int64(const Int& value);

// Weighted dual graph of the exceptional divisor of a minimal resolution.
// Vertices are irreducible curves E_i (all rational), the weight is the
// self-intersection E_i*E_i <= -2, and an edge records a transverse
// intersection of two curves. Immutable after construction.
class DualGraph {
 public:
  // Validates and builds a graph; vertex order is the input order.
  // Throws ValidationError (duplicate id, self-loop, duplicate edge,
  // weight above -2, disconnected) or SchemaError (unknown edge endpoint).
  static DualGraph from_parts(std::vector<VertexId> ids,
                              std::vector<long long> weights,
                              const std::vector<std::pair<VertexId, VertexId>>& edges);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::vector<VertexId>& ids() const { return ids_; }
  const VertexId& id(int v) const { return ids_[static_cast<size_t>(v)]; }
  long long weight(int v) const { return weights_[static_cast<size_t>(v)]; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

  // Normalized (a < b by vertex index), sorted by index pair.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_edge(int a, int b) const;
  std::optional<int> find(const VertexId& id) const;
  int index_of(const VertexId& id) const;  // throws SchemaError if unknown

  // Connectedness is a construction invariant, so tree-ness is just an
  // edge count check.
  bool is_tree() const { return edge_count() == size() - 1; }

  // K*E_v for each vertex: -(E_v*E_v) - 2 by adjunction on a rational curve.
  std::vector<long long> adjunction() const;

  bool operator==(const DualGraph& other) const;
  bool operator!=(const DualGraph& other) const { return !(*this == other); }

 private:
  DualGraph() = default;

  std::vector<VertexId> ids_;
  std::vector<long long> weights_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::map<VertexId, int> index_;
};

// Non-negative multiplicity vector over a fixed graph's vertex set.
class Cycle {
 public:
  explicit Cycle(std::vector<long long> mult) : mult_(std::move(mult)) {}

  static Cycle zero(const DualGraph& g) { return Cycle(std::vector<long long>(g.size(), 0)); }
  // The reduced exceptional cycle E: every multiplicity 1.
  static Cycle reduced(const DualGraph& g) { return Cycle(std::vector<long long>(g.size(), 1)); }

  int size() const { return static_cast<int>(mult_.size()); }
  long long at(int v) const { return mult_[static_cast<size_t>(v)]; }
  void set(int v, long long value);
  void bump(int v) { mult_[static_cast<size_t>(v)] += 1; }

  bool is_zero() const;
  bool is_positive() const;  // all multiplicities >= 1
  bool is_reduced() const;   // all multiplicities == 1

  const std::vector<long long>& multiplicities() const { return mult_; }

  // Componentwise difference; throws InternalError if any entry would
  // become negative (cycles are non-negative by definition).
  Cycle minus(const Cycle& other) const;

  bool operator==(const Cycle& other) const { return mult_ == other.mult_; }
  bool operator!=(const Cycle& other) const { return !(*this == other); }

 private:
  std::vector<long long> mult_;
};

// Graph JSON schema:
//   { "vertices": [ {"id": <string>, "sq": <integer <= -2>}, ... ],
//     "edges":    [ [<id>, <id>], ... ] }
// Unknown fields are rejected.
DualGraph parse_graph(const std::string& text);
DualGraph graph_from_json(const nlohmann::json& doc);

// Canonical serialization: vertices in input order, edges sorted
// lexicographically by id pair (bit-stable for golden tests).
nlohmann::json graph_to_json(const DualGraph& g);
std::string serialize_graph(const DualGraph& g);

// Cycles serialize as {"vertexId": multiplicity} objects.
nlohmann::json cycle_to_json(const DualGraph& g, const Cycle& c);

// M[i][i] = self-intersection, M[i][j] = 1 iff edge {i,j}.
std::vector<std::vector<long long>> intersection_matrix(const DualGraph& g);

// Exact check via signs of leading principal minors (fraction-free
// Bareiss elimination over arbitrary-precision integers).
bool is_negative_definite(const DualGraph& g);

// c1^T M c2; symmetric bilinear. Throws DomainError("domain_mismatch") if a
// cycle does not live over g's vertex set.
Int pairing(const DualGraph& g, const Cycle& c1, const Cycle& c2);

// K*c = sum_v c(v) * (-w(v) - 2).
Int canonical_pairing(const DualGraph& g, const Cycle& c);

}  // namespace sg
