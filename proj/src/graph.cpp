#include "singgraph/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

namespace sg {

long long to_int64(const Int& value) {
  if (value > std::numeric_limits<long long>::max() ||
      value < std::numeric_limits<long long>::min()) {
    throw InternalError("overflow", "exact value does not fit in 64 bits: " + value.str());
  }
  return static_cast<long long>(value);
}

DualGraph DualGraph::from_parts(std::vector<VertexId> ids,
                                std::vector<long long> weights,
                                const std::vector<std::pair<VertexId, VertexId>>& edges) {
  if (ids.size() != weights.size()) {
    throw SchemaError("vertex/weight count mismatch");
  }
  if (ids.empty()) {
    throw SchemaError("graph must have at least one vertex");
  }

  DualGraph g;
  g.ids_ = std::move(ids);
  g.weights_ = std::move(weights);
  for (size_t i = 0; i < g.ids_.size(); ++i) {
    if (g.ids_[i].empty()) {
      throw SchemaError("vertex id must be a non-empty string");
    }
    auto [it, inserted] = g.index_.emplace(g.ids_[i], static_cast<int>(i));
    if (!inserted) {
      throw ValidationError(ValidationError::Reason::DuplicateId,
                            "duplicate vertex id: " + g.ids_[i]);
    }
  }
  for (size_t i = 0; i < g.weights_.size(); ++i) {
    if (g.weights_[i] > -2) {
      throw ValidationError(ValidationError::Reason::WeightAboveMinusTwo,
                            "self-intersection of " + g.ids_[i] +
                                " must be <= -2 (minimal resolution)");
    }
  }

  g.adj_.assign(g.ids_.size(), {});
  std::set<std::pair<int, int>> seen;
  for (const auto& [a_id, b_id] : edges) {
    auto a = g.find(a_id);
    auto b = g.find(b_id);
    if (!a || !b) {
      throw SchemaError("edge references unknown vertex id: " + (!a ? a_id : b_id));
    }
    if (*a == *b) {
      throw ValidationError(ValidationError::Reason::SelfLoop,
                            "self-loop at vertex " + a_id);
    }
    auto key = std::minmax(*a, *b);
    if (!seen.insert(key).second) {
      throw ValidationError(ValidationError::Reason::DuplicateEdge,
                            "duplicate edge {" + a_id + ", " + b_id + "}");
    }
  }
  g.edges_.assign(seen.begin(), seen.end());
  for (const auto& [a, b] : g.edges_) {
    g.adj_[static_cast<size_t>(a)].push_back(b);
    g.adj_[static_cast<size_t>(b)].push_back(a);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());

  // Connectivity (BFS from vertex 0).
  std::vector<char> visited(g.ids_.size(), 0);
  std::queue<int> frontier;
  frontier.push(0);
  visited[0] = 1;
  size_t reached = 1;
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int u : g.neighbors(v)) {
      if (!visited[static_cast<size_t>(u)]) {
        visited[static_cast<size_t>(u)] = 1;
        ++reached;
        frontier.push(u);
      }
    }
  }
  if (reached != g.ids_.size()) {
    throw ValidationError(ValidationError::Reason::Disconnected,
                          "graph is not connected");
  }
  return g;
}

bool DualGraph::has_edge(int a, int b) const {
  const auto& nbrs = adj_[static_cast<size_t>(a)];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::optional<int> DualGraph::find(const VertexId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int DualGraph::index_of(const VertexId& id) const {
  auto v = find(id);
  if (!v) throw SchemaError("unknown vertex id: " + id);
  return *v;
}

std::vector<long long> DualGraph::adjunction() const {
  std::vector<long long> k(weights_.size());
  for (size_t i = 0; i < weights_.size(); ++i) k[i] = -weights_[i] - 2;
  return k;
}

bool DualGraph::operator==(const DualGraph& other) const {
  return ids_ == other.ids_ && weights_ == other.weights_ && edges_ == other.edges_;
}

void Cycle::set(int v, long long value) {
  if (value < 0) {
    throw InternalError("negative_multiplicity", "cycle multiplicities are non-negative");
  }
  mult_[static_cast<size_t>(v)] = value;
}

bool Cycle::is_zero() const {
  return std::all_of(mult_.begin(), mult_.end(), [](long long r) { return r == 0; });
}

bool Cycle::is_positive() const {
  return std::all_of(mult_.begin(), mult_.end(), [](long long r) { return r >= 1; });
}

bool Cycle::is_reduced() const {
  return std::all_of(mult_.begin(), mult_.end(), [](long long r) { return r == 1; });
}

Cycle Cycle::minus(const Cycle& other) const {
  if (size() != other.size()) {
    throw DomainError("domain_mismatch", "cycle domains differ");
  }
  std::vector<long long> out(mult_.size());
  for (size_t i = 0; i < mult_.size(); ++i) {
    out[i] = mult_[i] - other.mult_[i];
    if (out[i] < 0) {
      throw InternalError("negative_multiplicity", "cycle difference is not effective");
    }
  }
  return Cycle(std::move(out));
}

namespace {

long long require_int(const nlohmann::json& value, const std::string& where) {
  if (!value.is_number_integer()) {
    throw SchemaError(where + " must be an integer");
  }
  return value.get<long long>();
}

std::string require_string(const nlohmann::json& value, const std::string& where) {
  if (!value.is_string()) {
    throw SchemaError(where + " must be a string");
  }
  return value.get<std::string>();
}

void reject_unknown_fields(const nlohmann::json& obj,
                           const std::set<std::string>& allowed,
                           const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw SchemaError("unknown field \"" + it.key() + "\" in " + where);
    }
  }
}

}  // namespace

DualGraph graph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw SchemaError("top-level document must be an object");
  reject_unknown_fields(doc, {"vertices", "edges"}, "graph document");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw SchemaError("\"vertices\" must be an array");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw SchemaError("\"edges\" must be an array");
  }

  std::vector<VertexId> ids;
  std::vector<long long> weights;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_object()) throw SchemaError("vertex entries must be objects");
    reject_unknown_fields(v, {"id", "sq"}, "vertex entry");
    if (!v.contains("id") || !v.contains("sq")) {
      throw SchemaError("vertex entries need \"id\" and \"sq\"");
    }
    ids.push_back(require_string(v["id"], "vertex id"));
    weights.push_back(require_int(v["sq"], "vertex sq"));
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) {
      throw SchemaError("edges must be [id, id] pairs");
    }
    edges.emplace_back(require_string(e[0], "edge endpoint"),
                       require_string(e[1], "edge endpoint"));
  }
  return DualGraph::from_parts(std::move(ids), std::move(weights), edges);
}

DualGraph parse_graph(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  return graph_from_json(doc);
}

nlohmann::json graph_to_json(const DualGraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (int v = 0; v < g.size(); ++v) {
    vertices.push_back({{"id", g.id(v)}, {"sq", g.weight(v)}});
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(g.edges().size());
  for (const auto& [a, b] : g.edges()) {
    auto ids = std::minmax(g.id(a), g.id(b));
    pairs.emplace_back(ids.first, ids.second);
  }
  std::sort(pairs.begin(), pairs.end());
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : pairs) edges.push_back({a, b});
  return {{"vertices", vertices}, {"edges", edges}};
}

std::string serialize_graph(const DualGraph& g) {
  return graph_to_json(g).dump(2) + "\n";
}

nlohmann::json cycle_to_json(const DualGraph& g, const Cycle& c) {
  nlohmann::json out = nlohmann::json::object();
  for (int v = 0; v < g.size(); ++v) out[g.id(v)] = c.at(v);
  return out;
}

std::vector<std::vector<long long>> intersection_matrix(const DualGraph& g) {
  const size_t n = static_cast<size_t>(g.size());
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (int v = 0; v < g.size(); ++v) m[static_cast<size_t>(v)][static_cast<size_t>(v)] = g.weight(v);
  for (const auto& [a, b] : g.edges()) {
    m[static_cast<size_t>(a)][static_cast<size_t>(b)] = 1;
    m[static_cast<size_t>(b)][static_cast<size_t>(a)] = 1;
  }
  return m;
}

bool is_negative_definite(const DualGraph& g) {
  // Fraction-free Bareiss elimination; after step k the pivot equals the
  // leading principal minor d_k. Negative definite iff sign(d_k) = (-1)^k.
  const int n = g.size();
  std::vector<std::vector<Int>> m(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n)));
  const auto raw = intersection_matrix(g);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = raw[static_cast<size_t>(i)][static_cast<size_t>(j)];

  Int prev = 1;
  for (int k = 0; k < n; ++k) {
    const Int& pivot = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
    const bool want_negative = (k % 2 == 0);
    if (pivot == 0 || (pivot < 0) != want_negative) return false;
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            (m[static_cast<size_t>(i)][static_cast<size_t>(j)] * pivot -
             m[static_cast<size_t>(i)][static_cast<size_t>(k)] * m[static_cast<size_t>(k)][static_cast<size_t>(j)]) /
            prev;
      }
    }
    prev = pivot;
  }
  return true;
}

namespace {

void require_domain(const DualGraph& g, const Cycle& c) {
  if (c.size() != g.size()) {
    throw DomainError("domain_mismatch", "cycle domain differs from the graph's vertex set");
  }
}

}  // namespace

Int pairing(const DualGraph& g, const Cycle& c1, const Cycle& c2) {
  require_domain(g, c1);
  require_domain(g, c2);
  Int total = 0;
  for (int v = 0; v < g.size(); ++v) {
    total += Int(g.weight(v)) * c1.at(v) * c2.at(v);
  }
  for (const auto& [a, b] : g.edges()) {
    total += Int(c1.at(a)) * c2.at(b);
    total += Int(c1.at(b)) * c2.at(a);
  }
  return total;
}

Int canonical_pairing(const DualGraph& g, const Cycle& c) {
  require_domain(g, c);
  Int total = 0;
  for (int v = 0; v < g.size(); ++v) {
    total += Int(-g.weight(v) - 2) * c.at(v);
  }
  return total;
}

}  // namespace sg
