#include "singgraph/gen.hpp"

#include <numeric>
#include <string>

namespace sg {

namespace {

DomainError invalid(const std::string& message) {
  return DomainError("invalid_parameters", message);
}

std::string cid(long long i) { return "c" + std::to_string(i); }

}  // namespace

DualGraph gen_chain(const std::vector<long long>& weights) {
  if (weights.empty()) throw invalid("chain needs at least one weight");
  std::vector<VertexId> ids;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (size_t i = 0; i < weights.size(); ++i) {
    ids.push_back(cid(static_cast<long long>(i + 1)));
    if (i > 0) edges.emplace_back(ids[i - 1], ids[i]);
  }
  return DualGraph::from_parts(std::move(ids), weights, edges);
}

DualGraph gen_cyclic(long long n, long long q) {
  if (n <= q || q < 1) throw invalid("cyclic quotient needs n > q >= 1");
  if (std::gcd(n, q) != 1) throw invalid("cyclic quotient needs gcd(n, q) = 1");

  // n/q = a1 - 1/(a2 - 1/(...)): a = ceil(n/q), then (n, q) <- (q, a*q - n).
  std::vector<long long> weights;
  while (q > 0) {
    const long long a = (n + q - 1) / q;
    weights.push_back(-a);
    const long long next_q = a * q - n;
    n = q;
    q = next_q;
  }
  return gen_chain(weights);
}

namespace {

struct CoreEdges {
  std::vector<std::pair<long long, long long>> edges;  // position pairs
};

// Core tree in canonical positions. A: a path. D: tail 0..m-3 (trivalent at
// m-3) plus two leaves. E6/E7/E8: long arm, center, second arm, branch leaf.
CoreEdges core_edges(const ConfigClass& cls) {
  CoreEdges out;
  const long long m = cls.m;
  switch (cls.family) {
    case ConfigFamily::ZeroA:
    case ConfigFamily::OneA:
    case ConfigFamily::TwoAL:
    case ConfigFamily::TwoAR:
    case ConfigFamily::TwoAS:
    case ConfigFamily::ThreeA:
      for (long long i = 0; i + 1 < m; ++i) out.edges.emplace_back(i, i + 1);
      return out;
    case ConfigFamily::ZeroD:
    case ConfigFamily::OneDI:
    case ConfigFamily::OneDIIEven:
    case ConfigFamily::OneDIIOdd:
    case ConfigFamily::TwoDEven:
    case ConfigFamily::TwoDOdd:
      for (long long i = 0; i + 1 <= m - 3; ++i) out.edges.emplace_back(i, i + 1);
      out.edges.emplace_back(m - 3, m - 2);
      out.edges.emplace_back(m - 3, m - 1);
      return out;
    case ConfigFamily::ZeroE6:
    case ConfigFamily::OneE6:
      out.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}};
      return out;
    case ConfigFamily::ZeroE7:
    case ConfigFamily::OneE7:
      out.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}};
      return out;
    case ConfigFamily::ZeroE8:
      out.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}};
      return out;
  }
  return out;
}

// Attached-edge count per canonical position; mirrors the catalog templates
// in rdp.cpp (kept in sync by the round-trip tests).
std::vector<int> attachment_positions(const ConfigClass& cls) {
  const long long m = cls.m;
  const long long q = cls.q;
  std::vector<int> att(static_cast<size_t>(m), 0);
  auto summit_of = [&](int ascent_start) {
    return std::max<long long>(0, q - ascent_start);
  };
  switch (cls.family) {
    case ConfigFamily::OneA:
      att[static_cast<size_t>(summit_of(1))] += 1;
      break;
    case ConfigFamily::TwoAL:
      att[static_cast<size_t>(summit_of(1))] += 1;
      att[static_cast<size_t>(m - 1)] += 1;
      break;
    case ConfigFamily::TwoAR:
      att[0] += 1;
      att[static_cast<size_t>(summit_of(2))] += 1;
      break;
    case ConfigFamily::ThreeA:
      att[0] += 1;
      att[static_cast<size_t>(summit_of(2))] += 1;
      att[static_cast<size_t>(m - 1)] += 1;
      break;
    case ConfigFamily::TwoAS:
      att[0] += 1;
      att[static_cast<size_t>(m - 1)] += 1;
      break;
    case ConfigFamily::OneDI:
      att[0] += 1;
      break;
    case ConfigFamily::OneDIIEven:
      att[static_cast<size_t>(m - 1)] += 1;
      break;
    case ConfigFamily::OneDIIOdd:
      att[static_cast<size_t>(m - 1)] += 1;
      break;
    case ConfigFamily::TwoDEven:
      att[0] += 1;
      att[static_cast<size_t>(m - 1)] += 1;
      break;
    case ConfigFamily::TwoDOdd:
      att[0] += 1;
      att[static_cast<size_t>(m - 1)] += 1;
      break;
    case ConfigFamily::OneE6:
      att[0] += 1;
      break;
    case ConfigFamily::OneE7:
      att[0] += 1;
      break;
    default:
      break;
  }
  return att;
}

void validate_params(const ConfigClass& cls) {
  const long long m = cls.m;
  const long long q = cls.q;
  const long long k = cls.k;
  auto need = [&](bool ok, const std::string& msg) {
    if (!ok) throw invalid(msg);
  };
  switch (cls.family) {
    case ConfigFamily::ZeroA:
      need(m >= 1, "A needs m >= 1");
      break;
    case ConfigFamily::TwoAS:
      need(m >= 1, "2-AS needs m >= 1");
      break;
    case ConfigFamily::OneA:
      need(q >= 1, "1-A needs q >= 1");
      need(m >= 2 * (q - 1) + 1, "1-A needs m >= 2q-1");
      break;
    case ConfigFamily::TwoAL:
      need(q >= 2, "2-AL needs q >= 2");
      need(m >= 2 * q - 2, "2-AL needs m >= 2q-2");
      break;
    case ConfigFamily::TwoAR:
      need(q >= 2, "2-AR needs q >= 2");
      need(m >= 2 * q - 2, "2-AR needs m >= 2q-2");
      need(m != 2 * q - 2,
           "2-AR with a length-1 plateau is the 2-AL graph; generate 2-AL instead");
      break;
    case ConfigFamily::ThreeA:
      need(q >= 2, "3-A needs q >= 2");
      need(m >= 2 * (q - 2) + 1, "3-A needs m >= 2q-3");
      break;
    case ConfigFamily::ZeroD:
    case ConfigFamily::OneDI:
      need(m >= 4, "D needs m >= 4");
      break;
    case ConfigFamily::OneDIIEven:
      need(k >= 2 && m == 2 * k, "1-DII even needs m = 2k, k >= 2");
      need(k != 2, "1-DII with 4 vertices is the 1-DI_4 graph; generate 1-DI instead");
      break;
    case ConfigFamily::OneDIIOdd:
      need(k >= 2 && m == 2 * k + 1, "1-DII odd needs m = 2k+1, k >= 2");
      break;
    case ConfigFamily::TwoDEven:
      need(k >= 2 && m == 2 * k, "2-D even needs m = 2k, k >= 2");
      break;
    case ConfigFamily::TwoDOdd:
      need(k >= 2 && m == 2 * k + 1, "2-D odd needs m = 2k+1, k >= 2");
      break;
    case ConfigFamily::ZeroE6:
    case ConfigFamily::OneE6:
      need(m == 6, "E6 has 6 vertices");
      break;
    case ConfigFamily::ZeroE7:
    case ConfigFamily::OneE7:
      need(m == 7, "E7 has 7 vertices");
      break;
    case ConfigFamily::ZeroE8:
      need(m == 8, "E8 has 8 vertices");
      break;
  }
}

}  // namespace

DualGraph gen_catalog(const ConfigClass& cls, const std::vector<long long>& attachment_weights) {
  validate_params(cls);
  const int n = cls.n_attached();
  if (static_cast<int>(attachment_weights.size()) != n) {
    throw invalid("class " + cls.name() + " needs exactly " + std::to_string(n) +
                  " attachment weight(s)");
  }
  for (long long w : attachment_weights) {
    if (w > -3) throw invalid("attached curves are non -2-curves: weights must be <= -3");
  }

  std::vector<VertexId> ids;
  std::vector<long long> weights;
  for (long long i = 0; i < cls.m; ++i) {
    ids.push_back(cid(i + 1));
    weights.push_back(-2);
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& [a, b] : core_edges(cls).edges) {
    edges.emplace_back(cid(a + 1), cid(b + 1));
  }

  const auto att = attachment_positions(cls);
  int next = 0;
  for (long long pos = 0; pos < cls.m; ++pos) {
    for (int j = 0; j < att[static_cast<size_t>(pos)]; ++j) {
      const std::string aid = "a" + std::to_string(next + 1);
      ids.push_back(aid);
      weights.push_back(attachment_weights[static_cast<size_t>(next)]);
      edges.emplace_back(cid(pos + 1), aid);
      ++next;
    }
  }
  return DualGraph::from_parts(std::move(ids), std::move(weights), edges);
}

DualGraph gen_ade(char kind, long long m) {
  ConfigClass cls;
  switch (kind) {
    case 'A':
      if (m < 1) throw invalid("A_m needs m >= 1");
      cls = {ConfigFamily::ZeroA, m, 0, 0};
      break;
    case 'D':
      if (m < 4) throw invalid("D_m needs m >= 4");
      cls = {ConfigFamily::ZeroD, m, 0, 0};
      break;
    case 'E':
      if (m == 6) cls = {ConfigFamily::ZeroE6, 6, 0, 0};
      else if (m == 7) cls = {ConfigFamily::ZeroE7, 7, 0, 0};
      else if (m == 8) cls = {ConfigFamily::ZeroE8, 8, 0, 0};
      else throw invalid("E_m needs m in 6..8");
      break;
    default:
      throw invalid("ADE kind must be 'A', 'D' or 'E'");
  }
  return gen_catalog(cls, {});
}

}  // namespace sg
