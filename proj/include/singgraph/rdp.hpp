#pragma once

#include <optional>
#include <string>
#include <vector>

#include "singgraph/cycles.hpp"
#include "singgraph/graph.hpp"

namespace sg {

// Catalog rows. The A-families carry the plateau multiplicity q; the
// D-families carry k (vertex count 2k or 2k+1, or k itself for 1-DI).
// Zero* are the plain rational double points (the 0-configurations).
enum class ConfigFamily {
  ZeroA,
  ZeroD,
  ZeroE6,
  ZeroE7,
  ZeroE8,
  OneA,
  TwoAL,
  TwoAR,
  TwoAS,
  ThreeA,
  TwoDEven,
  TwoDOdd,
  OneDI,
  OneDIIEven,
  OneDIIOdd,
  OneE6,
  OneE7,
};

struct ConfigClass {
  ConfigFamily family;
  long long m = 0;  // number of core vertices
  long long q = 0;  // A-family plateau multiplicity (0 when not applicable)
  long long k = 0;  // D-family index (0 when not applicable)

  int n_attached() const;
  bool is_zero_config() const;
  // Printed tag, e.g. "2-AL^3_5", "3-A^2_1", "0-D_4", "1-E_7".
  std::string name() const;

  bool operator==(const ConfigClass& other) const {
    return family == other.family && m == other.m && q == other.q && k == other.k;
  }
  bool operator!=(const ConfigClass& other) const { return !(*this == other); }
};

// A maximal connected -2-subgraph together with its edges into the rest of
// the graph. `black` is the core vertex meeting Z nonzero (at most one in
// the almost-reduced class; a reduced A-type 0-configuration has two ends
// with Z*E = -1 and multiplicity 1, in which case the lower index is kept
// and s = 1 regardless). s is Z's multiplicity at the black vertex.
struct RdpConfiguration {
  std::vector<int> core;                      // sorted by input index
  std::vector<std::pair<int, int>> attached;  // (core vertex, outside vertex)
  std::optional<int> black;
  long long s = 1;
  std::optional<ConfigClass> cls;

  int n() const { return static_cast<int>(attached.size()); }
};

// One configuration per connected component of the -2-subgraph, ordered by
// smallest contained vertex index. Requires z to be the fundamental cycle of
// a rational graph. Throws DomainError("multiple_black_vertices") when two
// or more core vertices of multiplicity >= 2 meet Z nonzero (outside the
// almost-reduced class).
std::vector<RdpConfiguration> extract_configurations(const DualGraph& g, const Cycle& z);

// Matches the configuration against the catalog: recognizes the ADE shape of
// the core, reads the plateau multiplicity from z, and requires the full
// multiplicity template, the attachment positions and the black vertex to
// agree with the catalog row. Throws DomainError("not_in_catalog") if no row
// matches (impossible for rational graphs with almost reduced fundamental
// cycle).
ConfigClass classify(const DualGraph& g, const Cycle& z, const RdpConfiguration& config);

// extract + classify + fill in `cls`.
std::vector<RdpConfiguration> classified_configurations(const DualGraph& g, const Cycle& z);

// s = z(black vertex), or 1 when there is none.
long long black_weight(const Cycle& z, const RdpConfiguration& config);

// sum(s_i - 1) over all configurations, cross-checked against the exact
// intersection number (Z-E)*(K-Z). A mismatch throws
// InternalError("identity_violation"); the two sides agree on every rational
// graph with almost reduced fundamental cycle.
long long h1_a(const DualGraph& g, const Cycle& z,
               const std::vector<RdpConfiguration>& configs);

// "A5", "D4", "E8": name of an ADE graph (all vertices -2). Used for
// 0-configurations and blowdown fibers. Throws DomainError("not_in_catalog")
// when the graph is not an ADE tree.
std::string ade_name(const DualGraph& g);

}  // namespace sg
