#pragma once

#include <vector>

#include "singgraph/cycles.hpp"
#include "singgraph/rdp.hpp"

namespace sg {

struct CorrectionWitness {
  int config_index;     // index into the classified configuration list
  bool counted_in_lo;   // all three adjacent non -2-curves meet Z negatively
};

// Bounds on the correction term c(X). hi counts the 3-A configurations; lo
// counts those whose three adjacent non -2-curves all meet Z negatively.
// The contribution of a 3-A configuration with an adjacent curve meeting Z
// in zero is not determined by the graph bounds alone, so the interval
// stays honest (exact=false) instead of guessing a value.
struct CorrectionInterval {
  long long lo = 0;
  long long hi = 0;
  bool exact = true;
  std::vector<CorrectionWitness> witnesses;
};

// Requires a rational graph with almost reduced fundamental cycle and
// embedding dimension e >= 4. Throws DomainError("not_almost_reduced") or
// DomainError("embedding_dimension_below_4").
CorrectionInterval correction_term(const DualGraph& g, const Cycle& z,
                                   const std::vector<RdpConfiguration>& configs,
                                   const ScalarInvariants& inv);

struct IntInterval {
  long long lo = 0;
  long long hi = 0;
  bool exact() const { return lo == hi; }
};

// dT1 = (e-4) + c, dT2 = (e-2)(e-4) + c: the graph-determined increments of
// dim T^1 and dim T^2 over the corresponding dimensions of the blowup.
struct DimensionIncrements {
  IntInterval dt1;
  IntInterval dt2;
};

DimensionIncrements increments(const ScalarInvariants& inv, const CorrectionInterval& c);

}  // namespace sg
