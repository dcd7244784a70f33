#pragma once

#include <optional>
#include <vector>

#include "singgraph/graph.hpp"

namespace sg {

// One state of Laufer's induction. `chosen` is the vertex whose multiplicity
// is raised to obtain the next cycle (empty on the final step) and `excess`
// is Z_k * E_chosen, which is > 0 exactly when a step is taken.
struct ComputingStep {
  Cycle cycle;
  std::optional<int> chosen;
  long long excess = 0;
};

// Z_0 = E, Z_1, ..., Z_k = Z. The final cycle is the fundamental cycle.
struct ComputingSequence {
  std::vector<ComputingStep> steps;

  const Cycle& final() const { return steps.back().cycle; }
};

// Laufer's algorithm: start from the reduced cycle E; while some vertex has
// Z*E_i > 0, add E_i for the smallest-index such vertex. Requires a negative
// definite graph (throws DomainError("not_negative_definite") otherwise; the
// loop need not terminate without it). The endpoint is the unique smallest
// positive cycle with Z*E_i <= 0 for all i, independent of the tie-break.
ComputingSequence fundamental_cycle(const DualGraph& g);

// Laufer's rationality criterion: every positive excess along the computing
// sequence equals 1. The criterion presumes the exceptional divisor is a
// tree of rational curves, so a graph with independent cycles fails here
// (its reduced cycle already has positive arithmetic genus).
bool is_rational_laufer(const DualGraph& g, const ComputingSequence& seq);

// p_a(c) = 1 + (c*c + K*c)/2. The numerator is always even for integral
// cycles on these lattices; ParityError (internal) otherwise.
Int arithmetic_genus(const DualGraph& g, const Cycle& c);

// Artin's criterion: rational iff p_a(Z) = 0 for the fundamental cycle.
bool is_rational_artin(const DualGraph& g);

struct ScalarInvariants {
  long long e = 0;       // embedding dimension, -Z^2 + 1
  long long mult = 0;    // multiplicity m(X) = e - 1
  long long z_self = 0;  // Z^2
  long long pa_z = 0;    // arithmetic genus of Z
  bool rational = false;
  bool almost_reduced = false;  // Z reduced on every non -2-curve
};

// Computes both rationality criteria and asserts they agree
// (InternalError("criterion_disagreement") if not — unreachable).
ScalarInvariants scalar_invariants(const DualGraph& g);
ScalarInvariants scalar_invariants(const DualGraph& g, const ComputingSequence& seq);

// Z*E_i per vertex. Zero entries are the "white" curves (contracted by the
// Tjurina blowdown), nonzero entries are "black".
std::vector<long long> intersection_profile(const DualGraph& g, const Cycle& z);

}  // namespace sg
