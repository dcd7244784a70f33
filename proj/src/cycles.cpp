#include "singgraph/cycles.hpp"

#include <algorithm>

namespace sg {

namespace {

// Z * E_v for the cycle z, as an exact integer.
Int excess_at(const DualGraph& g, const Cycle& z, int v) {
  Int total = Int(g.weight(v)) * z.at(v);
  for (int u : g.neighbors(v)) total += z.at(u);
  return total;
}

}  // namespace

ComputingSequence fundamental_cycle(const DualGraph& g) {
  if (!is_negative_definite(g)) {
    throw not_negative_definite();
  }

  ComputingSequence seq;
  Cycle z = Cycle::reduced(g);
  for (;;) {
    std::optional<int> chosen;
    Int excess = 0;
    for (int v = 0; v < g.size(); ++v) {
      Int e = excess_at(g, z, v);
      if (e > 0) {
        chosen = v;
        excess = e;
        break;  // smallest input index wins
      }
    }
    if (!chosen) {
      seq.steps.push_back({z, std::nullopt, 0});
      return seq;
    }
    seq.steps.push_back({z, chosen, to_int64(excess)});
    z.bump(*chosen);
  }
}

bool is_rational_laufer(const DualGraph& g, const ComputingSequence& seq) {
  // A cycle in the graph contributes p_a(E) = b_1 > 0 before any step runs.
  if (!g.is_tree()) return false;
  for (const auto& step : seq.steps) {
    if (step.chosen && step.excess != 1) return false;
  }
  return true;
}

Int arithmetic_genus(const DualGraph& g, const Cycle& c) {
  Int numerator = pairing(g, c, c) + canonical_pairing(g, c);
  if (numerator % 2 != 0) {
    throw InternalError("parity_error", "c*c + K*c is odd; intersection data corrupted");
  }
  return 1 + numerator / 2;
}

bool is_rational_artin(const DualGraph& g) {
  return arithmetic_genus(g, fundamental_cycle(g).final()) == 0;
}

ScalarInvariants scalar_invariants(const DualGraph& g) {
  return scalar_invariants(g, fundamental_cycle(g));
}

ScalarInvariants scalar_invariants(const DualGraph& g, const ComputingSequence& seq) {
  const Cycle& z = seq.final();

  ScalarInvariants inv;
  inv.z_self = to_int64(pairing(g, z, z));
  inv.e = -inv.z_self + 1;
  inv.mult = inv.e - 1;
  inv.pa_z = to_int64(arithmetic_genus(g, z));

  const bool laufer = is_rational_laufer(g, seq);
  const bool artin = inv.pa_z == 0;
  if (laufer != artin) {
    throw InternalError("criterion_disagreement",
                        "Laufer and Artin rationality criteria disagree");
  }
  inv.rational = artin;

  inv.almost_reduced = true;
  for (int v = 0; v < g.size(); ++v) {
    if (g.weight(v) != -2 && z.at(v) != 1) {
      inv.almost_reduced = false;
      break;
    }
  }
  return inv;
}

std::vector<long long> intersection_profile(const DualGraph& g, const Cycle& z) {
  std::vector<long long> profile(static_cast<size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) {
    profile[static_cast<size_t>(v)] = to_int64(excess_at(g, z, v));
  }
  return profile;
}

}  // namespace sg
