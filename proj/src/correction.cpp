#include "singgraph/correction.hpp"

#include <set>

namespace sg {

CorrectionInterval correction_term(const DualGraph& g, const Cycle& z,
                                   const std::vector<RdpConfiguration>& configs,
                                   const ScalarInvariants& inv) {
  if (!inv.rational) throw not_rational();
  if (!inv.almost_reduced) throw not_almost_reduced();
  if (inv.e < 4) {
    throw DomainError("embedding_dimension_below_4",
                      "the dimension formulas assume embedding dimension >= 4");
  }

  const auto profile = intersection_profile(g, z);

  CorrectionInterval c;
  for (size_t i = 0; i < configs.size(); ++i) {
    const auto& config = configs[i];
    if (!config.cls || config.cls->family != ConfigFamily::ThreeA) continue;

    std::set<int> adjacent;
    for (const auto& [cv, outside] : config.attached) {
      (void)cv;
      adjacent.insert(outside);
    }
    bool all_negative = true;
    for (int v : adjacent) {
      if (profile[static_cast<size_t>(v)] >= 0) all_negative = false;
    }

    c.hi += 1;
    if (all_negative) c.lo += 1;
    c.witnesses.push_back({static_cast<int>(i), all_negative});
  }
  c.exact = (c.lo == c.hi);
  return c;
}

DimensionIncrements increments(const ScalarInvariants& inv, const CorrectionInterval& c) {
  if (inv.e < 4) {
    throw DomainError("embedding_dimension_below_4",
                      "the dimension formulas assume embedding dimension >= 4");
  }
  const Int quadratic = Int(inv.e - 2) * (inv.e - 4);
  DimensionIncrements d;
  d.dt1 = {inv.e - 4 + c.lo, inv.e - 4 + c.hi};
  d.dt2 = {to_int64(quadratic + c.lo), to_int64(quadratic + c.hi)};
  return d;
}

}  // namespace sg
