#include "singgraph/rdp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sg {

int ConfigClass::n_attached() const {
  switch (family) {
    case ConfigFamily::ZeroA:
    case ConfigFamily::ZeroD:
    case ConfigFamily::ZeroE6:
    case ConfigFamily::ZeroE7:
    case ConfigFamily::ZeroE8:
      return 0;
    case ConfigFamily::OneA:
    case ConfigFamily::OneDI:
    case ConfigFamily::OneDIIEven:
    case ConfigFamily::OneDIIOdd:
    case ConfigFamily::OneE6:
    case ConfigFamily::OneE7:
      return 1;
    case ConfigFamily::TwoAL:
    case ConfigFamily::TwoAR:
    case ConfigFamily::TwoAS:
    case ConfigFamily::TwoDEven:
    case ConfigFamily::TwoDOdd:
      return 2;
    case ConfigFamily::ThreeA:
      return 3;
  }
  return 0;
}

bool ConfigClass::is_zero_config() const { return n_attached() == 0; }

std::string ConfigClass::name() const {
  const std::string m_s = std::to_string(m);
  const std::string q_s = std::to_string(q);
  switch (family) {
    case ConfigFamily::ZeroA: return "0-A_" + m_s;
    case ConfigFamily::ZeroD: return "0-D_" + m_s;
    case ConfigFamily::ZeroE6: return "0-E_6";
    case ConfigFamily::ZeroE7: return "0-E_7";
    case ConfigFamily::ZeroE8: return "0-E_8";
    case ConfigFamily::OneA: return "1-A^" + q_s + "_" + m_s;
    case ConfigFamily::TwoAL: return "2-AL^" + q_s + "_" + m_s;
    case ConfigFamily::TwoAR: return "2-AR^" + q_s + "_" + m_s;
    case ConfigFamily::TwoAS: return "2-AS_" + m_s;
    case ConfigFamily::ThreeA: return "3-A^" + q_s + "_" + m_s;
    case ConfigFamily::TwoDEven:
    case ConfigFamily::TwoDOdd: return "2-D_" + m_s;
    case ConfigFamily::OneDI: return "1-DI_" + m_s;
    case ConfigFamily::OneDIIEven:
    case ConfigFamily::OneDIIOdd: return "1-DII_" + m_s;
    case ConfigFamily::OneE6: return "1-E_6";
    case ConfigFamily::OneE7: return "1-E_7";
  }
  return "?";
}

namespace {

// A catalog row instantiated at concrete parameters, in canonical core
// positions: per-position fundamental-cycle label, attached-edge count and
// black flag.
struct Template {
  std::vector<long long> mult;
  std::vector<int> att;
  std::vector<char> black;
};

Template blank(long long m) {
  Template t;
  t.mult.assign(static_cast<size_t>(m), 0);
  t.att.assign(static_cast<size_t>(m), 0);
  t.black.assign(static_cast<size_t>(m), 0);
  return t;
}

// Chain profile ascending from `ascent_start` to q, a plateau of q's, then
// descending to `descent_end`. The first plateau vertex carries the interior
// attached edge ("summit"), the last plateau vertex is black. Degenerate
// parameters fold naturally: with an empty ascent the chain end is the
// summit, with a length-1 plateau the summit is the black vertex.
std::optional<Template> a_row(long long q, long long m, int ascent_start, int descent_end) {
  if (q < 1) return std::nullopt;
  const long long len_asc = std::max<long long>(0, q - ascent_start);
  const long long len_desc = std::max<long long>(0, q - descent_end);
  const long long plateau = m - len_asc - len_desc;
  if (plateau < 1) return std::nullopt;

  Template t = blank(m);
  for (long long i = 0; i < len_asc; ++i) t.mult[static_cast<size_t>(i)] = ascent_start + i;
  for (long long i = 0; i < plateau; ++i) t.mult[static_cast<size_t>(len_asc + i)] = q;
  for (long long i = 0; i < len_desc; ++i) t.mult[static_cast<size_t>(m - 1 - i)] = descent_end + i;
  const long long summit = len_asc;
  const long long black_pos = len_asc + plateau - 1;
  t.att[static_cast<size_t>(summit)] += 1;
  t.black[static_cast<size_t>(black_pos)] = 1;
  return t;
}

// Positions for a D-core: [tail end, ..., trivalent, leaf, leaf].
std::optional<Template> d_tail(long long m, std::vector<long long> tail_mult,
                               long long leaf_a, long long leaf_b) {
  if (static_cast<long long>(tail_mult.size()) != m - 2) return std::nullopt;
  Template t = blank(m);
  for (long long i = 0; i < m - 2; ++i) t.mult[static_cast<size_t>(i)] = tail_mult[static_cast<size_t>(i)];
  t.mult[static_cast<size_t>(m - 2)] = leaf_a;
  t.mult[static_cast<size_t>(m - 1)] = leaf_b;
  return t;
}

std::vector<long long> run(long long from, long long to) {  // inclusive, ascending
  std::vector<long long> out;
  for (long long v = from; v <= to; ++v) out.push_back(v);
  return out;
}

std::optional<Template> build_template(const ConfigClass& c) {
  const long long m = c.m;
  const long long q = c.q;
  const long long k = c.k;
  switch (c.family) {
    case ConfigFamily::ZeroA: {
      if (m < 1) return std::nullopt;
      Template t = blank(m);
      std::fill(t.mult.begin(), t.mult.end(), 1);
      t.black[0] = 1;
      t.black[static_cast<size_t>(m - 1)] = 1;
      return t;
    }
    case ConfigFamily::TwoAS: {
      if (m < 1) return std::nullopt;
      Template t = blank(m);
      std::fill(t.mult.begin(), t.mult.end(), 1);
      t.att[0] += 1;
      t.att[static_cast<size_t>(m - 1)] += 1;
      return t;
    }
    case ConfigFamily::OneA: {
      auto t = a_row(q, m, 1, 1);
      return t;
    }
    case ConfigFamily::TwoAL: {
      if (q < 2) return std::nullopt;
      auto t = a_row(q, m, 1, 2);
      if (t) t->att[static_cast<size_t>(m - 1)] += 1;
      return t;
    }
    case ConfigFamily::TwoAR: {
      if (q < 2) return std::nullopt;
      auto t = a_row(q, m, 2, 1);
      if (t) t->att[0] += 1;
      return t;
    }
    case ConfigFamily::ThreeA: {
      if (q < 2) return std::nullopt;
      auto t = a_row(q, m, 2, 2);
      if (t) {
        t->att[0] += 1;
        t->att[static_cast<size_t>(m - 1)] += 1;
      }
      return t;
    }
    case ConfigFamily::ZeroD: {
      if (m < 4) return std::nullopt;
      std::vector<long long> tail(static_cast<size_t>(m - 2), 2);
      tail[0] = 1;
      auto t = d_tail(m, tail, 1, 1);
      if (t) t->black[1] = 1;
      return t;
    }
    case ConfigFamily::OneDI: {
      if (m < 4) return std::nullopt;
      auto t = d_tail(m, std::vector<long long>(static_cast<size_t>(m - 2), 2), 1, 1);
      if (t) {
        t->att[0] += 1;
        t->black[0] = 1;
      }
      return t;
    }
    case ConfigFamily::OneDIIEven: {
      if (k < 2 || m != 2 * k) return std::nullopt;
      auto t = d_tail(m, run(1, 2 * k - 2), k - 1, k);
      if (t) {
        t->att[static_cast<size_t>(m - 1)] += 1;
        t->black[static_cast<size_t>(m - 1)] = 1;
      }
      return t;
    }
    case ConfigFamily::OneDIIOdd: {
      if (k < 2 || m != 2 * k + 1) return std::nullopt;
      auto t = d_tail(m, run(1, 2 * k - 1), k, k);
      if (t) {
        t->black[static_cast<size_t>(m - 2)] = 1;
        t->att[static_cast<size_t>(m - 1)] += 1;
      }
      return t;
    }
    case ConfigFamily::TwoDEven: {
      if (k < 2 || m != 2 * k) return std::nullopt;
      auto t = d_tail(m, run(2, 2 * k - 1), k, k);
      if (t) {
        t->att[0] += 1;
        t->black[static_cast<size_t>(m - 2)] = 1;
        t->att[static_cast<size_t>(m - 1)] += 1;
      }
      return t;
    }
    case ConfigFamily::TwoDOdd: {
      if (k < 2 || m != 2 * k + 1) return std::nullopt;
      auto t = d_tail(m, run(2, 2 * k), k, k + 1);
      if (t) {
        t->att[0] += 1;
        t->black[static_cast<size_t>(m - 1)] = 1;
        t->att[static_cast<size_t>(m - 1)] += 1;
      }
      return t;
    }
    case ConfigFamily::ZeroE6: {
      if (m != 6) return std::nullopt;
      Template t = blank(6);
      t.mult = {1, 2, 3, 2, 1, 2};
      t.black[5] = 1;
      return t;
    }
    case ConfigFamily::OneE6: {
      if (m != 6) return std::nullopt;
      Template t = blank(6);
      t.mult = {2, 3, 4, 3, 2, 2};
      t.att[0] += 1;
      t.black[4] = 1;
      return t;
    }
    case ConfigFamily::ZeroE7: {
      if (m != 7) return std::nullopt;
      Template t = blank(7);
      t.mult = {1, 2, 3, 4, 3, 2, 2};
      t.black[5] = 1;
      return t;
    }
    case ConfigFamily::OneE7: {
      if (m != 7) return std::nullopt;
      Template t = blank(7);
      t.mult = {3, 4, 5, 6, 4, 2, 3};
      t.att[0] += 1;
      t.black[0] = 1;
      return t;
    }
    case ConfigFamily::ZeroE8: {
      if (m != 8) return std::nullopt;
      Template t = blank(8);
      t.mult = {2, 3, 4, 5, 6, 4, 2, 3};
      t.black[0] = 1;
      return t;
    }
  }
  return std::nullopt;
}

enum class CoreShape { A, D, E6, E7, E8, None };

// Canonical position orderings of the core vertices; shape symmetries are
// enumerated so that template matching covers every embedding.
struct CoreLayout {
  CoreShape shape = CoreShape::None;
  std::vector<std::vector<int>> orderings;  // position -> vertex index in g
};

CoreLayout analyze_core(const DualGraph& g, const std::vector<int>& core) {
  CoreLayout out;
  const std::set<int> in_core(core.begin(), core.end());
  std::map<int, std::vector<int>> adj;
  for (int v : core) {
    adj[v] = {};
    for (int u : g.neighbors(v)) {
      if (in_core.count(u)) adj[v].push_back(u);
    }
  }

  std::vector<int> trivalent;
  for (int v : core) {
    if (adj[v].size() >= 4) return out;  // not negative definite territory
    if (adj[v].size() == 3) trivalent.push_back(v);
  }
  if (trivalent.size() > 1) return out;

  auto walk = [&](int from, int towards) {
    // Path from `towards` outward, never stepping back; returns the arm
    // vertices starting at `towards`. Stops after |core| steps so a cyclic
    // core falls through to the size checks below.
    std::vector<int> arm;
    int prev = from, cur = towards;
    while (arm.size() <= core.size()) {
      arm.push_back(cur);
      int next = -1;
      for (int u : adj[cur]) {
        if (u != prev) next = u;
      }
      if (next == -1) break;
      prev = cur;
      cur = next;
    }
    return arm;
  };

  if (trivalent.empty()) {
    out.shape = CoreShape::A;
    if (core.size() == 1) {
      out.orderings.push_back({core[0]});
      return out;
    }
    int end = -1;
    for (int v : core) {
      if (adj[v].size() == 1) {
        end = v;
        break;
      }
    }
    if (end == -1) return CoreLayout{};  // a cycle of -2's; not a valid core
    std::vector<int> path = walk(-1, end);
    if (path.size() != core.size()) return CoreLayout{};
    out.orderings.push_back(path);
    std::vector<int> rev(path.rbegin(), path.rend());
    out.orderings.push_back(rev);
    return out;
  }

  const int center = trivalent[0];
  std::vector<std::vector<int>> arms;
  for (int u : adj[center]) arms.push_back(walk(center, u));
  size_t total = 1;
  for (const auto& arm : arms) total += arm.size();
  if (total != core.size()) return CoreLayout{};  // cycle hiding in an arm

  std::sort(arms.begin(), arms.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  const size_t l0 = arms[0].size(), l1 = arms[1].size(), l2 = arms[2].size();

  auto d_ordering = [&](const std::vector<int>& tail_arm, const std::vector<int>& leaf_a,
                        const std::vector<int>& leaf_b) {
    // positions: [tail far end .. tail inner, trivalent, leaf, leaf]
    std::vector<int> order(tail_arm.rbegin(), tail_arm.rend());
    order.push_back(center);
    order.push_back(leaf_a[0]);
    order.push_back(leaf_b[0]);
    return order;
  };

  if (l0 == 1 && l1 == 1) {
    out.shape = CoreShape::D;
    if (l2 == 1) {
      // D4: full leaf symmetry.
      for (int t = 0; t < 3; ++t) {
        for (int swap = 0; swap < 2; ++swap) {
          int a = (t + 1 + swap) % 3, b = (t + 2 - swap) % 3;
          out.orderings.push_back(d_ordering(arms[static_cast<size_t>(t)],
                                             arms[static_cast<size_t>(a)],
                                             arms[static_cast<size_t>(b)]));
        }
      }
    } else {
      out.orderings.push_back(d_ordering(arms[2], arms[0], arms[1]));
      out.orderings.push_back(d_ordering(arms[2], arms[1], arms[0]));
    }
    return out;
  }

  auto e_ordering = [&](const std::vector<int>& long_arm, const std::vector<int>& mid_arm,
                        const std::vector<int>& leaf_arm) {
    // positions: [long arm far..in, center, mid arm in..far, leaf]
    std::vector<int> order(long_arm.rbegin(), long_arm.rend());
    order.push_back(center);
    for (int v : mid_arm) order.push_back(v);
    order.push_back(leaf_arm[0]);
    return order;
  };

  if (l0 == 1 && l1 == 2 && l2 == 2) {
    out.shape = CoreShape::E6;
    out.orderings.push_back(e_ordering(arms[1], arms[2], arms[0]));
    out.orderings.push_back(e_ordering(arms[2], arms[1], arms[0]));
    return out;
  }
  if (l0 == 1 && l1 == 2 && l2 == 3) {
    out.shape = CoreShape::E7;
    out.orderings.push_back(e_ordering(arms[2], arms[1], arms[0]));
    return out;
  }
  if (l0 == 1 && l1 == 2 && l2 == 4) {
    out.shape = CoreShape::E8;
    out.orderings.push_back(e_ordering(arms[2], arms[1], arms[0]));
    return out;
  }
  return CoreLayout{};
}

struct Observed {
  std::vector<long long> mult;
  std::vector<int> att;
  std::vector<char> black;
};

Observed observe(const Cycle& z, const std::vector<long long>& profile,
                 const RdpConfiguration& config, const std::vector<int>& ordering) {
  Observed obs;
  std::map<int, int> att_count;
  for (const auto& [cv, outside] : config.attached) {
    (void)outside;
    att_count[cv] += 1;
  }
  for (int v : ordering) {
    obs.mult.push_back(z.at(v));
    auto it = att_count.find(v);
    obs.att.push_back(it == att_count.end() ? 0 : it->second);
    obs.black.push_back(profile[static_cast<size_t>(v)] != 0 ? 1 : 0);
  }
  return obs;
}

bool matches(const Template& t, const Observed& obs) {
  return t.mult == obs.mult && t.att == obs.att && t.black == obs.black;
}

}  // namespace

std::vector<RdpConfiguration> extract_configurations(const DualGraph& g, const Cycle& z) {
  const auto profile = intersection_profile(g, z);

  std::vector<int> component(static_cast<size_t>(g.size()), -1);
  int n_components = 0;
  for (int v = 0; v < g.size(); ++v) {
    if (g.weight(v) != -2 || component[static_cast<size_t>(v)] != -1) continue;
    const int c = n_components++;
    std::vector<int> stack{v};
    component[static_cast<size_t>(v)] = c;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(cur)) {
        if (g.weight(u) == -2 && component[static_cast<size_t>(u)] == -1) {
          component[static_cast<size_t>(u)] = c;
          stack.push_back(u);
        }
      }
    }
  }

  std::vector<RdpConfiguration> configs(static_cast<size_t>(n_components));
  for (int v = 0; v < g.size(); ++v) {
    int c = component[static_cast<size_t>(v)];
    if (c != -1) configs[static_cast<size_t>(c)].core.push_back(v);
  }

  for (auto& config : configs) {
    for (int v : config.core) {
      for (int u : g.neighbors(v)) {
        if (g.weight(u) != -2) config.attached.emplace_back(v, u);
      }
    }
    std::sort(config.attached.begin(), config.attached.end());

    std::vector<int> blacks;
    for (int v : config.core) {
      if (profile[static_cast<size_t>(v)] != 0) blacks.push_back(v);
    }
    if (blacks.size() >= 2) {
      bool all_reduced = std::all_of(blacks.begin(), blacks.end(),
                                     [&](int v) { return z.at(v) == 1; });
      if (!all_reduced) {
        throw DomainError("multiple_black_vertices",
                          "configuration has several uncontracted -2-curves of "
                          "multiplicity >= 2; the fundamental cycle is not almost reduced");
      }
    }
    if (!blacks.empty()) config.black = blacks.front();
    config.s = config.black ? z.at(*config.black) : 1;
  }
  return configs;
}

ConfigClass classify(const DualGraph& g, const Cycle& z, const RdpConfiguration& config) {
  const auto profile = intersection_profile(g, z);
  const auto layout = analyze_core(g, config.core);
  if (layout.shape == CoreShape::None) {
    throw DomainError("not_in_catalog", "core is not an ADE tree");
  }

  const long long m = static_cast<long long>(config.core.size());
  long long q_obs = 0;
  for (int v : config.core) q_obs = std::max(q_obs, z.at(v));

  std::vector<ConfigClass> candidates;
  switch (layout.shape) {
    case CoreShape::A:
      candidates.push_back({ConfigFamily::ZeroA, m, 0, 0});
      candidates.push_back({ConfigFamily::TwoAS, m, 0, 0});
      candidates.push_back({ConfigFamily::OneA, m, q_obs, 0});
      candidates.push_back({ConfigFamily::TwoAL, m, q_obs, 0});
      candidates.push_back({ConfigFamily::TwoAR, m, q_obs, 0});
      candidates.push_back({ConfigFamily::ThreeA, m, q_obs, 0});
      break;
    case CoreShape::D:
      candidates.push_back({ConfigFamily::ZeroD, m, 0, 0});
      candidates.push_back({ConfigFamily::OneDI, m, 0, m});
      if (m % 2 == 0) {
        candidates.push_back({ConfigFamily::OneDIIEven, m, 0, m / 2});
        candidates.push_back({ConfigFamily::TwoDEven, m, 0, m / 2});
      } else {
        candidates.push_back({ConfigFamily::OneDIIOdd, m, 0, (m - 1) / 2});
        candidates.push_back({ConfigFamily::TwoDOdd, m, 0, (m - 1) / 2});
      }
      break;
    case CoreShape::E6:
      candidates.push_back({ConfigFamily::ZeroE6, m, 0, 0});
      candidates.push_back({ConfigFamily::OneE6, m, 0, 0});
      break;
    case CoreShape::E7:
      candidates.push_back({ConfigFamily::ZeroE7, m, 0, 0});
      candidates.push_back({ConfigFamily::OneE7, m, 0, 0});
      break;
    case CoreShape::E8:
      candidates.push_back({ConfigFamily::ZeroE8, m, 0, 0});
      break;
    case CoreShape::None:
      break;
  }

  for (const auto& candidate : candidates) {
    if (candidate.n_attached() != config.n()) continue;
    auto tpl = build_template(candidate);
    if (!tpl) continue;
    for (const auto& ordering : layout.orderings) {
      if (matches(*tpl, observe(z, profile, config, ordering))) {
        return candidate;
      }
    }
  }
  throw DomainError("not_in_catalog",
                    "configuration matches no catalog row (graph outside the rational "
                    "almost-reduced class, or an internal bug)");
}

std::vector<RdpConfiguration> classified_configurations(const DualGraph& g, const Cycle& z) {
  auto configs = extract_configurations(g, z);
  for (auto& config : configs) {
    config.cls = classify(g, z, config);
  }
  return configs;
}

long long black_weight(const Cycle& z, const RdpConfiguration& config) {
  return config.black ? z.at(*config.black) : 1;
}

long long h1_a(const DualGraph& g, const Cycle& z,
               const std::vector<RdpConfiguration>& configs) {
  long long sum = 0;
  for (const auto& config : configs) sum += black_weight(z, config) - 1;

  const Cycle z_minus_e = z.minus(Cycle::reduced(g));
  const Int rhs = canonical_pairing(g, z_minus_e) - pairing(g, z_minus_e, z);
  if (rhs != sum) {
    throw InternalError("identity_violation",
                        "sum(s_i - 1) = " + std::to_string(sum) + " but (Z-E)*(K-Z) = " +
                            rhs.str());
  }
  return sum;
}

std::string ade_name(const DualGraph& g) {
  for (int v = 0; v < g.size(); ++v) {
    if (g.weight(v) != -2) {
      throw DomainError("not_in_catalog", "graph has a non -2-curve");
    }
  }
  std::vector<int> all(static_cast<size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) all[static_cast<size_t>(v)] = v;
  const auto layout = analyze_core(g, all);
  const std::string n = std::to_string(g.size());
  switch (layout.shape) {
    case CoreShape::A: return "A" + n;
    case CoreShape::D: return "D" + n;
    case CoreShape::E6: return "E6";
    case CoreShape::E7: return "E7";
    case CoreShape::E8: return "E8";
    case CoreShape::None: break;
  }
  throw DomainError("not_in_catalog", "graph is not an ADE tree");
}

}  // namespace sg
