#include "singgraph/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "singgraph/version.hpp"

namespace sg {

Pipeline run_pipeline(const DualGraph& g) {
  Pipeline p(g);
  if (!is_negative_definite(g)) throw not_negative_definite();
  p.seq = fundamental_cycle(g);
  p.inv = scalar_invariants(g, p.seq);
  if (!p.inv.rational) throw not_rational();
  const Cycle& z = p.seq.final();
  p.profile = intersection_profile(g, z);

  if (p.inv.almost_reduced) {
    try {
      p.configs = classified_configurations(g, z);
    } catch (const DomainError& e) {
      // Impossible inside the rational almost-reduced class (catalog
      // exhaustiveness); escalate instead of misreporting.
      throw InternalError("catalog_violation", e.what());
    }
    p.h1a = h1_a(g, z, *p.configs);
    if (p.inv.e >= 4) {
      p.c = correction_term(g, z, *p.configs, p.inv);
      p.dims = increments(p.inv, *p.c);
    } else {
      p.skip_reason = "embedding_dimension_below_4";
    }
  } else {
    p.skip_reason = "not_almost_reduced";
  }

  p.step = tjurina_contract(g, z);
  if (p.inv.e == 3) p.rdp_name = ade_name(g);
  return p;
}

namespace {

nlohmann::json ids_json(const DualGraph& g, const std::vector<int>& vertices) {
  nlohmann::json out = nlohmann::json::array();
  for (int v : vertices) out.push_back(g.id(v));
  return out;
}

nlohmann::json interval_json(const IntInterval& i) {
  return {{"lo", i.lo}, {"hi", i.hi}};
}

nlohmann::json invariants_json(const ScalarInvariants& inv) {
  return {{"e", inv.e},
          {"mult", inv.mult},
          {"z_self", inv.z_self},
          {"pa_z", inv.pa_z},
          {"rational", inv.rational},
          {"almost_reduced", inv.almost_reduced}};
}

nlohmann::json configs_json(const DualGraph& g, const Cycle& z,
                            const std::vector<RdpConfiguration>& configs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& config : configs) {
    nlohmann::json entry;
    entry["core"] = ids_json(g, config.core);
    entry["n"] = config.n();
    entry["class"] = config.cls ? nlohmann::json(config.cls->name()) : nlohmann::json();
    const bool has_q =
        config.cls && (config.cls->family == ConfigFamily::OneA ||
                       config.cls->family == ConfigFamily::TwoAL ||
                       config.cls->family == ConfigFamily::TwoAR ||
                       config.cls->family == ConfigFamily::ThreeA);
    entry["q"] = has_q ? nlohmann::json(config.cls->q) : nlohmann::json();
    entry["s"] = black_weight(z, config);
    entry["black"] = config.black ? nlohmann::json(g.id(*config.black)) : nlohmann::json();
    out.push_back(entry);
  }
  return out;
}

nlohmann::json rdp_json(const std::string& name, long long tau) {
  // Rational double points are hypersurfaces: dim T^2 = 0 and
  // dim T^1 = tau (imported background, not derived here).
  return {{"name", name}, {"tau", tau}, {"dim_t2", 0}};
}

// Per-fiber summary inside the tower.
nlohmann::json fiber_report_json(const TowerNode& node) {
  nlohmann::json out;
  out["invariants"] = invariants_json(node.inv);
  out["fundamental_cycle"] = cycle_to_json(node.graph, node.z);
  if (node.inv.almost_reduced && node.inv.e >= 4) {
    auto configs = classified_configurations(node.graph, node.z);
    auto c = correction_term(node.graph, node.z, configs, node.inv);
    auto dims = increments(node.inv, c);
    out["c"] = {{"lo", c.lo}, {"hi", c.hi}, {"exact", c.exact}};
    out["c_reason"] = nullptr;
    out["dT1"] = interval_json(dims.dt1);
    out["dT2"] = interval_json(dims.dt2);
  } else {
    out["c"] = nullptr;
    out["c_reason"] = node.inv.almost_reduced ? "embedding_dimension_below_4"
                                              : "not_almost_reduced";
    out["dT1"] = nullptr;
    out["dT2"] = nullptr;
  }
  out["contracted"] = ids_json(node.graph, node.step.contracted);
  return out;
}

nlohmann::json tower_json(const TowerNode& root) {
  // Level k holds the fibers produced by contracting the level k-1 nodes
  // (level 0: the fibers of the root). RDP fibers are terminal.
  nlohmann::json levels = nlohmann::json::array();
  std::vector<const TowerNode*> current;
  for (const auto& child : root.children) current.push_back(&child);
  int level = 0;
  while (!current.empty()) {
    nlohmann::json fibers = nlohmann::json::array();
    std::vector<const TowerNode*> next;
    for (const TowerNode* node : current) {
      nlohmann::json entry;
      entry["graph"] = graph_to_json(node->graph);
      if (node->rdp) {
        entry["rdp"] = rdp_json(*node->rdp, node->graph.size());
        entry["report"] = nullptr;
      } else {
        entry["rdp"] = nullptr;
        entry["report"] = fiber_report_json(*node);
        for (const auto& child : node->children) next.push_back(&child);
      }
      fibers.push_back(entry);
    }
    levels.push_back({{"level", level}, {"fibers", fibers}});
    current = std::move(next);
    ++level;
  }
  return levels;
}

}  // namespace

nlohmann::json build_report(const Pipeline& p, const std::string& input_bytes,
                            const ReportOptions& options) {
  const Cycle& z = p.seq.final();
  nlohmann::json report;
  report["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  report["input"] = {{"digest", "sha256:" + sha256_hex(input_bytes)}};
  report["graph"] = graph_to_json(p.g);
  report["invariants"] = invariants_json(p.inv);
  report["fundamental_cycle"] = cycle_to_json(p.g, z);

  nlohmann::json profile = nlohmann::json::object();
  for (int v = 0; v < p.g.size(); ++v) profile[p.g.id(v)] = p.profile[static_cast<size_t>(v)];
  report["profile"] = profile;

  if (p.configs) {
    report["configurations"] = configs_json(p.g, z, *p.configs);
    report["configurations_reason"] = nullptr;
    report["h1_a"] = {{"sum_s_minus_1", *p.h1a}, {"pairing_value", *p.h1a}};
    report["h1_a_reason"] = nullptr;
  } else {
    report["configurations"] = nullptr;
    report["configurations_reason"] = p.skip_reason;
    report["h1_a"] = nullptr;
    report["h1_a_reason"] = p.skip_reason;
  }

  if (p.c) {
    report["c"] = {{"lo", p.c->lo}, {"hi", p.c->hi}, {"exact", p.c->exact}};
    report["c_reason"] = nullptr;
    report["dT1"] = interval_json(p.dims->dt1);
    report["dT2"] = interval_json(p.dims->dt2);
  } else {
    report["c"] = nullptr;
    report["c_reason"] = p.skip_reason;
    report["dT1"] = nullptr;
    report["dT2"] = nullptr;
  }

  nlohmann::json fibers = nlohmann::json::array();
  for (const auto& fiber : p.step.fibers) fibers.push_back(graph_to_json(fiber));
  report["blowdown"] = {{"contracted", ids_json(p.g, p.step.contracted)},
                        {"surviving", ids_json(p.g, p.step.surviving)},
                        {"fibers", fibers}};

  report["rdp"] = p.rdp_name ? rdp_json(*p.rdp_name, p.g.size()) : nlohmann::json();
  report["tower"] = options.tower ? tower_json(blowdown_tower(p.g)) : nlohmann::json();
  return report;
}

namespace {

std::string join_ids(const nlohmann::json& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ", ";
    out += id.get<std::string>();
  }
  return out;
}

std::string cycle_line(const nlohmann::json& graph, const nlohmann::json& map) {
  // Render in vertex input order for readability.
  std::string out;
  for (const auto& v : graph["vertices"]) {
    if (!out.empty()) out += "  ";
    const std::string id = v["id"].get<std::string>();
    out += id + ":" + map[id].dump();
  }
  return out;
}

std::string interval_text(const nlohmann::json& i) {
  const long long lo = i["lo"].get<long long>();
  const long long hi = i["hi"].get<long long>();
  if (lo == hi) return std::to_string(lo);
  return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

}  // namespace

std::string render_text(const nlohmann::json& r) {
  std::ostringstream out;
  const auto& inv = r["invariants"];
  out << "graph: " << r["graph"]["vertices"].size() << " vertices, "
      << r["graph"]["edges"].size() << " edges  (digest "
      << r["input"]["digest"].get<std::string>().substr(0, 19) << "...)\n";
  out << "rational: yes    almost reduced: " << (inv["almost_reduced"].get<bool>() ? "yes" : "no")
      << "\n";
  out << "e: " << inv["e"] << "    mult: " << inv["mult"] << "    Z^2: " << inv["z_self"]
      << "    p_a(Z): " << inv["pa_z"] << "\n";
  out << "Z:       " << cycle_line(r["graph"], r["fundamental_cycle"]) << "\n";
  out << "Z*E_i:   " << cycle_line(r["graph"], r["profile"]) << "\n";

  if (r["configurations"].is_null()) {
    out << "configurations: n/a (" << r["configurations_reason"].get<std::string>() << ")\n";
  } else if (r["configurations"].empty()) {
    out << "configurations: none\n";
  } else {
    out << "configurations:\n";
    for (const auto& c : r["configurations"]) {
      out << "  - " << c["class"].get<std::string>() << "  core={" << join_ids(c["core"])
          << "}  n=" << c["n"] << "  s=" << c["s"] << "  black="
          << (c["black"].is_null() ? std::string("-") : c["black"].get<std::string>()) << "\n";
    }
  }
  if (!r["h1_a"].is_null()) {
    out << "sum(s_i - 1): " << r["h1_a"]["sum_s_minus_1"] << "  (= (Z-E)*(K-Z): "
        << r["h1_a"]["pairing_value"] << ")\n";
  }

  if (r["c"].is_null()) {
    out << "c(X): n/a (" << r["c_reason"].get<std::string>() << ")\n";
  } else {
    out << "c(X): " << interval_text(r["c"])
        << (r["c"]["exact"].get<bool>() ? "  (exact)" : "  (bounds only)") << "\n";
    out << "dT1: " << interval_text(r["dT1"]) << "    dT2: " << interval_text(r["dT2"]) << "\n";
  }

  const auto& blowdown = r["blowdown"];
  out << "blowdown: contracted={" << join_ids(blowdown["contracted"]) << "}  fibers="
      << blowdown["fibers"].size() << "\n";
  if (!r["rdp"].is_null()) {
    out << "rational double point: " << r["rdp"]["name"].get<std::string>()
        << "  tau=" << r["rdp"]["tau"] << "\n";
  }
  if (r["tower"].is_array()) {
    for (const auto& level : r["tower"]) {
      out << "tower level " << level["level"] << ": " << level["fibers"].size() << " fiber(s)";
      for (const auto& fiber : level["fibers"]) {
        if (!fiber["rdp"].is_null()) {
          out << "  [" << fiber["rdp"]["name"].get<std::string>() << "]";
        } else {
          out << "  [e=" << fiber["report"]["invariants"]["e"] << "]";
        }
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string emit_dot(const Pipeline& p) {
  const Cycle& z = p.seq.final();
  std::ostringstream out;
  out << "graph singgraph {\n";
  out << "  node [shape=circle];\n";
  if (p.configs) {
    for (size_t i = 0; i < p.configs->size(); ++i) {
      const auto& config = (*p.configs)[i];
      out << "  subgraph cluster_" << i << " {\n";
      out << "    label=\"" << (config.cls ? config.cls->name() : "?") << "\";\n";
      for (int v : config.core) out << "    \"" << p.g.id(v) << "\";\n";
      out << "  }\n";
    }
  }
  for (int v = 0; v < p.g.size(); ++v) {
    out << "  \"" << p.g.id(v) << "\" [label=\"" << p.g.id(v) << ":" << p.g.weight(v) << ":"
        << z.at(v) << "\"";
    if (p.profile[static_cast<size_t>(v)] != 0) {
      out << ", style=filled, fillcolor=black, fontcolor=white";
    }
    out << "];\n";
  }
  std::vector<std::pair<std::string, std::string>> edge_ids;
  for (const auto& [a, b] : p.g.edges()) {
    auto ids = std::minmax(p.g.id(a), p.g.id(b));
    edge_ids.emplace_back(ids.first, ids.second);
  }
  std::sort(edge_ids.begin(), edge_ids.end());
  for (const auto& [a, b] : edge_ids) {
    out << "  \"" << a << "\" -- \"" << b << "\";\n";
  }
  out << "}\n";
  return out.str();
}

CheckResult check_graph_text(const std::string& text) {
  std::optional<DualGraph> g;
  try {
    g = parse_graph(text);
  } catch (const Error& e) {
    return {false, e.code()};
  }
  if (!is_negative_definite(*g)) return {false, "not_negative_definite"};
  auto seq = fundamental_cycle(*g);
  auto inv = scalar_invariants(*g, seq);
  if (!inv.rational) return {false, "not_rational"};
  if (!inv.almost_reduced) return {false, "not_almost_reduced"};
  return {true, ""};
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw InternalError("digest_failure", "SHA-256 computation failed");
  }
  std::ostringstream out;
  out << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < length; ++i) out << std::setw(2) << static_cast<int>(digest[i]);
  return out.str();
}

std::string dump_json(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

}  // namespace sg
