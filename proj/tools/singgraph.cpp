#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "singgraph/gen.hpp"
#include "singgraph/report.hpp"
#include "singgraph/version.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sg::IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw sg::IoError("cannot read " + path);
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sg::IoError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw sg::IoError("cannot write " + path);
}

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    try {
      size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw sg::DomainError("invalid_parameters", "not an integer: " + item);
    }
  }
  if (out.empty()) throw sg::DomainError("invalid_parameters", "empty integer list");
  return out;
}

sg::ConfigClass class_from_cli(const std::string& name, long long q, long long m) {
  using sg::ConfigFamily;
  sg::ConfigClass cls;
  if (name == "1-A") cls = {ConfigFamily::OneA, m, q, 0};
  else if (name == "2-AL") cls = {ConfigFamily::TwoAL, m, q, 0};
  else if (name == "2-AR") cls = {ConfigFamily::TwoAR, m, q, 0};
  else if (name == "2-AS") cls = {ConfigFamily::TwoAS, m, 0, 0};
  else if (name == "3-A") cls = {ConfigFamily::ThreeA, m, q, 0};
  else if (name == "2-D") {
    cls = (m % 2 == 0) ? sg::ConfigClass{ConfigFamily::TwoDEven, m, 0, m / 2}
                       : sg::ConfigClass{ConfigFamily::TwoDOdd, m, 0, (m - 1) / 2};
  } else if (name == "1-DI") cls = {ConfigFamily::OneDI, m, 0, m};
  else if (name == "1-DII") {
    cls = (m % 2 == 0) ? sg::ConfigClass{ConfigFamily::OneDIIEven, m, 0, m / 2}
                       : sg::ConfigClass{ConfigFamily::OneDIIOdd, m, 0, (m - 1) / 2};
  } else if (name == "1-E6") cls = {ConfigFamily::OneE6, 6, 0, 0};
  else if (name == "1-E7") cls = {ConfigFamily::OneE7, 7, 0, 0};
  else {
    throw sg::DomainError("unknown_class",
                          "unknown catalog class \"" + name +
                              "\" (expected 1-A, 2-AL, 2-AR, 2-AS, 3-A, 2-D, 1-DI, 1-DII, "
                              "1-E6 or 1-E7)");
  }
  return cls;
}

sg::Pipeline pipeline_from_file(const std::string& path) {
  return sg::run_pipeline(sg::parse_graph(read_file(path)));
}

int cmd_check(const std::string& path) {
  const auto result = sg::check_graph_text(read_file(path));
  nlohmann::json out;
  out["ok"] = result.ok;
  if (!result.ok) out["diagnostic"] = result.diagnostic;
  std::cout << sg::dump_json(out);
  return result.ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deformation invariants of rational surface singularities computed from "
               "resolution dual graphs"};
  app.set_version_flag("--version", std::string(sg::kToolName) + " " + sg::kToolVersion);
  app.require_subcommand(1);

  std::string path;
  std::string format = "json";
  std::string out_path;
  bool with_tower = false;

  auto* check = app.add_subcommand("check", "validate a graph file (exit 0 iff it passes)");
  check->add_option("file", path, "graph JSON file")->required();

  auto* report = app.add_subcommand("report", "full invariant report");
  report->add_option("file", path, "graph JSON file")->required();
  report->add_flag("--tower", with_tower, "include the full blowdown tower");
  report->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* configs = app.add_subcommand("configs", "rational double point configurations");
  configs->add_option("file", path, "graph JSON file")->required();

  auto* blowdown = app.add_subcommand("blowdown", "one Tjurina contraction step");
  blowdown->add_option("file", path, "graph JSON file")->required();

  auto* dot = app.add_subcommand("dot", "render the graph as DOT");
  dot->add_option("file", path, "graph JSON file")->required();

  auto* gen = app.add_subcommand("gen", "generate a graph file");
  gen->require_subcommand(1);

  std::string weights_text = "";
  auto* gen_chain_cmd = gen->add_subcommand("chain", "path graph from a weight list");
  gen_chain_cmd->add_option("--weights,-w", weights_text, "comma-separated weights, e.g. -2,-3,-2")
      ->required();
  gen_chain_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

  long long cyc_n = 0, cyc_q = 0;
  auto* gen_cyclic_cmd =
      gen->add_subcommand("cyclic", "cyclic quotient singularity chain from (n, q)");
  gen_cyclic_cmd->add_option("n", cyc_n, "order n")->required();
  gen_cyclic_cmd->add_option("q", cyc_q, "parameter q")->required();
  gen_cyclic_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

  std::string class_name;
  long long cat_q = 0, cat_m = 0;
  std::string attach_text;
  auto* gen_catalog_cmd = gen->add_subcommand("catalog", "instantiate a configuration class");
  gen_catalog_cmd->add_option("class", class_name, "1-A, 2-AL, 2-AR, 2-AS, 3-A, 2-D, 1-DI, 1-DII, 1-E6, 1-E7")
      ->required();
  gen_catalog_cmd->add_option("--q", cat_q, "plateau multiplicity (A families)");
  gen_catalog_cmd->add_option("--m", cat_m, "number of core vertices");
  gen_catalog_cmd->add_option("--attach", attach_text,
                              "comma-separated attachment weights (default -3 each)");
  gen_catalog_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);

    if (check->parsed()) return cmd_check(path);

    if (report->parsed()) {
      const std::string bytes = read_file(path);
      auto p = sg::run_pipeline(sg::parse_graph(bytes));
      const auto doc = sg::build_report(p, bytes, {with_tower});
      std::cout << (format == "text" ? sg::render_text(doc) : sg::dump_json(doc));
      return 0;
    }

    if (configs->parsed()) {
      auto p = pipeline_from_file(path);
      if (!p.configs) throw sg::not_almost_reduced();
      const auto doc = sg::build_report(p, "", {});
      std::cout << sg::dump_json({{"configurations", doc["configurations"]}});
      return 0;
    }

    if (blowdown->parsed()) {
      auto p = pipeline_from_file(path);
      const auto doc = sg::build_report(p, "", {});
      nlohmann::json out = doc["blowdown"];
      out["rdp"] = doc["rdp"];
      std::cout << sg::dump_json(out);
      return 0;
    }

    if (dot->parsed()) {
      std::cout << sg::emit_dot(pipeline_from_file(path));
      return 0;
    }

    if (gen_chain_cmd->parsed()) {
      write_output(out_path, sg::serialize_graph(sg::gen_chain(parse_int_list(weights_text))));
      return 0;
    }
    if (gen_cyclic_cmd->parsed()) {
      write_output(out_path, sg::serialize_graph(sg::gen_cyclic(cyc_n, cyc_q)));
      return 0;
    }
    if (gen_catalog_cmd->parsed()) {
      auto cls = class_from_cli(class_name, cat_q, cat_m);
      std::vector<long long> attach;
      if (attach_text.empty()) {
        attach.assign(static_cast<size_t>(cls.n_attached()), -3);
      } else {
        attach = parse_int_list(attach_text);
      }
      write_output(out_path, sg::serialize_graph(sg::gen_catalog(cls, attach)));
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const sg::Error& e) {
    nlohmann::json diag = {{"ok", false}, {"diagnostic", e.code()}};
    std::cout << sg::dump_json(diag);
    std::cerr << sg::kToolName << ": " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    std::cerr << sg::kToolName << ": internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
