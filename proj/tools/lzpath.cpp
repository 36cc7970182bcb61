// Command-line front end: algebra data, crystal exploration, LS validation and
// verification campaigns.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "lzpath/campaign.hpp"
#include "lzpath/error.hpp"

using namespace lzp;

namespace {

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(Errc::BadInput, "cannot write " + out);
  f << text;
}

int cmd_algebra(const std::string& algebra, const std::string& out) {
  emit(algebra_summary(algebra_from_json(load_json_arg(algebra))).dump(2) + "\n", out);
  return 0;
}

int cmd_crystal(const std::string& algebra, Index shape, std::size_t depth, std::size_t node_cap,
                const std::string& format, const std::string& out) {
  const AffineData data = algebra_from_json(load_json_arg(algebra));
  if (shape < 0 || shape >= static_cast<Index>(data.size()) || shape == data.special_vertex())
    throw Error(Errc::BadInput, "--shape must name a non-special vertex");
  auto g = bfs(data, Path::straight(data.fundamental_level_zero(shape)), data.all_indices(), depth, node_cap);
  emit(format == "dot" ? g.to_dot() : g.to_json() + "\n", out);
  return 0;
}

int cmd_validate(const std::string& algebra, const std::string& path_arg, const std::string& bound_arg,
                 const std::string& out) {
  const AffineData data = algebra_from_json(load_json_arg(algebra));
  const LSPath ls = ls_from_json(load_json_arg(path_arg), data.size());
  if (ls.directions.empty()) throw Error(Errc::BadInput, "LS path has no directions");
  Rational bound;
  if (!bound_arg.empty()) {
    bound = parse_rational(bound_arg);
  } else {
    for (const auto& d : ls.directions) bound = std::max(bound, d.max_abs());
    Rational margin;
    for (Index j : data.all_indices()) margin = std::max(margin, data.simple_root(j).max_abs());
    bound += margin;
  }
  auto window = orbit_window(data, ls.directions.front(), bound);
  OrbitOrder order(data, std::move(window), real_roots_window(data, 2 * bound));
  auto v = validate_ls(order, ls);
  json j{{"valid", v.valid}, {"truncated", v.truncated}, {"reason", v.reason}};
  j["failing_link"] = v.failing_link ? json(*v.failing_link) : json(nullptr);
  json chains = json::array();
  for (const auto& c : v.certificates) {
    json links = json::array();
    for (const auto& l : c.chain)
      links.push_back(json{{"from", to_json(l.from)}, {"to", to_json(l.to)}, {"root", to_json(l.root)},
                           {"pairing", to_json(l.pairing)}});
    chains.push_back(json{{"found", c.found}, {"truncated", c.truncated}, {"chain", links}});
  }
  j["chains"] = chains;
  emit(j.dump(2) + "\n", out);
  if (v.valid) return 0;
  return v.truncated ? 3 : 2;
}

int cmd_verify(const std::string& config_arg, const std::string& out) {
  json raw;
  std::filesystem::path base;
  if (config_arg.rfind("builtin:", 0) == 0) {
    raw = builtin_config(config_arg.substr(8));
  } else {
    raw = load_json_arg(config_arg);
    if (std::filesystem::exists(config_arg)) base = std::filesystem::path(config_arg).parent_path();
  }
  const CampaignConfig config = CampaignConfig::parse(raw, base);
  const std::string outdir = out.empty() ? config.out : out;
  const CampaignResult result = run_campaign(config, outdir);
  for (std::size_t k = 0; k < result.reports.size(); ++k)
    std::cout << config.checks[k].name << ": " << verdict_name(result.reports[k].verdict) << "\n";
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Littelmann paths for level-zero weights of affine Kac-Moody algebras"};
  app.require_subcommand(1);

  std::string algebra, out, format = "dot", config, path, bound;
  Index shape = 1;
  std::size_t depth = 2, node_cap = kDefaultNodeCap;

  auto* alg = app.add_subcommand("algebra", "Print marks, comarks, delta, level-zero fundamental weights and Gram data");
  alg->add_option("--algebra", algebra, "Cartan data: JSON text or file")->required();
  alg->add_option("--out", out, "Output file (default stdout)");

  auto* cry = app.add_subcommand("crystal", "Explore the crystal of a level-zero fundamental weight");
  cry->add_option("--algebra", algebra, "Cartan data: JSON text or file")->required();
  cry->add_option("--shape", shape, "Vertex i of the weight")->required();
  cry->add_option("--depth", depth, "Exploration radius")->check(CLI::NonNegativeNumber);
  cry->add_option("--node-cap", node_cap, "Abort beyond this many nodes")->check(CLI::PositiveNumber);
  cry->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  cry->add_option("--out", out, "Output file (default stdout)");

  auto* val = app.add_subcommand("validate", "Check an LS path against the orbit order");
  val->add_option("--algebra", algebra, "Cartan data: JSON text or file")->required();
  val->add_option("--path", path, "LS path: JSON text or file")->required();
  val->add_option("--bound", bound, "L-infinity bound of the orbit window");
  val->add_option("--out", out, "Output file (default stdout)");

  auto* ver = app.add_subcommand("verify", "Run a verification campaign");
  ver->add_option("--config", config, "Campaign config file, JSON text or builtin:<name>")->required();
  ver->add_option("--out", out, "Report directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*alg) return cmd_algebra(algebra, out);
    if (*cry) return cmd_crystal(algebra, shape, depth, node_cap, format, out);
    if (*val) return cmd_validate(algebra, path, bound, out);
    if (*ver) return cmd_verify(config, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::CapExceeded ? 3 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
