#include "lzpath/campaign.hpp"

#include <fstream>
#include <future>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "lzpath/error.hpp"

namespace lzp {

namespace {

const std::map<std::string, std::set<std::string>>& check_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"norm_bound", {"i", "depth"}},
      {"branching", {"i", "S", "depth"}},
      {"character_branching", {"i", "S", "window", "depth"}},
      {"minuscule_decomposition", {"lambda", "i", "depth", "seed_window"}},
      {"sigma_properties", {"lambda", "m", "sample_size", "depth", "seed"}},
      {"straightening", {"lambda", "words", "random_words", "max_length", "seed", "m_max"}},
      {"tensor_rule", {"left", "right", "colors", "depth", "trials", "seed"}},
      {"ls_closure", {"lambda", "S", "denom_bound"}},
  };
  return keys;
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw Error(Errc::BadInput, where + " must be an object");
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key)) throw Error(Errc::BadInput, "unknown key '" + key + "' in " + where);
}

long positive(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long>() <= 0) throw Error(Errc::BadInput, what + " must be a positive integer");
  return j.get<long>();
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw Error(Errc::BadInput, "cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw Error(Errc::BadInput, "cannot write " + p.string());
  out << text;
}

/// Capped depth: the check's own value or the campaign default, never above the cap.
std::size_t depth_of(const json& params, const Caps& caps) {
  if (!params.contains("depth")) return caps.depth;
  const json& d = params.at("depth");
  if (!d.is_number_integer() || d.get<long>() < 0) throw Error(Errc::BadInput, "depth must be a non-negative integer");
  if (d.get<std::size_t>() > caps.depth)
    throw Error(Errc::BadInput, "depth " + d.dump() + " exceeds the depth cap " + std::to_string(caps.depth));
  return d.get<std::size_t>();
}

Index index_param(const AffineData& data, const json& params, const char* key) {
  if (!params.contains(key)) throw Error(Errc::BadInput, std::string("missing '") + key + "'");
  Index i = params.at(key).get<Index>();
  if (i < 0 || i >= static_cast<Index>(data.size()))
    throw Error(Errc::BadInput, std::string("'") + key + "' out of range");
  return i;
}

Index classical_index(const AffineData& data, const json& params) {
  Index i = index_param(data, params, "i");
  if (i == data.special_vertex()) throw Error(Errc::BadInput, "i must differ from the special vertex");
  return i;
}

IndexSet index_set(const AffineData& data, const json& params, const char* key, IndexSet fallback) {
  if (!params.contains(key)) return fallback;
  IndexSet s = params.at(key).get<IndexSet>();
  std::set<Index> uniq(s.begin(), s.end());
  for (Index j : uniq)
    if (j < 0 || j >= static_cast<Index>(data.size())) throw Error(Errc::BadInput, std::string("index out of range in '") + key + "'");
  return IndexSet(uniq.begin(), uniq.end());
}

Weight weight_param(const AffineData& data, const json& params, const char* key) {
  if (!params.contains(key)) throw Error(Errc::BadInput, std::string("missing '") + key + "'");
  return weight_spec_from_json(data, params.at(key));
}

Rational rational_param(const json& params, const char* key, const Rational& fallback) {
  return params.contains(key) ? rational_from_json(params.at(key)) : fallback;
}

std::uint64_t seed_of(const json& params) { return params.value("seed", std::uint64_t{1}); }

std::vector<Path> factor_paths(const Harness& h, const Weight& w, const IndexSet& colors, std::size_t depth) {
  return bfs(h.ops, Path::straight(w), colors, depth, h.node_cap).nodes();
}

Report run_check(const Harness& h, const CheckSpec& spec, const Caps& caps) {
  const AffineData& data = h.data;
  const json& p = spec.params;
  const std::string& n = spec.name;
  if (n == "norm_bound") return check_norm_bound(h, classical_index(data, p), depth_of(p, caps));
  if (n == "branching")
    return check_branching(h, classical_index(data, p), index_set(data, p, "S", {}), depth_of(p, caps));
  if (n == "character_branching")
    return check_character_branching(h, classical_index(data, p), index_set(data, p, "S", {}),
                                     rational_param(p, "window", Rational(1)), depth_of(p, caps));
  if (n == "minuscule_decomposition")
    return check_minuscule_decomposition(h, weight_param(data, p, "lambda"), classical_index(data, p),
                                         depth_of(p, caps), rational_param(p, "seed_window", Rational(1)));
  if (n == "sigma_properties") {
    std::vector<long> ms = p.value("m", std::vector<long>{2, 3, 4});
    for (long m : ms)
      if (m < 1) throw Error(Errc::BadInput, "m must be positive");
    return check_sigma_properties(h, weight_param(data, p, "lambda"), ms, p.value("sample_size", std::size_t{200}),
                                  depth_of(p, caps), seed_of(p));
  }
  if (n == "straightening") {
    const Weight lambda = weight_param(data, p, "lambda");
    const long m_max = p.contains("m_max") ? positive(p.at("m_max"), "m_max") : caps.m_max;
    std::vector<OperatorWord> words;
    for (const auto& text : p.value("words", std::vector<std::string>{})) {
      OperatorWord w;
      std::istringstream in(text);
      for (std::string letter; in >> letter;) w.push_back(parse_letter(letter));
      words.push_back(std::move(w));
    }
    std::mt19937_64 rng(seed_of(p));
    const long count = p.value("random_words", 0L);
    const long max_len = p.value("max_length", 6L);
    for (long k = 0; k < count; ++k)
      words.push_back(random_word(data, lambda, static_cast<std::size_t>(rng() % (max_len + 1)), rng));
    Report merged;
    merged.theorem = "straightening";
    merged.parameters = json{{"algebra", json{{"cartan", data.cartan().entries()}, {"special_vertex", data.special_vertex()}}}, {"lambda", to_json(lambda)}, {"m_max", m_max},
                             {"words", json::array()}};
    double seconds = 0;
    for (const auto& w : words) {
      Report r = find_straightening_m(h, lambda, w, m_max);
      merged.parameters["words"].push_back(to_string(w));
      for (auto& c : r.certificates) {
        c["word"] = to_string(w);
        merged.certificates.push_back(c);
      }
      if (r.verdict == Verdict::Counterexample) merged.verdict = Verdict::Counterexample;
      else if (r.verdict == Verdict::Inconclusive && merged.verdict == Verdict::Verified) merged.verdict = r.verdict;
      seconds += r.timings.value("seconds", 0.0);
    }
    merged.timings["seconds"] = seconds;
    return merged;
  }
  if (n == "tensor_rule") {
    const IndexSet colors = index_set(data, p, "colors", data.all_indices());
    const std::size_t depth = depth_of(p, caps);
    auto left = factor_paths(h, weight_param(data, p, "left"), colors, depth);
    auto right = factor_paths(h, weight_param(data, p, "right"), colors, depth);
    Report r = check_tensor_rule(h, left, right, colors, p.value("trials", std::size_t{500}), seed_of(p));
    r.parameters["depth"] = depth;
    return r;
  }
  if (n == "ls_closure") {
    const long bound = p.contains("denom_bound") ? positive(p.at("denom_bound"), "denom_bound") : caps.denom_bound;
    return check_ls_closure(h, weight_param(data, p, "lambda"), index_set(data, p, "S", {}), bound);
  }
  throw Error(Errc::BadInput, "unknown check '" + n + "'");
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : check_keys()) v.push_back(k);
    return v;
  }();
  return names;
}

json load_json_arg(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\n");
  try {
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return json::parse(arg);
    return json::parse(read_file(arg));
  } catch (const json::parse_error& e) {
    throw Error(Errc::BadInput, std::string("invalid JSON: ") + e.what());
  }
}

CampaignConfig CampaignConfig::parse(const json& j, const std::filesystem::path& base_dir) {
  reject_unknown(j, {"algebra", "checks", "caps", "out", "inject_fault"}, "campaign config");
  CampaignConfig c;
  if (!j.contains("algebra")) throw Error(Errc::BadInput, "campaign config needs 'algebra'");
  if (j.at("algebra").is_string()) {
    std::filesystem::path file = j.at("algebra").get<std::string>();
    if (file.is_relative() && !base_dir.empty()) file = base_dir / file;
    c.algebra = load_json_arg(file.string());
  } else {
    c.algebra = j.at("algebra");
  }
  algebra_from_json(c.algebra);  // validate early

  if (j.contains("caps")) {
    const json& caps = j.at("caps");
    reject_unknown(caps, {"depth", "node_cap", "denom_bound", "m_max"}, "caps");
    if (caps.contains("depth")) c.caps.depth = positive(caps.at("depth"), "caps.depth");
    if (caps.contains("node_cap")) c.caps.node_cap = positive(caps.at("node_cap"), "caps.node_cap");
    if (caps.contains("denom_bound")) c.caps.denom_bound = positive(caps.at("denom_bound"), "caps.denom_bound");
    if (caps.contains("m_max")) c.caps.m_max = positive(caps.at("m_max"), "caps.m_max");
  }
  if (!j.contains("checks") || !j.at("checks").is_array() || j.at("checks").empty())
    throw Error(Errc::BadInput, "campaign config needs a non-empty 'checks' array");
  for (const auto& entry : j.at("checks")) {
    if (!entry.is_object() || !entry.contains("check") || !entry.at("check").is_string())
      throw Error(Errc::BadInput, "each check needs a 'check' name");
    const std::string name = entry.at("check").get<std::string>();
    auto it = check_keys().find(name);
    if (it == check_keys().end()) throw Error(Errc::BadInput, "unknown check '" + name + "'");
    json params = entry;
    params.erase("check");
    reject_unknown(params, it->second, "check '" + name + "'");
    c.checks.push_back(CheckSpec{name, std::move(params)});
  }
  c.out = j.value("out", std::string{});
  c.fault = parse_fault(j.value("inject_fault", std::string{}));
  return c;
}

json builtin_config(const std::string& name) {
  if (name != "a1-smoke") throw Error(Errc::BadInput, "no bundled config named '" + name + "'");
  return json::parse(R"({
    "algebra": {"cartan": [[2, -2], [-2, 2]], "special_vertex": 0},
    "caps": {"depth": 8, "node_cap": 100000, "denom_bound": 12, "m_max": 64},
    "checks": [
      {"check": "norm_bound", "i": 1, "depth": 8},
      {"check": "branching", "i": 1, "S": [1], "depth": 6},
      {"check": "minuscule_decomposition", "lambda": {"Lambda": [1, 0]}, "i": 1, "depth": 5}
    ]
  })");
}

int exit_code_for(const std::vector<Report>& reports) {
  bool inconclusive = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Counterexample) return 2;
    if (r.verdict == Verdict::Inconclusive) inconclusive = true;
  }
  return inconclusive ? 3 : 0;
}

CampaignResult run_campaign(const CampaignConfig& config, const std::filesystem::path& outdir) {
  const AffineData data = algebra_from_json(config.algebra);
  const Harness harness(data, config.fault, config.caps.node_cap);

  std::vector<std::future<Report>> pending;
  for (const auto& spec : config.checks)
    pending.push_back(std::async(std::launch::async, [&harness, &spec, &config] {
      return run_check(harness, spec, config.caps);
    }));
  CampaignResult result;
  for (auto& f : pending) result.reports.push_back(f.get());
  result.exit_code = exit_code_for(result.reports);

  if (!outdir.empty()) {
    std::filesystem::create_directories(outdir);
    json summary{{"algebra", config.algebra}, {"exit_code", result.exit_code}, {"reports", json::array()}};
    json timings = json::object();
    for (std::size_t k = 0; k < result.reports.size(); ++k) {
      std::ostringstream file;
      file << std::setw(2) << std::setfill('0') << k << '-' << config.checks[k].name << ".json";
      const Report& r = result.reports[k];
      write_file(outdir / file.str(), r.to_json().dump(2) + "\n");
      summary["reports"].push_back(json{{"file", file.str()}, {"check", config.checks[k].name},
                                        {"theorem", r.theorem}, {"verdict", verdict_name(r.verdict)}});
      timings[file.str()] = r.timings;
    }
    write_file(outdir / "summary.json", summary.dump(2) + "\n");
    write_file(outdir / "timings.json", timings.dump(2) + "\n");
  }
  return result;
}

}  // namespace lzp
