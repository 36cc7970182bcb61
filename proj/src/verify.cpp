#include "lzpath/verify.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <iterator>
#include <set>

#include "lzpath/error.hpp"
#include "lzpath/ls.hpp"

namespace lzp {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified-on-window";
    case Verdict::Counterexample: return "counterexample";
    case Verdict::Inconclusive: return "inconclusive-truncation";
  }
  return "unknown";
}

json Report::to_json(bool with_timings) const {
  json j{{"theorem", theorem}, {"parameters", parameters}, {"verdict", verdict_name(verdict)},
         {"certificates", certificates}};
  if (with_timings) j["timings"] = timings;
  return j;
}

Fault parse_fault(const std::string& name) {
  if (name.empty() || name == "none") return Fault::None;
  if (name == "scaled-lowering") return Fault::ScaledLowering;
  throw Error(Errc::BadInput, "unknown fault '" + name + "'");
}

Harness::Harness(const AffineData& d, Fault fault, std::size_t cap)
    : data(d), ops(CrystalOps::standard(d)), node_cap(cap) {
  if (fault == Fault::ScaledLowering) {
    const AffineData* dp = &d;
    ops.f = [dp](const Path& p, Index i) -> std::optional<Path> {
      auto r = f_op(*dp, p, i);
      if (!r) return r;
      return scale(2, *r);
    };
  }
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kMaxCertificates = 20;

class Timer {
 public:
  explicit Timer(Report& r) : report_(r), start_(Clock::now()) {}
  ~Timer() { report_.timings["seconds"] = std::chrono::duration<double>(Clock::now() - start_).count(); }

 private:
  Report& report_;
  Clock::time_point start_;
};

json algebra_json(const AffineData& data) {
  return json{{"cartan", data.cartan().entries()}, {"special_vertex", data.special_vertex()}};
}

json index_json(const IndexSet& s) { return json(s); }

json paths_json(const std::vector<Path>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(to_json(p));
  return a;
}

std::vector<Path> paths_from(const json& a, std::size_t rank) {
  std::vector<Path> out;
  for (const auto& p : a) out.push_back(path_from_json(p, rank));
  return out;
}

/// Operator word leading from the root of the graph to `target`, found by
/// applying the harness operators themselves.
OperatorWord word_to(const CrystalOps& ops, const CrystalGraph& g, std::size_t target) {
  std::vector<std::optional<std::pair<std::size_t, OpLetter>>> parent(g.size());
  std::vector<char> seen(g.size(), 0);
  std::deque<std::size_t> queue{g.root()};
  seen[g.root()] = 1;
  while (!queue.empty() && !seen[target]) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (Index i : g.colors())
      for (bool raise : {false, true}) {
        auto next = raise ? ops.e(g.nodes()[u], i) : ops.f(g.nodes()[u], i);
        if (!next) continue;
        auto v = g.find(*next);
        if (!v || seen[*v]) continue;
        seen[*v] = 1;
        parent[*v] = std::make_pair(u, OpLetter{raise, i});
        queue.push_back(*v);
      }
  }
  OperatorWord w;
  for (std::size_t x = target; parent[x]; x = parent[x]->first) w.push_back(parent[x]->second);
  return w;  // letters nearest the root come last: applied first
}

void downgrade(Report& r, Verdict v) {
  if (v == Verdict::Counterexample || (v == Verdict::Inconclusive && r.verdict == Verdict::Verified)) r.verdict = v;
}

std::optional<Path> apply_n(const std::function<std::optional<Path>(const Path&, Index)>& op, Path p, Index i,
                            long n) {
  for (long k = 0; k < n; ++k) {
    auto next = op(p, i);
    if (!next) return std::nullopt;
    p = std::move(*next);
  }
  return p;
}

json optional_path_json(const std::optional<Path>& p) { return p ? to_json(*p) : json(nullptr); }

std::optional<Path> optional_path_from(const json& j, std::size_t rank) {
  if (j.is_null()) return std::nullopt;
  return path_from_json(j, rank);
}

/// Componentwise action of a root operator on a ∗ b.
std::optional<Path> tensor_rule(const AffineData& data, const Path& a, const Path& b, Index i, bool raise) {
  const long phi_a = phi(a, i), eps_b = eps(b, i);
  if (raise) {
    if (phi_a >= eps_b) {
      auto ea = e_op(data, a, i);
      return ea ? std::optional<Path>(concat(*ea, b)) : std::nullopt;
    }
    auto eb = e_op(data, b, i);
    return eb ? std::optional<Path>(concat(a, *eb)) : std::nullopt;
  }
  if (phi_a > eps_b) {
    auto fa = f_op(data, a, i);
    return fa ? std::optional<Path>(concat(*fa, b)) : std::nullopt;
  }
  auto fb = f_op(data, b, i);
  return fb ? std::optional<Path>(concat(a, *fb)) : std::nullopt;
}

/// Orbit window of a level-zero weight big enough to hold all the given directions.
OrbitOrder orbit_order_covering(const AffineData& data, const Weight& lambda, const std::vector<Weight>& dirs) {
  Rational bound = lambda.max_abs();
  for (const auto& d : dirs) bound = std::max(bound, d.max_abs());
  Rational margin;
  for (std::size_t j = 0; j < data.size(); ++j) margin = std::max(margin, data.simple_root(j).max_abs());
  bound += margin;
  auto win = orbit_window(data, lambda, bound);
  auto roots = real_roots_window(data, 2 * bound);
  return OrbitOrder(data, std::move(win), roots);
}

Character character_sum(const std::vector<Path>& dominant, const IndexSet& S, const WeightWindow& window,
                        const AffineData& data) {
  Character ch{window.description, {}};
  for (const auto& d : dominant) ch += character_of(generate_BS(data, d.endpoint(), S), window);
  return ch;
}

}  // namespace

// ---------------------------------------------------------------- norm bound

Report check_norm_bound(const Harness& h, Index i, std::size_t depth) {
  Report r;
  r.theorem = "norm-bound";
  Timer timer(r);
  const Weight& varpi = h.data.fundamental_level_zero(i);
  const Rational bound = h.data.classical_norm(varpi);
  r.parameters = json{{"algebra", algebra_json(h.data)}, {"i", i}, {"depth", depth}, {"bound", to_json(bound)}};
  CrystalGraph g;
  try {
    g = bfs(h.ops, Path::straight(varpi), h.data.all_indices(), depth, h.node_cap);
  } catch (const Error& e) {
    if (e.code() != Errc::CapExceeded) throw;
    r.verdict = Verdict::Inconclusive;
    r.certificates.push_back(json{{"kind", "cap"}, {"message", e.what()}});
    return r;
  }
  Rational max_norm = bound;
  bool first = true;
  std::size_t violations = 0;
  for (std::size_t u = 0; u < g.size(); ++u) {
    const Path& p = g.nodes()[u];
    Rational n = h.data.classical_norm(p.endpoint());
    if (first || n > max_norm) max_norm = n;
    first = false;
    if (n > bound) {
      r.verdict = Verdict::Counterexample;
      if (++violations > kMaxCertificates) continue;
      r.certificates.push_back(json{{"kind", "norm-bound"},
                                    {"i", i},
                                    {"word", to_string(word_to(h.ops, g, u))},
                                    {"path", to_json(p)},
                                    {"norm", to_json(n)},
                                    {"bound", to_json(bound)}});
    }
  }
  r.certificates.push_back(json{{"kind", "summary"}, {"nodes", g.size()}, {"max_norm", to_json(max_norm)}, {"violations", violations}});
  return r;
}

// ---------------------------------------------------------------- branching

Report check_branching(const Harness& h, Index i, const IndexSet& S, std::size_t depth) {
  Report r;
  r.theorem = "branching";
  Timer timer(r);
  r.parameters = json{{"algebra", algebra_json(h.data)}, {"i", i}, {"S", index_json(S)}, {"depth", depth}};
  if (S.size() >= h.data.size()) throw Error(Errc::BadInput, "S must be a proper subset of I");
  try {
    auto g = bfs(h.ops, Path::straight(h.data.fundamental_level_zero(i)), h.data.all_indices(), depth, h.node_cap);
    auto comps = s_components(h.ops, g, S, h.node_cap);
    json list = json::array();
    for (const auto& c : comps) {
      std::size_t dom;
      try {
        dom = find_dominant_extremal(h.ops, c, S);
      } catch (const Error& e) {
        if (e.code() != Errc::NotFound && e.code() != Errc::NotUnique) throw;
        r.verdict = Verdict::Counterexample;
        r.certificates.push_back(json{{"kind", "dominant-extremal"}, {"S", index_json(S)},
                                      {"members", paths_json(c.nodes())}, {"message", e.what()}});
        continue;
      }
      const Path& top = c.nodes()[dom];
      auto bs = generate_BS(h.data, top.endpoint(), S, h.node_cap);
      auto gbs = closed_graph(h.ops, bs, S, Path::straight(top.endpoint()));
      bool iso = is_dominant_S(top, S) && rooted_colored_isomorphic(c.rerooted(dom), gbs);
      if (!iso) {
        r.verdict = Verdict::Counterexample;
        r.certificates.push_back(json{{"kind", "branching-isomorphism"}, {"S", index_json(S)},
                                      {"root", to_json(top)}, {"members", paths_json(c.nodes())}});
        continue;
      }
      list.push_back(json{{"dominant_weight", to_json(top.endpoint())}, {"size", c.size()}});
    }
    r.certificates.push_back(json{{"kind", "summary"}, {"explored_nodes", g.size()}, {"components", list}});
  } catch (const Error& e) {
    if (e.code() != Errc::CapExceeded && e.code() != Errc::NotFiniteType) throw;
    downgrade(r, Verdict::Inconclusive);
    r.certificates.push_back(json{{"kind", "cap"}, {"message", e.what()}});
  }
  return r;
}

Report check_character_branching(const Harness& h, Index i, const IndexSet& S, const Rational& delta_window,
                                 std::size_t depth) {
  Report r;
  r.theorem = "character-branching";
  Timer timer(r);
  const auto window = WeightWindow::delta_band(delta_window);
  r.parameters = json{{"algebra", algebra_json(h.data)}, {"i", i}, {"S", index_json(S)},
                      {"window", window.description}, {"depth", depth}};
  if (S.size() >= h.data.size()) throw Error(Errc::BadInput, "S must be a proper subset of I");
  try {
    auto g = bfs(h.ops, Path::straight(h.data.fundamental_level_zero(i)), h.data.all_indices(), depth, h.node_cap);
    Character lhs = character_window(g, window);
    auto comps = s_components(h.ops, g, S, h.node_cap);
    std::vector<Path> dominant, window_nodes;
    for (const auto& c : comps) {
      for (const auto& p : c.nodes())
        if (window.contains(p.endpoint()) && !g.find(p))
          throw Error(Errc::IncompleteWindow, "S-component reaches an unexplored node inside the window");
      dominant.push_back(c.nodes()[find_dominant_extremal(h.ops, c, S)]);
    }
    for (const auto& p : g.nodes())
      if (window.contains(p.endpoint())) window_nodes.push_back(p);
    Character rhs = character_sum(dominant, S, window, h.data);
    if (!(lhs == rhs)) {
      r.verdict = Verdict::Counterexample;
      r.certificates.push_back(json{{"kind", "character"}, {"S", index_json(S)}, {"window", to_json(delta_window)},
                                    {"window_paths", paths_json(window_nodes)}, {"dominant", paths_json(dominant)}});
    }
    r.certificates.push_back(json{{"kind", "summary"},
                                  {"lhs", json::parse(to_json(lhs))},
                                  {"rhs", json::parse(to_json(rhs))},
                                  {"dominant_elements", dominant.size()}});
  } catch (const Error& e) {
    if (e.code() != Errc::CapExceeded && e.code() != Errc::NotFiniteType && e.code() != Errc::IncompleteWindow) throw;
    downgrade(r, Verdict::Inconclusive);
    r.certificates.push_back(json{{"kind", "truncation"}, {"message", e.what()}});
  }
  return r;
}

// ---------------------------------------------------------------- minuscule decomposition

Report check_minuscule_decomposition(const Harness& h, const Weight& lambda, Index i, std::size_t depth,
                                     const Rational& delta_window) {
  Report r;
  r.theorem = "minuscule-decomposition";
  Timer timer(r);
  const AffineData& data = h.data;
  const Weight& varpi = data.fundamental_level_zero(i);
  r.parameters = json{{"algebra", algebra_json(data)}, {"lambda", to_json(lambda)}, {"i", i},
                      {"depth", depth}, {"seed_window", "|delta| <= " + to_string(delta_window)}};

  for (Index j : data.all_indices())
    if (lambda.pairings[j] < 0 || !is_integer(lambda.pairings[j]))
      throw Error(Errc::NotDominant, "lambda must be dominant integral");
  if (std::all_of(lambda.pairings.begin(), lambda.pairings.end(), [](const Rational& q) { return q == 0; }))
    throw Error(Errc::BadInput, "lambda must not be a multiple of delta");
  for (const auto& beta : real_roots_window(data, Rational(6)))
    if (abs(beta.pair(varpi)) > 1) throw Error(Errc::BadInput, "varpi_" + std::to_string(i) + " is not minuscule");

  // seeds: orbit elements with |δ| ≤ window
  auto classical = orbit_window(data, varpi, Rational(1000000), data.classical_indices());
  Rational bound = delta_window;
  for (const auto& w : classical.elements) bound = std::max(bound, w.max_abs());
  auto orbit = orbit_window(data, varpi, bound);
  std::vector<Weight> seeds;
  for (const auto& w : orbit.elements)
    if (abs(w.delta) <= delta_window) seeds.push_back(w);

  const IndexSet all = data.all_indices();
  const Path pl = Path::straight(lambda);
  const Rational varpi_norm = data.classical_norm(varpi);
  auto is_highest = [&](const Path& p) {
    return std::all_of(all.begin(), all.end(), [&](Index j) { return !h.ops.e(p, j); });
  };

  std::set<Path> dominant_seeds;
  for (const auto& nu : seeds)
    if (is_lambda_dominant(Path::straight(nu), lambda)) dominant_seeds.insert(concat(pl, Path::straight(nu)));

  json per_seed = json::array();
  std::set<Path> claimed;
  try {
    for (const auto& nu : seeds) {
      const Path pnu = Path::straight(nu);
      const Path seed = concat(pl, pnu);
      if (is_lambda_dominant(pnu, lambda)) {
        Weight top = lambda + nu;
        bool dominant_top = std::all_of(all.begin(), all.end(), [&](Index j) { return top.pairings[j] >= 0; });
        auto g = bfs(h.ops, seed, all, depth, h.node_cap);
        auto ref = bfs(h.ops, Path::straight(top), all, depth, h.node_cap);
        bool iso = rooted_colored_isomorphic(g, ref, depth);
        std::size_t highest = 0, seeds_inside = 0;
        bool disjoint = true;
        for (const auto& p : g.nodes()) {
          if (is_highest(p)) ++highest;
          if (dominant_seeds.count(p)) ++seeds_inside;
          if (!claimed.insert(p).second) disjoint = false;
        }
        bool ok = dominant_top && is_highest(seed) && iso && highest == 1 && seeds_inside == 1 && disjoint;
        per_seed.push_back(json{{"seed", to_json(nu)}, {"lambda_dominant", true}, {"nodes", g.size()},
                                {"isomorphic", iso}, {"highest_elements", highest},
                                {"dominant_seeds_in_component", seeds_inside}, {"disjoint", disjoint}});
        if (!ok) {
          r.verdict = Verdict::Counterexample;
          r.certificates.push_back(json{{"kind", "minuscule-component"}, {"seed", to_json(seed)},
                                        {"lambda", to_json(lambda)}, {"depth", depth}});
        }
        continue;
      }
      // raise greedily until every e_j vanishes
      Path cur = seed;
      OperatorWord word;
      std::size_t steps = 0;
      while (true) {
        std::optional<Path> next;
        for (Index j : all)
          if ((next = h.ops.e(cur, j))) {
            word.insert(word.begin(), OpLetter{true, j});
            break;
          }
        if (!next) break;
        cur = std::move(*next);
        if (++steps > h.node_cap) throw Error(Errc::CapExceeded, "raising did not terminate");
      }
      Weight reached = cur.endpoint() - lambda;
      Path preached = Path::straight(reached);
      bool ok = cur == concat(pl, preached) && is_lambda_dominant(preached, lambda) &&
                data.level(reached) == 0 && data.classical_norm(reached) == varpi_norm;
      per_seed.push_back(json{{"seed", to_json(nu)}, {"lambda_dominant", false}, {"raising_word", to_string(word)},
                              {"reached", to_json(reached)}, {"reached_seed", ok}});
      if (!ok) {
        r.verdict = Verdict::Counterexample;
        r.certificates.push_back(json{{"kind", "raise-to-seed"}, {"seed", to_json(seed)},
                                      {"word", to_string(word)}, {"result", to_json(cur)}});
      }
    }
  } catch (const Error& e) {
    if (e.code() != Errc::CapExceeded && e.code() != Errc::DepthMismatch) throw;
    downgrade(r, Verdict::Inconclusive);
    r.certificates.push_back(json{{"kind", "truncation"}, {"message", e.what()}});
  }
  r.certificates.push_back(json{{"kind", "summary"}, {"seeds", per_seed}});
  return r;
}

// ---------------------------------------------------------------- sigma / scaling

Report check_sigma_properties(const Harness& h, const Weight& lambda, const std::vector<long>& ms,
                              std::size_t sample_size, std::size_t depth, std::uint64_t seed) {
  Report r;
  r.theorem = "scale-intertwining";
  Timer timer(r);
  const AffineData& data = h.data;
  r.parameters = json{{"algebra", algebra_json(data)}, {"lambda", to_json(lambda)}, {"m", ms},
                      {"sample_size", sample_size}, {"depth", depth}, {"seed", seed}};
  const IndexSet all = data.all_indices();
  const Path pl = Path::straight(lambda);
  CrystalGraph g;
  try {
    g = bfs(h.ops, pl, all, depth, h.node_cap);
  } catch (const Error& e) {
    if (e.code() != Errc::CapExceeded) throw;
    r.verdict = Verdict::Inconclusive;
    r.certificates.push_back(json{{"kind", "cap"}, {"message", e.what()}});
    return r;
  }
  std::mt19937_64 rng(seed);
  std::vector<Path> sample;
  for (std::size_t k = 0; k < sample_size; ++k) sample.push_back(g.nodes()[rng() % g.size()]);

  const bool level_zero = data.level(lambda) == 0;
  std::optional<OrbitOrder> order;
  if (level_zero) {
    std::vector<Weight> dirs;
    for (const auto& p : sample)
      for (const auto& s : p.segments()) dirs.push_back(s.direction);
    order.emplace(orbit_order_covering(data, lambda, dirs));
  }

  std::size_t identities = 0, pieces_checked = 0;
  auto fail = [&](json cert) {
    r.verdict = Verdict::Counterexample;
    if (r.certificates.size() < kMaxCertificates) r.certificates.push_back(std::move(cert));
  };
  for (long m : ms) {
    for (const auto& piece : split_scaled(m, pl))
      if (!(piece == pl)) fail(json{{"kind", "sigma-straight"}, {"m", m}, {"piece", to_json(piece)}});
    for (const auto& p : sample) {
      const Path sp = scale(m, p);
      ++identities;
      if (!(sp.endpoint() == Rational(m) * p.endpoint()))
        fail(json{{"kind", "scale-weight"}, {"m", m}, {"path", to_json(p)}});
      for (Index j : all) {
        for (bool raise : {false, true}) {
          const auto& op = raise ? h.ops.e : h.ops.f;
          auto once = op(p, j);
          std::optional<Path> lhs = once ? std::optional<Path>(scale(m, *once)) : std::nullopt;
          auto rhs = apply_n(op, sp, j, m);
          ++identities;
          if (lhs != rhs)
            fail(json{{"kind", "scale-intertwining"}, {"m", m}, {"i", j}, {"op", raise ? "e" : "f"},
                      {"path", to_json(p)}, {"observed", optional_path_json(rhs)}});
        }
      }
      auto pieces = split_scaled(m, p);
      ++identities;
      if (!(concat_all(pieces) == sp)) fail(json{{"kind", "sigma-concat"}, {"m", m}, {"path", to_json(p)}});
      if (order) {
        for (const auto& piece : pieces) {
          ++pieces_checked;
          auto v = validate_ls(*order, from_path(piece));
          if (!v.valid)
            fail(json{{"kind", "sigma-ls"}, {"m", m}, {"path", to_json(p)}, {"piece", to_json(piece)},
                      {"reason", v.reason}});
        }
      }
    }
  }
  r.certificates.push_back(json{{"kind", "summary"}, {"explored_nodes", g.size()}, {"identities", identities},
                                {"pieces_validated", pieces_checked}});
  return r;
}

// ---------------------------------------------------------------- straightening

Report find_straightening_m(const Harness& h, const Weight& lambda, const OperatorWord& word, long m_max) {
  Report r;
  r.theorem = "straightening";
  Timer timer(r);
  const AffineData& data = h.data;
  r.parameters = json{{"algebra", algebra_json(data)}, {"lambda", to_json(lambda)}, {"word", to_string(word)},
                      {"m_max", m_max}};
  // suffixes π_{k+1} = π_λ, π_k, ..., π_1
  std::vector<Path> suffixes{Path::straight(lambda)};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto next = it->raise ? h.ops.e(suffixes.back(), it->index) : h.ops.f(suffixes.back(), it->index);
    if (!next) throw Error(Errc::BadInput, "operator word annihilates pi_lambda");
    suffixes.push_back(std::move(*next));
  }
  std::vector<Weight> dirs;
  for (const auto& p : suffixes)
    for (const auto& s : p.segments()) dirs.push_back(s.direction);
  auto order = orbit_order_covering(data, lambda, dirs);
  bool in_orbit = std::all_of(dirs.begin(), dirs.end(), [&](const Weight& d) { return order.window().contains(d); });
  if (!in_orbit) {
    r.verdict = Verdict::Counterexample;
    r.certificates.push_back(json{{"kind", "direction-outside-orbit"}, {"word", to_string(word)}});
    return r;
  }
  for (long m = 1; m <= m_max; ++m) {
    bool straight = std::all_of(suffixes.begin(), suffixes.end(), [&](const Path& p) {
      auto pieces = split_scaled(m, p);
      return std::all_of(pieces.begin(), pieces.end(), [](const Path& q) { return q.is_straight(); });
    });
    if (straight) {
      r.certificates.push_back(json{{"kind", "witness"}, {"m", m}, {"suffixes", suffixes.size()}});
      return r;
    }
  }
  r.verdict = Verdict::Inconclusive;
  r.certificates.push_back(json{{"kind", "no-witness"}, {"m_max", m_max}});
  return r;
}

// ---------------------------------------------------------------- tensor rule

Report check_tensor_rule(const Harness& h, const std::vector<Path>& left, const std::vector<Path>& right,
                         const IndexSet& colors, std::size_t trials, std::uint64_t seed) {
  Report r;
  r.theorem = "tensor-rule";
  Timer timer(r);
  r.parameters = json{{"algebra", algebra_json(h.data)}, {"colors", index_json(colors)}, {"trials", trials},
                      {"seed", seed}, {"left_size", left.size()}, {"right_size", right.size()}};
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (left.size() * right.size() <= trials) {
    for (std::size_t a = 0; a < left.size(); ++a)
      for (std::size_t b = 0; b < right.size(); ++b) pairs.emplace_back(a, b);
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < trials; ++k) pairs.emplace_back(rng() % left.size(), rng() % right.size());
  }
  std::size_t checked = 0;
  for (auto [a, b] : pairs) {
    const Path joined = concat(left[a], right[b]);
    for (Index i : colors)
      for (bool raise : {false, true}) {
        auto direct = raise ? h.ops.e(joined, i) : h.ops.f(joined, i);
        auto split = tensor_rule(h.data, left[a], right[b], i, raise);
        ++checked;
        if (direct != split) {
          r.verdict = Verdict::Counterexample;
          if (r.certificates.size() < kMaxCertificates)
            r.certificates.push_back(json{{"kind", "tensor-rule"}, {"i", i}, {"op", raise ? "e" : "f"},
                                          {"left", to_json(left[a])}, {"right", to_json(right[b])},
                                          {"observed", optional_path_json(direct)}});
        }
      }
  }
  r.certificates.push_back(json{{"kind", "summary"}, {"pairs", pairs.size()}, {"identities", checked}});
  return r;
}

Report check_ls_closure(const Harness& h, const Weight& lambda, const IndexSet& S, long denom_bound) {
  Report r;
  r.theorem = "ls-closure";
  Timer timer(r);
  r.parameters = json{{"algebra", algebra_json(h.data)}, {"lambda", to_json(lambda)}, {"S", index_json(S)},
                      {"denom_bound", denom_bound}};
  try {
    auto closure = generate_B_finite(h.data, lambda, S, h.node_cap);
    auto order = finite_order(h.data, lambda, S);
    auto listed = enumerate_B_window(order, denom_bound);
    std::vector<Path> accepted;
    for (const auto& ls : listed.paths) accepted.push_back(to_path(ls));
    std::sort(accepted.begin(), accepted.end());
    if (listed.truncated) {
      r.verdict = Verdict::Inconclusive;
      r.certificates.push_back(json{{"kind", "truncation"}, {"max_pairing", max_pairing(order, lambda)}});
    }
    std::vector<Path> only_closure, only_validator;
    std::set_difference(closure.begin(), closure.end(), accepted.begin(), accepted.end(),
                        std::back_inserter(only_closure));
    std::set_difference(accepted.begin(), accepted.end(), closure.begin(), closure.end(),
                        std::back_inserter(only_validator));
    if (!only_validator.empty() || (!listed.truncated && !only_closure.empty())) {
      r.verdict = Verdict::Counterexample;
      r.certificates.push_back(json{{"kind", "ls-closure"}, {"S", index_json(S)}, {"lambda", to_json(lambda)},
                                    {"only_closure", paths_json(only_closure)},
                                    {"only_validator", paths_json(only_validator)}});
    }
    r.certificates.push_back(json{{"kind", "summary"}, {"closure_size", closure.size()},
                                  {"validated_size", accepted.size()}, {"orbit_size", order.size()}});
  } catch (const Error& e) {
    if (e.code() != Errc::CapExceeded) throw;
    downgrade(r, Verdict::Inconclusive);
    r.certificates.push_back(json{{"kind", "cap"}, {"message", e.what()}});
  }
  return r;
}

OperatorWord random_word(const AffineData& data, const Weight& lambda, std::size_t length, std::mt19937_64& rng) {
  OperatorWord word;
  Path cur = Path::straight(lambda);
  for (std::size_t k = 0; k < length; ++k) {
    std::vector<std::pair<OpLetter, Path>> options;
    for (Index j : data.all_indices()) {
      if (auto f = f_op(data, cur, j)) options.emplace_back(OpLetter{false, j}, std::move(*f));
      if (auto e = e_op(data, cur, j)) options.emplace_back(OpLetter{true, j}, std::move(*e));
    }
    if (options.empty()) break;
    auto& pick = options[rng() % options.size()];
    word.insert(word.begin(), pick.first);
    cur = std::move(pick.second);
  }
  return word;
}

// ---------------------------------------------------------------- replay

std::optional<bool> replay_certificate(const AffineData& data, const json& cert) {
  const std::string kind = cert.value("kind", "");
  const std::size_t rank = data.size();
  if (kind == "norm-bound") {
    Path p = path_from_json(cert.at("path"), rank);
    Rational bound = data.classical_norm(data.fundamental_level_zero(cert.at("i").get<Index>()));
    return data.classical_norm(p.endpoint()) > bound;
  }
  if (kind == "tensor-rule") {
    Path a = path_from_json(cert.at("left"), rank), b = path_from_json(cert.at("right"), rank);
    bool raise = cert.at("op") == "e";
    auto expected = tensor_rule(data, a, b, cert.at("i").get<Index>(), raise);
    return expected != optional_path_from(cert.at("observed"), rank);
  }
  if (kind == "scale-intertwining") {
    Path p = path_from_json(cert.at("path"), rank);
    long m = cert.at("m").get<long>();
    Index i = cert.at("i").get<Index>();
    bool raise = cert.at("op") == "e";
    auto once = raise ? e_op(data, p, i) : f_op(data, p, i);
    std::optional<Path> expected = once ? std::optional<Path>(scale(m, *once)) : std::nullopt;
    return expected != optional_path_from(cert.at("observed"), rank);
  }
  if (kind == "branching-isomorphism") {
    IndexSet S = cert.at("S").get<IndexSet>();
    Path root = path_from_json(cert.at("root"), rank);
    auto members = paths_from(cert.at("members"), rank);
    std::sort(members.begin(), members.end());
    return generate_BS(data, root.endpoint(), S) != members;
  }
  if (kind == "dominant-extremal") {
    IndexSet S = cert.at("S").get<IndexSet>();
    std::size_t count = 0;
    for (const auto& p : paths_from(cert.at("members"), rank)) {
      bool highest = std::all_of(S.begin(), S.end(), [&](Index j) { return !e_op(data, p, j); });
      if (highest && is_dominant_S(p, S)) ++count;
    }
    return count != 1;
  }
  if (kind == "character") {
    IndexSet S = cert.at("S").get<IndexSet>();
    auto window = WeightWindow::delta_band(rational_from_json(cert.at("window")));
    Character lhs = character_of(paths_from(cert.at("window_paths"), rank), window);
    Character rhs = character_sum(paths_from(cert.at("dominant"), rank), S, window, data);
    return !(lhs == rhs);
  }
  return std::nullopt;
}

}  // namespace lzp
