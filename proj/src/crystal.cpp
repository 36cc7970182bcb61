#include "lzpath/crystal.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "lzpath/error.hpp"
#include "lzpath/json_io.hpp"

namespace lzp {

CrystalOps CrystalOps::standard(const AffineData& data) {
  const AffineData* d = &data;
  return CrystalOps{[d](const Path& p, Index i) { return f_op(*d, p, i); },
                    [d](const Path& p, Index i) { return e_op(*d, p, i); }};
}

bool CrystalGraph::has_frontier() const {
  return std::any_of(frontier_.begin(), frontier_.end(), [](char c) { return c != 0; });
}

std::optional<std::size_t> CrystalGraph::find(const Path& p) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), p);
  if (it == nodes_.end() || !(*it == p)) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::optional<std::size_t> CrystalGraph::f_target(std::size_t id, Index color) const {
  auto it = f_adj_.find({id, color});
  if (it == f_adj_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> CrystalGraph::e_target(std::size_t id, Index color) const {
  auto it = e_adj_.find({id, color});
  if (it == e_adj_.end()) return std::nullopt;
  return it->second;
}

void CrystalGraph::index_edges() {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  f_adj_.clear();
  e_adj_.clear();
  for (const auto& e : edges_) {
    f_adj_[{e.source, e.color}] = e.target;
    e_adj_[{e.target, e.color}] = e.source;
  }
}

CrystalGraph CrystalGraph::rerooted(std::size_t new_root) const {
  CrystalGraph g = *this;
  g.root_ = new_root;
  return g;
}

std::string CrystalGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph crystal {\n";
  os << "  node [shape=box, fontsize=10];\n";
  for (std::size_t u = 0; u < nodes_.size(); ++u) {
    os << "  n" << u << " [label=\"" << to_string(nodes_[u].endpoint()) << "\"";
    if (u == root_) os << ", peripheries=2";
    if (frontier_[u]) os << ", style=dashed";
    os << "];\n";
  }
  for (const auto& e : edges_) os << "  n" << e.source << " -> n" << e.target << " [label=\"" << e.color << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string CrystalGraph::to_json() const {
  json nodes = json::array(), edges = json::array();
  for (std::size_t u = 0; u < nodes_.size(); ++u)
    nodes.push_back(json{{"id", u},
                         {"weight", lzp::to_json(nodes_[u].endpoint())},
                         {"path", lzp::to_json(nodes_[u])},
                         {"frontier", frontier_[u] != 0}});
  for (const auto& e : edges_) edges.push_back(json{{"source", e.source}, {"color", e.color}, {"target", e.target}});
  json out{{"root", root_}, {"depth", depth_ ? json(*depth_) : json(nullptr)}, {"colors", colors_},
           {"nodes", nodes}, {"edges", edges}};
  return out.dump(2) + "\n";
}

CrystalGraph bfs(const CrystalOps& ops, const Path& start, const IndexSet& colors, std::size_t depth,
                 std::size_t node_cap) {
  std::map<Path, std::size_t> dist{{start, 0}};
  std::deque<Path> queue{start};
  std::vector<std::tuple<Path, Index, Path>> f_results;
  auto add = [&](const Path& p, std::size_t d) {
    if (dist.count(p)) return;
    if (dist.size() >= node_cap) throw Error(Errc::CapExceeded, "crystal exploration exceeds " + std::to_string(node_cap) + " nodes");
    dist.emplace(p, d);
    queue.push_back(p);
  };
  while (!queue.empty()) {
    Path cur = std::move(queue.front());
    queue.pop_front();
    const std::size_t d = dist.at(cur);
    if (d >= depth) continue;
    for (Index i : colors) {
      if (auto f = ops.f(cur, i)) {
        f_results.emplace_back(cur, i, *f);
        add(*f, d + 1);
      }
      if (auto e = ops.e(cur, i)) add(*e, d + 1);
    }
  }

  CrystalGraph g;
  g.colors_ = colors;
  g.depth_ = depth;
  for (const auto& [p, d] : dist) g.nodes_.push_back(p);
  g.frontier_.assign(g.nodes_.size(), 0);
  g.root_ = *g.find(start);
  for (const auto& [src, i, dst] : f_results) g.edges_.push_back(CrystalEdge{*g.find(src), i, *g.find(dst)});
  // Nodes at the exploration radius: keep their edges inside the graph and
  // mark them as frontier only if some neighbour is missing.
  for (std::size_t u = 0; u < g.nodes_.size(); ++u) {
    if (dist.at(g.nodes_[u]) < depth) continue;
    for (Index i : colors) {
      if (auto f = ops.f(g.nodes_[u], i)) {
        if (auto v = g.find(*f)) g.edges_.push_back(CrystalEdge{u, i, *v});
        else g.frontier_[u] = 1;
      }
      if (auto e = ops.e(g.nodes_[u], i)) {
        if (auto v = g.find(*e)) g.edges_.push_back(CrystalEdge{*v, i, u});
        else g.frontier_[u] = 1;
      }
    }
  }
  g.index_edges();
  return g;
}

CrystalGraph bfs(const AffineData& data, const Path& start, const IndexSet& colors, std::size_t depth,
                 std::size_t node_cap) {
  return bfs(CrystalOps::standard(data), start, colors, depth, node_cap);
}

CrystalGraph closed_graph(const CrystalOps& ops, std::vector<Path> members, const IndexSet& colors, const Path& root) {
  CrystalGraph g;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  g.nodes_ = std::move(members);
  g.colors_ = colors;
  g.frontier_.assign(g.nodes_.size(), 0);
  auto r = g.find(root);
  if (!r) throw Error(Errc::NotFound, "root is not a member of the closed set");
  g.root_ = *r;
  for (std::size_t u = 0; u < g.nodes_.size(); ++u)
    for (Index i : colors) {
      if (auto f = ops.f(g.nodes_[u], i)) {
        auto v = g.find(*f);
        if (!v) throw Error(Errc::BadInput, "path set is not closed under f_" + std::to_string(i));
        g.edges_.push_back(CrystalEdge{u, i, *v});
      }
      if (auto e = ops.e(g.nodes_[u], i); e && !g.find(*e))
        throw Error(Errc::BadInput, "path set is not closed under e_" + std::to_string(i));
    }
  g.index_edges();
  return g;
}

std::vector<CrystalGraph> s_components(const CrystalOps& ops, const CrystalGraph& graph, const IndexSet& S,
                                       std::size_t cap) {
  std::vector<char> assigned(graph.size(), 0);
  std::vector<CrystalGraph> out;
  for (std::size_t u = 0; u < graph.size(); ++u) {
    if (assigned[u]) continue;
    std::set<Path> seen{graph.nodes()[u]};
    std::deque<Path> queue{graph.nodes()[u]};
    while (!queue.empty()) {
      Path cur = std::move(queue.front());
      queue.pop_front();
      for (Index j : S)
        for (auto next : {ops.f(cur, j), ops.e(cur, j)}) {
          if (!next || seen.count(*next)) continue;
          if (seen.size() >= cap)
            throw Error(Errc::CapExceeded, "S-component closure exceeds " + std::to_string(cap) + " nodes");
          seen.insert(*next);
          queue.push_back(std::move(*next));
        }
    }
    for (const auto& p : seen)
      if (auto id = graph.find(p)) assigned[*id] = 1;
    Path root = *seen.begin();
    out.push_back(closed_graph(ops, std::vector<Path>(seen.begin(), seen.end()), S, root));
  }
  std::sort(out.begin(), out.end(),
            [](const CrystalGraph& a, const CrystalGraph& b) { return a.nodes().front() < b.nodes().front(); });
  return out;
}

std::size_t find_dominant_extremal(const CrystalOps& ops, const CrystalGraph& component, const IndexSet& S) {
  std::optional<std::size_t> found;
  for (std::size_t u = 0; u < component.size(); ++u) {
    const Path& p = component.nodes()[u];
    bool highest = std::all_of(S.begin(), S.end(), [&](Index j) { return !ops.e(p, j); });
    if (!highest || !is_dominant_S(p, S)) continue;
    if (found) throw Error(Errc::NotUnique, "component has more than one S-dominant highest element");
    found = u;
  }
  if (!found) throw Error(Errc::NotFound, "component has no S-dominant highest element");
  return *found;
}

bool rooted_colored_isomorphic(const CrystalGraph& g1, const CrystalGraph& g2, std::optional<std::size_t> radius) {
  if (g1.colors() != g2.colors()) return false;
  if (!radius && (g1.has_frontier() || g2.has_frontier()))
    throw Error(Errc::DepthMismatch, "whole-graph comparison needs closed graphs");
  const Path& r1 = g1.nodes()[g1.root()];
  const Path& r2 = g2.nodes()[g2.root()];
  if (r1.rank() != r2.rank()) return false;
  const Weight w1 = r1.endpoint(), w2 = r2.endpoint();

  std::vector<std::optional<std::size_t>> m12(g1.size()), m21(g2.size());
  struct Item {
    std::size_t u, v, d;
  };
  std::deque<Item> queue{{g1.root(), g2.root(), 0}};
  m12[g1.root()] = g2.root();
  m21[g2.root()] = g1.root();
  std::size_t mapped = 1;
  while (!queue.empty()) {
    auto [u, v, d] = queue.front();
    queue.pop_front();
    const Path& p = g1.nodes()[u];
    const Path& q = g2.nodes()[v];
    if (!(p.endpoint() - w1 == q.endpoint() - w2)) return false;
    for (Index i : g1.colors())
      if (eps(p, i) != eps(q, i) || phi(p, i) != phi(q, i)) return false;
    if (radius && d >= *radius) continue;
    if (g1.on_frontier(u) || g2.on_frontier(v))
      throw Error(Errc::DepthMismatch, "graph explored to less than the compared radius");
    for (Index i : g1.colors()) {
      for (int dir = 0; dir < 2; ++dir) {
        auto a = dir == 0 ? g1.f_target(u, i) : g1.e_target(u, i);
        auto b = dir == 0 ? g2.f_target(v, i) : g2.e_target(v, i);
        if (a.has_value() != b.has_value()) return false;
        if (!a) continue;
        if (m12[*a] || m21[*b]) {
          if (m12[*a] != b || m21[*b] != a) return false;
          continue;
        }
        m12[*a] = *b;
        m21[*b] = *a;
        ++mapped;
        queue.push_back({*a, *b, d + 1});
      }
    }
  }
  if (!radius) return mapped == g1.size() && mapped == g2.size();
  return true;
}

WeightWindow WeightWindow::delta_band(const Rational& w) {
  return WeightWindow{"|delta| <= " + to_string(w), [w](const Weight& x) { return abs(x.delta) <= w; }};
}

WeightWindow WeightWindow::explicit_set(std::vector<Weight> weights) {
  std::sort(weights.begin(), weights.end());
  std::string desc = "{";
  for (std::size_t k = 0; k < weights.size(); ++k) desc += (k ? "," : "") + to_string(weights[k]);
  desc += "}";
  return WeightWindow{desc, [weights](const Weight& x) { return std::binary_search(weights.begin(), weights.end(), x); }};
}

WeightWindow WeightWindow::empty() {
  return WeightWindow{"{}", [](const Weight&) { return false; }};
}

Character& Character::operator+=(const Character& o) {
  for (const auto& [w, c] : o.counts) counts[w] += c;
  return *this;
}

Character character_window(const CrystalGraph& graph, const WeightWindow& window) {
  Character ch{window.description, {}};
  for (std::size_t u = 0; u < graph.size(); ++u) {
    Weight w = graph.nodes()[u].endpoint();
    if (!window.contains(w)) continue;
    if (graph.on_frontier(u))
      throw Error(Errc::IncompleteWindow, "frontier node with weight " + to_string(w) + " lies inside the window");
    ++ch.counts[w];
  }
  return ch;
}

Character character_of(const std::vector<Path>& paths, const WeightWindow& window) {
  Character ch{window.description, {}};
  for (const auto& p : paths) {
    Weight w = p.endpoint();
    if (window.contains(w)) ++ch.counts[w];
  }
  return ch;
}

std::string to_json(const Character& c) {
  json counts = json::array();
  for (const auto& [w, n] : c.counts) counts.push_back(json{{"weight", to_json(w)}, {"count", n}});
  return json{{"window", c.window}, {"counts", counts}}.dump();
}

}  // namespace lzp
