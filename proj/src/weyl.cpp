#include "lzpath/weyl.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "lzpath/error.hpp"

namespace lzp {

Weight reflect(const AffineData& data, const Weight& lambda, Index j) {
  const Rational& p = lambda.pairings[j];
  if (p == 0) return lambda;
  Weight out = lambda;
  const Weight& alpha = data.simple_root(j);
  for (std::size_t i = 0; i < out.pairings.size(); ++i) out.pairings[i] -= p * alpha.pairings[i];
  out.delta -= p * alpha.delta;
  return out;
}

Weight reflect(const Weight& lambda, const RealRoot& beta) {
  Rational p = beta.pair(lambda);
  if (p == 0) return lambda;
  return lambda - p * beta.root;
}

Weight apply_word(const AffineData& data, const WeylWord& w, Weight lambda) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) lambda = reflect(data, lambda, *it);
  return lambda;
}

bool OrbitWindow::contains(const Weight& w) const {
  return std::binary_search(elements.begin(), elements.end(), w);
}

bool OrbitWindow::on_boundary(const Weight& w) const {
  return std::binary_search(boundary.begin(), boundary.end(), w);
}

std::optional<std::size_t> OrbitWindow::index_of(const Weight& w) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), w);
  if (it == elements.end() || !(*it == w)) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

OrbitWindow orbit_window(const AffineData& data, const Weight& lambda, const Rational& bound,
                         std::optional<IndexSet> colors, std::size_t cap) {
  OrbitWindow win;
  win.seed = lambda;
  win.bound = bound;
  win.colors = colors ? *colors : data.all_indices();
  if (lambda.max_abs() > bound) throw Error(Errc::OutOfRange, "seed " + to_string(lambda) + " exceeds window bound");
  std::set<Weight> seen{lambda}, boundary;
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    for (Index j : win.colors) {
      Weight next = reflect(data, cur, j);
      if (next.max_abs() > bound) {
        boundary.insert(cur);
        continue;
      }
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw Error(Errc::CapExceeded, "orbit window exceeds " + std::to_string(cap) + " elements");
        queue.push_back(std::move(next));
      }
    }
  }
  win.elements.assign(seen.begin(), seen.end());
  win.boundary.assign(boundary.begin(), boundary.end());
  return win;
}

// ---------------------------------------------------------------- OrbitOrder

OrbitOrder::OrbitOrder(const AffineData& data, OrbitWindow window, std::span<const RealRoot> roots)
    : window_(std::move(window)) {
  (void)data;
  for (const auto& r : roots)
    if (r.positive) roots_.push_back(r);
  const std::size_t n = window_.elements.size();
  out_.assign(n, {});
  std::vector<std::size_t> indeg(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    const Weight& mu = window_.elements[u];
    for (std::size_t b = 0; b < roots_.size(); ++b) {
      Rational p = roots_[b].pair(mu);
      if (p >= 0) continue;
      Weight target = mu - p * roots_[b].root;
      auto v = window_.index_of(target);
      if (!v) {
        ++exits_;
        continue;
      }
      out_[u].push_back(edges_.size());
      edges_.push_back(OrderEdge{u, *v, b, false});
      ++indeg[*v];
    }
  }
  // Kahn's algorithm; a leftover node means a cycle.
  std::deque<std::size_t> ready;
  for (std::size_t u = 0; u < n; ++u)
    if (indeg[u] == 0) ready.push_back(u);
  while (!ready.empty()) {
    std::size_t u = ready.front();
    ready.pop_front();
    topo_.push_back(u);
    for (std::size_t e : out_[u])
      if (--indeg[edges_[e].target] == 0) ready.push_back(edges_[e].target);
  }
  if (topo_.size() != n) throw Error(Errc::BadInput, "orbit order is not acyclic; check the positive-root data");

  const std::size_t words = (n + 63) / 64;
  reach_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    std::size_t u = *it;
    for (std::size_t e : out_[u]) {
      std::size_t v = edges_[e].target;
      reach_[u][v / 64] |= std::uint64_t{1} << (v % 64);
      for (std::size_t w = 0; w < words; ++w) reach_[u][w] |= reach_[v][w];
    }
  }
  for (auto& e : edges_) {
    e.cover = true;
    for (std::size_t f : out_[e.source]) {
      std::size_t w = edges_[f].target;
      if (w != e.target && reaches(w, e.target)) {
        e.cover = false;
        break;
      }
    }
  }
}

bool OrbitOrder::reaches(std::size_t from, std::size_t to) const {
  if (from == to) return true;
  return (reach_[from][to / 64] >> (to % 64)) & 1u;
}

bool OrbitOrder::geq(const Weight& mu, const Weight& nu) const {
  auto u = window_.index_of(mu), v = window_.index_of(nu);
  if (!u || !v) throw Error(Errc::OutOfRange, "weight outside orbit window");
  return reaches(*u, *v);
}

std::optional<std::size_t> OrbitOrder::dist(const Weight& mu, const Weight& nu) const {
  auto u = window_.index_of(mu), v = window_.index_of(nu);
  if (!u || !v) throw Error(Errc::OutOfRange, "weight outside orbit window");
  if (!reaches(*u, *v)) return std::nullopt;
  // longest path over nodes between u and v
  std::map<std::size_t, std::size_t> best;
  std::function<std::size_t(std::size_t)> longest = [&](std::size_t x) -> std::size_t {
    if (x == *v) return 0;
    if (auto it = best.find(x); it != best.end()) return it->second;
    std::size_t m = 0;
    for (std::size_t e : out_[x]) {
      std::size_t y = edges_[e].target;
      if (reaches(y, *v)) m = std::max(m, 1 + longest(y));
    }
    best[x] = m;
    return m;
  };
  return longest(*u);
}

bool OrbitOrder::is_cover(const Weight& mu, const Weight& nu) const {
  auto u = window_.index_of(mu), v = window_.index_of(nu);
  if (!u || !v) return false;
  for (std::size_t e : out_[*u])
    if (edges_[e].target == *v) return edges_[e].cover;
  return false;
}

ChainResult OrbitOrder::has_a_chain(const Weight& nu, const Weight& mu, const Rational& a) const {
  ChainResult res;
  auto s = window_.index_of(nu), t = window_.index_of(mu);
  if (!s || !t) throw Error(Errc::OutOfRange, "a-chain endpoints must lie in the window");
  if (window_.on_boundary(nu) || window_.on_boundary(mu)) res.truncated = true;
  if (!reaches(*s, *t)) return res;
  std::vector<char> dead(size(), 0);
  std::vector<std::size_t> stack;
  std::function<bool(std::size_t)> dfs = [&](std::size_t x) -> bool {
    if (x == *t) return true;
    if (dead[x]) return false;
    if (window_.on_boundary(window_.elements[x])) res.truncated = true;
    for (std::size_t e : out_[x]) {
      const OrderEdge& edge = edges_[e];
      if (!edge.cover || !reaches(edge.target, *t)) continue;
      Rational p = roots_[edge.root].pair(window_.elements[x]);
      if (!is_integer(Rational(a * p))) continue;
      stack.push_back(e);
      if (dfs(edge.target)) return true;
      stack.pop_back();
    }
    dead[x] = 1;
    return false;
  };
  res.found = dfs(*s);
  if (res.found) {
    for (std::size_t e : stack) {
      const OrderEdge& edge = edges_[e];
      const Weight& from = window_.elements[edge.source];
      res.chain.push_back(ChainLink{from, window_.elements[edge.target], roots_[edge.root].root,
                                    roots_[edge.root].pair(from)});
    }
  }
  return res;
}

std::string OrbitOrder::to_dot() const {
  std::ostringstream os;
  os << "digraph orbit_order {\n";
  os << "  node [shape=box, fontsize=10];\n";
  for (std::size_t u = 0; u < size(); ++u)
    os << "  n" << u << " [label=\"" << to_string(window_.elements[u]) << "\"];\n";
  std::vector<OrderEdge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end(), [](const OrderEdge& x, const OrderEdge& y) {
    return std::tie(x.source, x.target) < std::tie(y.source, y.target);
  });
  for (const auto& e : sorted) {
    if (!e.cover) continue;
    os << "  n" << e.source << " -> n" << e.target << " [label=\"" << to_string(roots_[e.root].root) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace lzp
