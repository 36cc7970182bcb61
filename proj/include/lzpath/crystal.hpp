#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lzpath/path.hpp"

namespace lzp {

/// The root operators used for exploration. Defaults to f_op / e_op; the
/// verification harness swaps in a corrupted pair for fault-injection tests.
struct CrystalOps {
  std::function<std::optional<Path>(const Path&, Index)> f;
  std::function<std::optional<Path>(const Path&, Index)> e;

  static CrystalOps standard(const AffineData& data);
};

struct CrystalEdge {
  std::size_t source = 0;
  Index color = 0;
  std::size_t target = 0;  // f_color(source) = target

  friend auto operator<=>(const CrystalEdge&, const CrystalEdge&) = default;
};

inline constexpr std::size_t kDefaultNodeCap = 100000;
inline constexpr std::size_t kDefaultMaxDepth = 12;

/// Finite explored piece of a path crystal. Node ids follow the canonical
/// path order, so the graph does not depend on discovery order.
class CrystalGraph {
 public:
  const std::vector<Path>& nodes() const { return nodes_; }
  const std::vector<CrystalEdge>& edges() const { return edges_; }
  const IndexSet& colors() const { return colors_; }
  std::size_t root() const { return root_; }
  /// nullopt for a graph closed under all its colours.
  std::optional<std::size_t> depth() const { return depth_; }
  bool on_frontier(std::size_t id) const { return frontier_[id] != 0; }
  bool has_frontier() const;
  std::size_t size() const { return nodes_.size(); }

  std::optional<std::size_t> find(const Path& p) const;
  std::optional<std::size_t> f_target(std::size_t id, Index color) const;
  std::optional<std::size_t> e_target(std::size_t id, Index color) const;

  CrystalGraph rerooted(std::size_t new_root) const;

  std::string to_dot() const;
  std::string to_json() const;

 private:
  friend CrystalGraph bfs(const CrystalOps&, const Path&, const IndexSet&, std::size_t, std::size_t);
  friend CrystalGraph closed_graph(const CrystalOps&, std::vector<Path>, const IndexSet&, const Path&);
  void index_edges();

  std::vector<Path> nodes_;
  std::vector<CrystalEdge> edges_;
  IndexSet colors_;
  std::size_t root_ = 0;
  std::optional<std::size_t> depth_;
  std::vector<char> frontier_;
  std::map<std::pair<std::size_t, Index>, std::size_t> f_adj_, e_adj_;
};

/// Everything reachable from `start` by at most `depth` operators e_i, f_i
/// (i ∈ colors). Nodes at distance `depth` form the frontier. Throws CapExceeded.
CrystalGraph bfs(const CrystalOps& ops, const Path& start, const IndexSet& colors, std::size_t depth,
                 std::size_t node_cap = kDefaultNodeCap);
CrystalGraph bfs(const AffineData& data, const Path& start, const IndexSet& colors, std::size_t depth,
                 std::size_t node_cap = kDefaultNodeCap);

/// Graph on a set of paths already closed under the colours.
CrystalGraph closed_graph(const CrystalOps& ops, std::vector<Path> members, const IndexSet& colors, const Path& root);

/// Full S-closures of the S-connected pieces of `graph`, ordered by smallest
/// member. Throws CapExceeded if a closure grows past `cap`.
std::vector<CrystalGraph> s_components(const CrystalOps& ops, const CrystalGraph& graph, const IndexSet& S,
                                       std::size_t cap = kDefaultNodeCap);

/// The unique node killed by every e_j (j ∈ S) and S-dominant. Throws NotFound / NotUnique.
std::size_t find_dominant_extremal(const CrystalOps& ops, const CrystalGraph& component, const IndexSet& S);

/// Synchronised traversal from both roots comparing colour edges, ε/φ
/// statistics and weight offsets up to `radius` (whole graphs when nullopt).
/// Throws DepthMismatch if either graph is unexplored inside the radius.
bool rooted_colored_isomorphic(const CrystalGraph& g1, const CrystalGraph& g2,
                               std::optional<std::size_t> radius = std::nullopt);

struct WeightWindow {
  std::string description;
  std::function<bool(const Weight&)> contains;

  /// |δ-coefficient| ≤ w.
  static WeightWindow delta_band(const Rational& w);
  static WeightWindow explicit_set(std::vector<Weight> weights);
  static WeightWindow empty();
};

struct Character {
  std::string window;
  std::map<Weight, long> counts;

  friend bool operator==(const Character& a, const Character& b) { return a.counts == b.counts; }
  Character& operator+=(const Character& o);
};

/// Multiset of node weights inside the window. Throws IncompleteWindow when a
/// frontier node lies inside it.
Character character_window(const CrystalGraph& graph, const WeightWindow& window);
/// Same for a closed set of paths.
Character character_of(const std::vector<Path>& paths, const WeightWindow& window);

std::string to_json(const Character& c);

}  // namespace lzp
