#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lzpath/rootsys.hpp"

namespace lzp {

/// Simple reflection r_j λ = λ − λ(α_j^∨) α_j.
Weight reflect(const AffineData& data, const Weight& lambda, Index j);

/// r_β λ = λ − λ(β^∨) β.
Weight reflect(const Weight& lambda, const RealRoot& beta);

/// Product of simple reflections, applied right-to-left.
struct WeylWord {
  std::vector<Index> letters;
};

Weight apply_word(const AffineData& data, const WeylWord& w, Weight lambda);

/// Finite piece of a Weyl orbit: everything reachable from the seed by
/// simple reflections (in `colors`) without leaving the L∞ bound.
struct OrbitWindow {
  Weight seed;
  std::vector<Weight> elements;  // sorted
  Rational bound;
  IndexSet colors;
  /// Elements with a simple-reflection neighbour outside the bound.
  std::vector<Weight> boundary;  // sorted

  bool contains(const Weight& w) const;
  bool on_boundary(const Weight& w) const;
  std::optional<std::size_t> index_of(const Weight& w) const;
};

inline constexpr std::size_t kDefaultOrbitCap = 10000;

/// Throws CapExceeded if the closure grows past `cap` elements.
OrbitWindow orbit_window(const AffineData& data, const Weight& lambda, const Rational& bound,
                         std::optional<IndexSet> colors = std::nullopt, std::size_t cap = kDefaultOrbitCap);

struct OrderEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t root = 0;  // index into OrbitOrder::roots()
  bool cover = false;
};

/// Step of an a-chain certificate: `from` reflected by `root` gives `to`.
struct ChainLink {
  Weight from;
  Weight to;
  Weight root;
  Rational pairing;  // from(root^∨)
};

struct ChainResult {
  bool found = false;
  bool truncated = false;  // search touched the window boundary
  std::vector<ChainLink> chain;
};

/// The order on an orbit window. μ sits above r_β μ whenever β is a positive real
/// root with μ(β^∨) < 0; the dominant chamber is at the bottom. dist is the
/// longest directed path, and an edge is a cover iff dist = 1.
class OrbitOrder {
 public:
  /// `roots` may contain both signs; only positive roots generate edges.
  OrbitOrder(const AffineData& data, OrbitWindow window, std::span<const RealRoot> roots);

  const OrbitWindow& window() const { return window_; }
  const std::vector<RealRoot>& roots() const { return roots_; }
  const std::vector<OrderEdge>& edges() const { return edges_; }
  std::size_t size() const { return window_.elements.size(); }

  /// Number of edges whose target left the window.
  std::size_t exits() const { return exits_; }

  /// μ ≥ ν (a directed path from μ to ν exists inside the window).
  bool geq(const Weight& mu, const Weight& nu) const;
  /// Longest directed path length, or nullopt if not μ ≥ ν.
  std::optional<std::size_t> dist(const Weight& mu, const Weight& nu) const;
  bool is_cover(const Weight& mu, const Weight& nu) const;

  /// Chain ν = μ_0 ⋗ μ_1 ⋗ ... ⋗ μ_p = μ of covers with a·μ_{k-1}(β_k^∨) ∈ ℤ.
  ChainResult has_a_chain(const Weight& nu, const Weight& mu, const Rational& a) const;

  /// Cover DAG in DOT form (node label: weight, edge label: reflecting root).
  std::string to_dot() const;

 private:
  bool reaches(std::size_t from, std::size_t to) const;

  OrbitWindow window_;
  std::vector<RealRoot> roots_;
  std::vector<OrderEdge> edges_;
  std::vector<std::vector<std::size_t>> out_;  // edge ids per source
  std::vector<std::size_t> topo_;              // sources first
  std::vector<std::vector<std::uint64_t>> reach_;
  std::size_t exits_ = 0;
};

}  // namespace lzp
