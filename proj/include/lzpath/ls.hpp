#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lzpath/path.hpp"
#include "lzpath/weyl.hpp"

namespace lzp {

/// (ν_1 > ν_2 > ... > ν_s ; 0 = a_0 < a_1 < ... < a_s = 1).
struct LSPath {
  std::vector<Weight> directions;
  std::vector<Rational> cuts;

  friend bool operator==(const LSPath&, const LSPath&) = default;
};

struct LSValidation {
  bool valid = false;
  bool truncated = false;
  std::optional<std::size_t> failing_link;  // index k of the failing pair (ν_{k+1}, ν_{k+2}), 0-based
  std::string reason;
  std::vector<ChainResult> certificates;  // one a-chain per link
};

/// Checks shape, strict decrease in the orbit order and the a-chain condition.
LSValidation validate_ls(const OrbitOrder& order, const LSPath& candidate);

/// Segment k has direction ν_k and duration a_k − a_{k−1}.
Path to_path(const LSPath& ls);
/// Reads directions and cumulative cuts off the canonical segments.
LSPath from_path(const Path& p);

inline constexpr std::size_t kDefaultClosureCap = 100000;

/// f-closure of π_λ under f_j, j ∈ sub. Sorted. Throws NotDominant or
/// NotFiniteType (closure past `cap`).
std::vector<Path> generate_B_finite(const AffineData& data, const Weight& lambda, const IndexSet& sub,
                                    std::size_t cap = kDefaultClosureCap);

/// B_S(μ) in ambient coordinates.
std::vector<Path> generate_BS(const AffineData& data, const Weight& mu, const IndexSet& S,
                              std::size_t cap = kDefaultClosureCap);

/// Orbit order for the finite Weyl group W_S acting on λ (complete, no truncation).
OrbitOrder finite_order(const AffineData& data, const Weight& lambda, const IndexSet& S);

/// max |λ(β^∨)| over the order's roots: the largest denominator an a-chain can force.
long max_pairing(const OrbitOrder& order, const Weight& lambda);

struct LSEnumeration {
  std::vector<LSPath> paths;
  /// Window or denominator truncation may hide further LS paths.
  bool truncated = false;
};

/// All LS paths with directions in the order's window and cut denominators ≤ denom_bound.
LSEnumeration enumerate_B_window(const OrbitOrder& order, long denom_bound);

}  // namespace lzp
