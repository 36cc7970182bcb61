#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lzpath/rootsys.hpp"
#include "lzpath/weyl.hpp"

namespace lzp {

struct Segment {
  Weight direction;
  Rational duration;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Piecewise-linear path t ↦ π(t) with π(0) = 0, kept in canonical form:
/// no zero directions (except the single segment of the trivial path), no two
/// consecutive positively collinear directions, durations summing to 1.
class Path {
 public:
  /// Validates (positive durations summing to 1) and canonicalises.
  /// Throws ZeroDuration or BadTotal.
  static Path canonicalize(std::vector<Segment> raw);
  /// π_λ(t) = tλ.
  static Path straight(Weight lambda);

  const std::vector<Segment>& segments() const { return segs_; }
  std::size_t rank() const { return segs_.front().direction.rank(); }
  bool is_straight() const { return segs_.size() == 1; }
  bool is_trivial() const { return segs_.size() == 1 && segs_.front().direction.is_zero(); }

  /// wt(π) = π(1).
  Weight endpoint() const;
  /// Cumulative times t_0 = 0 < ... < t_r = 1.
  std::vector<Rational> breakpoints() const;
  /// π(t_k) at every breakpoint.
  std::vector<Weight> breakpoint_values() const;

  friend bool operator==(const Path& a, const Path& b) { return a.segs_ == b.segs_; }
  friend bool operator<(const Path& a, const Path& b);

 private:
  friend Path make_canonical(std::vector<Segment> raw);
  std::vector<Segment> segs_;
};

/// Canonicalises without the total-duration check (durations must be positive).
Path make_canonical(std::vector<Segment> raw);

std::string to_string(const Path& p);

/// Throws OutOfRange unless 0 ≤ t ≤ 1.
Weight evaluate(const Path& p, const Rational& t);

/// First half traverses a, second half b.
Path concat(const Path& a, const Path& b);
/// m-fold concatenation with equal time 1/m per factor.
Path concat_all(std::span<const Path> parts);
/// S_m(π)(t) = mπ(t).
Path scale(long m, const Path& p);
/// The m equal-time pieces of S_m(π), each reparametrised to [0,1]
/// (the image of π under σ_{m,λ} as an element of B(λ)^{*m}).
std::vector<Path> split_scaled(long m, const Path& p);

struct HProfile {
  std::vector<Rational> breakpoints;
  std::vector<Rational> values;
};

/// h_i(t) = π(t)(α_i^∨) at every breakpoint.
HProfile h_profile(const Path& p, Index i);

/// ε_i(π) = −min h_i.  Throws NonIntegralPath.
long eps(const Path& p, Index i);
/// φ_i(π) = h_i(1) − min h_i.  Throws NonIntegralPath.
long phi(const Path& p, Index i);

/// Lowering root operator; nullopt when φ_i(π) = 0.
std::optional<Path> f_op(const AffineData& data, const Path& p, Index i);
/// Raising root operator; nullopt when ε_i(π) = 0.
std::optional<Path> e_op(const AffineData& data, const Path& p, Index i);

/// r_i π = f_i^n π if n = wt(π)(α_i^∨) ≥ 0, else e_i^{-n} π; letters right-to-left.
Path weyl_act(const AffineData& data, const WeylWord& w, Path p);

struct OpLetter {
  bool raise = false;  // e_i when true, f_i otherwise
  Index index = 0;
  friend bool operator==(const OpLetter&, const OpLetter&) = default;
};

/// x_{j_1} x_{j_2} ... x_{j_k}: letters[0] is applied last.
using OperatorWord = std::vector<OpLetter>;

std::string to_string(const OpLetter& l);
std::string to_string(const OperatorWord& w);
/// Parses "f1" / "e0".
OpLetter parse_letter(const std::string& s);

/// nullopt as soon as some operator returns 0.
std::optional<Path> apply_operators(const AffineData& data, const OperatorWord& word, Path p);

/// π(t)(α_j^∨) ≥ 0 for all t and all j ∈ S.
bool is_dominant_S(const Path& p, std::span<const Index> S);
/// (λ + π(t))(α_j^∨) ≥ 0 for all t and all j.
bool is_lambda_dominant(const Path& p, const Weight& lambda);

}  // namespace lzp
