#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lzpath/rational.hpp"

namespace lzp {

using Index = int;
using IndexSet = std::vector<Index>;

/// An element of span{Λ_j} ⊕ ℚδ, stored as its pairings with every simple
/// coroot together with its δ-coefficient.
struct Weight {
  std::vector<Rational> pairings;
  Rational delta;

  Weight() = default;
  explicit Weight(std::size_t rank) : pairings(rank) {}
  Weight(std::vector<Rational> p, Rational d) : pairings(std::move(p)), delta(std::move(d)) {}

  std::size_t rank() const { return pairings.size(); }
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(const Rational& c);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& c, Weight a) { return a *= c; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }

  friend bool operator==(const Weight& a, const Weight& b);
  friend bool operator<(const Weight& a, const Weight& b);

  /// Largest absolute coordinate (pairings and δ-coefficient).
  Rational max_abs() const;
};

/// "(m_0,...,m_n;d)".
std::string to_string(const Weight& w);
std::size_t hash_value(const Weight& w);

/// μ = cν with c > 0 (both non-zero).
bool positively_collinear(const Weight& mu, const Weight& nu);

class CartanMatrix {
 public:
  CartanMatrix() = default;
  explicit CartanMatrix(std::vector<std::vector<long>> entries);

  std::size_t size() const { return entries_.size(); }
  long operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const std::vector<std::vector<long>>& entries() const { return entries_; }

  /// Throws Error(NotGCM) on a violated axiom.
  void check_gcm() const;

 private:
  std::vector<std::vector<long>> entries_;
};

/// Coordinates of a weight in the basis {α_j} ∪ {Λ_s} (s the special vertex).
struct RootCoordinates {
  Rational lambda_coeff;
  std::vector<Rational> alpha;
};

/// Weight modulo ℚδ on level-zero weights; pairings determine the class.
struct ClassicalWeight {
  std::vector<Rational> pairings;
  friend bool operator==(const ClassicalWeight&, const ClassicalWeight&) = default;
};

/// Validated affine Cartan datum with marks, comarks, symmetrizers, δ and the
/// level-zero fundamental weights. Immutable after construction.
class AffineData {
 public:
  /// Throws NotGCM, NotAffine or NotSymmetrizable.
  static AffineData validate(CartanMatrix cartan, Index special_vertex = 0);

  std::size_t size() const { return cartan_.size(); }
  Index special_vertex() const { return special_; }
  const CartanMatrix& cartan() const { return cartan_; }
  long a(Index i, Index j) const { return cartan_(i, j); }

  const std::vector<long>& marks() const { return marks_; }
  const std::vector<long>& comarks() const { return comarks_; }
  const std::vector<Rational>& symmetrizers() const { return sym_; }

  IndexSet all_indices() const;
  /// I \ {special vertex}.
  IndexSet classical_indices() const;

  const Weight& delta() const { return delta_; }
  const Weight& simple_root(Index j) const { return simple_roots_[j]; }
  /// Λ_j: pairings e_j, δ-coefficient 0.
  Weight fundamental(Index j) const;
  /// ϖ_i for i ≠ special vertex.
  const Weight& fundamental_level_zero(Index i) const;
  Weight zero() const { return Weight(size()); }

  Rational level(const Weight& w) const;
  RootCoordinates root_coordinates(const Weight& w) const;
  Weight from_root_coordinates(std::span<const Rational> alpha) const;

  /// Normalised form with (α_i,α_j) = d_i a_ij, (Λ_s,Λ_s) = 0, (Λ_s,α_j) = d_s δ_js.
  Rational bilinear(const Weight& a, const Weight& b) const;

  /// Throws NotInH0Star unless the weight has level zero.
  ClassicalWeight classical_projection(const Weight& w) const;
  Rational classical_bilinear(const ClassicalWeight& a, const ClassicalWeight& b) const;
  /// (cl w, cl w) for a level-zero weight.
  Rational classical_norm(const Weight& w) const;

  /// (α_i,α_j) for all i, j.
  std::vector<std::vector<Rational>> gram() const;

 private:
  CartanMatrix cartan_;
  Index special_ = 0;
  std::vector<long> marks_, comarks_;
  std::vector<Rational> sym_;
  Weight delta_;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> varpi_;
  // inverse of the Cartan submatrix on I \ {s}, indexed by position in classical_indices()
  std::vector<std::vector<Rational>> inv_classical_;
};

/// A real root β = w α_simple recorded with its coordinates.
struct RealRoot {
  Weight root;
  Index simple = 0;
  std::vector<Index> word;  // β = r_{word[0]} ... r_{word[k-1]} α_simple
  std::vector<Rational> coords;
  std::vector<Rational> coroot;  // β^∨ in the coroot basis
  Rational norm;                 // (β,β)
  bool positive = false;

  /// λ(β^∨).
  Rational pair(const Weight& lambda) const;
};

/// All real roots w α_i reachable from the simple roots (of `colors`, by default
/// all of I) by reflections in `colors` without leaving the L∞ coordinate bound.
/// Sorted by root weight.
std::vector<RealRoot> real_roots_window(const AffineData& data, const Rational& bound,
                                        std::optional<IndexSet> colors = std::nullopt);

/// Positive members of a root list.
std::vector<RealRoot> positive_roots(std::span<const RealRoot> roots);

}  // namespace lzp
