#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lzpath/crystal.hpp"
#include "lzpath/json_io.hpp"

namespace lzp {

enum class Verdict { Verified, Counterexample, Inconclusive };

const char* verdict_name(Verdict v);

struct Report {
  std::string theorem;
  json parameters = json::object();
  Verdict verdict = Verdict::Verified;
  json certificates = json::array();
  json timings = json::object();

  /// Deterministic payload; timings are only included on request.
  json to_json(bool with_timings = false) const;
};

/// Test hook: corrupt the lowering operator used by the harness.
enum class Fault { None, ScaledLowering };

Fault parse_fault(const std::string& name);

/// Shared context of a verification run.
struct Harness {
  const AffineData& data;
  CrystalOps ops;
  std::size_t node_cap = kDefaultNodeCap;

  explicit Harness(const AffineData& d, Fault fault = Fault::None, std::size_t cap = kDefaultNodeCap);
};

/// (cl π(1), cl π(1)) ≤ (cl ϖ_i, cl ϖ_i) on every node of the depth-bounded crystal.
Report check_norm_bound(const Harness& h, Index i, std::size_t depth);

/// Every closed S-component of the explored B₀(ϖ_i) is isomorphic to B_S of
/// its dominant endpoint.
Report check_branching(const Harness& h, Index i, const IndexSet& S, std::size_t depth);

/// Character of B₀(ϖ_i) on |δ| ≤ window equals the sum of B_S characters
/// over the S-dominant elements.
Report check_character_branching(const Harness& h, Index i, const IndexSet& S, const Rational& delta_window,
                                 std::size_t depth);

/// B(λ) * B(ϖ_i) for minuscule ϖ_i: one λ-dominant seed per component and
/// isomorphism with B(λ + π(1)).
Report check_minuscule_decomposition(const Harness& h, const Weight& lambda, Index i, std::size_t depth,
                                     const Rational& delta_window = Rational(1));

/// Scale intertwining, weight multiplicativity and σ_{m,λ} on sampled paths.
Report check_sigma_properties(const Harness& h, const Weight& lambda, const std::vector<long>& ms,
                              std::size_t sample_size, std::size_t depth, std::uint64_t seed);

/// Smallest m ≤ m_max for which σ_{m,λ} straightens every suffix of the word.
Report find_straightening_m(const Harness& h, const Weight& lambda, const OperatorWord& word, long m_max);

/// Operator on a concatenation versus the componentwise rule.
Report check_tensor_rule(const Harness& h, const std::vector<Path>& left, const std::vector<Path>& right,
                         const IndexSet& colors, std::size_t trials, std::uint64_t seed);

/// f-closure of π_λ under W_S against the LS paths accepted by the validator
/// (cut denominators ≤ denom_bound).
Report check_ls_closure(const Harness& h, const Weight& lambda, const IndexSet& S, long denom_bound);

/// Random operator word of the given length that stays non-null from π_λ.
OperatorWord random_word(const AffineData& data, const Weight& lambda, std::size_t length, std::mt19937_64& rng);

/// Re-evaluates the identity recorded in a counterexample certificate with the
/// plain path operators. true = still violated, false = holds, nullopt = kind
/// without a replay rule.
std::optional<bool> replay_certificate(const AffineData& data, const json& certificate);

}  // namespace lzp
