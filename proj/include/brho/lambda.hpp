#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "brho/bintree.hpp"
#include "brho/bterm.hpp"
#include "brho/rho.hpp"

namespace brho {

/// Lambda term with de Bruijn indices, so alpha-equivalence is structural equality.
class LambdaTerm {
 public:
  enum class Kind : std::uint8_t { var, abs, app };

  static LambdaTerm var(std::uint32_t index);
  static LambdaTerm abs(LambdaTerm body);
  static LambdaTerm app(LambdaTerm fn, LambdaTerm arg);

  Kind kind() const noexcept;
  bool is_var() const noexcept { return kind() == Kind::var; }
  bool is_abs() const noexcept { return kind() == Kind::abs; }
  bool is_app() const noexcept { return kind() == Kind::app; }

  std::uint32_t index() const;       // var
  const LambdaTerm& body() const;    // abs
  const LambdaTerm& fn() const;      // app
  const LambdaTerm& arg() const;     // app

  /// Number of nodes.
  std::uint64_t size() const noexcept;
  /// 1 + the largest free de Bruijn index; 0 for closed terms.
  std::uint32_t free_bound() const noexcept;

  friend bool operator==(const LambdaTerm& a, const LambdaTerm& b);

 private:
  struct Node;
  LambdaTerm() = default;
  explicit LambdaTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// `\` per binder, de Bruijn indices, juxtaposition; B prints as `\\\.2 (1 0)`.
std::string to_string(const LambdaTerm& t);

inline constexpr std::uint64_t kDefaultStepBudget = 10'000'000;

/// Beta-eta normal form: leftmost-outermost beta reduction to a normal form,
/// then eta reduction. Throws StepBudgetExceeded after `budget` beta steps.
LambdaTerm normalize(const LambdaTerm& t, std::uint64_t budget = kDefaultStepBudget);

/// Beta-eta equivalence of closed normalizing terms.
bool equivalent(const LambdaTerm& a, const LambdaTerm& b, std::uint64_t budget = kDefaultStepBudget);

/// Replaces every B by \f.\g.\x. f (g x).
LambdaTerm bterm_to_lambda(const BTerm& e);

/// Smullyan's birds, for the oracle: B C D F I K O R S T V.
/// Throws std::invalid_argument for any other name.
LambdaTerm combinator(std::string_view name);

/// Application tree of a normal form \x1...\xk. M whose body uses x1..xk
/// exactly once each, in order. Throws NotBFormShape otherwise.
BinTree lambda_to_tree(const LambdaTerm& normal_form);

/// One binder per leaf, leaves bound to x1, x2, ... left to right. No eta step.
LambdaTerm tree_to_lambda(const BinTree& t);

/// l: binder count; a: argument count of the head variable; n1: its first
/// argument (an open term under the l binders), absent iff a == 0.
struct TermStats {
  std::uint64_t l = 0;
  std::uint64_t a = 0;
  std::optional<LambdaTerm> n1;
};

/// Normalizes `t` and reads off its head statistics. Throws NotBFormShape.
TermStats term_stats(const LambdaTerm& t, std::uint64_t budget = kDefaultStepBudget);

/// Minimal (entry, cycle) of the right-application orbit of `t` up to
/// beta-eta equality. Throws NotFound if no cycle is seen by iterate `max_steps`.
RhoResult rho_lambda(const LambdaTerm& t, std::uint64_t max_steps, std::uint64_t budget = kDefaultStepBudget,
                     Algorithm algorithm = Algorithm::floyd);

}  // namespace brho
