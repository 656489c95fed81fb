#pragma once

// Rewriting with each composition power B^k of B as an opaque constant:
//
//   B^k e1 e2 ... e(k+2)  ->  e1 (e2 ... e(k+2))
//
// B itself is B^1; B^0 behaves as an identity on two arguments. Equality of
// terms is syntactic equality of normal forms, which is strictly finer than
// beta-eta equality.

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "brho/bterm.hpp"
#include "brho/degree_seq.hpp"
#include "brho/rho.hpp"

namespace brho {

/// Hash-consed term store. Identical terms share one id, so syntactic
/// equality is id equality. Not thread-safe; one arena per search.
class RTermArena {
 public:
  using Id = std::uint32_t;

  Id constant(std::uint64_t k);
  Id app(Id fn, Id arg);

  bool is_const(Id t) const { return nodes_[t].fn == kNone; }
  /// Precondition: is_const(t).
  std::uint64_t const_power(Id t) const { return nodes_[t].power; }
  Id fn(Id t) const { return nodes_[t].fn; }
  Id arg(Id t) const { return nodes_[t].arg; }

  /// Normal form; results are memoized for every visited subterm. Throws
  /// StepBudgetExceeded if one call performs more than `budget` rewrites.
  Id normalize(Id t, std::uint64_t budget = 100'000'000);

  /// Builds B (B ... ) as nested applications of the constant B^1.
  Id from_bterm(const BTerm& e);

  /// Canonical form of the beta-eta class of t (B^k read as k-fold
  /// composition of B). Throws std::invalid_argument when t contains B^0.
  DegreeSeq canonical(Id t);

  /// Leaf count of the term read as a tree (saturates at UINT64_MAX).
  std::uint64_t tree_size(Id t);

  /// Number of distinct interned terms.
  std::size_t size() const noexcept { return nodes_.size(); }

  /// `B` for B^1, `B^k` otherwise; left-associative with minimal parentheses.
  std::string to_string(Id t) const;

 private:
  static constexpr Id kNone = UINT32_MAX;
  struct Node {
    std::uint64_t power;  // constants only
    Id fn;
    Id arg;
  };
  Id fresh(Node n);
  Id normalize_with(Id t, std::uint64_t& steps, std::uint64_t budget);

  std::vector<Node> nodes_;
  std::unordered_map<std::uint64_t, Id> consts_;
  std::unordered_map<std::uint64_t, Id> apps_;  // (fn << 32) | arg
  std::unordered_map<Id, Id> normal_;
  std::unordered_map<Id, DegreeSeq> canonical_;
  std::unordered_map<Id, std::uint64_t> tree_size_;
};

/// Parses `term := atom+`, `atom := 'B' | 'B^' nat | '(' term ')'`; `B` is B^1.
/// Throws SyntaxError.
RTermArena::Id parse_rterm(RTermArena& arena, std::string_view text);

/// Minimal (entry, cycle) of x under right self-application, comparing
/// normal forms syntactically. Throws NotFound or StepBudgetExceeded.
RhoResult find_rho_restricted(RTermArena& arena, RTermArena::Id x, std::uint64_t max_steps,
                              Algorithm algorithm = Algorithm::brent,
                              std::uint64_t normalize_budget = 100'000'000);

/// Normal forms of X^(1)..X^(n).
std::vector<RTermArena::Id> iterate_restricted(RTermArena& arena, RTermArena::Id x, std::uint64_t n);

}  // namespace brho
