#pragma once

// Orbit checks for terms without the rho-property, read off the trees of
// canonical iterates.
//
// For a tree t (the normal form lambda x1..xl. x1 N1 ... Na): l = leaves,
// a = number of head arguments, N1 = first head argument.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "brho/bintree.hpp"
#include "brho/bterm.hpp"
#include "brho/degree_seq.hpp"

namespace brho {

/// Parameters of Z = (B^k B)^((k+2)n), the composition power of a monomial.
struct TknSpec {
  std::uint64_t k = 0;
  std::uint64_t n = 1;  // >= 1

  std::uint64_t block() const { return (k + 2) * n; }
};

/// Leaf, or a head leaf with exactly (k+2)n arguments where the arguments
/// at positions divisible by k+2 are leaves and the rest recursively qualify.
bool in_Tprime(const BinTree& t, const TknSpec& spec);
/// <t0, t1, ..., t(k+1)> with every component in_Tprime.
bool in_Tkn(const BinTree& t, const TknSpec& spec);

/// x | <x, t, x> | <x, t1, x, <x, t2, x>, x>.
bool in_example_Tprime(const BinTree& t);
/// <t1, <x, t2, x>> with t1, t2 in_example_Tprime.
bool in_example_T(const BinTree& t);

/// Canonical form [k, ..., k] of Z, (k+2)n entries.
DegreeSeq z_seq(const TknSpec& spec);
BTerm z_term(const TknSpec& spec);
/// (B^2 B)^2 o (B B)^2 o B^2, i.e. [2,2,1,1,0,0].
DegreeSeq example_seq();

struct TreeStats {
  std::uint64_t l = 0;
  std::uint64_t a = 0;
  std::optional<BinTree> n1;
};
TreeStats tree_stats(const BinTree& t);

/// Trees of X^(1)..X^(steps) via apply_poly and tree_of.
std::vector<BinTree> orbit_trees(const DegreeSeq& x, std::uint64_t steps);
/// (l, a) along the orbit.
std::vector<std::pair<std::uint64_t, std::uint64_t>> orbit_stats(const DegreeSeq& x, std::uint64_t steps);

struct Assertion {
  std::string name;
  bool holds = true;
  std::optional<std::uint64_t> first_counterexample;  // iterate index
  std::string note;
  /// Printed but ignored by Report::all_hold.
  bool informational = false;
};

struct Report {
  std::vector<Assertion> assertions;

  bool all_hold() const;
  /// One line per assertion: `name: PASS` or `name: FAIL at i=N`, plus note.
  std::string to_string() const;
  void append(const Report& other);
};

/// Number of times N1 can be taken before reaching a leaf.
std::uint64_t n1_depth(const BinTree& t);

/// Replaces the first repl.size() leaves of t, left to right.
BinTree substitute_leaves(const BinTree& t, const std::vector<BinTree>& repl);

/// N1(X X') predicted from X and X': N1(N1(X)) when N1(X) is not a leaf,
/// otherwise N1(X') with its first m - 1 leaves replaced by N2(X)..Nm(X),
/// m = min(l(N1(X')) + 1, a(X)). Empty when a required component is missing.
std::optional<BinTree> predicted_n1(const BinTree& x, const BinTree& x2);

/// l never decreases; a plateau starting at X^(i) ends within
/// n1_depth(X^(i)) + 1 steps (checked where the sample is long enough);
/// no canonical form repeats among the first `steps` iterates.
Report check_monotone(const DegreeSeq& x, std::uint64_t steps);

using TreePredicate = std::function<bool(const BinTree&)>;

/// Every iterate satisfies `member`, and l(X) >= a(X') + 1 for every
/// observed iterate X'.
Report check_general_condition(const DegreeSeq& x, const TreePredicate& member, std::uint64_t steps);

/// l(X X'), a(X X') and N1(X X') predicted from the stats of X = X^(i) and X' = X,
/// compared with the observed next iterate.
Report check_application_rule(const DegreeSeq& x, std::uint64_t steps);

/// Tree statistics of the first `oracle_steps` iterates compared with
/// normalized lambda images.
Report check_against_oracle(const DegreeSeq& x, std::uint64_t oracle_steps);

/// Everything for Z of the given spec: closure in T_{k,n}, the two
/// possible values of a, the l/a/N1 recurrences, monotonicity, no repeat,
/// the general condition and oracle agreement on the first iterates.
Report check_tkn(const TknSpec& spec, std::uint64_t steps, std::uint64_t oracle_steps = 6);

/// The same battery for the example term with its hand-built set.
Report check_example(std::uint64_t steps, std::uint64_t oracle_steps = 6);

}  // namespace brho
