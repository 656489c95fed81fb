#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace brho {

/// A term of CL(B): the constant B or an application of two B-terms.
///
/// Immutable and cheap to copy; subterms are shared.
class BTerm {
 public:
  /// The constant B.
  BTerm();

  static BTerm b() { return BTerm(); }
  static BTerm app(BTerm fn, BTerm arg);

  bool is_leaf() const noexcept { return node_ == nullptr; }
  /// Precondition: !is_leaf().
  const BTerm& fn() const;
  const BTerm& arg() const;

  /// Number of B leaves.
  std::uint64_t size() const noexcept;

  friend bool operator==(const BTerm& a, const BTerm& b);

 private:
  struct Node;
  explicit BTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;  // null for the leaf
};

struct BTerm::Node {
  BTerm fn;
  BTerm arg;
  std::uint64_t size;
};

/// Parses `term := atom+`, `atom := 'B' | '(' term ')' | 'B^' nat 'B'`.
/// Application is left-associative; `B^n B` is B applied n times ending in B.
/// Throws SyntaxError.
BTerm parse_bterm(std::string_view text);

struct PrintOptions {
  /// Emit `B^n B` for monomials of degree n >= 2.
  bool monomial_sugar = false;
};

/// Minimal-parentheses rendering; parse_bterm(to_string(e, opts)) == e.
std::string to_string(const BTerm& e, PrintOptions opts = {});

/// X^(k): k copies of e applied left-nested. Precondition: k >= 1.
BTerm flat(const BTerm& e, std::uint64_t k);

/// B^n B, i.e. B (B (... (B B))).
BTerm monomial(std::uint64_t n);

/// e1 o e2, written with B as `B e1 e2`.
BTerm compose(const BTerm& e1, const BTerm& e2);

/// Returns n when e is exactly the monomial B^n B, otherwise -1.
std::int64_t monomial_degree(const BTerm& e);

}  // namespace brho
