#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "brho/bintree.hpp"
#include "brho/bterm.hpp"
#include "brho/degree_seq.hpp"

namespace brho::testing {

inline BTerm bterm_of_shape(const BinTree& t) {
  if (t.is_leaf()) return BTerm::b();
  return BTerm::app(bterm_of_shape(t.left()), bterm_of_shape(t.right()));
}

inline std::vector<BTerm> all_bterms(std::uint64_t leaves) {
  std::vector<BTerm> out;
  for (const BinTree& t : all_trees(leaves)) out.push_back(bterm_of_shape(t));
  return out;
}

inline std::vector<BTerm> all_bterms_up_to(std::uint64_t max_leaves) {
  std::vector<BTerm> out;
  for (std::uint64_t n = 1; n <= max_leaves; ++n) {
    std::vector<BTerm> level = all_bterms(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// Uniform split point at every node; not uniform over shapes, which is fine
/// for a generator that only needs to reach every shape.
inline BTerm random_bterm(std::mt19937_64& rng, std::uint64_t leaves) {
  if (leaves <= 1) return BTerm::b();
  std::uniform_int_distribution<std::uint64_t> split(1, leaves - 1);
  const std::uint64_t left = split(rng);
  BTerm l = random_bterm(rng, left);
  return BTerm::app(std::move(l), random_bterm(rng, leaves - left));
}

inline BinTree random_tree(std::mt19937_64& rng, std::uint64_t leaves) {
  if (leaves <= 1) return BinTree::leaf();
  std::uniform_int_distribution<std::uint64_t> split(1, leaves - 1);
  const std::uint64_t left = split(rng);
  BinTree l = random_tree(rng, left);
  return BinTree::node(std::move(l), random_tree(rng, leaves - left));
}

inline DegreeSeq random_seq(std::mt19937_64& rng, std::uint64_t max_len, Degree max_degree) {
  std::uniform_int_distribution<std::uint64_t> len(1, max_len);
  std::uniform_int_distribution<Degree> deg(0, max_degree);
  std::vector<Degree> d(len(rng));
  for (Degree& x : d) x = deg(rng);
  std::sort(d.begin(), d.end(), std::greater<>());
  return DegreeSeq::from_degrees(d);
}

/// Every weakly decreasing sequence with 1..max_len entries in [0, max_degree].
inline std::vector<DegreeSeq> all_seqs(std::uint64_t max_len, Degree max_degree) {
  std::vector<DegreeSeq> out;
  std::vector<Degree> cur;
  auto rec = [&](auto&& self, Degree cap) -> void {
    if (!cur.empty()) out.push_back(DegreeSeq::from_degrees(cur));
    if (cur.size() == max_len) return;
    for (Degree d = 0; d <= cap; ++d) {
      cur.push_back(d);
      self(self, d);
      cur.pop_back();
    }
  };
  rec(rec, max_degree);
  return out;
}

// One randomly placed equation step that preserves beta-eta equality.
inline std::optional<BTerm> rewrite_once(const BTerm& e, std::mt19937_64& rng, int rule) {
  // B e1 e2 e3 -> e1 (e2 e3)
  if (rule == 0 && !e.is_leaf() && !e.fn().is_leaf() && !e.fn().fn().is_leaf() && e.fn().fn().fn().is_leaf()) {
    return BTerm::app(e.fn().fn().arg(), BTerm::app(e.fn().arg(), e.arg()));
  }
  // e1 (e2 e3) -> B e1 e2 e3
  if (rule == 1 && !e.is_leaf() && !e.arg().is_leaf()) {
    return BTerm::app(BTerm::app(BTerm::app(BTerm::b(), e.fn()), e.arg().fn()), e.arg().arg());
  }
  // B (e1 o e2) -> (B e1) o (B e2)
  if (rule == 2 && !e.is_leaf() && e.fn().is_leaf() && !e.arg().is_leaf() && !e.arg().fn().is_leaf() &&
      e.arg().fn().fn().is_leaf()) {
    return compose(BTerm::app(BTerm::b(), e.arg().fn().arg()), BTerm::app(BTerm::b(), e.arg().arg()));
  }
  if (e.is_leaf()) return std::nullopt;
  if (std::bernoulli_distribution(0.5)(rng)) {
    if (auto r = rewrite_once(e.fn(), rng, rule)) return BTerm::app(*r, e.arg());
    if (auto r = rewrite_once(e.arg(), rng, rule)) return BTerm::app(e.fn(), *r);
  } else {
    if (auto r = rewrite_once(e.arg(), rng, rule)) return BTerm::app(e.fn(), *r);
    if (auto r = rewrite_once(e.fn(), rng, rule)) return BTerm::app(*r, e.arg());
  }
  return std::nullopt;
}

}  // namespace brho::testing
