#pragma once

#include <utility>
#include <vector>

#include "brho/bintree.hpp"
#include "brho/bterm.hpp"
#include "brho/degree_seq.hpp"

namespace brho {

/// Rewrites B e1 e2 e3 ... into e1 (e2 e3) ... until every B has at most two
/// arguments. Terminates because each step removes one B.
BTerm arity_reduce(const BTerm& e);

/// Degrees of a (not necessarily decreasing) polynomial equal to an
/// arity-reduced term: B -> [0]; B e -> every degree of e plus one;
/// B e1 e2 -> degrees of e1 followed by those of e2.
std::vector<Degree> polynomial_degrees(const BTerm& arity_reduced);

/// (B^m B) o (B^n B) = (B^(n+1) B) o (B^m B) for m < n. Precondition: m < n.
std::pair<Degree, Degree> apply_swap(Degree m, Degree n);

/// Sorts polynomial degrees into decreasing form with apply_swap, inserting
/// each unit from the right as in insertion sort. Precondition: non-empty.
DegreeSeq sort_decreasing(const std::vector<Degree>& degrees);

/// The unique decreasing polynomial equal to e.
DegreeSeq canonicalize(const BTerm& e);

/// Degree list read off a tree: the node labels of nodes_{-1}(t) with the
/// trailing -1 labels removed. Empty for identity-shaped trees.
std::vector<Degree> nodes(const BinTree& t);

/// nodes_i for an arbitrary starting label; labels may be negative.
std::vector<std::int64_t> nodes_from(const BinTree& t, std::int64_t first_label);

/// (B^n1 B) o ... o (B^nk B) with o written as B, right-associated.
BTerm seq_to_bterm(const DegreeSeq& s);

/// The eta-short tree t with nodes(t) == s.
BinTree tree_of(const DegreeSeq& s);

bool equivalent_bterms(const BTerm& e1, const BTerm& e2);

inline bool is_monomial(const DegreeSeq& s) { return s.runs().size() == 1 && s.runs().front().count == 1; }

}  // namespace brho
