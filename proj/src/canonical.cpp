#include "brho/canonical.hpp"

#include <cassert>
#include <stdexcept>
#include <tuple>

namespace brho {

BTerm arity_reduce(const BTerm& e) {
  std::vector<BTerm> args;  // first argument last
  BTerm head = e;
  for (;;) {
    while (!head.is_leaf()) {
      args.push_back(head.arg());
      BTerm fn = head.fn();
      head = std::move(fn);
    }
    if (args.size() < 3) break;
    BTerm e1 = std::move(args.back());
    args.pop_back();
    BTerm e2 = std::move(args.back());
    args.pop_back();
    BTerm e3 = std::move(args.back());
    args.pop_back();
    args.push_back(BTerm::app(std::move(e2), std::move(e3)));
    head = std::move(e1);
  }
  BTerm acc = BTerm::b();
  for (auto it = args.rbegin(); it != args.rend(); ++it) acc = BTerm::app(std::move(acc), arity_reduce(*it));
  return acc;
}

namespace {

void collect_degrees(const BTerm& t, Degree offset, std::vector<Degree>& out) {
  if (t.is_leaf()) {
    out.push_back(offset);
    return;
  }
  if (t.fn().is_leaf()) {  // B e
    collect_degrees(t.arg(), checked_add(offset, 1), out);
    return;
  }
  if (!t.fn().fn().is_leaf()) {
    throw std::invalid_argument("term is not arity-reduced");
  }
  collect_degrees(t.fn().arg(), offset, out);  // e1 o e2
  collect_degrees(t.arg(), offset, out);
}

void collect_nodes(const BinTree& t, std::int64_t label, std::vector<std::int64_t>& out) {
  if (t.is_leaf()) return;
  collect_nodes(t.right(), label + static_cast<std::int64_t>(t.left().leaves()), out);
  collect_nodes(t.left(), label, out);
  out.push_back(label);
}

}  // namespace

std::vector<Degree> polynomial_degrees(const BTerm& arity_reduced) {
  std::vector<Degree> out;
  collect_degrees(arity_reduced, 0, out);
  return out;
}

std::pair<Degree, Degree> apply_swap(Degree m, Degree n) {
  assert(m < n);
  return {checked_add(n, 1), m};
}

DegreeSeq sort_decreasing(const std::vector<Degree>& degrees) {
  std::vector<Degree> out;
  out.reserve(degrees.size());
  for (Degree d : degrees) {
    out.push_back(d);
    for (std::size_t j = out.size() - 1; j > 0 && out[j - 1] < out[j]; --j) {
      std::tie(out[j - 1], out[j]) = apply_swap(out[j - 1], out[j]);
    }
  }
  return DegreeSeq::from_degrees(out);
}

DegreeSeq canonicalize(const BTerm& e) { return sort_decreasing(polynomial_degrees(arity_reduce(e))); }

std::vector<std::int64_t> nodes_from(const BinTree& t, std::int64_t first_label) {
  std::vector<std::int64_t> out;
  collect_nodes(t, first_label, out);
  return out;
}

std::vector<Degree> nodes(const BinTree& t) {
  std::vector<std::int64_t> labels = nodes_from(t, -1);
  while (!labels.empty() && labels.back() == -1) labels.pop_back();
  std::vector<Degree> out;
  out.reserve(labels.size());
  for (std::int64_t l : labels) {
    assert(l >= 0);
    out.push_back(static_cast<Degree>(l));
  }
  return out;
}

BTerm seq_to_bterm(const DegreeSeq& s) {
  const std::vector<Degree> degrees = s.expanded();
  BTerm acc = monomial(degrees.back());
  for (std::size_t i = degrees.size() - 1; i-- > 0;) acc = compose(monomial(degrees[i]), acc);
  return acc;
}

BinTree tree_of(const DegreeSeq& s) {
  const std::vector<Degree> degrees = s.expanded();
  // Head leaf x1 followed by its arguments; the monomial B^n B is
  // x1 x2 ... x(n+1) (x(n+2) x(n+3)).
  std::vector<BinTree> args(degrees.front(), BinTree::leaf());
  args.push_back(BinTree::node(BinTree::leaf(), BinTree::leaf()));
  for (std::size_t i = 1; i < degrees.size(); ++i) {
    const Degree n = degrees[i];
    assert(n < args.size());
    // Composing with B^n B on the right pairs arguments n and n+1 (a fresh
    // variable when there is no argument n+1).
    BinTree rhs = n + 1 < args.size() ? args[n + 1] : BinTree::leaf();
    args[n] = BinTree::node(args[n], std::move(rhs));
    if (n + 1 < args.size()) args.erase(args.begin() + static_cast<std::ptrdiff_t>(n + 1));
  }
  return from_spine(args);
}

bool equivalent_bterms(const BTerm& e1, const BTerm& e2) { return canonicalize(e1) == canonicalize(e2); }

}  // namespace brho
