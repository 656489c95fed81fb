#include "brho/antirho.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "brho/canonical.hpp"
#include "brho/cycle_detect.hpp"
#include "brho/fast_apply.hpp"
#include "brho/lambda.hpp"

namespace brho {

bool in_Tprime(const BinTree& t, const TknSpec& spec) {
  if (t.is_leaf()) return true;
  const std::vector<BinTree> args = spine_args(t);
  if (args.size() != spec.block()) return false;
  for (std::size_t i = 1; i <= args.size(); ++i) {
    const BinTree& s = args[i - 1];
    if (i % (spec.k + 2) == 0 ? !s.is_leaf() : !in_Tprime(s, spec)) return false;
  }
  return true;
}

bool in_Tkn(const BinTree& t, const TknSpec& spec) {
  const BinTree* head = &t;
  for (std::uint64_t j = 0; j <= spec.k; ++j) {
    if (head->is_leaf()) return false;
    if (!in_Tprime(head->right(), spec)) return false;
    head = &head->left();
  }
  return in_Tprime(*head, spec);
}

namespace {

// <x, t, x> with t in the example T'.
bool is_wrapped(const BinTree& t) {
  if (t.is_leaf()) return false;
  const std::vector<BinTree> args = spine_args(t);
  return args.size() == 2 && args[1].is_leaf() && in_example_Tprime(args[0]);
}

}  // namespace

bool in_example_Tprime(const BinTree& t) {
  if (t.is_leaf()) return true;
  const std::vector<BinTree> args = spine_args(t);
  if (args.size() == 2) return args[1].is_leaf() && in_example_Tprime(args[0]);
  if (args.size() == 4) {
    return in_example_Tprime(args[0]) && args[1].is_leaf() && is_wrapped(args[2]) && args[3].is_leaf();
  }
  return false;
}

bool in_example_T(const BinTree& t) {
  return !t.is_leaf() && in_example_Tprime(t.left()) && is_wrapped(t.right());
}

DegreeSeq z_seq(const TknSpec& spec) {
  if (spec.n == 0) throw std::invalid_argument("n must be positive");
  return DegreeSeq::from_runs({Run{spec.k, spec.block()}});
}

BTerm z_term(const TknSpec& spec) { return seq_to_bterm(z_seq(spec)); }

DegreeSeq example_seq() { return DegreeSeq::from_degrees({2, 2, 1, 1, 0, 0}); }

TreeStats tree_stats(const BinTree& t) {
  TreeStats s;
  s.l = t.leaves();
  std::vector<BinTree> args = spine_args(t);
  s.a = args.size();
  if (!args.empty()) s.n1 = args.front();
  return s;
}

std::vector<BinTree> orbit_trees(const DegreeSeq& x, std::uint64_t steps) {
  std::vector<BinTree> out;
  out.reserve(steps);
  Orbit orbit(x);
  for (std::uint64_t i = 1; i <= steps; ++i) {
    if (i > 1) orbit.advance();
    out.push_back(tree_of(orbit.current()));
  }
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> orbit_stats(const DegreeSeq& x, std::uint64_t steps) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const BinTree& t : orbit_trees(x, steps)) {
    TreeStats s = tree_stats(t);
    out.emplace_back(s.l, s.a);
  }
  return out;
}

bool Report::all_hold() const {
  return std::all_of(assertions.begin(), assertions.end(),
                     [](const Assertion& a) { return a.holds || a.informational; });
}

std::string Report::to_string() const {
  std::ostringstream out;
  for (const Assertion& a : assertions) {
    out << a.name << ": " << (a.holds ? "PASS" : "FAIL");
    if (a.first_counterexample) out << " at i=" << *a.first_counterexample;
    if (!a.note.empty()) out << " (" << a.note << ")";
    else if (a.informational) out << " (informational)";
    out << '\n';
  }
  return out.str();
}

void Report::append(const Report& other) {
  assertions.insert(assertions.end(), other.assertions.begin(), other.assertions.end());
}

std::uint64_t n1_depth(const BinTree& t) {
  std::uint64_t d = 0;
  BinTree cur = t;
  while (!cur.is_leaf()) {
    BinTree first = spine_args(cur).front();
    cur = std::move(first);
    ++d;
  }
  return d;
}

namespace {

BinTree substitute(const BinTree& t, const std::vector<BinTree>& repl, std::size_t& next) {
  if (t.is_leaf()) return next < repl.size() ? repl[next++] : t;
  BinTree l = substitute(t.left(), repl, next);
  return BinTree::node(std::move(l), substitute(t.right(), repl, next));
}

}  // namespace

BinTree substitute_leaves(const BinTree& t, const std::vector<BinTree>& repl) {
  std::size_t next = 0;
  return substitute(t, repl, next);
}

std::optional<BinTree> predicted_n1(const BinTree& x, const BinTree& x2) {
  const std::vector<BinTree> args = spine_args(x);
  if (args.empty()) return std::nullopt;
  if (!args[0].is_leaf()) return spine_args(args[0]).front();
  const std::vector<BinTree> args2 = spine_args(x2);
  if (args2.empty()) return std::nullopt;
  const std::uint64_t m = std::min<std::uint64_t>(args2[0].leaves() + 1, args.size());
  return substitute_leaves(args2[0], std::vector<BinTree>(args.begin() + 1, args.begin() + static_cast<std::ptrdiff_t>(m)));
}

namespace {

// Records the first index at which `ok` was false.
struct Tracker {
  Assertion a;
  explicit Tracker(std::string name, std::string note = {}) : a{std::move(name), true, std::nullopt, std::move(note)} {}
  void check(bool ok, std::uint64_t i) {
    if (!ok && a.holds) {
      a.holds = false;
      a.first_counterexample = i;
    }
  }
};

std::uint64_t args_of(const std::optional<BinTree>& t) { return t ? spine_args(*t).size() : 0; }

}  // namespace

Report check_monotone(const DegreeSeq& x, std::uint64_t steps) {
  Tracker monotone("l non-decreasing");
  Tracker increases("plateau ends within N1 depth + 1");
  Tracker no_repeat("no repeated iterate among " + std::to_string(steps));

  std::unordered_set<DegreeSeq> seen;
  std::vector<std::uint64_t> ls;
  std::vector<std::uint64_t> depths;
  Orbit orbit(x);
  for (std::uint64_t i = 1; i <= steps; ++i) {
    if (i > 1) orbit.advance();
    no_repeat.check(seen.insert(orbit.current()).second, i);
    const BinTree t = tree_of(orbit.current());
    ls.push_back(t.leaves());
    depths.push_back(n1_depth(t));
    if (i > 1) monotone.check(ls[i - 1] >= ls[i - 2], i);
  }
  for (std::uint64_t i = 1; i <= steps; ++i) {
    const std::uint64_t limit = i + depths[i - 1] + 1;
    if (limit > steps) continue;
    bool grew = false;
    for (std::uint64_t j = i + 1; j <= limit && !grew; ++j) grew = ls[j - 1] > ls[i - 1];
    increases.check(grew, i);
  }
  return Report{{monotone.a, increases.a, no_repeat.a}};
}

Report check_general_condition(const DegreeSeq& x, const TreePredicate& member, std::uint64_t steps) {
  Tracker inside("every iterate in the set");
  Tracker bound("l(X) >= a(X') + 1 on the orbit");
  Orbit orbit(x);
  const std::uint64_t lx = tree_of(x).leaves();
  for (std::uint64_t i = 1; i <= steps; ++i) {
    if (i > 1) orbit.advance();
    const BinTree t = tree_of(orbit.current());
    inside.check(member(t), i);
    bound.check(lx >= spine_args(t).size() + 1, i);
  }
  return Report{{inside.a, bound.a}};
}

Report check_application_rule(const DegreeSeq& x, std::uint64_t steps) {
  Tracker l_rule("l(X X') from head statistics");
  Tracker a_rule("a(X X') from head statistics");
  Tracker n1_rule("N1(X X') from head arguments");
  const BinTree base_tree = tree_of(x);
  const TreeStats base = tree_stats(base_tree);
  Orbit orbit(x);
  BinTree prev_tree = base_tree;
  TreeStats prev = base;
  for (std::uint64_t i = 2; i <= steps; ++i) {
    orbit.advance();
    BinTree cur_tree = tree_of(orbit.current());
    const TreeStats cur = tree_stats(cur_tree);
    const std::optional<BinTree> n1 = predicted_n1(prev_tree, base_tree);
    n1_rule.check(n1 && cur.n1 && *n1 == *cur.n1, i);
    const std::uint64_t l_pred = prev.l - 1 + (base.l > prev.a ? base.l - prev.a : 0);
    const std::uint64_t a_pred = base.a + args_of(prev.n1) + (prev.a > base.l ? prev.a - base.l : 0);
    l_rule.check(cur.l == l_pred, i);
    a_rule.check(cur.a == a_pred, i);
    prev = cur;
    prev_tree = std::move(cur_tree);
  }
  return Report{{l_rule.a, a_rule.a, n1_rule.a}};
}

Report check_against_oracle(const DegreeSeq& x, std::uint64_t oracle_steps) {
  Tracker agree("tree and (l, a) agree with normalized lambda image",
                "first " + std::to_string(oracle_steps) + " iterates");
  const BTerm term = seq_to_bterm(x);
  const LambdaTerm image = bterm_to_lambda(term);
  Orbit orbit(x);
  LambdaTerm acc = image;
  for (std::uint64_t i = 1; i <= oracle_steps; ++i) {
    if (i > 1) {
      orbit.advance();
      acc = normalize(LambdaTerm::app(acc, image));
    } else {
      acc = normalize(acc);
    }
    const BinTree fast = tree_of(orbit.current());
    const TermStats slow = term_stats(acc);
    const TreeStats fs = tree_stats(fast);
    agree.check(lambda_to_tree(acc) == fast && slow.l == fs.l && slow.a == fs.a, i);
  }
  return Report{{agree.a}};
}

Report check_tkn(const TknSpec& spec, std::uint64_t steps, std::uint64_t oracle_steps) {
  const DegreeSeq z = z_seq(spec);
  const std::uint64_t k1 = spec.k + 1;
  const std::uint64_t a_high = spec.block() + spec.k + 1;

  Tracker closure("every iterate in T_{k,n}");
  Tracker a_values("a in {k+1, (k+2)n+k+1}");
  Tracker l_rec("l recurrence");
  Tracker a_rec("a recurrence");
  Tracker n1_rec("N1 recurrence");
  Tracker n1_short("N1 recurrence with N2 for a leaf N1",
                   "informational; exact only when N1(Z) is a single leaf, i.e. k >= 1");
  n1_short.a.informational = true;
  const BinTree z_tree = tree_of(z);

  const std::vector<BinTree> trees = orbit_trees(z, steps);
  for (std::uint64_t i = 1; i <= steps; ++i) {
    const BinTree& t = trees[i - 1];
    const TreeStats s = tree_stats(t);
    closure.check(in_Tkn(t, spec), i);
    a_values.check(s.a == k1 || s.a == a_high, i);
    if (i == steps) break;
    const TreeStats next = tree_stats(trees[i]);
    l_rec.check(s.a <= a_high && next.l == s.l + a_high - s.a, i);
    a_rec.check(next.a == args_of(s.n1) + k1, i);
    const std::optional<BinTree> expected = predicted_n1(t, z_tree);
    n1_rec.check(expected && next.n1 && *expected == *next.n1, i);
    std::optional<BinTree> shortcut = expected;
    if (s.n1 && s.n1->is_leaf()) {
      const std::vector<BinTree> args = spine_args(t);
      shortcut = args.size() >= 2 ? std::optional<BinTree>(args[1]) : std::nullopt;
    }
    n1_short.check(shortcut && next.n1 && *shortcut == *next.n1, i);
  }

  Report r{{closure.a, a_values.a, l_rec.a, a_rec.a, n1_rec.a, n1_short.a}};
  r.append(check_monotone(z, steps));
  r.append(check_general_condition(z, [&](const BinTree& t) { return in_Tkn(t, spec); }, steps));
  r.append(check_application_rule(z, steps));
  if (oracle_steps > 0) r.append(check_against_oracle(z, std::min(oracle_steps, steps)));
  return r;
}

Report check_example(std::uint64_t steps, std::uint64_t oracle_steps) {
  const DegreeSeq x = example_seq();
  Report r = check_general_condition(x, in_example_T, steps);
  r.append(check_monotone(x, steps));
  r.append(check_application_rule(x, steps));
  if (oracle_steps > 0) r.append(check_against_oracle(x, std::min(oracle_steps, steps)));
  return r;
}

}  // namespace brho
