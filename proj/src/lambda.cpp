#include "brho/lambda.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

#include "brho/errors.hpp"

namespace brho {

struct LambdaTerm::Node {
  Kind kind;
  std::uint32_t index;       // var only
  std::uint32_t free_bound;  // 1 + largest free index, 0 when closed
  std::uint64_t size;
  LambdaTerm first;   // abs body, app fn
  LambdaTerm second;  // app arg
};

LambdaTerm LambdaTerm::var(std::uint32_t index) {
  return LambdaTerm(std::make_shared<const Node>(Node{Kind::var, index, index + 1, 1, {}, {}}));
}

LambdaTerm LambdaTerm::abs(LambdaTerm body) {
  const std::uint32_t fb = body.free_bound() > 0 ? body.free_bound() - 1 : 0;
  const std::uint64_t size = body.size() + 1;
  return LambdaTerm(std::make_shared<const Node>(Node{Kind::abs, 0, fb, size, std::move(body), {}}));
}

LambdaTerm LambdaTerm::app(LambdaTerm fn, LambdaTerm arg) {
  const std::uint32_t fb = std::max(fn.free_bound(), arg.free_bound());
  const std::uint64_t size = fn.size() + arg.size() + 1;
  return LambdaTerm(std::make_shared<const Node>(Node{Kind::app, 0, fb, size, std::move(fn), std::move(arg)}));
}

LambdaTerm::Kind LambdaTerm::kind() const noexcept { return node_->kind; }
std::uint64_t LambdaTerm::size() const noexcept { return node_->size; }
std::uint32_t LambdaTerm::free_bound() const noexcept { return node_->free_bound; }

std::uint32_t LambdaTerm::index() const {
  assert(is_var());
  return node_->index;
}

const LambdaTerm& LambdaTerm::body() const {
  assert(is_abs());
  return node_->first;
}

const LambdaTerm& LambdaTerm::fn() const {
  assert(is_app());
  return node_->first;
}

const LambdaTerm& LambdaTerm::arg() const {
  assert(is_app());
  return node_->second;
}

bool operator==(const LambdaTerm& a, const LambdaTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size() || a.free_bound() != b.free_bound()) return false;
  switch (a.kind()) {
    case LambdaTerm::Kind::var:
      return a.index() == b.index();
    case LambdaTerm::Kind::abs:
      return a.body() == b.body();
    case LambdaTerm::Kind::app:
      return a.fn() == b.fn() && a.arg() == b.arg();
  }
  return false;
}

namespace {

void render(const LambdaTerm& t, std::string& out) {
  switch (t.kind()) {
    case LambdaTerm::Kind::var:
      out += std::to_string(t.index());
      return;
    case LambdaTerm::Kind::abs: {
      const LambdaTerm* cur = &t;
      while (cur->is_abs()) {
        out += '\\';
        cur = &cur->body();
      }
      out += '.';
      render(*cur, out);
      return;
    }
    case LambdaTerm::Kind::app: {
      const bool paren_fn = t.fn().is_abs();
      if (paren_fn) out += '(';
      render(t.fn(), out);
      if (paren_fn) out += ')';
      out += ' ';
      const bool paren_arg = !t.arg().is_var();
      if (paren_arg) out += '(';
      render(t.arg(), out);
      if (paren_arg) out += ')';
      return;
    }
  }
}

// Adds d to every free index >= cutoff.
LambdaTerm shift(const LambdaTerm& t, std::int64_t d, std::uint32_t cutoff) {
  if (t.free_bound() <= cutoff) return t;
  switch (t.kind()) {
    case LambdaTerm::Kind::var:
      return LambdaTerm::var(static_cast<std::uint32_t>(static_cast<std::int64_t>(t.index()) + d));
    case LambdaTerm::Kind::abs:
      return LambdaTerm::abs(shift(t.body(), d, cutoff + 1));
    case LambdaTerm::Kind::app:
      return LambdaTerm::app(shift(t.fn(), d, cutoff), shift(t.arg(), d, cutoff));
  }
  return t;
}

// Replaces index `depth` by `arg` (shifted under the binders crossed) and
// closes the gap left by the consumed binder.
LambdaTerm substitute(const LambdaTerm& t, std::uint32_t depth, const LambdaTerm& arg) {
  if (t.free_bound() <= depth) return t;
  switch (t.kind()) {
    case LambdaTerm::Kind::var:
      if (t.index() == depth) return shift(arg, depth, 0);
      return LambdaTerm::var(t.index() - 1);
    case LambdaTerm::Kind::abs:
      return LambdaTerm::abs(substitute(t.body(), depth + 1, arg));
    case LambdaTerm::Kind::app:
      return LambdaTerm::app(substitute(t.fn(), depth, arg), substitute(t.arg(), depth, arg));
  }
  return t;
}

bool occurs(const LambdaTerm& t, std::uint32_t index) {
  if (t.free_bound() <= index) return false;
  switch (t.kind()) {
    case LambdaTerm::Kind::var:
      return t.index() == index;
    case LambdaTerm::Kind::abs:
      return occurs(t.body(), index + 1);
    case LambdaTerm::Kind::app:
      return occurs(t.fn(), index) || occurs(t.arg(), index);
  }
  return false;
}

// Leftmost-outermost: reduce to head normal form, then the arguments left to right.
class BetaReducer {
 public:
  explicit BetaReducer(std::uint64_t budget) : budget_(budget) {}

  LambdaTerm normal_form(LambdaTerm t) {
    std::vector<LambdaTerm> args;  // innermost argument last
    for (;;) {
      if (t.is_abs() && args.empty()) return LambdaTerm::abs(normal_form(t.body()));
      while (t.is_app()) {
        args.push_back(t.arg());
        LambdaTerm fn = t.fn();
        t = std::move(fn);
      }
      if (t.is_abs()) {
        if (++steps_ > budget_) throw StepBudgetExceeded(budget_);
        LambdaTerm reduct = substitute(t.body(), 0, args.back());
        args.pop_back();
        t = std::move(reduct);
        continue;
      }
      LambdaTerm acc = t;
      for (auto it = args.rbegin(); it != args.rend(); ++it) acc = LambdaTerm::app(std::move(acc), normal_form(*it));
      return acc;
    }
  }

 private:
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
};

// One bottom-up pass suffices on a beta-normal term: contracting an eta
// redex never creates a beta redex there.
LambdaTerm eta_reduce(const LambdaTerm& t) {
  switch (t.kind()) {
    case LambdaTerm::Kind::var:
      return t;
    case LambdaTerm::Kind::app:
      return LambdaTerm::app(eta_reduce(t.fn()), eta_reduce(t.arg()));
    case LambdaTerm::Kind::abs: {
      LambdaTerm body = eta_reduce(t.body());
      if (body.is_app() && body.arg().is_var() && body.arg().index() == 0 && !occurs(body.fn(), 0)) {
        return shift(body.fn(), -1, 0);
      }
      return LambdaTerm::abs(std::move(body));
    }
  }
  return t;
}

// Reader for the printed de Bruijn syntax; only fed the fixed combinator table.
class DbReader {
 public:
  explicit DbReader(std::string_view s) : s_(s) {}

  LambdaTerm term() {
    if (s_[pos_] == '\\') {
      std::size_t binders = 0;
      while (s_[pos_] == '\\') {
        ++binders;
        ++pos_;
      }
      ++pos_;  // '.'
      LambdaTerm body = term();
      for (std::size_t i = 0; i < binders; ++i) body = LambdaTerm::abs(std::move(body));
      return body;
    }
    LambdaTerm acc = atom();
    while (pos_ < s_.size() && s_[pos_] == ' ') {
      ++pos_;
      acc = LambdaTerm::app(std::move(acc), atom());
    }
    return acc;
  }

 private:
  LambdaTerm atom() {
    if (s_[pos_] == '(') {
      ++pos_;
      LambdaTerm t = term();
      ++pos_;  // ')'
      return t;
    }
    std::uint32_t n = 0;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
      n = n * 10 + static_cast<std::uint32_t>(s_[pos_++] - '0');
    }
    return LambdaTerm::var(n);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

class TreeReader {
 public:
  explicit TreeReader(std::uint32_t binders) : binders_(binders) {}

  BinTree read(const LambdaTerm& t) {
    switch (t.kind()) {
      case LambdaTerm::Kind::var:
        if (next_ >= binders_ || t.index() != binders_ - 1 - next_) {
          throw NotBFormShape("variables are not used once each in binding order");
        }
        ++next_;
        return BinTree::leaf();
      case LambdaTerm::Kind::app: {
        BinTree left = read(t.fn());
        return BinTree::node(std::move(left), read(t.arg()));
      }
      case LambdaTerm::Kind::abs:
        break;
    }
    throw NotBFormShape("abstraction inside the body");
  }

  bool all_used() const { return next_ == binders_; }

 private:
  std::uint32_t binders_;
  std::uint32_t next_ = 0;
};

LambdaTerm tree_body(const BinTree& t, std::uint32_t total, std::uint32_t& next) {
  if (t.is_leaf()) return LambdaTerm::var(total - 1 - next++);
  LambdaTerm left = tree_body(t.left(), total, next);
  return LambdaTerm::app(std::move(left), tree_body(t.right(), total, next));
}

}  // namespace

std::string to_string(const LambdaTerm& t) {
  std::string out;
  render(t, out);
  return out;
}

LambdaTerm normalize(const LambdaTerm& t, std::uint64_t budget) {
  BetaReducer reducer(budget);
  return eta_reduce(reducer.normal_form(t));
}

bool equivalent(const LambdaTerm& a, const LambdaTerm& b, std::uint64_t budget) {
  return normalize(a, budget) == normalize(b, budget);
}

LambdaTerm combinator(std::string_view name) {
  struct Def {
    std::string_view name;
    std::string_view text;
  };
  static constexpr Def defs[] = {
      {"B", "\\\\\\.2 (1 0)"}, {"C", "\\\\\\.2 0 1"}, {"D", "\\\\\\\\.3 2 (1 0)"}, {"F", "\\\\\\.0 1 2"},
      {"I", "\\.0"},           {"K", "\\\\.1"},       {"O", "\\\\.0 (1 0)"},       {"R", "\\\\\\.1 0 2"},
      {"S", "\\\\\\.2 0 (1 0)"}, {"T", "\\\\.0 1"},   {"V", "\\\\\\.0 2 1"},
  };
  for (const Def& d : defs) {
    if (d.name == name) return DbReader(d.text).term();
  }
  throw std::invalid_argument("unknown combinator '" + std::string(name) + "'");
}

LambdaTerm bterm_to_lambda(const BTerm& e) {
  static const LambdaTerm b_def = combinator("B");
  if (e.is_leaf()) return b_def;
  return LambdaTerm::app(bterm_to_lambda(e.fn()), bterm_to_lambda(e.arg()));
}

BinTree lambda_to_tree(const LambdaTerm& normal_form) {
  std::uint32_t binders = 0;
  const LambdaTerm* body = &normal_form;
  while (body->is_abs()) {
    ++binders;
    body = &body->body();
  }
  if (binders == 0) throw NotBFormShape("no binders");
  TreeReader reader(binders);
  BinTree tree = reader.read(*body);
  if (!reader.all_used()) throw NotBFormShape("unused binder");
  return tree;
}

LambdaTerm tree_to_lambda(const BinTree& t) {
  const auto total = static_cast<std::uint32_t>(t.leaves());
  std::uint32_t next = 0;
  LambdaTerm body = tree_body(t, total, next);
  for (std::uint32_t i = 0; i < total; ++i) body = LambdaTerm::abs(std::move(body));
  return body;
}

TermStats term_stats(const LambdaTerm& t, std::uint64_t budget) {
  const LambdaTerm nf = normalize(t, budget);
  lambda_to_tree(nf);  // shape check
  TermStats stats;
  const LambdaTerm* body = &nf;
  while (body->is_abs()) {
    ++stats.l;
    body = &body->body();
  }
  const LambdaTerm* first_arg = nullptr;
  for (const LambdaTerm* head = body; head->is_app(); head = &head->fn()) {
    ++stats.a;
    first_arg = &head->arg();
  }
  if (first_arg) stats.n1 = *first_arg;
  return stats;
}

RhoResult rho_lambda(const LambdaTerm& t, std::uint64_t max_steps, std::uint64_t budget, Algorithm algorithm) {
  const LambdaTerm base = normalize(t, budget);
  auto next = [&](const LambdaTerm& x) { return normalize(LambdaTerm::app(x, base), budget); };
  return find_cycle(base, next, algorithm, max_steps);
}

}  // namespace brho
