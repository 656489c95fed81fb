#include "brho/restricted.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

#include "brho/errors.hpp"
#include "brho/fast_apply.hpp"

namespace brho {

RTermArena::Id RTermArena::fresh(Node n) {
  if (nodes_.size() >= kNone) throw OverflowError("restricted term arena is full");
  nodes_.push_back(n);
  return static_cast<Id>(nodes_.size() - 1);
}

RTermArena::Id RTermArena::constant(std::uint64_t k) {
  auto it = consts_.find(k);
  if (it != consts_.end()) return it->second;
  Id id = fresh(Node{k, kNone, kNone});
  consts_.emplace(k, id);
  return id;
}

RTermArena::Id RTermArena::app(Id fn, Id arg) {
  const std::uint64_t key = (std::uint64_t{fn} << 32) | arg;
  auto it = apps_.find(key);
  if (it != apps_.end()) return it->second;
  Id id = fresh(Node{0, fn, arg});
  apps_.emplace(key, id);
  return id;
}

RTermArena::Id RTermArena::normalize(Id t, std::uint64_t budget) {
  std::uint64_t steps = 0;
  return normalize_with(t, steps, budget);
}

RTermArena::Id RTermArena::normalize_with(Id t, std::uint64_t& steps, std::uint64_t budget) {
  if (auto it = normal_.find(t); it != normal_.end()) return it->second;

  Id cur = t;
  Id head;
  std::vector<Id> args;  // first argument first
  for (;;) {
    args.clear();
    head = cur;
    while (!is_const(head)) {
      args.push_back(arg(head));
      head = fn(head);
    }
    std::reverse(args.begin(), args.end());
    const std::uint64_t k = const_power(head);
    if (args.size() < k + 2) break;
    if (++steps > budget) throw StepBudgetExceeded(budget);
    // e1 (e2 ... e(k+2)) e(k+3) ...
    Id inner = args[1];
    for (std::size_t i = 2; i < k + 2; ++i) inner = app(inner, args[i]);
    cur = app(args[0], inner);
    for (std::size_t i = k + 2; i < args.size(); ++i) cur = app(cur, args[i]);
  }

  Id result = head;
  for (Id a : args) result = app(result, normalize_with(a, steps, budget));
  normal_[t] = result;
  normal_[cur] = result;
  normal_[result] = result;
  return result;
}

RTermArena::Id RTermArena::from_bterm(const BTerm& e) {
  if (e.is_leaf()) return constant(1);
  Id f = from_bterm(e.fn());
  return app(f, from_bterm(e.arg()));
}

DegreeSeq RTermArena::canonical(Id t) {
  if (auto it = canonical_.find(t); it != canonical_.end()) return it->second;
  DegreeSeq result;
  if (is_const(t)) {
    const std::uint64_t k = const_power(t);
    if (k == 0) throw std::invalid_argument("B^0 has no B-term equivalent");
    result = DegreeSeq::from_valid_runs({Run{0, k}});
  } else {
    DegreeSeq f = canonical(fn(t));
    result = apply_poly(f, canonical(arg(t)));
  }
  canonical_.emplace(t, result);
  return result;
}

std::uint64_t RTermArena::tree_size(Id t) {
  if (is_const(t)) return 1;
  if (auto it = tree_size_.find(t); it != tree_size_.end()) return it->second;
  const std::uint64_t a = tree_size(fn(t));
  const std::uint64_t b = tree_size(arg(t));
  std::uint64_t n;
  if (__builtin_add_overflow(a, b, &n)) n = std::numeric_limits<std::uint64_t>::max();
  tree_size_.emplace(t, n);
  return n;
}

namespace {

void render(const RTermArena& arena, RTermArena::Id t, bool as_argument, std::string& out) {
  if (arena.is_const(t)) {
    const std::uint64_t k = arena.const_power(t);
    out += k == 1 ? std::string("B") : "B^" + std::to_string(k);
    return;
  }
  if (as_argument) out += '(';
  render(arena, arena.fn(t), false, out);
  out += ' ';
  render(arena, arena.arg(t), true, out);
  if (as_argument) out += ')';
}

class Parser {
 public:
  Parser(RTermArena& arena, std::string_view text) : arena_(arena), text_(text) {}

  RTermArena::Id parse() {
    RTermArena::Id t = term();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_atom_start() {
    skip_space();
    return pos_ < text_.size() && (text_[pos_] == 'B' || text_[pos_] == '(');
  }

  RTermArena::Id term() {
    if (!at_atom_start()) throw SyntaxError(pos_ == text_.size() ? "expected a term" : "expected 'B' or '('", pos_);
    RTermArena::Id acc = atom();
    while (at_atom_start()) acc = arena_.app(acc, atom());
    return acc;
  }

  RTermArena::Id atom() {
    if (text_[pos_] == '(') {
      ++pos_;
      RTermArena::Id inner = term();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw SyntaxError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    ++pos_;  // 'B'
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return arena_.constant(natural());
    }
    return arena_.constant(1);
  }

  std::uint64_t natural() {
    const std::size_t start = pos_;
    std::uint64_t n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (n > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) throw SyntaxError("exponent too large", start);
      n = n * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) throw SyntaxError("expected exponent", pos_);
    return n;
  }

  RTermArena& arena_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string RTermArena::to_string(Id t) const {
  std::string out;
  render(*this, t, false, out);
  return out;
}

RTermArena::Id parse_rterm(RTermArena& arena, std::string_view text) { return Parser(arena, text).parse(); }

RhoResult find_rho_restricted(RTermArena& arena, RTermArena::Id x, std::uint64_t max_steps, Algorithm algorithm,
                              std::uint64_t normalize_budget) {
  const RTermArena::Id base = arena.normalize(x, normalize_budget);
  auto next = [&](RTermArena::Id s) { return arena.normalize(arena.app(s, base), normalize_budget); };
  return find_cycle(base, next, algorithm, max_steps);
}

std::vector<RTermArena::Id> iterate_restricted(RTermArena& arena, RTermArena::Id x, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("iterate needs a positive count");
  std::vector<RTermArena::Id> out{arena.normalize(x)};
  while (out.size() < n) out.push_back(arena.normalize(arena.app(out.back(), out.front())));
  return out;
}

}  // namespace brho
