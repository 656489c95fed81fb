#include "brho/bterm.hpp"

#include <cassert>
#include <cctype>
#include <limits>
#include <vector>

#include "brho/errors.hpp"

namespace brho {

BTerm::BTerm() = default;

BTerm BTerm::app(BTerm fn, BTerm arg) {
  const std::uint64_t size = fn.size() + arg.size();
  return BTerm(std::make_shared<const Node>(Node{std::move(fn), std::move(arg), size}));
}

const BTerm& BTerm::fn() const {
  assert(node_);
  return node_->fn;
}

const BTerm& BTerm::arg() const {
  assert(node_);
  return node_->arg;
}

std::uint64_t BTerm::size() const noexcept { return node_ ? node_->size : 1; }

bool operator==(const BTerm& a, const BTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() || b.is_leaf()) return false;
  if (a.size() != b.size()) return false;
  return a.fn() == b.fn() && a.arg() == b.arg();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BTerm parse() {
    BTerm t = term();
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

  BTerm term() {
    if (!at_atom_start()) {
      if (pos_ == text_.size()) throw SyntaxError("expected a term", pos_);
      throw SyntaxError("expected 'B' or '('", pos_);
    }
    BTerm acc = atom();
    while (at_atom_start()) acc = BTerm::app(std::move(acc), atom());
    return acc;
  }

  BTerm atom() {
    if (text_[pos_] == '(') {
      ++pos_;
      BTerm inner = term();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw SyntaxError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    ++pos_;  // 'B'
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      const std::uint64_t n = natural();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != 'B') throw SyntaxError("expected 'B' after exponent", pos_);
      ++pos_;
      return monomial(n);
    }
    return BTerm::b();
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

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render(const BTerm& e, const PrintOptions& opts, bool as_argument, std::string& out) {
  if (e.is_leaf()) {
    out += 'B';
    return;
  }
  if (opts.monomial_sugar) {
    const std::int64_t n = monomial_degree(e);
    if (n >= 2) {
      if (as_argument) out += '(';
      out += "B^" + std::to_string(n) + " B";
      if (as_argument) out += ')';
      return;
    }
  }
  if (as_argument) out += '(';
  render(e.fn(), opts, false, out);
  out += ' ';
  render(e.arg(), opts, true, out);
  if (as_argument) out += ')';
}

}  // namespace

BTerm parse_bterm(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const BTerm& e, PrintOptions opts) {
  std::string out;
  render(e, opts, false, out);
  return out;
}

BTerm flat(const BTerm& e, std::uint64_t k) {
  assert(k >= 1);
  BTerm acc = e;
  for (std::uint64_t i = 1; i < k; ++i) acc = BTerm::app(std::move(acc), e);
  return acc;
}

BTerm monomial(std::uint64_t n) {
  BTerm acc = BTerm::b();
  for (std::uint64_t i = 0; i < n; ++i) acc = BTerm::app(BTerm::b(), std::move(acc));
  return acc;
}

BTerm compose(const BTerm& e1, const BTerm& e2) { return BTerm::app(BTerm::app(BTerm::b(), e1), e2); }

std::int64_t monomial_degree(const BTerm& e) {
  std::int64_t n = 0;
  const BTerm* cur = &e;
  while (!cur->is_leaf()) {
    if (!cur->fn().is_leaf()) return -1;
    cur = &cur->arg();
    ++n;
  }
  return n;
}

}  // namespace brho
