#pragma once

// Constant-memory cycle detection over an orbit x1 = base, x(i+1) = next(x(i)).
//
// Indices are 1-based like X^(1), X^(2), ...  The result (entry, cycle) is
// the minimal pair with x(entry) == x(entry + cycle).

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include "brho/errors.hpp"

namespace brho {

enum class Algorithm { floyd, brent };

std::string_view to_string(Algorithm a) noexcept;
/// Throws std::invalid_argument.
Algorithm parse_algorithm(std::string_view text);

struct RhoResult {
  std::uint64_t entry = 0;
  std::uint64_t cycle = 0;
  friend bool operator==(const RhoResult&, const RhoResult&) = default;
};

/// Resumable search position.
///
/// Floyd, phase 1: slow = x(step), fast = x(2 step).
/// Floyd, phase 2: m fixed, slow = x(step), fast = x(m + step); candidate_c is
///   the least c <= step with x(m + c) == x(m), if any.
/// Brent, phase 1: fast = x(step), slow = x(p) where p is the largest power of
///   two below step.
/// Brent, phase 2: m = candidate_c = cycle length, slow = x(step), fast = x(step + m).
/// Phase 3: finished; the result is (step, candidate_c).
template <class State>
struct SearchSnapshot {
  int phase;
  std::uint64_t step;
  State slow;
  State fast;
  std::optional<std::uint64_t> m;
  std::optional<std::uint64_t> candidate_c;
};

/// What an observer sees after every step; references are valid only during the call.
template <class State>
struct SearchView {
  Algorithm algorithm;
  int phase;
  std::uint64_t step;
  const State& slow;
  const State& fast;
  std::optional<std::uint64_t> m;
  std::optional<std::uint64_t> candidate_c;
  /// Set while a pointer is re-walked from the base between resumable
  /// positions; the rest of the view is the last resumable position.
  bool repositioning = false;

  SearchSnapshot<State> snapshot() const { return {phase, step, slow, fast, m, candidate_c}; }
};

struct NoObserver {
  template <class View>
  void operator()(const View&) const noexcept {}
};

namespace detail {

inline std::uint64_t add_index(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("iterate index overflow");
  return r;
}

inline void within_horizon(std::uint64_t index, std::uint64_t max_steps) {
  if (index > max_steps) throw NotFound(max_steps);
}

template <class State, class Next, class Observer>
State advance(State s, Next& next, std::uint64_t times, Observer& observe, const SearchView<State>& at) {
  for (std::uint64_t i = 0; i < times; ++i) {
    s = next(s);
    observe(at);
  }
  return s;
}

template <class State, class Next, class Observer>
RhoResult floyd(const State& base, Next& next, std::uint64_t max_steps, const SearchSnapshot<State>* resume,
                Observer& observe) {
  using detail::add_index;
  int phase = 1;
  std::uint64_t step = 1;
  std::optional<std::uint64_t> m;
  std::optional<std::uint64_t> cand;
  std::optional<State> slow_holder;
  std::optional<State> fast_holder;
  if (resume) {
    phase = resume->phase;
    step = resume->step;
    m = resume->m;
    cand = resume->candidate_c;
    slow_holder.emplace(resume->slow);
    fast_holder.emplace(resume->fast);
  } else {
    within_horizon(2, max_steps);
    slow_holder.emplace(base);
    fast_holder.emplace(next(base));
  }
  State& slow = *slow_holder;
  State& fast = *fast_holder;
  auto view = [&] { return SearchView<State>{Algorithm::floyd, phase, step, slow, fast, m, cand}; };

  if (phase == 3) return {step, cand.value()};

  std::optional<State> anchor;  // x(m)
  if (phase == 1) {
    while (!(slow == fast)) {
      within_horizon(add_index(add_index(step, step), 2), max_steps);
      slow = next(slow);
      fast = next(next(fast));
      ++step;
      observe(view());
    }
    m = step;
    phase = 2;
    // x(m) == x(2m), so the fast pointer continues as x(m + j).
    anchor.emplace(fast);
    slow = base;
    fast = next(*anchor);
    step = 1;
    if (fast == *anchor) cand = 1;
    observe(view());
  } else {
    SearchView<State> at = view();
    at.repositioning = true;
    anchor.emplace(advance(base, next, m.value() - 1, observe, at));
  }

  while (!(slow == fast)) {
    within_horizon(add_index(add_index(*m, step), 1), max_steps);
    slow = next(slow);
    fast = next(fast);
    ++step;
    if (!cand && fast == *anchor) cand = step;
    observe(view());
  }
  cand = cand.value_or(*m);
  phase = 3;
  observe(view());
  return {step, *cand};
}

template <class State, class Next, class Observer>
RhoResult brent(const State& base, Next& next, std::uint64_t max_steps, const SearchSnapshot<State>* resume,
                Observer& observe) {
  using detail::add_index;
  int phase = 1;
  std::uint64_t step = 2;
  std::optional<std::uint64_t> m;
  std::optional<std::uint64_t> cand;
  std::optional<State> slow_holder;
  std::optional<State> fast_holder;
  if (resume) {
    phase = resume->phase;
    step = resume->step;
    m = resume->m;
    cand = resume->candidate_c;
    slow_holder.emplace(resume->slow);
    fast_holder.emplace(resume->fast);
  } else {
    within_horizon(2, max_steps);
    slow_holder.emplace(base);
    fast_holder.emplace(next(base));
  }
  State& slow = *slow_holder;
  State& fast = *fast_holder;
  auto view = [&] { return SearchView<State>{Algorithm::brent, phase, step, slow, fast, m, cand}; };

  if (phase == 3) return {step, cand.value()};

  if (phase == 1) {
    if (step < 2) throw std::invalid_argument("brent phase-1 snapshot needs step >= 2");
    std::uint64_t power = std::bit_floor(step - 1);
    std::uint64_t lam = step - power;
    while (!(slow == fast)) {
      if (power == lam) {
        slow = fast;
        power *= 2;
        lam = 0;
      }
      within_horizon(add_index(step, 1), max_steps);
      fast = next(fast);
      ++step;
      ++lam;
      observe(view());
    }
    const SearchView<State> at{Algorithm::brent, 1, step, slow, fast, std::nullopt, std::nullopt, true};
    State ahead = advance(base, next, lam, observe, at);
    m = lam;
    cand = lam;
    phase = 2;
    slow = base;
    fast = std::move(ahead);
    step = 1;
    observe(view());
  }

  while (!(slow == fast)) {
    within_horizon(add_index(add_index(step, *m), 1), max_steps);
    slow = next(slow);
    fast = next(fast);
    ++step;
    observe(view());
  }
  phase = 3;
  observe(view());
  return {step, cand.value()};
}

}  // namespace detail

/// Runs the three-phase search (Floyd) or Brent's power-of-two search, both
/// followed by the same minimal-entry sweep. `next` maps x(i) to x(i + 1);
/// `observe` is called with a SearchView after every step. Throws NotFound
/// when an index beyond `max_steps` would be needed.
template <class State, class Next, class Observer = NoObserver>
RhoResult find_cycle(const State& base, Next&& next, Algorithm algorithm, std::uint64_t max_steps,
                     const SearchSnapshot<std::type_identity_t<State>>* resume = nullptr, Observer&& observe = {}) {
  if (algorithm == Algorithm::floyd) return detail::floyd(base, next, max_steps, resume, observe);
  return detail::brent(base, next, max_steps, resume, observe);
}

}  // namespace brho
