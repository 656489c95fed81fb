#include <doctest.h>

#include <map>
#include <random>

#include "brho/rho.hpp"

using namespace brho;

namespace {

// x -> table[x] on a random functional graph.
struct Graph {
  std::vector<std::uint32_t> table;
  std::uint32_t operator()(std::uint32_t x) const { return table[x]; }
};

Graph random_graph(std::mt19937_64& rng, std::uint32_t size) {
  Graph g;
  std::uniform_int_distribution<std::uint32_t> pick(0, size - 1);
  for (std::uint32_t i = 0; i < size; ++i) g.table.push_back(pick(rng));
  return g;
}

RhoResult by_history(const Graph& g, std::uint32_t start) {
  std::map<std::uint32_t, std::uint64_t> seen;
  std::uint32_t x = start;
  for (std::uint64_t i = 1;; ++i) {
    auto [it, fresh] = seen.emplace(x, i);
    if (!fresh) return {it->second, i - it->second};
    x = g(x);
  }
}

// Counts live copies so tests can see how many states a search retains.
struct Counted {
  static inline int live = 0;
  std::uint32_t v;
  explicit Counted(std::uint32_t x) : v(x) { ++live; }
  Counted(const Counted& o) : v(o.v) { ++live; }
  Counted& operator=(const Counted&) = default;
  ~Counted() { --live; }
  friend bool operator==(const Counted& a, const Counted& b) { return a.v == b.v; }
};

}  // namespace

TEST_CASE("both algorithms find the minimal pair on random functional graphs") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    const Graph g = random_graph(rng, 1 + static_cast<std::uint32_t>(i % 300));
    const std::uint32_t start = static_cast<std::uint32_t>(rng() % g.table.size());
    const RhoResult expected = by_history(g, start);
    REQUIRE(find_cycle(start, g, Algorithm::floyd, 1'000'000) == expected);
    REQUIRE(find_cycle(start, g, Algorithm::brent, 1'000'000) == expected);
  }
}

TEST_CASE("fixed points and pure cycles") {
  auto id = [](std::uint32_t x) { return x; };
  CHECK(find_cycle(5u, id, Algorithm::floyd, 10) == RhoResult{1, 1});
  CHECK(find_cycle(5u, id, Algorithm::brent, 10) == RhoResult{1, 1});
  auto rot = [](std::uint32_t x) { return (x + 1) % 7; };
  CHECK(find_cycle(0u, rot, Algorithm::floyd, 100) == RhoResult{1, 7});
  CHECK(find_cycle(0u, rot, Algorithm::brent, 100) == RhoResult{1, 7});
}

TEST_CASE("horizon exhaustion") {
  auto inc = [](std::uint64_t x) { return x + 1; };
  CHECK_THROWS_AS(find_cycle(std::uint64_t{0}, inc, Algorithm::floyd, 1000), NotFound);
  CHECK_THROWS_AS(find_cycle(std::uint64_t{0}, inc, Algorithm::brent, 1000), NotFound);
  // A cycle needing index 12 to confirm.
  auto g = [](std::uint32_t x) { return x < 9 ? x + 1 : 4; };
  CHECK(find_cycle(0u, g, Algorithm::floyd, 100) == RhoResult{5, 6});
  CHECK_THROWS_AS(find_cycle(0u, g, Algorithm::floyd, 6), NotFound);
}

TEST_CASE("resuming from any snapshot gives the uninterrupted result") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(rng, 50 + static_cast<std::uint32_t>(i));
    const std::uint32_t start = 0;
    for (Algorithm alg : {Algorithm::floyd, Algorithm::brent}) {
      std::vector<SearchSnapshot<std::uint32_t>> snaps;
      const RhoResult full = find_cycle(start, g, alg, 1'000'000, nullptr,
                                        [&](const SearchView<std::uint32_t>& v) { snaps.push_back(v.snapshot()); });
      REQUIRE_FALSE(snaps.empty());
      REQUIRE(snaps.back().phase == 3);
      for (const auto& s : snaps) REQUIRE(find_cycle(start, g, alg, 1'000'000, &s) == full);
    }
  }
}

TEST_CASE("phase 1 holds only the two pointers besides the base") {
  std::mt19937_64 rng(12);
  const Graph g = random_graph(rng, 5000);
  auto next = [&](const Counted& c) { return Counted(g(c.v)); };
  for (Algorithm alg : {Algorithm::floyd, Algorithm::brent}) {
    const Counted base(0);
    REQUIRE(Counted::live == 1);
    int max_live_phase1 = 0;
    int phase1_steps = 0;
    find_cycle(base, next, alg, 1'000'000, nullptr, [&](const SearchView<Counted>& v) {
      if (v.phase == 1 && !v.repositioning) {
        max_live_phase1 = std::max(max_live_phase1, Counted::live);
        ++phase1_steps;
      }
    });
    CHECK(phase1_steps > 0);
    CHECK(max_live_phase1 == 3);
  }
  CHECK(Counted::live == 0);
}

TEST_CASE("algorithm names") {
  CHECK(parse_algorithm("floyd") == Algorithm::floyd);
  CHECK(parse_algorithm("brent") == Algorithm::brent);
  CHECK(to_string(Algorithm::brent) == "brent");
  CHECK_THROWS_AS(parse_algorithm("gosper"), std::invalid_argument);
}

TEST_CASE("the observer never goes quiet for more than one step's worth of applications") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(rng, 200 + static_cast<std::uint32_t>(i) * 37);
    for (Algorithm alg : {Algorithm::floyd, Algorithm::brent}) {
      std::uint64_t calls = 0, since = 0, worst = 0;
      std::vector<SearchSnapshot<std::uint32_t>> snaps;
      auto next = [&](std::uint32_t x) {
        ++calls;
        ++since;
        return g(x);
      };
      auto watch = [&](const SearchView<std::uint32_t>& v) {
        if (!snaps.empty()) worst = std::max(worst, since);
        since = 0;
        snaps.push_back(v.snapshot());
      };
      const RhoResult full = find_cycle(0u, next, alg, 1'000'000, nullptr, watch);
      CHECK(worst <= 3);
      // Every snapshot, including those taken while re-walking, resumes correctly
      // and the resumed run stays observable too.
      for (std::size_t s = 0; s < snaps.size(); s += 7) {
        since = 0;
        worst = 0;
        bool first = true;
        REQUIRE(find_cycle(0u, next, alg, 1'000'000, &snaps[s], [&](const SearchView<std::uint32_t>&) {
                  if (!first) worst = std::max(worst, since);
                  first = false;
                  since = 0;
                }) == full);
        CHECK(worst <= 3);
      }
    }
  }
}
