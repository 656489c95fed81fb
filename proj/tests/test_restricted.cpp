#include <doctest.h>

#include "brho/canonical.hpp"
#include "brho/cycle_detect.hpp"
#include "brho/restricted.hpp"

using namespace brho;

TEST_CASE("interning") {
  RTermArena a;
  const auto b = a.constant(1);
  CHECK(a.constant(1) == b);
  CHECK(a.app(b, b) == a.app(b, b));
  CHECK(a.app(b, a.app(b, b)) != a.app(a.app(b, b), b));
  CHECK(a.size() == 4);
}

TEST_CASE("rewrite rule") {
  RTermArena ar;
  // Opaque stand-ins: high powers never have enough arguments here.
  const auto a = ar.constant(7), b = ar.constant(8), c = ar.constant(9), d = ar.constant(10);
  const auto B0 = ar.constant(0), B1 = ar.constant(1), B2 = ar.constant(2);
  CHECK(ar.normalize(ar.app(ar.app(B0, a), b)) == ar.app(a, b));
  CHECK(ar.normalize(ar.app(ar.app(ar.app(B1, a), b), c)) == ar.app(a, ar.app(b, c)));
  CHECK(ar.normalize(ar.app(ar.app(ar.app(ar.app(B2, a), b), c), d)) == ar.app(a, ar.app(ar.app(b, c), d)));
  const auto partial = ar.app(ar.app(B2, a), b);
  CHECK(ar.normalize(partial) == partial);
  const auto nf = ar.normalize(parse_rterm(ar, "B B B B B B B"));
  CHECK(ar.normalize(nf) == nf);
  CHECK_THROWS_AS(ar.normalize(parse_rterm(ar, "B B B (B B B B) B B"), 1), StepBudgetExceeded);
}

TEST_CASE("text") {
  RTermArena ar;
  CHECK(parse_rterm(ar, "B") == ar.constant(1));
  CHECK(parse_rterm(ar, "B^0") == ar.constant(0));
  CHECK(parse_rterm(ar, "B^2 B") == ar.app(ar.constant(2), ar.constant(1)));
  CHECK(parse_rterm(ar, "B (B^3 B)") == ar.app(ar.constant(1), ar.app(ar.constant(3), ar.constant(1))));
  CHECK(ar.to_string(parse_rterm(ar, "B^2 B (B^0 B)")) == "B^2 B (B^0 B)");
  CHECK_THROWS_AS(parse_rterm(ar, "B^"), SyntaxError);
  CHECK_THROWS_AS(parse_rterm(ar, "B (B"), SyntaxError);
  CHECK_THROWS_AS(parse_rterm(ar, "x"), SyntaxError);
}

TEST_CASE("restricted rho values") {
  struct Case {
    const char* term;
    RhoResult rho;
  };
  for (const Case& c : {Case{"B", {9, 4}}, Case{"B B", {36, 20}}, Case{"B^2 B", {274, 36}}}) {
    for (Algorithm alg : {Algorithm::floyd, Algorithm::brent}) {
      RTermArena ar;
      CHECK(find_rho_restricted(ar, parse_rterm(ar, c.term), 100'000, alg) == c.rho);
    }
  }
}

TEST_CASE("quoted equalities hold syntactically") {
  RTermArena ar;
  const auto it = iterate_restricted(ar, parse_rterm(ar, "B"), 13);
  CHECK(it[8] == it[12]);
  const auto it2 = iterate_restricted(ar, parse_rterm(ar, "B^2 B"), 310);
  CHECK(it2[273] == it2[309]);
}

TEST_CASE("restricted iterates are sound for beta-eta equality") {
  for (std::uint64_t n = 0; n <= 2; ++n) {
    RTermArena ar;
    const auto x = ar.from_bterm(monomial(n));
    const auto rit = iterate_restricted(ar, x, 320);
    const auto cit = iterate(monomial(n), 320);
    for (std::size_t i = 0; i < rit.size(); ++i) {
      REQUIRE(ar.canonical(rit[i]) == cit[i]);
      for (std::size_t j = 0; j < i; ++j) {
        if (rit[i] == rit[j]) REQUIRE(cit[i] == cit[j]);
      }
    }
  }
}

TEST_CASE("B^0 has no B-term reading") {
  RTermArena ar;
  CHECK_THROWS_AS(ar.canonical(ar.constant(0)), std::invalid_argument);
  CHECK(ar.canonical(ar.constant(3)) == DegreeSeq::parse("[0,0,0]"));
  CHECK(ar.canonical(parse_rterm(ar, "B^2 B")) == canonicalize(parse_bterm("B (B B)")));
}

TEST_CASE("tree sizes share structure") {
  RTermArena ar;
  auto t = ar.constant(1);
  for (int i = 0; i < 100; ++i) t = ar.app(t, t);
  CHECK(ar.tree_size(t) == UINT64_MAX);
  CHECK(ar.tree_size(ar.app(ar.constant(1), ar.constant(2))) == 2);
}
