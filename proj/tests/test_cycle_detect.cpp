#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include <unistd.h>

#include "brho/canonical.hpp"
#include "brho/cycle_detect.hpp"
#include "brho/lambda.hpp"

using namespace brho;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("brho_test_" + std::to_string(::getpid()) + "_" + name);
}

std::string read_all(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_all(const std::filesystem::path& p, const std::string& s) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << s;
}

RhoResult rho_of(const char* text, Algorithm alg) {
  RhoOptions o;
  o.algorithm = alg;
  return find_rho(parse_bterm(text), o);
}

Checkpoint sample_checkpoint() {
  Checkpoint c;
  c.term = "B^2 B";
  c.algorithm = Algorithm::floyd;
  c.state = SearchState{2, 17, DegreeSeq::parse("[5,2,2,2,0]"), DegreeSeq::parse("[3,3,1]"), DegreeSeq::parse("[2]"),
                        36, std::nullopt};
  return c;
}

}  // namespace

TEST_CASE("rho of the first monomials") {
  for (Algorithm alg : {Algorithm::floyd, Algorithm::brent}) {
    CHECK(rho_of("B", alg) == RhoResult{6, 4});
    CHECK(rho_of("B B", alg) == RhoResult{32, 20});
    CHECK(rho_of("B^2 B", alg) == RhoResult{258, 36});
    CHECK(rho_of("B^3 B", alg) == RhoResult{4240, 5796});
  }
}

TEST_CASE("the constant-memory search agrees with a full history table") {
  for (std::uint64_t n = 0; n <= 3; ++n) {
    const DegreeSeq base = canonicalize(monomial(n));
    RhoOptions o;
    CHECK(find_rho(monomial(n), o) == rho_by_history(base, 100'000));
  }
  CHECK_THROWS_AS(rho_by_history(canonicalize(monomial(3)), 100), NotFound);
}

TEST_CASE("rho over canonical forms agrees with the lambda oracle") {
  for (const char* text : {"B", "B B", "B (B B)"}) {
    const BTerm e = parse_bterm(text);
    CHECK(find_rho(e) == rho_lambda(bterm_to_lambda(e), 10'000));
  }
  for (const char* text : {"B (B B) B", "B B (B B)", "B B B"}) {
    const BTerm e = parse_bterm(text);
    RhoOptions o;
    o.max_steps = 300;
    CHECK_THROWS_AS(find_rho(e, o), NotFound);
    CHECK_THROWS_AS(rho_lambda(bterm_to_lambda(e), 300), NotFound);
  }
}

TEST_CASE("iterates") {
  const std::vector<DegreeSeq> it = iterate(parse_bterm("B"), 10);
  REQUIRE(it.size() == 10);
  CHECK(it[0] == DegreeSeq::parse("[0]"));
  CHECK(it[5] == it[9]);
  CHECK(tree_of(it[5]) == parse_tree("<<x,<x,x>>,<x,x>>"));
  const std::vector<DegreeSeq> bb = iterate(parse_bterm("B B"), 52);
  CHECK(bb[51] == bb[31]);
  CHECK(iterate(parse_bterm("B (B B) B"), 1)[0] == canonicalize(parse_bterm("B (B B) B")));
  CHECK_THROWS_AS(iterate(parse_bterm("B"), 0), std::invalid_argument);
  CHECK(iterate(monomial(2), 300) == iterate(monomial(2), 300));
}

TEST_CASE("no cycle within the horizon") {
  RhoOptions o;
  o.max_steps = 100;
  CHECK_THROWS_AS(find_rho(monomial(2), o), NotFound);
  o.max_steps = 12;
  o.algorithm = Algorithm::floyd;
  CHECK_THROWS_AS(find_rho(BTerm::b(), o), NotFound);
}

TEST_CASE("checkpoint text") {
  const Checkpoint c = sample_checkpoint();
  const std::string text = format_checkpoint(c);
  CHECK(text ==
        "rho-checkpoint v1\n"
        "term: B^2 B\n"
        "engine: canonical\n"
        "algorithm: floyd\n"
        "phase: 2\n"
        "step: 17\n"
        "m: 36\n"
        "candidate_c: -\n"
        "slow: 5*1,2*3,0*1\n"
        "fast: 3*2,1*1\n");
  CHECK(parse_checkpoint(text) == c);
}

TEST_CASE("checkpoint files round-trip") {
  const auto path = temp_file("roundtrip");
  save_checkpoint(sample_checkpoint(), path);
  CHECK(load_checkpoint(path) == sample_checkpoint());
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_checkpoint(path), CheckpointIo);
  CHECK_THROWS_AS(save_checkpoint(sample_checkpoint(), "/nonexistent-dir/x/ckpt"), CheckpointIo);
}

TEST_CASE("every truncation of a checkpoint is rejected") {
  const std::string text = format_checkpoint(sample_checkpoint());
  for (std::size_t n = 0; n < text.size(); ++n) {
    REQUIRE_THROWS_AS(parse_checkpoint(text.substr(0, n)), CheckpointIo);
  }
}

TEST_CASE("malformed checkpoints") {
  const std::string good = format_checkpoint(sample_checkpoint());
  auto with = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  CHECK_THROWS_AS(parse_checkpoint(with("v1", "v2")), FormatVersionMismatch);
  CHECK_THROWS_AS(parse_checkpoint(with("rho-checkpoint v1", "hello")), CheckpointIo);
  CHECK_THROWS_AS(parse_checkpoint(with("engine: canonical", "engine: lambda")), CheckpointIo);
  CHECK_THROWS_AS(parse_checkpoint(with("floyd", "gosper")), CheckpointIo);
  CHECK_THROWS_AS(parse_checkpoint(with("phase: 2", "phase: 4")), CheckpointIo);
  CHECK_THROWS_AS(parse_checkpoint(with("step: 17", "step: -1")), CheckpointIo);
  CHECK_THROWS_AS(parse_checkpoint(with("step: 17", "step: 0")), CheckpointIo);
  CHECK_THROWS_AS(parse_checkpoint(with("m: 36", "m: -")), CheckpointIo);
  CHECK_THROWS_AS(parse_checkpoint(with("slow: 5*1,2*3,0*1", "slow: 1*1,2*1")), CheckpointIo);
  CHECK_THROWS_AS(parse_checkpoint(with("term: B^2 B", "term: B (")), CheckpointIo);
  CHECK_THROWS_AS(parse_checkpoint(with("m: 36", "m:36")), CheckpointIo);
  CHECK_THROWS_AS(parse_checkpoint(good + "extra\n"), CheckpointIo);
  CHECK_THROWS_AS(parse_checkpoint(with("phase: 2\nstep: 17\nm: 36", "phase: 1\nstep: 17\nm: 36")), CheckpointIo);
}

TEST_CASE("interrupting and resuming from the checkpoint file") {
  const auto path = temp_file("resume");
  std::mt19937_64 rng(21);
  for (Algorithm alg : {Algorithm::floyd, Algorithm::brent}) {
    RhoOptions plain;
    plain.algorithm = alg;
    const RhoResult full = find_rho(monomial(2), plain);
    for (int trial = 0; trial < 20; ++trial) {
      const std::uint64_t stop_at = 1 + rng() % 1000;
      RhoOptions o;
      o.algorithm = alg;
      o.checkpoint = path;
      o.should_stop = [&](std::uint64_t applications) { return applications >= stop_at; };
      try {
        find_rho(monomial(2), o);
        continue;  // finished before the stop point
      } catch (const Interrupted&) {
      }
      const Checkpoint saved = load_checkpoint(path);
      RhoOptions r;
      r.algorithm = alg;
      r.resume = &saved;
      CHECK(find_rho(monomial(2), r) == full);
    }
  }
  std::filesystem::remove(path);
}

TEST_CASE("periodic checkpoints and progress counters") {
  const auto path = temp_file("periodic");
  Progress progress;
  RhoOptions o;
  o.checkpoint = path;
  o.checkpoint_every = 50;
  o.progress = &progress;
  std::uint64_t last = 0;
  bool monotone = true;
  std::size_t snapshots = 0;
  std::optional<Checkpoint> first;
  o.should_stop = [&](std::uint64_t applications) {
    monotone = monotone && applications >= last;
    last = applications;
    if (!first && std::filesystem::exists(path)) first = load_checkpoint(path);
    ++snapshots;
    return false;
  };
  CHECK(find_rho(monomial(2), o) == RhoResult{258, 36});
  CHECK(monotone);
  CHECK(snapshots > 0);
  CHECK(progress.applications.load() == last);
  CHECK(progress.phase.load() == 3);
  REQUIRE(first);
  CHECK(first->state.phase == 1);
  const Checkpoint final_state = load_checkpoint(path);
  CHECK(final_state.state.phase == 3);
  RhoOptions r;
  r.resume = &final_state;
  CHECK(find_rho(monomial(2), r) == RhoResult{258, 36});
  std::filesystem::remove(path);
}

TEST_CASE("a checkpoint from another term or algorithm is refused") {
  Checkpoint c = sample_checkpoint();
  RhoOptions o;
  o.algorithm = Algorithm::floyd;
  o.resume = &c;
  CHECK_THROWS_AS(find_rho(monomial(3), o), std::invalid_argument);
  o.algorithm = Algorithm::brent;
  CHECK_THROWS_AS(find_rho(monomial(2), o), std::invalid_argument);
}

TEST_CASE("checkpoint files on disk") {
  const std::filesystem::path p = temp_file("disk.ckpt");
  RhoOptions o;
  o.checkpoint = p;
  REQUIRE(find_rho(monomial(2), o) == RhoResult{258, 36});
  const std::string text = read_all(p);
  const Checkpoint c = load_checkpoint(p);
  CHECK(format_checkpoint(c) == text);
  CHECK(c.state.phase == 3);
  CHECK_FALSE(std::filesystem::exists(p.string() + ".tmp"));

  write_all(p, text.substr(0, text.size() / 2));
  CHECK_THROWS_AS(load_checkpoint(p), CheckpointIo);
  write_all(p, "rho-checkpoint 99\n" + text.substr(text.find('\n') + 1));
  CHECK_THROWS_AS(load_checkpoint(p), FormatVersionMismatch);
  std::filesystem::remove(p);
  CHECK_THROWS_AS(load_checkpoint(p), CheckpointIo);
}

TEST_CASE("an interrupt while re-walking from the base leaves a resumable checkpoint") {
  // Brent on B^3 B re-walks 5796 applications after the cycle is found.
  const BTerm x = monomial(3);
  const std::filesystem::path p = temp_file("rewalk.ckpt");
  std::uint64_t phase1_end = 0;
  {
    RhoOptions probe;
    Progress progress;
    probe.progress = &progress;
    probe.should_stop = [&](std::uint64_t applications) {
      if (phase1_end == 0 && progress.phase.load() == 2) phase1_end = applications;
      return false;
    };
    REQUIRE(find_rho(x, probe) == RhoResult{4240, 5796});
  }
  REQUIRE(phase1_end > 5796);
  RhoOptions o;
  o.checkpoint = p;
  const std::uint64_t stop_at = phase1_end - 1000;
  o.should_stop = [&](std::uint64_t applications) { return applications >= stop_at; };
  CHECK_THROWS_AS(find_rho(x, o), Interrupted);
  const Checkpoint c = load_checkpoint(p);
  CHECK(c.state.phase == 1);
  CHECK(c.state.slow == c.state.fast);
  RhoOptions resumed;
  resumed.resume = &c;
  CHECK(find_rho(x, resumed) == RhoResult{4240, 5796});
  std::filesystem::remove(p);
}
