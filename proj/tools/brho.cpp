// brho: command-line front end.

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <csignal>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "brho/antirho.hpp"
#include "brho/canonical.hpp"
#include "brho/cycle_detect.hpp"
#include "brho/lambda.hpp"
#include "brho/restricted.hpp"

namespace {

using namespace brho;

enum Exit : int { kOk = 0, kFalse = 1, kUsage = 2, kNotFound = 3, kIo = 4, kInterrupted = 130 };

std::atomic<bool> g_stop{false};

extern "C" void on_signal(int) { g_stop.store(true); }

// Prints progress to stderr every `period` until stopped.
class Monitor {
 public:
  Monitor(const Progress& progress, std::chrono::seconds period)
      : progress_(progress), thread_([this, period] { run(period); }) {}
  ~Monitor() {
    {
      std::lock_guard lock(mu_);
      done_ = true;
    }
    cv_.notify_all();
    thread_.join();
  }

 private:
  void run(std::chrono::seconds period) {
    std::unique_lock lock(mu_);
    while (!cv_.wait_for(lock, period, [this] { return done_; })) {
      std::cerr << "progress: applications=" << progress_.applications.load() << " length=" << progress_.length.load()
                << " phase=" << progress_.phase.load() << std::endl;
    }
  }

  const Progress& progress_;
  std::mutex mu_;
  std::condition_variable cv_;
  bool done_ = false;
  std::thread thread_;
};

void print_rho(const RhoResult& r) { std::cout << "rho = (" << r.entry << ", " << r.cycle << ")\n"; }

struct RhoArgs {
  std::string term;
  std::string engine = "canonical";
  std::string algorithm = "brent";
  std::uint64_t max_steps = 10'000'000'000ULL;
  std::string checkpoint;
  std::uint64_t checkpoint_every = 10'000'000;
  bool resume = false;
};

int run_rho(const RhoArgs& a) {
  const Algorithm algorithm = parse_algorithm(a.algorithm);
  if (a.engine != "canonical" && (!a.checkpoint.empty() || a.resume)) {
    std::cerr << "error: checkpoints are only supported by the canonical engine\n";
    return kUsage;
  }
  if (a.resume && a.checkpoint.empty()) {
    std::cerr << "error: --resume needs --checkpoint\n";
    return kUsage;
  }

  if (a.engine == "lambda") {
    print_rho(rho_lambda(bterm_to_lambda(parse_bterm(a.term)), a.max_steps, kDefaultStepBudget, algorithm));
    return kOk;
  }
  if (a.engine == "restricted") {
    RTermArena arena;
    const RTermArena::Id x = parse_rterm(arena, a.term);
    print_rho(find_rho_restricted(arena, x, a.max_steps, algorithm));
    return kOk;
  }

  const BTerm x = parse_bterm(a.term);
  RhoOptions o;
  o.algorithm = algorithm;
  o.max_steps = a.max_steps;
  o.checkpoint_every = a.checkpoint_every;
  std::optional<Checkpoint> saved;
  if (!a.checkpoint.empty()) {
    o.checkpoint = a.checkpoint;
    if (a.resume) {
      saved = load_checkpoint(a.checkpoint);
      if (saved->algorithm != algorithm || saved->state.base != canonicalize(x)) {
        std::cerr << "error: checkpoint '" << a.checkpoint << "' was written for term '" << saved->term << "' with "
                  << to_string(saved->algorithm) << "\n";
        return kIo;
      }
      o.resume = &*saved;
    }
  }
  Progress progress;
  o.progress = &progress;
  o.should_stop = [](std::uint64_t) { return g_stop.load(std::memory_order_relaxed); };

  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  Monitor monitor(progress, std::chrono::seconds(10));
  print_rho(find_rho(x, o));
  return kOk;
}

int run_iterate(const std::string& term, std::uint64_t count, bool stats) {
  if (count == 0) {
    std::cerr << "error: --count must be positive\n";
    return kUsage;
  }
  Orbit orbit(canonicalize(parse_bterm(term)));
  for (std::uint64_t i = 1; i <= count; ++i) {
    if (i > 1) orbit.advance();
    std::cout << i << ' ' << orbit.current().to_string();
    if (stats) {
      const TreeStats s = tree_stats(tree_of(orbit.current()));
      std::cout << " l=" << s.l << " a=" << s.a;
    }
    std::cout << '\n';
  }
  return kOk;
}

struct AntirhoArgs {
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> n;
  std::string term;
  std::string predicate;
  std::uint64_t steps = 100;
};

int run_antirho(const AntirhoArgs& a) {
  Report report;
  if (a.term.empty()) {
    if (!a.k || !a.n || !a.predicate.empty()) {
      std::cerr << "error: give --k and --n, or a term with --predicate\n";
      return kUsage;
    }
    const TknSpec spec{*a.k, *a.n};
    if (spec.n == 0) {
      std::cerr << "error: --n must be positive\n";
      return kUsage;
    }
    std::cout << "term: " << to_string(z_term(spec), {.monomial_sugar = true}) << '\n';
    report = check_tkn(spec, a.steps);
  } else {
    const DegreeSeq x = canonicalize(parse_bterm(a.term));
    TreePredicate member;
    if (a.predicate == "example2") {
      member = in_example_T;
    } else if (a.predicate == "tkn") {
      if (!a.k || !a.n || *a.n == 0) {
        std::cerr << "error: --predicate tkn needs --k and a positive --n\n";
        return kUsage;
      }
      const TknSpec spec{*a.k, *a.n};
      member = [spec](const BinTree& t) { return in_Tkn(t, spec); };
    } else {
      std::cerr << "error: a term needs --predicate tkn or example2\n";
      return kUsage;
    }
    std::cout << "term: " << x.to_string() << '\n';
    report = check_general_condition(x, member, a.steps);
    report.append(check_monotone(x, a.steps));
    report.append(check_application_rule(x, a.steps));
    report.append(check_against_oracle(x, std::min<std::uint64_t>(6, a.steps)));
  }
  std::cout << "steps: " << a.steps << '\n' << report.to_string();
  const bool ok = report.all_hold();
  std::cout << (ok ? "result: all assertions hold\n" : "result: some assertions fail\n");
  return ok ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"B-term canonical forms, equivalence and rho-property search"};
  app.require_subcommand(1);

  std::string canon_term;
  auto* canon = app.add_subcommand("canon", "Print the canonical degree sequence of a B-term");
  canon->add_option("term", canon_term, "B-term, e.g. \"B (B B) B\" or \"B^3 B\"")->required();

  std::string eq_a, eq_b;
  auto* eq = app.add_subcommand("eq", "Decide beta-eta equality of two B-terms (exit 0 true, 1 false)");
  eq->add_option("term1", eq_a)->required();
  eq->add_option("term2", eq_b)->required();

  std::string mono_term;
  auto* is_mono = app.add_subcommand(
      "is-monomial", "Decide whether the canonical form is a single B^n B (exit 0 true, 1 false); "
                     "conjecturally the B-terms with the rho-property");
  is_mono->add_option("term", mono_term)->required();

  RhoArgs rho_args;
  auto* rho = app.add_subcommand("rho", "Find the minimal (entry, cycle) of right self-application");
  rho->add_option("term", rho_args.term, "B-term (restricted engine: B^k atoms, B = B^1)")->required();
  rho->add_option("--engine", rho_args.engine, "canonical | lambda | restricted")
      ->check(CLI::IsMember({"canonical", "lambda", "restricted"}))
      ->capture_default_str();
  rho->add_option("--algorithm", rho_args.algorithm, "brent | floyd")
      ->check(CLI::IsMember({"brent", "floyd"}))
      ->capture_default_str();
  rho->add_option("--max-steps", rho_args.max_steps, "Largest iterate index to compute")->capture_default_str();
  rho->add_option("--checkpoint", rho_args.checkpoint, "Checkpoint file (canonical engine)");
  rho->add_option("--checkpoint-interval", rho_args.checkpoint_every,
                  "Applications between checkpoints (also every 60 s)")
      ->capture_default_str();
  rho->add_flag("--resume", rho_args.resume, "Continue from the --checkpoint file");

  std::string it_term;
  std::uint64_t it_count = 10;
  bool it_stats = false;
  auto* iterate = app.add_subcommand("iterate", "Print canonical forms of X^(1)..X^(N)");
  iterate->add_option("term", it_term)->required();
  iterate->add_option("--count", it_count, "Number of iterates")->capture_default_str();
  iterate->add_flag("--stats", it_stats, "Also print l and a of each iterate");

  AntirhoArgs ar;
  auto* antirho = app.add_subcommand("antirho", "Check growth of iterates for terms without the rho-property");
  antirho->add_option("--k", ar.k, "Degree k of Z = (B^k B)^((k+2)n)");
  antirho->add_option("--n", ar.n, "Multiplier n >= 1 of Z");
  antirho->add_option("--term", ar.term, "Term to check instead of Z");
  antirho->add_option("--predicate", ar.predicate, "tkn | example2 (with --term)")
      ->check(CLI::IsMember({"tkn", "example2"}));
  antirho->add_option("--steps", ar.steps, "Iterates to examine")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*canon) {
      std::cout << canonicalize(parse_bterm(canon_term)).to_string() << '\n';
      return kOk;
    }
    if (*eq) {
      const bool same = equivalent_bterms(parse_bterm(eq_a), parse_bterm(eq_b));
      std::cout << (same ? "true" : "false") << '\n';
      return same ? kOk : kFalse;
    }
    if (*is_mono) {
      const DegreeSeq s = canonicalize(parse_bterm(mono_term));
      const bool mono = is_monomial(s);
      std::cout << (mono ? "true" : "false") << ' ' << s.to_string() << '\n';
      return mono ? kOk : kFalse;
    }
    if (*rho) return run_rho(rho_args);
    if (*iterate) return run_iterate(it_term, it_count, it_stats);
    if (*antirho) return run_antirho(ar);
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotFound& e) {
    std::cerr << e.what() << '\n';
    return kNotFound;
  } catch (const StepBudgetExceeded& e) {
    std::cerr << e.what() << '\n';
    return kNotFound;
  } catch (const CheckpointIo& e) {
    std::cerr << "checkpoint error: " << e.what() << '\n';
    return kIo;
  } catch (const Interrupted& e) {
    std::cerr << e.what() << '\n';
    return kInterrupted;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
