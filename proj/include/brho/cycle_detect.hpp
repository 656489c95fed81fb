#pragma once

// rho-property search over canonical forms, with checkpoint and resume.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "brho/bterm.hpp"
#include "brho/degree_seq.hpp"
#include "brho/rho.hpp"

namespace brho {

/// Resumable search position over canonical forms; see SearchSnapshot for
/// what slow and fast hold in each phase.
struct SearchState {
  int phase = 1;
  std::uint64_t step = 1;
  DegreeSeq slow;
  DegreeSeq fast;
  DegreeSeq base;
  std::optional<std::uint64_t> m;
  std::optional<std::uint64_t> candidate_c;
  friend bool operator==(const SearchState&, const SearchState&) = default;
};

/// Everything a checkpoint file records.
struct Checkpoint {
  std::string term;  // BTerm text
  Algorithm algorithm = Algorithm::brent;
  SearchState state;
  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

/// Writes atomically (temporary file, then rename). Throws CheckpointIo.
void save_checkpoint(const Checkpoint& c, const std::filesystem::path& path);
/// Throws CheckpointIo, or FormatVersionMismatch for an unknown header.
Checkpoint load_checkpoint(const std::filesystem::path& path);

std::string format_checkpoint(const Checkpoint& c);
/// Throws CheckpointIo on any deviation from the 10-line grammar.
Checkpoint parse_checkpoint(std::string_view text);

/// Counters a monitor thread may poll while a search runs.
struct Progress {
  std::atomic<std::uint64_t> applications{0};  // monotone
  std::atomic<std::uint64_t> length{0};        // units in the most recent iterate
  std::atomic<int> phase{1};
};

/// Thrown when should_stop asked the search to halt. A checkpoint has been
/// written first if a path was configured.
class Interrupted : public Error {
 public:
  explicit Interrupted(std::uint64_t applications)
      : Error("search interrupted after " + std::to_string(applications) + " applications"),
        applications_(applications) {}
  std::uint64_t applications() const noexcept { return applications_; }

 private:
  std::uint64_t applications_;
};

struct RhoOptions {
  Algorithm algorithm = Algorithm::brent;
  std::uint64_t max_steps = 10'000'000'000ULL;
  std::optional<std::filesystem::path> checkpoint;
  std::uint64_t checkpoint_every = 10'000'000;  // applications
  std::chrono::milliseconds checkpoint_period{60'000};
  /// Resume from this state instead of starting at x(1).
  const Checkpoint* resume = nullptr;
  Progress* progress = nullptr;
  /// Polled after every application with the running application count.
  std::function<bool(std::uint64_t)> should_stop;
};

/// Minimal (entry, cycle) of x under right self-application, computed with
/// apply_poly on canonical forms. Throws NotFound, CheckpointIo,
/// OverflowError, Interrupted, or std::invalid_argument for a resume state
/// that does not belong to x.
RhoResult find_rho(const BTerm& x, const RhoOptions& options = {});

/// Canonical forms of X^(1), X^(2), ... computed one at a time.
class Orbit {
 public:
  explicit Orbit(DegreeSeq base) : base_(base), current_(std::move(base)) {}
  const DegreeSeq& base() const noexcept { return base_; }
  const DegreeSeq& current() const noexcept { return current_; }
  std::uint64_t index() const noexcept { return index_; }
  void advance();

 private:
  DegreeSeq base_;
  DegreeSeq current_;
  std::uint64_t index_ = 1;
};

/// Canonical forms of X^(1)..X^(n). Precondition: n >= 1.
std::vector<DegreeSeq> iterate(const BTerm& x, std::uint64_t n);

/// Reference search storing every iterate; returns the first repeat.
RhoResult rho_by_history(const DegreeSeq& base, std::uint64_t max_steps);

}  // namespace brho
