#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brho/errors.hpp"

namespace brho {

using Degree = std::uint64_t;

/// `count` consecutive units of the same degree.
struct Run {
  Degree degree;
  std::uint64_t count;
  friend bool operator==(const Run&, const Run&) = default;
};

/// Degrees n1 >= n2 >= ... >= nk (k >= 1) of the decreasing polynomial
/// (B^n1 B) o (B^n2 B) o ... o (B^nk B), stored run-length encoded with
/// strictly decreasing run degrees and positive counts.
class DegreeSeq {
 public:
  /// [0], the canonical form of B.
  DegreeSeq() : runs_{Run{0, 1}} {}

  /// Throws std::invalid_argument unless `degrees` is non-empty and weakly decreasing.
  static DegreeSeq from_degrees(std::span<const Degree> degrees);
  static DegreeSeq from_degrees(std::initializer_list<Degree> degrees) {
    return from_degrees(std::span<const Degree>(degrees.begin(), degrees.size()));
  }
  /// Throws std::invalid_argument unless the runs satisfy the class invariant.
  static DegreeSeq from_runs(std::vector<Run> runs);
  /// For producers that maintain the invariant themselves; checked only in debug builds.
  static DegreeSeq from_valid_runs(std::vector<Run> runs);

  const std::vector<Run>& runs() const noexcept { return runs_; }
  std::vector<Degree> expanded() const;
  /// Number of units (sum of run counts).
  std::uint64_t length() const;
  Degree max_degree() const noexcept { return runs_.front().degree; }
  Degree min_degree() const noexcept { return runs_.back().degree; }

  /// `[5,2,2,2,0]`
  std::string to_string() const;
  /// `5*1,2*3,0*1`
  std::string to_rle() const;
  /// Inverse of to_string. Throws SyntaxError, or std::invalid_argument for a non-decreasing list.
  static DegreeSeq parse(std::string_view text);
  /// Inverse of to_rle. Throws SyntaxError or std::invalid_argument.
  static DegreeSeq parse_rle(std::string_view text);

  friend bool operator==(const DegreeSeq&, const DegreeSeq&) = default;

 private:
  explicit DegreeSeq(std::vector<Run> runs) : runs_(std::move(runs)) {}
  std::vector<Run> runs_;
};

bool runs_are_valid(std::span<const Run> runs) noexcept;

std::size_t hash_value(const DegreeSeq& s) noexcept;

/// Overflow-checked helpers; throw OverflowError.
Degree checked_add(Degree a, Degree b);

}  // namespace brho

template <>
struct std::hash<brho::DegreeSeq> {
  std::size_t operator()(const brho::DegreeSeq& s) const noexcept { return brho::hash_value(s); }
};
