#include "brho/fast_apply.hpp"

#include <stdexcept>
#include <vector>

namespace brho {

namespace {

// Inserts `count` units of `degree` at the right end of the decreasing runs.
void insert_block(std::vector<Run>& runs, Degree degree, std::uint64_t count) {
  std::size_t i = runs.size();
  while (i > 0 && runs[i - 1].degree < degree) {
    degree = checked_add(degree, runs[i - 1].count);
    --i;
  }
  if (i > 0 && runs[i - 1].degree == degree) {
    runs[i - 1].count = checked_add(runs[i - 1].count, count);
  } else {
    runs.insert(runs.begin() + static_cast<std::ptrdiff_t>(i), Run{degree, count});
  }
}

void compose_into(std::vector<Run>& runs, const std::vector<Run>& tail, Degree bump) {
  for (const Run& r : tail) insert_block(runs, checked_add(r.degree, bump), r.count);
}

}  // namespace

DegreeSeq raise(const DegreeSeq& s) {
  std::vector<Run> runs = s.runs();
  for (Run& r : runs) r.degree = checked_add(r.degree, 1);
  return DegreeSeq::from_valid_runs(std::move(runs));
}

DegreeSeq lower(const DegreeSeq& s) {
  if (s.min_degree() == 0) throw std::invalid_argument("cannot lower a degree-0 unit");
  std::vector<Run> runs = s.runs();
  for (Run& r : runs) --r.degree;
  return DegreeSeq::from_valid_runs(std::move(runs));
}

DegreeSeq compose_decreasing(const DegreeSeq& s1, const DegreeSeq& s2) {
  std::vector<Run> runs = s1.runs();
  compose_into(runs, s2.runs(), 0);
  return DegreeSeq::from_valid_runs(std::move(runs));
}

DegreeSeq strip_and_lower(const DegreeSeq& s) {
  std::vector<Run> runs = s.runs();
  if (runs.back().degree == 0) runs.pop_back();
  if (runs.empty()) throw AllZero();
  for (Run& r : runs) --r.degree;
  return DegreeSeq::from_valid_runs(std::move(runs));
}

DegreeSeq apply_poly(const DegreeSeq& s1, const DegreeSeq& s2) {
  std::vector<Run> runs;
  runs.reserve(s1.runs().size() + s2.runs().size());
  runs = s1.runs();
  compose_into(runs, s2.runs(), 1);
  // raise(s2) has no zero degree, so something positive survives the strip.
  if (runs.back().degree == 0) runs.pop_back();
  for (Run& r : runs) --r.degree;
  return DegreeSeq::from_valid_runs(std::move(runs));
}

}  // namespace brho
