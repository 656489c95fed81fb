#include "brho/degree_seq.hpp"

#include <cassert>
#include <cctype>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace brho {

Degree checked_add(Degree a, Degree b) {
  Degree r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit degree overflow");
  return r;
}

bool runs_are_valid(std::span<const Run> runs) noexcept {
  if (runs.empty()) return false;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].count == 0) return false;
    if (i > 0 && runs[i - 1].degree <= runs[i].degree) return false;
  }
  return true;
}

DegreeSeq DegreeSeq::from_degrees(std::span<const Degree> degrees) {
  if (degrees.empty()) throw std::invalid_argument("degree sequence must be non-empty");
  std::vector<Run> runs;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i > 0 && degrees[i] > degrees[i - 1]) throw std::invalid_argument("degree sequence must be weakly decreasing");
    if (!runs.empty() && runs.back().degree == degrees[i]) {
      ++runs.back().count;
    } else {
      runs.push_back({degrees[i], 1});
    }
  }
  return DegreeSeq(std::move(runs));
}

DegreeSeq DegreeSeq::from_runs(std::vector<Run> runs) {
  if (!runs_are_valid(runs)) {
    throw std::invalid_argument("runs must be non-empty, strictly decreasing in degree, with positive counts");
  }
  return DegreeSeq(std::move(runs));
}

DegreeSeq DegreeSeq::from_valid_runs(std::vector<Run> runs) {
  assert(runs_are_valid(runs));
  return DegreeSeq(std::move(runs));
}

std::vector<Degree> DegreeSeq::expanded() const {
  std::vector<Degree> out;
  for (const Run& r : runs_) out.insert(out.end(), r.count, r.degree);
  return out;
}

std::uint64_t DegreeSeq::length() const {
  std::uint64_t n = 0;
  for (const Run& r : runs_) n = checked_add(n, r.count);
  return n;
}

std::string DegreeSeq::to_string() const {
  std::string out = "[";
  bool first = true;
  for (const Run& r : runs_) {
    const std::string d = std::to_string(r.degree);
    for (std::uint64_t i = 0; i < r.count; ++i) {
      if (!first) out += ',';
      out += d;
      first = false;
    }
  }
  out += ']';
  return out;
}

std::string DegreeSeq::to_rle() const {
  std::string out;
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(runs_[i].degree) + '*' + std::to_string(runs_[i].count);
  }
  return out;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  void expect(char c) {
    skip_space();
    if (pos >= text.size() || text[pos] != c) throw SyntaxError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  bool peek(char c) {
    skip_space();
    return pos < text.size() && text[pos] == c;
  }
  std::uint64_t number() {
    skip_space();
    std::uint64_t value = 0;
    const char* begin = text.data() + pos;
    const auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), value);
    if (ec == std::errc::result_out_of_range) throw SyntaxError("number out of range", pos);
    if (ec != std::errc() || ptr == begin) throw SyntaxError("expected a number", pos);
    pos += static_cast<std::size_t>(ptr - begin);
    return value;
  }
  void finish() {
    skip_space();
    if (pos != text.size()) throw SyntaxError("trailing characters", pos);
  }
};

}  // namespace

DegreeSeq DegreeSeq::parse(std::string_view text) {
  Cursor c{text};
  c.expect('[');
  std::vector<Degree> degrees;
  degrees.push_back(c.number());
  while (c.peek(',')) {
    c.expect(',');
    degrees.push_back(c.number());
  }
  c.expect(']');
  c.finish();
  return from_degrees(degrees);
}

DegreeSeq DegreeSeq::parse_rle(std::string_view text) {
  Cursor c{text};
  std::vector<Run> runs;
  do {
    if (!runs.empty()) c.expect(',');
    const Degree d = c.number();
    c.expect('*');
    const std::uint64_t n = c.number();
    runs.push_back({d, n});
  } while (c.peek(','));
  c.finish();
  return from_runs(std::move(runs));
}

std::size_t hash_value(const DegreeSeq& s) noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const Run& r : s.runs()) {
    h = (h ^ std::hash<std::uint64_t>{}(r.degree)) * 0x100000001b3ULL;
    h = (h ^ std::hash<std::uint64_t>{}(r.count)) * 0x100000001b3ULL;
  }
  return h;
}

}  // namespace brho
