#include "brho/cycle_detect.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "brho/canonical.hpp"
#include "brho/fast_apply.hpp"

namespace brho {

namespace {

constexpr std::string_view kHeader = "rho-checkpoint v1";
constexpr std::string_view kHeaderPrefix = "rho-checkpoint ";

std::string optional_text(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "-"; }

std::uint64_t parse_u64(std::string_view text, std::string_view field) {
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw CheckpointIo("checkpoint field '" + std::string(field) + "' is not a 64-bit count");
  }
  return v;
}

std::optional<std::uint64_t> parse_optional(std::string_view text, std::string_view field) {
  if (text == "-") return std::nullopt;
  return parse_u64(text, field);
}

std::string_view field_value(std::string_view line, std::string_view key) {
  if (line.size() < key.size() + 2 || line.substr(0, key.size()) != key || line.substr(key.size(), 2) != ": ") {
    throw CheckpointIo("checkpoint line '" + std::string(line) + "' does not start with '" + std::string(key) + ": '");
  }
  return line.substr(key.size() + 2);
}

void check_state_shape(Algorithm algorithm, const SearchState& s) {
  auto bad = [](const char* what) { throw CheckpointIo(std::string("inconsistent checkpoint: ") + what); };
  if (s.phase < 1 || s.phase > 3) bad("phase must be 1, 2 or 3");
  if (s.step == 0) bad("step must be positive");
  switch (s.phase) {
    case 1:
      if (s.m || s.candidate_c) bad("phase 1 carries no m or candidate_c");
      if (algorithm == Algorithm::brent && s.step < 2) bad("brent phase 1 needs step >= 2");
      break;
    case 2:
      if (!s.m) bad("phase 2 needs m");
      if (*s.m == 0) bad("m must be positive");
      if (algorithm == Algorithm::brent && s.candidate_c != s.m) bad("brent phase 2 needs candidate_c == m");
      break;
    default:
      if (!s.candidate_c || *s.candidate_c == 0) bad("phase 3 needs a positive candidate_c");
  }
}

}  // namespace

std::string format_checkpoint(const Checkpoint& c) {
  std::ostringstream out;
  out << kHeader << '\n'
      << "term: " << c.term << '\n'
      << "engine: canonical\n"
      << "algorithm: " << to_string(c.algorithm) << '\n'
      << "phase: " << c.state.phase << '\n'
      << "step: " << c.state.step << '\n'
      << "m: " << optional_text(c.state.m) << '\n'
      << "candidate_c: " << optional_text(c.state.candidate_c) << '\n'
      << "slow: " << c.state.slow.to_rle() << '\n'
      << "fast: " << c.state.fast.to_rle() << '\n';
  return out.str();
}

Checkpoint parse_checkpoint(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    if (nl == std::string_view::npos) throw CheckpointIo("checkpoint is truncated (missing final newline)");
    lines.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  if (lines.empty()) throw CheckpointIo("checkpoint is empty");
  if (lines[0] != kHeader) {
    if (lines[0].substr(0, kHeaderPrefix.size()) == kHeaderPrefix) {
      throw FormatVersionMismatch("unsupported checkpoint version '" + std::string(lines[0]) + "'");
    }
    throw CheckpointIo("not a checkpoint file");
  }
  if (lines.size() != 10) {
    throw CheckpointIo("checkpoint has " + std::to_string(lines.size()) + " lines, expected 10");
  }

  try {
    Checkpoint c;
    c.term = std::string(field_value(lines[1], "term"));
    if (field_value(lines[2], "engine") != "canonical") throw CheckpointIo("checkpoint engine must be canonical");
    try {
      c.algorithm = parse_algorithm(field_value(lines[3], "algorithm"));
    } catch (const std::invalid_argument& e) {
      throw CheckpointIo(e.what());
    }
    std::uint64_t phase = parse_u64(field_value(lines[4], "phase"), "phase");
    if (phase < 1 || phase > 3) throw CheckpointIo("checkpoint phase must be 1, 2 or 3");
    c.state.phase = static_cast<int>(phase);
    c.state.step = parse_u64(field_value(lines[5], "step"), "step");
    c.state.m = parse_optional(field_value(lines[6], "m"), "m");
    c.state.candidate_c = parse_optional(field_value(lines[7], "candidate_c"), "candidate_c");
    c.state.slow = DegreeSeq::parse_rle(field_value(lines[8], "slow"));
    c.state.fast = DegreeSeq::parse_rle(field_value(lines[9], "fast"));
    c.state.base = canonicalize(parse_bterm(c.term));
    check_state_shape(c.algorithm, c.state);
    return c;
  } catch (const CheckpointIo&) {
    throw;
  } catch (const std::exception& e) {
    throw CheckpointIo(std::string("malformed checkpoint: ") + e.what());
  }
}

void save_checkpoint(const Checkpoint& c, const std::filesystem::path& path) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CheckpointIo("cannot open '" + tmp.string() + "' for writing");
    out << format_checkpoint(c);
    out.flush();
    if (!out) throw CheckpointIo("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw CheckpointIo("cannot move checkpoint into '" + path.string() + "': " + ec.message());
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointIo("cannot open checkpoint '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw CheckpointIo("failed reading '" + path.string() + "'");
  return parse_checkpoint(buf.str());
}

RhoResult find_rho(const BTerm& x, const RhoOptions& o) {
  using Clock = std::chrono::steady_clock;
  const DegreeSeq base = canonicalize(x);
  const std::string term_text = to_string(x, {.monomial_sugar = true});

  std::optional<SearchSnapshot<DegreeSeq>> resume;
  if (o.resume) {
    if (o.resume->algorithm != o.algorithm) {
      throw std::invalid_argument("checkpoint was written by the " + std::string(to_string(o.resume->algorithm)) +
                                  " search");
    }
    if (o.resume->state.base != base) throw std::invalid_argument("checkpoint belongs to a different term");
    check_state_shape(o.resume->algorithm, o.resume->state);
    const SearchState& s = o.resume->state;
    resume = SearchSnapshot<DegreeSeq>{s.phase, s.step, s.slow, s.fast, s.m, s.candidate_c};
  }

  std::uint64_t applications = 0;
  auto next = [&](const DegreeSeq& s) {
    DegreeSeq r = apply_poly(s, base);
    ++applications;
    return r;
  };

  std::uint64_t last_save_at = 0;
  Clock::time_point last_save_time = Clock::now();
  auto save = [&](const SearchView<DegreeSeq>& v) {
    save_checkpoint(Checkpoint{term_text, o.algorithm, SearchState{v.phase, v.step, v.slow, v.fast, base, v.m, v.candidate_c}},
                    *o.checkpoint);
    last_save_at = applications;
    last_save_time = Clock::now();
  };

  std::uint64_t observed = 0;
  auto observe = [&](const SearchView<DegreeSeq>& v) {
    if (o.progress) {
      o.progress->applications.store(applications, std::memory_order_relaxed);
      o.progress->length.store(v.fast.length(), std::memory_order_relaxed);
      o.progress->phase.store(v.phase, std::memory_order_relaxed);
    }
    if (o.should_stop && o.should_stop(applications)) {
      if (o.checkpoint) save(v);
      throw Interrupted(applications);
    }
    if (!o.checkpoint) return;
    if (v.phase == 3 || applications - last_save_at >= o.checkpoint_every) {
      save(v);
    } else if ((++observed & 4095) == 0 && Clock::now() - last_save_time >= o.checkpoint_period) {
      save(v);
    }
  };

  return find_cycle(base, next, o.algorithm, o.max_steps, resume ? &*resume : nullptr, observe);
}

void Orbit::advance() {
  current_ = apply_poly(current_, base_);
  index_ = checked_add(index_, 1);
}

std::vector<DegreeSeq> iterate(const BTerm& x, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("iterate needs a positive count");
  std::vector<DegreeSeq> out;
  Orbit orbit(canonicalize(x));
  out.push_back(orbit.current());
  while (out.size() < n) {
    orbit.advance();
    out.push_back(orbit.current());
  }
  return out;
}

RhoResult rho_by_history(const DegreeSeq& base, std::uint64_t max_steps) {
  std::unordered_map<DegreeSeq, std::uint64_t> seen;
  Orbit orbit(base);
  for (;;) {
    auto [it, fresh] = seen.emplace(orbit.current(), orbit.index());
    if (!fresh) return {it->second, orbit.index() - it->second};
    if (orbit.index() >= max_steps) throw NotFound(max_steps);
    orbit.advance();
  }
}

}  // namespace brho
