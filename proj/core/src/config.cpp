#include "asmlab/config.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "asmlab/error.hpp"
#include "asmlab/io.hpp"

namespace asmlab {

Assembler parse_assembler(const std::string& name) {
  if (name == "unitig") return Assembler::unitig;
  if (name == "cpp-walk") return Assembler::cpp_walk;
  if (name == "scs-greedy") return Assembler::scs_greedy;
  if (name == "scs-exact") return Assembler::scs_exact;
  throw InvalidParameter("unknown assembler '" + name + "' (expected unitig, cpp-walk, scs-greedy or scs-exact)");
}

std::string to_string(Assembler a) {
  switch (a) {
    case Assembler::unitig: return "unitig";
    case Assembler::cpp_walk: return "cpp-walk";
    case Assembler::scs_greedy: return "scs-greedy";
    case Assembler::scs_exact: return "scs-exact";
  }
  return "?";
}

std::size_t RunConfig::reads_for(std::size_t genome_length) const {
  if (!coverage) return profile.num_reads;
  return static_cast<std::size_t>(
      std::ceil(*coverage * static_cast<double>(genome_length) / static_cast<double>(profile.read_length)));
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

class Line {
 public:
  Line(std::string key, std::string value, std::size_t line) : key_(std::move(key)), value_(std::move(value)), line_(line) {}

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("line " + std::to_string(line_) + ": " + key_ + ": " + why, line_);
  }

  template <typename T>
  T integer(T lo, T hi) const {
    T v{};
    const char* b = value_.data();
    const char* e = b + value_.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec == std::errc::result_out_of_range) fail("value '" + value_ + "' is out of range");
    if (ec != std::errc() || p != e) fail("expected an integer, got '" + value_ + "'");
    if (v < lo || v > hi) fail("value " + value_ + " is out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
  }

  double real() const {
    double v = 0;
    const char* b = value_.data();
    const char* e = b + value_.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e || !std::isfinite(v)) fail("expected a number, got '" + value_ + "'");
    return v;
  }

  bool boolean() const {
    if (value_ == "true" || value_ == "1" || value_ == "yes") return true;
    if (value_ == "false" || value_ == "0" || value_ == "no") return false;
    fail("expected true or false, got '" + value_ + "'");
  }

  const std::string& text() const { return value_; }
  const std::string& key() const { return key_; }

 private:
  std::string key_, value_;
  std::size_t line_;
};

std::pair<std::size_t, std::size_t> parse_pair(const Line& l, const std::string& part, char sep) {
  const auto pos = part.find(sep);
  if (pos == std::string::npos) l.fail("expected A" + std::string(1, sep) + "B, got '" + part + "'");
  const Line a(l.key(), trim(part.substr(0, pos)), 0), b(l.key(), trim(part.substr(pos + 1)), 0);
  try {
    return {a.integer<std::size_t>(0, SIZE_MAX), b.integer<std::size_t>(0, SIZE_MAX)};
  } catch (const ParseError&) {
    l.fail("expected two integers separated by '" + std::string(1, sep) + "', got '" + part + "'");
  }
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  std::set<std::string> seen;
  bool have_num_reads = false;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ParseError("line " + std::to_string(lineno) + ": expected 'key = value'", lineno);
    }
    const Line l(trim(body.substr(0, eq)), trim(body.substr(eq + 1)), lineno);
    const std::string& key = l.key();
    if (!seen.insert(key).second) l.fail("key given twice");

    if (key == "genome_length") {
      cfg.profile.genome_length = l.integer<std::size_t>(1, SIZE_MAX);
    } else if (key == "num_reads") {
      if (cfg.coverage) l.fail("conflicts with coverage");
      cfg.profile.num_reads = l.integer<std::size_t>(0, SIZE_MAX);
      have_num_reads = true;
    } else if (key == "coverage") {
      if (have_num_reads) l.fail("conflicts with num_reads");
      const double c = l.real();
      if (!(c > 0)) l.fail("must be positive");
      cfg.coverage = c;
    } else if (key == "read_length") {
      cfg.profile.read_length = l.integer<std::size_t>(1, SIZE_MAX);
    } else if (key == "error_rate") {
      const double p = l.real();
      if (!(p >= 0.0 && p < 1.0)) l.fail("value " + l.text() + " is out of range [0, 1)");
      cfg.profile.error_rate = p;
    } else if (key == "gaps") {
      std::istringstream parts(l.text());
      std::string part;
      while (std::getline(parts, part, ',')) {
        part = trim(part);
        if (part.empty()) continue;
        const auto [s, e] = parse_pair(l, part, ':');
        if (s >= e) l.fail("gap " + part + " must satisfy start < end");
        cfg.profile.gaps.push_back({s, e});
      }
    } else if (key == "seed") {
      cfg.profile.seed = l.integer<std::uint64_t>(0, UINT64_MAX);
    } else if (key == "k") {
      cfg.k = l.integer<int>(2, 31);
    } else if (key == "assembler") {
      try {
        cfg.assembler = parse_assembler(l.text());
      } catch (const InvalidParameter& e) {
        l.fail(e.what());
      }
    } else if (key == "correct_min_multiplicity") {
      cfg.correct_min_multiplicity = l.integer<std::uint64_t>(0, UINT64_MAX);
    } else if (key == "plant_repeat") {
      const auto [len, copies] = parse_pair(l, l.text(), ',');
      if (len == 0 || copies == 0) l.fail("length and copies must be positive");
      cfg.planted = PlantedRepeat{len, copies};
    } else if (key == "genome_fasta") {
      cfg.genome_fasta = l.text();
    } else if (key == "reads_fasta") {
      cfg.reads_fasta = l.text();
    } else if (key == "truth_fasta") {
      cfg.truth_fasta = l.text();
    } else if (key == "artifact_dir") {
      cfg.artifact_dir = l.text();
    } else if (key == "drop_ambiguous") {
      cfg.drop_ambiguous = l.boolean();
    } else if (key == "threads") {
      cfg.threads = l.integer<unsigned>(1, 1024);
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'", lineno);
    }
  }
  return cfg;
}

RunConfig read_config_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_config(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line());
  }
}

}  // namespace asmlab
