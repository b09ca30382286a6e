#include "asmlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "asmlab/error.hpp"

namespace asmlab {

namespace {

bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
  if (!std::getline(in, line)) return false;
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

void split_header(const std::string& header, std::size_t lineno, FastaRecord& rec) {
  const std::size_t ws = header.find_first_of(" \t", 1);
  rec.id = header.substr(1, ws == std::string::npos ? std::string::npos : ws - 1);
  if (rec.id.empty()) throw ParseError("line " + std::to_string(lineno) + ": empty record id", lineno);
  if (ws != std::string::npos) {
    const std::size_t start = header.find_first_not_of(" \t", ws);
    if (start != std::string::npos) rec.description = header.substr(start);
  }
}

// Uppercases `line` into `seq`. Returns the offset of an invalid byte, if any.
std::optional<std::size_t> append_symbols(std::string& seq, const std::string& line) {
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(line[i])));
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (nucleotide_code(c) < 0) return i;
    seq.push_back(c);
  }
  return std::nullopt;
}

std::string describe_byte(char c) {
  if (std::isprint(static_cast<unsigned char>(c))) return std::string("'") + c + "'";
  char buf[8];
  std::snprintf(buf, sizeof buf, "0x%02X", static_cast<unsigned char>(c));
  return buf;
}

struct Pending {
  FastaRecord rec;
  std::string seq;
  std::size_t header_line = 0;
  std::optional<std::pair<std::size_t, char>> bad;  // line, byte
};

}  // namespace

std::vector<FastaRecord> read_fasta(std::istream& in, const FastaReadOptions& options, FastaReadStats* stats) {
  std::vector<FastaRecord> out;
  std::size_t dropped = 0;
  std::string line;
  std::size_t lineno = 0;

  auto finish = [&](Pending& p) {
    if (p.bad) {
      if (options.drop_ambiguous) {
        ++dropped;
        return;
      }
      throw ParseError("line " + std::to_string(p.bad->first) + ": invalid nucleotide " +
                           describe_byte(p.bad->second) + " in record " + p.rec.id,
                       p.bad->first);
    }
    if (p.seq.empty()) {
      throw ParseError("line " + std::to_string(p.header_line) + ": record " + p.rec.id + " has an empty sequence",
                       p.header_line);
    }
    p.rec.sequence = DnaString(std::move(p.seq));
    out.push_back(std::move(p.rec));
  };
  auto note_bad = [&](Pending& p, const std::string& text, std::size_t at) {
    if (!p.bad) p.bad = std::make_pair(lineno, static_cast<char>(std::toupper(static_cast<unsigned char>(text[at]))));
  };

  // Skip leading blank lines to detect the format.
  bool have = false;
  while ((have = next_line(in, line, lineno)) && blank(line)) {
  }
  if (!have) {
    if (stats) stats->dropped = 0;
    return out;
  }

  if (line[0] == '@') {
    while (have) {
      if (blank(line)) {
        have = next_line(in, line, lineno);
        continue;
      }
      if (line[0] != '@') throw ParseError("line " + std::to_string(lineno) + ": expected FASTQ header '@'", lineno);
      Pending p;
      p.header_line = lineno;
      split_header(line, lineno, p.rec);
      if (!next_line(in, line, lineno)) {
        throw ParseError("line " + std::to_string(lineno) + ": truncated FASTQ record", lineno);
      }
      if (auto at = append_symbols(p.seq, line)) note_bad(p, line, *at);
      if (!next_line(in, line, lineno) || line.empty() || line[0] != '+') {
        throw ParseError("line " + std::to_string(lineno) + ": expected FASTQ separator '+'", lineno);
      }
      if (!next_line(in, line, lineno)) {
        throw ParseError("line " + std::to_string(lineno) + ": missing FASTQ quality line", lineno);
      }
      finish(p);
      have = next_line(in, line, lineno);
    }
  } else {
    std::optional<Pending> cur;
    for (; have; have = next_line(in, line, lineno)) {
      if (blank(line)) continue;
      if (line[0] == '>') {
        if (cur) finish(*cur);
        cur.emplace();
        cur->header_line = lineno;
        split_header(line, lineno, cur->rec);
        continue;
      }
      if (line[0] == ';') continue;
      if (!cur) throw ParseError("line " + std::to_string(lineno) + ": sequence before the first '>' header", lineno);
      if (auto at = append_symbols(cur->seq, line)) note_bad(*cur, line, *at);
    }
    if (cur) finish(*cur);
  }
  if (stats) stats->dropped = dropped;
  return out;
}

std::vector<FastaRecord> read_fasta_file(const std::filesystem::path& path, const FastaReadOptions& options,
                                         FastaReadStats* stats) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return read_fasta(in, options, stats);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line());
  }
}

void write_fasta(std::ostream& out, const std::vector<FastaRecord>& records) {
  std::set<std::string_view> ids;
  for (const auto& r : records) {
    if (r.id.empty() || r.id.find_first_of(" \t\r\n") != std::string::npos) {
      throw InvalidParameter("invalid FASTA id '" + r.id + "'");
    }
    if (!ids.insert(r.id).second) throw InvalidParameter("duplicate FASTA id '" + r.id + "'");
  }
  for (const auto& r : records) {
    out << '>' << r.id;
    if (!r.description.empty()) out << ' ' << r.description;
    out << '\n';
    const std::string_view s = r.sequence.view();
    for (std::size_t i = 0; i < s.size(); i += 60) out << s.substr(i, 60) << '\n';
  }
}

void write_fasta_file(const std::filesystem::path& path, const std::vector<FastaRecord>& records) {
  std::ostringstream os;
  write_fasta(os, records);
  write_text_file(path, os.str());
}

ReadSet to_read_set(const std::vector<FastaRecord>& records) {
  std::vector<DnaString> reads;
  reads.reserve(records.size());
  for (const auto& r : records) reads.push_back(r.sequence);
  return ReadSet(std::move(reads));
}

std::vector<FastaRecord> to_records(const ReadSet& reads, const std::string& prefix) {
  std::vector<FastaRecord> out;
  out.reserve(reads.size());
  for (std::size_t i = 0; i < reads.size(); ++i) out.push_back({prefix + std::to_string(i), "", reads[i]});
  return out;
}

std::vector<FastaRecord> to_records(const ContigSet& contigs) {
  std::vector<FastaRecord> out;
  out.reserve(contigs.size());
  for (std::size_t i = 0; i < contigs.size(); ++i) {
    std::string desc = contigs[i].source;
    desc += (desc.empty() ? "" : " ") + std::string("len=") + std::to_string(contigs[i].sequence.size());
    out.push_back({"contig" + std::to_string(i), std::move(desc), contigs[i].sequence});
  }
  return out;
}

std::string format_edge_list(const DeBruijnGraph& g) {
  std::string s = "k=" + std::to_string(g.k()) + "\n";
  for (const auto& e : g.edges()) {
    s += e.str();
    s += '\n';
  }
  return s;
}

DeBruijnGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  int k = 0;
  std::vector<Kmer> edges;
  while (next_line(in, line, lineno)) {
    if (blank(line) || line[0] == '#') continue;
    if (k == 0) {
      if (line.rfind("k=", 0) != 0) {
        throw ParseError("line " + std::to_string(lineno) + ": expected header k=<int>", lineno);
      }
      const char* b = line.data() + 2;
      const char* e = line.data() + line.size();
      auto [ptr, ec] = std::from_chars(b, e, k);
      if (ec != std::errc() || ptr != e || k < 2 || k > 31) {
        throw ParseError("line " + std::to_string(lineno) + ": k must be an integer in [2, 31]", lineno);
      }
      continue;
    }
    if (line.size() != static_cast<std::size_t>(k)) {
      throw ParseError("line " + std::to_string(lineno) + ": k-mer '" + line + "' does not have length " +
                           std::to_string(k),
                       lineno);
    }
    if (auto bad = DnaString::first_invalid(line)) {
      throw ParseError("line " + std::to_string(lineno) + ": invalid nucleotide " + describe_byte(line[*bad]), lineno);
    }
    edges.push_back(Kmer::from_string(line));
  }
  if (k == 0) throw ParseError("edge list lacks the k=<int> header", lineno);
  return DeBruijnGraph::from_edges(k, std::move(edges));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out.flush()) throw Error("failed writing " + path.string());
}

}  // namespace asmlab
