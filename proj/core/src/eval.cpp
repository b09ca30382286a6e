#include "asmlab/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "asmlab/error.hpp"
#include "asmlab/kmer.hpp"

namespace asmlab {

std::size_t n50(std::vector<std::size_t> lengths) {
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  std::size_t total = 0;
  for (auto l : lengths) total += l;
  if (total == 0) return 0;
  std::size_t acc = 0;
  for (auto l : lengths) {
    acc += l;
    if (2 * acc >= total) return l;
  }
  return 0;
}

namespace {

void fill_aggregates(EvalReport& r, const ContigSet& contigs) {
  std::vector<std::size_t> lengths;
  lengths.reserve(contigs.size());
  for (const auto& c : contigs) lengths.push_back(c.sequence.size());
  r.contig_count = contigs.size();
  for (auto l : lengths) {
    r.total_length += l;
    r.max_length = std::max(r.max_length, l);
  }
  r.mean_length = contigs.empty() ? 0.0 : static_cast<double>(r.total_length) / static_cast<double>(contigs.size());
  r.n50 = n50(std::move(lengths));
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

EvalReport evaluate(const ContigSet& contigs, const DnaString& truth, int k) {
  if (truth.empty()) throw InvalidParameter("truth genome is empty");
  check_k(k);
  EvalReport r;
  r.k = k;
  r.truth_length = truth.size();
  fill_aggregates(r, contigs);

  const KmerSpectrum truth_kmers = spectrum(truth, k);
  const std::string_view t = truth.view();
  std::vector<int> delta(truth.size() + 1, 0);
  for (const auto& c : contigs) {
    ContigMetrics m;
    m.length = c.sequence.size();
    const std::string_view s = c.sequence.view();
    if (!s.empty()) {
      for (std::size_t pos = t.find(s); pos != std::string_view::npos; pos = t.find(s, pos + 1)) {
        ++m.occurrences;
        ++delta[pos];
        --delta[pos + s.size()];
      }
    }
    m.exact_substring = s.empty() || m.occurrences > 0;
    if (s.size() < static_cast<std::size_t>(k)) {
      m.kmer_precision = m.exact_substring ? 1.0 : 0.0;
    } else {
      std::size_t present = 0, total = 0;
      for_each_kmer(s, k, [&](std::size_t, Kmer x) {
        ++total;
        present += truth_kmers.contains(x);
      });
      m.kmer_precision = static_cast<double>(present) / static_cast<double>(total);
    }
    r.misassembly_count += !m.exact_substring;
    r.contigs.push_back(m);
  }
  std::size_t covered = 0;
  int depth = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    depth += delta[i];
    covered += depth > 0;
  }
  r.genome_fraction = static_cast<double>(covered) / static_cast<double>(truth.size());
  return r;
}

EvalReport evaluate_without_truth(const ContigSet& contigs) {
  EvalReport r;
  r.has_truth = false;
  fill_aggregates(r, contigs);
  for (const auto& c : contigs) r.contigs.push_back(ContigMetrics{c.sequence.size(), false, 0.0, 0});
  return r;
}

std::string format_table(const EvalReport& r) {
  std::ostringstream os;
  if (!r.has_truth) os << "# no ground truth: truth-based metrics omitted\n";
  auto row = [&](const std::string& key, const std::string& value) {
    os << key << std::string(key.size() < 24 ? 24 - key.size() : 1, ' ') << value << '\n';
  };
  row("contigs", std::to_string(r.contig_count));
  row("total_length", std::to_string(r.total_length));
  row("max_length", std::to_string(r.max_length));
  row("mean_length", fixed(r.mean_length));
  row("n50", std::to_string(r.n50));
  if (r.has_truth) {
    row("k", std::to_string(r.k));
    row("truth_length", std::to_string(r.truth_length));
    row("genome_fraction", fixed(r.genome_fraction));
    row("misassemblies", std::to_string(r.misassembly_count));
  }
  for (const auto& [key, value] : r.metadata) row(key, value);
  if (r.has_truth && !r.contigs.empty()) {
    os << "\n#\tlength\texact\tkmer_precision\toccurrences\n";
    for (std::size_t i = 0; i < r.contigs.size(); ++i) {
      const auto& c = r.contigs[i];
      os << i << '\t' << c.length << '\t' << (c.exact_substring ? "yes" : "no") << '\t' << fixed(c.kmer_precision)
         << '\t' << c.occurrences << '\n';
    }
  }
  return os.str();
}

std::string format_key_values(const EvalReport& r) {
  std::ostringstream os;
  os << "has_truth=" << (r.has_truth ? "true" : "false") << '\n';
  os << "contig_count=" << r.contig_count << '\n';
  os << "total_length=" << r.total_length << '\n';
  os << "max_length=" << r.max_length << '\n';
  os << "mean_length=" << fixed(r.mean_length) << '\n';
  os << "n50=" << r.n50 << '\n';
  if (r.has_truth) {
    os << "k=" << r.k << '\n';
    os << "truth_length=" << r.truth_length << '\n';
    os << "genome_fraction_covered=" << fixed(r.genome_fraction) << '\n';
    os << "misassembly_count=" << r.misassembly_count << '\n';
  }
  for (const auto& [key, value] : r.metadata) os << "meta." << key << '=' << value << '\n';
  return os.str();
}

std::string format_json(const EvalReport& r) {
  nlohmann::ordered_json j;
  j["has_truth"] = r.has_truth;
  j["contig_count"] = r.contig_count;
  j["total_length"] = r.total_length;
  j["max_length"] = r.max_length;
  j["mean_length"] = r.mean_length;
  j["n50"] = r.n50;
  if (r.has_truth) {
    j["k"] = r.k;
    j["truth_length"] = r.truth_length;
    j["genome_fraction_covered"] = r.genome_fraction;
    j["misassembly_count"] = r.misassembly_count;
  }
  auto contigs = nlohmann::ordered_json::array();
  for (const auto& c : r.contigs) {
    nlohmann::ordered_json cj;
    cj["length"] = c.length;
    if (r.has_truth) {
      cj["exact_substring"] = c.exact_substring;
      cj["kmer_precision"] = c.kmer_precision;
      cj["occurrences"] = c.occurrences;
    }
    contigs.push_back(std::move(cj));
  }
  j["contigs"] = std::move(contigs);
  j["metadata"] = r.metadata;
  return j.dump(2) + "\n";
}

}  // namespace asmlab
