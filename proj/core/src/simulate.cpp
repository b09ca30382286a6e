#include "asmlab/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "asmlab/error.hpp"
#include "asmlab/kmer.hpp"
#include "asmlab/rng.hpp"

namespace asmlab {

void SimulationProfile::validate() const {
  if (read_length < 1) throw InvalidParameter("read_length must be >= 1");
  if (!(error_rate >= 0.0 && error_rate < 1.0)) {
    throw InvalidParameter("error_rate must be in [0, 1), got " + std::to_string(error_rate));
  }
  std::vector<GapInterval> sorted = gaps;
  std::sort(sorted.begin(), sorted.end(),
            [](const GapInterval& a, const GapInterval& b) { return a.start < b.start; });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& g = sorted[i];
    if (g.start >= g.end) throw InvalidParameter("gap interval must satisfy start < end");
    if (g.end > genome_length) {
      throw InvalidParameter("gap interval [" + std::to_string(g.start) + "," + std::to_string(g.end) +
                             ") lies outside the genome");
    }
    if (i > 0 && sorted[i - 1].end > g.start) throw InvalidParameter("gap intervals overlap");
  }
}

DnaString random_genome(std::size_t length, std::optional<PlantedRepeat> planted, std::uint64_t seed) {
  if (planted) {
    if (planted->length == 0 || planted->copies == 0) {
      throw InvalidParameter("planted repeat needs a positive length and copy count");
    }
    if (planted->length > length / planted->copies) {
      throw InvalidParameter("cannot plant " + std::to_string(planted->copies) + " copies of length " +
                             std::to_string(planted->length) + " in a genome of length " +
                             std::to_string(length));
    }
  }
  Rng rng(seed);
  Rng bases = rng.split(0);
  std::string g(length, 'A');
  for (auto& c : g) c = nucleotide_symbol(static_cast<int>(bases.below(4)));

  if (planted && planted->copies > 1) {
    Rng place = rng.split(1);
    const std::size_t len = planted->length;
    const std::size_t copies = planted->copies;
    // Non-overlapping slots: sort `copies` draws from [0, slack] (with
    // replacement) and shift the i-th by i * len.
    const std::size_t slack = length - len * copies;
    std::vector<std::size_t> offs(copies);
    for (auto& o : offs) o = place.below(slack + 1);
    std::sort(offs.begin(), offs.end());
    const std::size_t source = place.below(copies);
    const std::size_t src_pos = offs[source] + source * len;
    const std::string unit = g.substr(src_pos, len);
    for (std::size_t i = 0; i < copies; ++i) {
      g.replace(offs[i] + i * len, len, unit);
    }
  }
  return DnaString(std::move(g));
}

ReadSet idealized_reads(const DnaString& genome, std::size_t read_length) {
  if (read_length == 0) throw InvalidParameter("read length must be >= 1");
  if (genome.size() < read_length) {
    throw InvalidParameter("genome of length " + std::to_string(genome.size()) +
                           " is shorter than read length " + std::to_string(read_length));
  }
  std::vector<DnaString> reads;
  reads.reserve(genome.size() - read_length + 1);
  for (std::size_t i = 0; i + read_length <= genome.size(); ++i) {
    reads.push_back(genome.substr(i, read_length));
  }
  return ReadSet(std::move(reads), read_length);
}

SimulatedReads simulate_uniform(const DnaString& genome, const SimulationProfile& profile) {
  SimulationProfile checked = profile;
  checked.genome_length = genome.size();
  checked.validate();
  const std::size_t len = profile.read_length;
  if (genome.size() < len) {
    throw InvalidParameter("genome of length " + std::to_string(genome.size()) +
                           " is shorter than read length " + std::to_string(len));
  }

  std::vector<std::size_t> allowed;
  allowed.reserve(genome.size() - len + 1);
  for (std::size_t s = 0; s + len <= genome.size(); ++s) {
    const bool clear = std::none_of(profile.gaps.begin(), profile.gaps.end(), [&](const GapInterval& g) {
      return s < g.end && g.start < s + len;
    });
    if (clear) allowed.push_back(s);
  }
  if (allowed.empty()) throw InvalidParameter("no read start position avoids the coverage gaps");

  Rng rng(profile.seed);
  SimulatedReads out;
  std::vector<DnaString> reads;
  reads.reserve(profile.num_reads);
  out.starts.reserve(profile.num_reads);
  out.substitutions.reserve(profile.num_reads);
  for (std::size_t i = 0; i < profile.num_reads; ++i) {
    const std::size_t start = allowed[rng.below(allowed.size())];
    std::string read(genome.view().substr(start, len));
    std::size_t subs = 0;
    if (profile.error_rate > 0.0) {
      for (auto& c : read) {
        if (rng.bernoulli(profile.error_rate)) {
          const int shift = 1 + static_cast<int>(rng.below(3));
          c = nucleotide_symbol(nucleotide_code(c) + shift);
          ++subs;
        }
      }
    }
    reads.emplace_back(std::move(read));
    out.starts.push_back(start);
    out.substitutions.push_back(subs);
  }
  out.reads = ReadSet(std::move(reads), len);
  return out;
}

CoverageEstimate unspanned_probability(const CoverageQuery& q, const CoverageMode& mode) {
  if (q.k == 0) throw InvalidParameter("k must be >= 1");
  if (q.read_length == 0) throw InvalidParameter("read length must be >= 1");
  if (q.k > q.read_length) throw InvalidParameter("k must not exceed the read length");
  if (q.genome_length < q.read_length) throw InvalidParameter("genome is shorter than a read");

  const double L = static_cast<double>(q.genome_length);
  const double l = static_cast<double>(q.read_length);
  const double k = static_cast<double>(q.k);
  const double m = static_cast<double>(q.num_reads);

  if (std::holds_alternative<AnalyticMode>(mode)) {
    const double per_read = (l - k + 1.0) / (L - l + 1.0);
    const double miss = std::max(0.0, 1.0 - per_read);
    const double p = (L - k + 1.0) * std::pow(miss, m);
    return CoverageEstimate{std::clamp(p, 0.0, 1.0), 0.0, 0};
  }

  const auto& mc = std::get<MonteCarloMode>(mode);
  if (mc.trials == 0) throw InvalidParameter("Monte Carlo needs at least one trial");
  const std::size_t positions = q.genome_length - q.read_length + 1;
  const std::size_t reach = q.read_length - q.k;  // a start s spans windows [s, s + reach]
  const std::size_t lo = reach;                   // interior windows: [l-k, L-l]
  const std::size_t hi = positions - 1;
  if (lo > hi) return CoverageEstimate{0.0, 0.0, mc.trials};

  Rng rng(mc.seed);
  std::vector<char> present(positions);
  std::size_t failures = 0;
  for (std::size_t t = 0; t < mc.trials; ++t) {
    std::fill(present.begin(), present.end(), 0);
    for (std::size_t r = 0; r < q.num_reads; ++r) present[rng.below(positions)] = 1;
    bool have = false;
    std::size_t last = 0;
    bool failed = false;
    for (std::size_t i = 0; i <= hi && !failed; ++i) {
      if (present[i]) {
        have = true;
        last = i;
      }
      if (i >= lo && (!have || last + reach < i)) failed = true;
    }
    if (failed) ++failures;
  }
  const double n = static_cast<double>(mc.trials);
  const double p = static_cast<double>(failures) / n;
  // Agresti-Coull adjusted proportion, so zero failures still has a nonzero error
  const double adj = (static_cast<double>(failures) + 2.0) / (n + 4.0);
  return CoverageEstimate{p, std::sqrt(adj * (1.0 - adj) / n), mc.trials};
}

CorrectionResult correct_reads_detailed(const ReadSet& reads, int k, std::uint64_t min_multiplicity) {
  check_k(k);
  const KmerSpectrum spec = spectrum_of_set(reads, k);
  std::unordered_map<std::uint64_t, std::uint64_t> counts;
  counts.reserve(spec.distinct() * 2);
  for (const auto& [x, n] : spec) counts.emplace(x.packed(), n);
  auto mult = [&](std::uint64_t packed) -> std::uint64_t {
    auto it = counts.find(packed);
    return it == counts.end() ? 0 : it->second;
  };

  const std::size_t uk = static_cast<std::size_t>(k);
  const std::uint64_t kmask = Kmer::mask(k);
  CorrectionResult result;
  std::vector<DnaString> kept;

  for (std::size_t ri = 0; ri < reads.size(); ++ri) {
    std::string read = reads[ri].str();
    if (read.size() < uk) {
      kept.push_back(reads[ri]);
      result.source_index.push_back(ri);
      continue;
    }
    const std::size_t nk = read.size() - uk + 1;
    std::vector<std::uint64_t> codes(read.size());
    for (std::size_t i = 0; i < read.size(); ++i) codes[i] = static_cast<std::uint64_t>(nucleotide_code(read[i]));
    auto kmer_at = [&](std::size_t j) {
      std::uint64_t p = 0;
      for (std::size_t i = j; i < j + uk; ++i) p = (p << 2) | codes[i];
      return p & kmask;
    };
    std::vector<std::uint64_t> m(nk);
    for (std::size_t j = 0; j < nk; ++j) m[j] = mult(kmer_at(j));

    std::size_t fixes = 0;
    for (std::size_t p = 0; p < read.size(); ++p) {
      const std::size_t jlo = p + 1 >= uk ? p + 1 - uk : 0;
      const std::size_t jhi = std::min(p, nk - 1);
      std::uint64_t current = ~std::uint64_t{0};
      for (std::size_t j = jlo; j <= jhi; ++j) current = std::min(current, m[j]);
      if (current >= min_multiplicity) continue;

      const std::uint64_t original = codes[p];
      std::uint64_t best_code = original, best = current;
      for (std::uint64_t c = 0; c < 4; ++c) {
        if (c == original) continue;
        codes[p] = c;
        std::uint64_t worst = ~std::uint64_t{0};
        for (std::size_t j = jlo; j <= jhi; ++j) worst = std::min(worst, mult(kmer_at(j)));
        if (worst > best) {
          best = worst;
          best_code = c;
        }
      }
      codes[p] = best_code;
      if (best_code != original) {
        read[p] = nucleotide_symbol(static_cast<int>(best_code));
        for (std::size_t j = jlo; j <= jhi; ++j) m[j] = mult(kmer_at(j));
        ++fixes;
      }
    }

    const bool weak = std::any_of(m.begin(), m.end(), [&](std::uint64_t v) { return v < min_multiplicity; });
    if (weak) {
      ++result.stats.discarded_reads;
      continue;
    }
    if (fixes > 0) {
      ++result.stats.corrected_reads;
      result.stats.corrected_bases += fixes;
    }
    kept.emplace_back(std::move(read));
    result.source_index.push_back(ri);
  }
  result.reads = ReadSet(std::move(kept), reads.declared_read_length());
  return result;
}

}  // namespace asmlab
