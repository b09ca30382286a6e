#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "asmlab/error.hpp"
#include "asmlab/kmer.hpp"
#include "asmlab/rng.hpp"
#include "asmlab/simulate.hpp"
#include "asmlab/strings.hpp"
#include "support.hpp"

namespace asmlab {
namespace {

TEST(RandomGenome, DeterministicAndPlanted) {
  const auto a = random_genome(19, std::nullopt, 7);
  EXPECT_EQ(a.size(), 19u);
  EXPECT_EQ(a, random_genome(19, std::nullopt, 7));
  EXPECT_NE(a, random_genome(19, std::nullopt, 8));

  const auto p = random_genome(1000, PlantedRepeat{50, 2}, 1);
  const auto r = longest_repeat(p);
  ASSERT_TRUE(r);
  EXPECT_GE(r->length, 50u);

  EXPECT_THROW(random_genome(10, PlantedRepeat{6, 2}, 1), InvalidParameter);
}

TEST(RandomGenome, PlantedCopiesAreNotOverlapping) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = random_genome(60, PlantedRepeat{15, 3}, seed);
    const auto s = g.str();
    std::size_t best_count = 0;
    for (std::size_t i = 0; i + 15 <= s.size(); ++i) {
      std::size_t count = 0, last_end = 0;
      for (std::size_t j = 0; j + 15 <= s.size(); ++j) {
        if (s.compare(j, 15, s, i, 15) == 0 && (count == 0 || j >= last_end)) ++count, last_end = j + 15;
      }
      best_count = std::max(best_count, count);
    }
    EXPECT_GE(best_count, 3u) << "seed " << seed;
  }
}

TEST(IdealizedReads, EveryWindow) {
  const auto reads = idealized_reads(DnaString(testing::g_true), 3);
  ASSERT_EQ(reads.size(), 17u);
  const auto want = testing::windows(testing::g_true, 3);
  for (std::size_t i = 0; i < reads.size(); ++i) EXPECT_EQ(reads[i].str(), want[i]);
  EXPECT_TRUE(spectrum_of_set(reads, 3).set_equals(spectrum(DnaString(testing::g_true), 3)));
  EXPECT_TRUE(is_common_superstring(DnaString(testing::g_true), reads));

  const auto one = idealized_reads(DnaString("ACGT"), 4);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].str(), "ACGT");
  EXPECT_THROW(idealized_reads(DnaString("ACGT"), 5), InvalidParameter);
}

TEST(UniformReads, ExactWindowsWithoutErrors) {
  const auto g = random_genome(2000, std::nullopt, 3);
  SimulationProfile p;
  p.num_reads = 500;
  p.read_length = 40;
  p.seed = 9;
  const auto sim = simulate_uniform(g, p);
  ASSERT_EQ(sim.reads.size(), 500u);
  for (std::size_t i = 0; i < sim.reads.size(); ++i) {
    EXPECT_EQ(sim.reads[i], g.substr(sim.starts[i], 40));
    EXPECT_EQ(sim.substitutions[i], 0u);
  }
  for (int k : {5, 17, 31}) EXPECT_TRUE(spectrum_of_set(sim.reads, k).set_subset_of(spectrum(g, k)));
}

TEST(UniformReads, GapsAreAvoided) {
  const auto g = random_genome(1000, std::nullopt, 4);
  SimulationProfile p;
  p.genome_length = 1000;
  p.num_reads = 2000;
  p.read_length = 30;
  p.gaps = {{100, 200}};
  const auto sim = simulate_uniform(g, p);
  for (auto st : sim.starts) EXPECT_TRUE(st + 30 <= 100 || st >= 200) << st;

  p.gaps = {{0, 1000}};
  EXPECT_THROW(simulate_uniform(g, p), InvalidParameter);
}

TEST(UniformReads, ErrorRateWithinThreeSigma) {
  const auto g = random_genome(5000, std::nullopt, 5);
  SimulationProfile p;
  p.num_reads = 1000;
  p.read_length = 100;
  p.error_rate = 0.01;
  p.seed = 12345;
  const auto sim = simulate_uniform(g, p);
  std::size_t mismatches = 0, total = 0;
  for (std::size_t i = 0; i < sim.reads.size(); ++i) {
    const auto truth = g.substr(sim.starts[i], 100);
    std::size_t m = 0;
    for (std::size_t j = 0; j < 100; ++j) m += truth[j] != sim.reads[i][j];
    EXPECT_EQ(m, sim.substitutions[i]);
    mismatches += m;
    total += 100;
  }
  const double frac = static_cast<double>(mismatches) / total;
  const double sigma = std::sqrt(0.01 * 0.99 / total);
  EXPECT_NEAR(frac, 0.01, 3 * sigma);
}

TEST(UniformReads, Deterministic) {
  const auto g = random_genome(3000, std::nullopt, 6);
  SimulationProfile p;
  p.num_reads = 300;
  p.read_length = 50;
  p.error_rate = 0.02;
  p.seed = 77;
  EXPECT_EQ(uniform_reads(g, p).reads(), uniform_reads(g, p).reads());
  p.seed = 78;
  const auto other = uniform_reads(g, p);
  p.seed = 77;
  EXPECT_NE(uniform_reads(g, p).reads(), other.reads());
}

TEST(SimulationProfile, Validation) {
  SimulationProfile p;
  p.read_length = 0;
  EXPECT_THROW(p.validate(), InvalidParameter);
  p.read_length = 10;
  p.error_rate = 1.0;
  EXPECT_THROW(p.validate(), InvalidParameter);
  p.error_rate = 0.1;
  p.genome_length = 100;
  p.gaps = {{10, 20}, {15, 30}};
  EXPECT_THROW(p.validate(), InvalidParameter);
  p.gaps = {{90, 120}};
  EXPECT_THROW(p.validate(), InvalidParameter);
  p.gaps = {{10, 20}, {30, 40}};
  EXPECT_NO_THROW(p.validate());
}

TEST(Coverage, AnalyticEdgeCases) {
  EXPECT_DOUBLE_EQ(unspanned_probability({100, 0, 10, 5}, AnalyticMode{}).probability, 1.0);
  EXPECT_LT(unspanned_probability({1000, 5000, 100, 31}, AnalyticMode{}).probability, 1e-12);
  EXPECT_THROW(unspanned_probability({100, 10, 10, 11}, AnalyticMode{}), InvalidParameter);
  EXPECT_THROW(unspanned_probability({5, 10, 10, 3}, AnalyticMode{}), InvalidParameter);
}

TEST(Coverage, IdealizedTilingLeavesNothingUnspanned) {
  const DnaString g = random_genome(300, std::nullopt, 2);
  const auto reads = idealized_reads(g, 20);
  for (std::size_t k : {1u, 7u, 20u}) {
    for (auto& w : testing::windows(g.str(), k)) {
      bool spanned = false;
      for (const auto& r : reads) spanned |= r.contains(w);
      ASSERT_TRUE(spanned);
    }
  }
}

TEST(Coverage, AnalyticWithinThreeStandardErrorsOfSimulation) {
  const CoverageQuery q{5000, 1000, 200, 31};
  const auto an = unspanned_probability(q, AnalyticMode{});
  const auto mc = unspanned_probability(q, MonteCarloMode{10000, 99});
  EXPECT_EQ(mc.trials, 10000u);
  EXPECT_GT(mc.standard_error, 0.0);
  EXPECT_LE(std::abs(an.probability - mc.probability), 3 * mc.standard_error)
      << an.probability << " vs " << mc.probability << " +- " << mc.standard_error;
}

TEST(Correction, IdentityOnCleanReads) {
  const auto g = random_genome(500, std::nullopt, 8);
  const auto reads = idealized_reads(g, 40);
  const auto out = correct_reads(reads, 15, 1);
  EXPECT_EQ(out.reads(), reads.reads());
}

TEST(Correction, RestoresSingleSubstitution) {
  const auto g = random_genome(400, std::nullopt, 10);
  std::vector<DnaString> v;
  for (int c = 0; c < 50; ++c) {
    for (std::size_t i = 0; i + 60 <= g.size(); i += 20) v.push_back(g.substr(i, 60));
  }
  auto original = g.substr(100, 60).str();
  auto broken = original;
  broken[30] = broken[30] == 'A' ? 'C' : 'A';
  v.emplace_back(broken);
  const auto res = correct_reads_detailed(ReadSet(v), 15, 3);
  ASSERT_EQ(res.reads.size(), v.size());
  EXPECT_EQ(res.reads[v.size() - 1].str(), original);
  EXPECT_EQ(res.stats.corrected_bases, 1u);
  EXPECT_EQ(res.stats.corrected_reads, 1u);
}

TEST(Correction, DiscardsGarbage) {
  const auto g = random_genome(400, std::nullopt, 12);
  std::vector<DnaString> v;
  for (int c = 0; c < 20; ++c) {
    for (std::size_t i = 0; i + 60 <= g.size(); i += 10) v.push_back(g.substr(i, 60));
  }
  std::mt19937_64 rng(1);
  v.emplace_back(testing::random_dna(rng, 60));
  const auto res = correct_reads_detailed(ReadSet(v), 15, 3);
  EXPECT_EQ(res.reads.size(), v.size() - 1);
  EXPECT_EQ(res.stats.discarded_reads, 1u);
  const auto sp = spectrum_of_set(ReadSet(v), 15);
  for (const auto& r : res.reads) {
    for (const auto& x : kmers_of(r.view(), 15)) EXPECT_GE(sp.multiplicity(x), 3u);
  }
}

TEST(Rng, SplitStreamsDiffer) {
  Rng a(1);
  auto b = a.split(1);
  auto c = a.split(2);
  EXPECT_NE(b.next(), c.next());
  Rng d(42), e(42);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(d.next(), e.next());
  for (int i = 0; i < 1000; ++i) EXPECT_LT(d.below(7), 7u);
}

}  // namespace
}  // namespace asmlab
