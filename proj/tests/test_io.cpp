#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "asmlab/config.hpp"
#include "asmlab/dbg.hpp"
#include "asmlab/error.hpp"
#include "asmlab/io.hpp"
#include "support.hpp"

namespace asmlab {
namespace {

std::vector<FastaRecord> parse(const std::string& text, FastaReadOptions opts = {}, FastaReadStats* stats = nullptr) {
  std::istringstream in(text);
  return read_fasta(in, opts, stats);
}

std::string render(const std::vector<FastaRecord>& recs) {
  std::ostringstream os;
  write_fasta(os, recs);
  return os.str();
}

TEST(Fasta, FoldsLinesAndUppercases) {
  const auto r = parse(">r1 some words\nac\nGT\n\n>r2\nTTT");
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].id, "r1");
  EXPECT_EQ(r[0].description, "some words");
  EXPECT_EQ(r[0].sequence.str(), "ACGT");
  EXPECT_EQ(r[1].sequence.str(), "TTT");
}

TEST(Fasta, RejectsAmbiguousSymbolWithLine) {
  try {
    parse(">r1\nACGN\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("'N'"), std::string::npos) << e.what();
  }
  FastaReadStats stats;
  const auto kept = parse(">r1\nACGN\n>r2\nACGT\n", FastaReadOptions{true}, &stats);
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept[0].id, "r2");
  EXPECT_EQ(stats.dropped, 1u);
}

TEST(Fasta, RejectsEmptySequenceAndStrayText) {
  EXPECT_THROW(parse(">r1\n>r2\nACGT\n"), ParseError);
  EXPECT_THROW(parse("ACGT\n"), ParseError);
}

TEST(Fasta, AcceptsFastq) {
  const auto r = parse("@q1\nACGT\n+\nIIII\n@q2\nGG\n+q2\n!!\n");
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].id, "q1");
  EXPECT_EQ(r[0].sequence.str(), "ACGT");
  EXPECT_EQ(r[1].sequence.str(), "GG");
}

TEST(Fasta, WriteFormat) {
  EXPECT_EQ(render({{"r1", "", DnaString("ACGT")}}), ">r1\nACGT\n");
  EXPECT_EQ(render({{"r1", "x y", DnaString("A")}}), ">r1 x y\nA\n");
  const std::string s(61, 'C');
  EXPECT_EQ(render({{"r", "", DnaString(s)}}), ">r\n" + std::string(60, 'C') + "\nC\n");
  EXPECT_EQ(render({}), "");
  EXPECT_THROW(render({{"a", "", DnaString("A")}, {"a", "", DnaString("C")}}), InvalidParameter);
  EXPECT_THROW(render({{"a b", "", DnaString("A")}}), InvalidParameter);
  EXPECT_THROW(render({{"", "", DnaString("A")}}), InvalidParameter);
}

TEST(Fasta, RoundTripRandomRecordSets) {
  std::mt19937_64 rng(89);
  for (int t = 0; t < 100; ++t) {
    std::vector<FastaRecord> recs;
    const std::size_t n = rng() % 8;
    for (std::size_t i = 0; i < n; ++i) {
      FastaRecord r;
      r.id = "id" + std::to_string(i) + "_" + std::to_string(rng() % 1000);
      if (rng() % 2) r.description = "len=" + std::to_string(rng() % 50) + " note";
      r.sequence = DnaString(testing::random_dna(rng, 1 + rng() % 200));
      recs.push_back(r);
    }
    const auto text = render(recs);
    const auto back = parse(text);
    ASSERT_EQ(back, recs);
    ASSERT_EQ(render(back), text);
  }
}

TEST(Fasta, FileHelpers) {
  const auto dir = testing::scratch_dir("io");
  const std::vector<FastaRecord> recs = {{"a", "", DnaString("ACGT")}};
  write_fasta_file(dir / "x.fa", recs);
  EXPECT_EQ(read_fasta_file(dir / "x.fa"), recs);
  EXPECT_THROW(read_fasta_file(dir / "missing.fa"), Error);
  std::filesystem::remove_all(dir);
}

TEST(Records, ReadsAndContigs) {
  const ReadSet reads{DnaString("AC"), DnaString("GT")};
  const auto recs = to_records(reads);
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[1].id, "read1");
  EXPECT_EQ(to_read_set(recs).reads(), reads.reads());
  const ContigSet contigs = {Contig{DnaString("ACGT"), "unitig:0", {}}};
  const auto c = to_records(contigs);
  EXPECT_EQ(c[0].id, "contig0");
  EXPECT_EQ(c[0].description, "unitig:0 len=4");
}

TEST(EdgeList, RoundTrip) {
  const auto g = DeBruijnGraph::build(ReadSet{DnaString(testing::g_true)}, 3);
  const auto text = format_edge_list(g);
  EXPECT_EQ(text.rfind("k=3\nAAT\nAGC\n", 0), 0u) << text;
  std::istringstream in(text);
  const auto back = read_edge_list(in);
  EXPECT_EQ(back.edges(), g.edges());
  EXPECT_EQ(format_edge_list(back), text);
  std::istringstream bad("k=3\nACGT\n");
  EXPECT_THROW(read_edge_list(bad), ParseError);
  std::istringstream nohead("ACG\n");
  EXPECT_THROW(read_edge_list(nohead), ParseError);
}

TEST(Config, ParsesKeys) {
  const auto cfg = parse_config(
      "# demo\n"
      "read_length = 100\n"
      "num_reads = 50\n"
      "error_rate = 0.01  # comment\n"
      "gaps = 10:20,30:40\n"
      "plant_repeat = 300,2\n"
      "assembler = cpp-walk\n"
      "k = 25\n");
  EXPECT_EQ(cfg.profile.read_length, 100u);
  EXPECT_EQ(cfg.profile.num_reads, 50u);
  EXPECT_DOUBLE_EQ(cfg.profile.error_rate, 0.01);
  ASSERT_EQ(cfg.profile.gaps.size(), 2u);
  EXPECT_EQ(cfg.profile.gaps[1], (GapInterval{30, 40}));
  ASSERT_TRUE(cfg.planted);
  EXPECT_EQ(cfg.planted->length, 300u);
  EXPECT_EQ(cfg.assembler, Assembler::cpp_walk);
  EXPECT_EQ(cfg.k, 25);
}

void expect_key_error(const std::string& text, const std::string& key) {
  try {
    parse_config(text);
    FAIL() << "expected ParseError for " << text;
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(key), std::string::npos) << e.what();
  }
}

TEST(Config, Errors) {
  expect_key_error("error_rate = 1.5\n", "error_rate");
  expect_key_error("foo = 1\n", "foo");
  expect_key_error("read_length = abc\n", "read_length");
  expect_key_error("k = 40\n", "k");
  expect_key_error("seed = 1\nseed = 2\n", "seed");
  expect_key_error("num_reads = 10\ncoverage = 5\n", "coverage");
  expect_key_error("assembler = magic\n", "assembler");
  EXPECT_THROW(parse_config("no equals sign\n"), ParseError);
}

TEST(Config, CoverageDeterminesReadCount) {
  const auto cfg = parse_config("coverage = 40\nread_length = 100\n");
  EXPECT_EQ(cfg.reads_for(10000), 4000u);
  EXPECT_EQ(cfg.reads_for(10001), 4001u);
}

}  // namespace
}  // namespace asmlab
