#include "asmlab/stage.hpp"

#include "asmlab/covering.hpp"
#include "asmlab/dot.hpp"
#include "asmlab/error.hpp"
#include "asmlab/io.hpp"
#include "asmlab/rng.hpp"
#include "asmlab/unitig.hpp"

namespace asmlab {

AssemblyOutput assemble(const ReadSet& reads, int k, Assembler assembler, unsigned threads) {
  AssemblyOutput out;
  if (assembler == Assembler::scs_greedy || assembler == Assembler::scs_exact) {
    if (reads.empty()) return out;
    out.scs = assembler == Assembler::scs_greedy ? greedy_scs(reads) : exact_scs(reads);
    out.contigs.push_back(Contig{out.scs->superstring, to_string(out.scs->method), {}});
    return out;
  }
  const DeBruijnGraph g = DeBruijnGraph::build(reads, k, &out.diagnostics, threads);
  if (assembler == Assembler::unitig) {
    out.contigs = unitig_contigs(g);
  } else {
    const auto comps = edge_components(g.graph());
    for (std::size_t c = 0; c < comps.size(); ++c) {
      const DeBruijnGraph sub = g.subgraph(comps[c]);
      Walk w;
      try {
        w = shortest_edge_covering_walk(sub);
      } catch (const NoCoveringWalk& e) {
        throw NoCoveringWalk("component " + std::to_string(c) + " (" + std::to_string(comps[c].size()) +
                             " edges): " + e.what());
      }
      std::vector<VertexId> path;
      for (VertexId v : vertex_path(sub.graph(), w)) path.push_back(*g.find_vertex(sub.vertex(v)));
      out.contigs.push_back(Contig{spell(sub, w), "walk:component" + std::to_string(c), std::move(path)});
    }
  }
  out.graph = g;
  return out;
}

namespace {

DnaString first_record(const std::string& path, const char* what) {
  auto recs = read_fasta_file(path);
  if (recs.empty()) throw InvalidParameter(std::string(what) + " file " + path + " holds no record");
  return recs.front().sequence;
}

}  // namespace

StageResult run_stage(int stage, const RunConfig& cfg) {
  if (stage < 1 || stage > 3) throw InvalidParameter("stage must be 1, 2 or 3, got " + std::to_string(stage));
  StageResult res;
  std::map<std::string, std::string> meta;
  meta["stage"] = std::to_string(stage);
  meta["assembler"] = to_string(cfg.assembler);
  meta["k"] = std::to_string(cfg.k);

  if (stage == 3) {
    if (cfg.reads_fasta.empty()) throw InvalidParameter("stage 3 needs reads_fasta");
    FastaReadOptions opts;
    opts.drop_ambiguous = cfg.drop_ambiguous;
    FastaReadStats stats;
    res.reads = to_read_set(read_fasta_file(cfg.reads_fasta, opts, &stats));
    meta["dropped_ambiguous_reads"] = std::to_string(stats.dropped);
    if (!cfg.truth_fasta.empty()) res.truth = first_record(cfg.truth_fasta, "truth");
  } else {
    const std::uint64_t seed = cfg.profile.seed;
    meta["seed"] = std::to_string(seed);
    meta["rng"] = std::string(Rng::kAlgorithm);
    meta["read_length"] = std::to_string(cfg.profile.read_length);
    if (!cfg.genome_fasta.empty()) {
      res.truth = first_record(cfg.genome_fasta, "genome");
    } else {
      res.truth = random_genome(cfg.profile.genome_length, cfg.planted, seed);
    }
    meta["genome_length"] = std::to_string(res.truth->size());
    if (stage == 1) {
      res.reads = idealized_reads(*res.truth, cfg.profile.read_length);
    } else {
      SimulationProfile p = cfg.profile;
      p.genome_length = res.truth->size();
      p.num_reads = cfg.reads_for(res.truth->size());
      p.seed = Rng::splitmix(seed ^ 0x5EEDF00DULL);
      res.reads = uniform_reads(*res.truth, p);
      meta["error_rate"] = std::to_string(p.error_rate);
      meta["sampled_reads"] = std::to_string(p.num_reads);
      if (cfg.correct_min_multiplicity > 0) {
        auto corrected = correct_reads_detailed(res.reads, cfg.k, cfg.correct_min_multiplicity);
        res.correction = corrected.stats;
        res.reads = std::move(corrected.reads);
        meta["correct_min_multiplicity"] = std::to_string(cfg.correct_min_multiplicity);
        meta["corrected_bases"] = std::to_string(res.correction.corrected_bases);
        meta["corrected_reads"] = std::to_string(res.correction.corrected_reads);
        meta["discarded_reads"] = std::to_string(res.correction.discarded_reads);
      }
    }
  }
  meta["num_reads"] = std::to_string(res.reads.size());

  AssemblyOutput asmout = assemble(res.reads, cfg.k, cfg.assembler, cfg.threads);
  res.contigs = std::move(asmout.contigs);
  if (res.truth) {
    res.report = evaluate(res.contigs, *res.truth, cfg.k);
  } else {
    res.report = evaluate_without_truth(res.contigs);
    res.report.k = cfg.k;
  }
  res.report.metadata = std::move(meta);

  if (!cfg.artifact_dir.empty()) {
    const std::filesystem::path dir(cfg.artifact_dir);
    std::filesystem::create_directories(dir);
    auto put = [&](const char* name, const std::string& text) {
      write_text_file(dir / name, text);
      res.artifacts.push_back(dir / name);
    };
    if (res.truth) {
      write_fasta_file(dir / "genome.fa", {FastaRecord{"genome", "", *res.truth}});
      res.artifacts.push_back(dir / "genome.fa");
    }
    write_fasta_file(dir / "reads.fa", to_records(res.reads));
    res.artifacts.push_back(dir / "reads.fa");
    write_fasta_file(dir / "contigs.fa", to_records(res.contigs));
    res.artifacts.push_back(dir / "contigs.fa");
    if (asmout.graph) {
      put("graph.dot", cfg.assembler == Assembler::unitig
                           ? export_dot(*asmout.graph, maximal_unitigs(asmout.graph->graph()))
                           : export_dot(*asmout.graph));
    }
    put("report.txt", format_table(res.report));
    put("report.kv", format_key_values(res.report));
    put("report.json", format_json(res.report));
  }
  return res;
}

}  // namespace asmlab
