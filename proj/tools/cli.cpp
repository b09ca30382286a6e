#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "asmlab/config.hpp"
#include "asmlab/covering.hpp"
#include "asmlab/dbg.hpp"
#include "asmlab/dot.hpp"
#include "asmlab/error.hpp"
#include "asmlab/eval.hpp"
#include "asmlab/io.hpp"
#include "asmlab/rng.hpp"
#include "asmlab/safety.hpp"
#include "asmlab/scs.hpp"
#include "asmlab/simulate.hpp"
#include "asmlab/stage.hpp"
#include "asmlab/unitig.hpp"

namespace asmlab::cli {

namespace {

constexpr const char* kArtifactEnv = "ASMLAB_ARTIFACT_DIR";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 1;
  bool seed_given = false;
  unsigned threads = 1;
  bool threads_given = false;
  bool verbose = false;
};

// Reads derive their stream from the run seed; the genome uses the seed itself.
std::uint64_t read_seed(std::uint64_t seed) { return Rng::splitmix(seed ^ 0x5EEDF00DULL); }

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

std::string fasta_text(const std::vector<FastaRecord>& records) {
  std::ostringstream os;
  write_fasta(os, records);
  return os.str();
}

ReadSet load_reads(const std::string& path, bool drop_ambiguous, std::ostream& err, bool verbose) {
  FastaReadOptions opts;
  opts.drop_ambiguous = drop_ambiguous;
  FastaReadStats stats;
  auto recs = read_fasta_file(path, opts, &stats);
  if (stats.dropped > 0) err << "dropped " << stats.dropped << " reads with ambiguous symbols\n";
  if (verbose) err << "read " << recs.size() << " records from " << path << '\n';
  return to_read_set(recs);
}

DnaString load_genome(const std::string& path) {
  auto recs = read_fasta_file(path);
  if (recs.empty()) throw InvalidParameter("genome file " + path + " holds no record");
  return recs.front().sequence;
}

void report_diagnostics(const BuildDiagnostics& d, const ReadSet& reads, std::ostream& err) {
  if (!d.rejected_reads.empty()) {
    err << "warning: skipped " << d.rejected_reads.size() << " reads shorter than k-1:";
    for (std::size_t i = 0; i < d.rejected_reads.size() && i < 20; ++i) {
      err << ' ' << d.rejected_reads[i] << '(' << reads[d.rejected_reads[i]].size() << "nt)";
    }
    if (d.rejected_reads.size() > 20) err << " ...";
    err << '\n';
  }
  if (!d.isolated_vertices.empty()) {
    err << "note: " << d.isolated_vertices.size() << " isolated vertices are excluded from walks\n";
  }
}

struct GraphSource {
  std::string graph_path;
  std::string reads_path;
  int k = 0;

  void attach(CLI::App* app) {
    app->add_option("--graph", graph_path, "Edge-list file (k=<int> header, one k-mer per line)");
    app->add_option("--reads", reads_path, "Reads FASTA/FASTQ to build the graph from");
    app->add_option("-k", k, "Graph order when building from reads")->check(CLI::Range(2, 31));
  }

  DeBruijnGraph load(std::ostream& err, bool verbose, unsigned threads) const {
    if (graph_path.empty() == reads_path.empty()) throw UsageError("give exactly one of --graph or --reads");
    if (!graph_path.empty()) {
      std::ifstream in(graph_path);
      if (!in) throw Error("cannot open " + graph_path);
      return read_edge_list(in);
    }
    if (k == 0) throw UsageError("--reads needs -k");
    const ReadSet reads = load_reads(reads_path, false, err, verbose);
    BuildDiagnostics diag;
    auto g = DeBruijnGraph::build(reads, k, &diag, threads);
    report_diagnostics(diag, reads, err);
    return g;
  }
};

// ---- simulate ---------------------------------------------------------------

struct SimulateArgs {
  std::string genome, reads_out, genome_out, plant;
  std::size_t random_length = 0, num = 0, len = 0;
  double error_rate = 0.0;
  std::vector<std::string> gaps;
  bool idealized = false;
};

int do_simulate(const SimulateArgs& a, const CLI::App& sub, const Globals& g, std::ostream& out,
                std::ostream& err) {
  const bool from_file = sub.count("--genome") > 0;
  const bool random = sub.count("--random-length") > 0;
  if (from_file == random) throw UsageError("give exactly one of --genome or --random-length");
  if (!a.plant.empty() && !random) throw UsageError("--plant-repeat needs --random-length");
  if (!a.idealized && sub.count("--num") == 0) throw UsageError("--num is required unless --idealized");

  std::optional<PlantedRepeat> planted;
  if (!a.plant.empty()) {
    const auto comma = a.plant.find(',');
    if (comma == std::string::npos) throw UsageError("--plant-repeat expects LEN,COPIES");
    try {
      planted = PlantedRepeat{std::stoul(a.plant.substr(0, comma)), std::stoul(a.plant.substr(comma + 1))};
    } catch (const std::logic_error&) {
      throw UsageError("--plant-repeat expects LEN,COPIES");
    }
  }
  const DnaString genome = from_file ? load_genome(a.genome) : random_genome(a.random_length, planted, g.seed);
  if (!a.genome_out.empty()) write_fasta_file(a.genome_out, {FastaRecord{"genome", "", genome}});

  std::vector<FastaRecord> recs;
  if (a.idealized) {
    const ReadSet reads = idealized_reads(genome, a.len);
    for (std::size_t i = 0; i < reads.size(); ++i) {
      recs.push_back({"read" + std::to_string(i), "start=" + std::to_string(i), reads[i]});
    }
  } else {
    SimulationProfile p;
    p.genome_length = genome.size();
    p.num_reads = a.num;
    p.read_length = a.len;
    p.error_rate = a.error_rate;
    p.seed = read_seed(g.seed);
    for (const auto& gap : a.gaps) {
      const auto colon = gap.find(':');
      if (colon == std::string::npos) throw UsageError("--gap expects START:END, got " + gap);
      try {
        p.gaps.push_back({std::stoul(gap.substr(0, colon)), std::stoul(gap.substr(colon + 1))});
      } catch (const std::logic_error&) {
        throw UsageError("--gap expects START:END, got " + gap);
      }
    }
    const auto sim = simulate_uniform(genome, p);
    for (std::size_t i = 0; i < sim.reads.size(); ++i) {
      recs.push_back({"read" + std::to_string(i),
                      "start=" + std::to_string(sim.starts[i]) + " subs=" + std::to_string(sim.substitutions[i]),
                      sim.reads[i]});
    }
  }
  write_fasta_file(a.reads_out, recs);
  out << "wrote " << recs.size() << " reads of length " << a.len << " to " << a.reads_out << '\n';
  if (g.verbose) err << "rng=" << Rng::kAlgorithm << " seed=" << g.seed << " genome_length=" << genome.size() << '\n';
  return kOk;
}

// ---- scs --------------------------------------------------------------------

struct ScsArgs {
  std::string reads, out;
  bool greedy = false, exact = false;
  std::size_t read_len = 0;
  std::size_t max_reads = 12;
};

int do_scs(const ScsArgs& a, const CLI::App& sub, const Globals& g, std::ostream& out, std::ostream& err) {
  if (a.greedy == a.exact) throw UsageError("give exactly one of --greedy or --exact");
  const ReadSet reads = load_reads(a.reads, false, err, g.verbose);
  if (reads.empty()) throw InvalidParameter("no reads in " + a.reads);
  const ScsResult r = a.exact ? exact_scs(reads, ExactScsOptions{a.max_reads}) : greedy_scs(reads);
  const std::string fasta = fasta_text({FastaRecord{
      "superstring", "method=" + to_string(r.method) + " length=" + std::to_string(r.superstring.size()),
      r.superstring}});
  emit(a.out, fasta, out);
  if (!a.out.empty() && a.out != "-") write_text_file(a.out + ".trace", format_trace(r));
  if (g.verbose) err << format_trace(r);
  if (sub.count("--read-len")) {
    const auto d = diagnose_overcollapse(r, a.read_len);
    out << "longest repeat " << d.repeat_length << (d.exceeds_bound ? " > " : " <= ") << d.bound << '\n';
    if (d.contradicts_optimality) {
      err << "error: exact superstring repeats more than 2l-2 symbols; the solver is wrong\n";
      return kDomainError;
    }
  }
  return kOk;
}

// ---- assemble ---------------------------------------------------------------

struct AssembleArgs {
  std::string reads, out, dot, method;
  int k = 0;
  std::uint64_t correct = 0;
  bool drop_ambiguous = false;
};

int do_assemble(const AssembleArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  Assembler method;
  if (a.method == "unitig") {
    method = Assembler::unitig;
  } else if (a.method == "cpp-walk") {
    method = Assembler::cpp_walk;
  } else {
    throw UsageError("--method must be unitig or cpp-walk");
  }
  ReadSet reads = load_reads(a.reads, a.drop_ambiguous, err, g.verbose);
  if (a.correct > 0) {
    auto c = correct_reads_detailed(reads, a.k, a.correct);
    err << "corrected " << c.stats.corrected_bases << " bases in " << c.stats.corrected_reads << " reads, discarded "
        << c.stats.discarded_reads << " reads\n";
    reads = std::move(c.reads);
  }
  const AssemblyOutput res = assemble(reads, a.k, method, g.threads);
  report_diagnostics(res.diagnostics, reads, err);
  emit(a.out, fasta_text(to_records(res.contigs)), out);
  if (!a.dot.empty() && res.graph) {
    if (method == Assembler::unitig) {
      write_text_file(a.dot, export_dot(*res.graph, maximal_unitigs(res.graph->graph())));
    } else {
      Walk all;
      for (const auto& c : res.contigs) {
        const Walk w = walk_of_path(res.graph->graph(), c.path);
        all.insert(all.end(), w.begin(), w.end());
      }
      write_text_file(a.dot, export_dot(*res.graph, all));
    }
  }
  if (g.verbose) err << "contigs=" << res.contigs.size() << '\n';
  return kOk;
}

// ---- eval -------------------------------------------------------------------

struct EvalArgs {
  std::string contigs, truth, report, format = "table";
  int k = 0;
};

std::string render_report(const EvalReport& r, const std::string& format) {
  if (format == "kv") return format_key_values(r);
  if (format == "json") return format_json(r);
  return format_table(r);
}

int do_eval(const EvalArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  ContigSet contigs;
  for (auto& rec : read_fasta_file(a.contigs)) contigs.push_back(Contig{rec.sequence, rec.description, {}});
  const EvalReport r = evaluate(contigs, load_genome(a.truth), a.k);
  emit(a.report, render_report(r, a.format), out);
  if (g.verbose) err << "evaluated " << contigs.size() << " contigs\n";
  return kOk;
}

// ---- stage ------------------------------------------------------------------

struct StageArgs {
  int stage = 0;
  std::string config, artifacts, format = "table";
};

int do_stage(const StageArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  RunConfig cfg = read_config_file(a.config);
  if (g.seed_given) cfg.profile.seed = g.seed;
  if (g.threads_given) cfg.threads = g.threads;
  if (!a.artifacts.empty()) {
    cfg.artifact_dir = a.artifacts;
  } else if (cfg.artifact_dir.empty()) {
    const char* env = std::getenv(kArtifactEnv);
    cfg.artifact_dir = env && *env ? env : "artifacts";
    cfg.artifact_dir += "/stage" + std::to_string(a.stage);
  }
  const StageResult r = run_stage(a.stage, cfg);
  out << render_report(r.report, a.format);
  err << "artifacts written to " << cfg.artifact_dir << '\n';
  return kOk;
}

// ---- dbg --------------------------------------------------------------------

struct DbgArgs {
  GraphSource src;
  std::string out, highlight = "none";
  bool oracle = false;
};

int do_dbg_build(const DbgArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  if (!a.src.graph_path.empty()) throw UsageError("dbg build reads --reads, not --graph");
  const DeBruijnGraph graph = a.src.load(err, g.verbose, g.threads);
  emit(a.out, format_edge_list(graph), out);
  if (g.verbose) err << "vertices=" << graph.num_vertices() << " edges=" << graph.num_edges() << '\n';
  return kOk;
}

int do_dbg_walk(const DbgArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  const DeBruijnGraph graph = a.src.load(err, g.verbose, g.threads);
  Walk w;
  try {
    w = shortest_edge_covering_walk(graph);
  } catch (const MultiComponentError& e) {
    err << "error: " << e.what() << "; component sizes:";
    for (const auto& c : e.components()) err << ' ' << c.size();
    err << "\nuse 'assemble --method cpp-walk' to solve each component\n";
    return kDomainError;
  }
  out << "edges=" << w.size() << '\n';
  if (!w.empty()) {
    const DnaString s = spell(graph, w);
    out << "spelled=" << s.view() << '\n';
    if (!a.out.empty()) {
      write_fasta_file(a.out, {FastaRecord{"walk", "edges=" + std::to_string(w.size()), s}});
    }
  }
  if (a.oracle) {
    const auto o = oracle_shortest_edge_covering_walk(graph.graph(), OracleMode::count_all);
    out << "oracle_length=" << o.length << "\noracle_count=" << o.count << '\n';
  }
  return kOk;
}

int do_dbg_dot(const DbgArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  const DeBruijnGraph graph = a.src.load(err, g.verbose, g.threads);
  DotHighlight hl;
  if (a.highlight == "unitigs") {
    hl = maximal_unitigs(graph.graph());
  } else if (a.highlight == "walk") {
    hl = shortest_edge_covering_walk(graph);
  } else if (a.highlight != "none") {
    throw UsageError("--highlight must be none, unitigs or walk");
  }
  emit(a.out, export_dot(graph, hl), out);
  return kOk;
}

// ---- safety -----------------------------------------------------------------

struct SafetyArgs {
  GraphSource src;
  std::size_t bound = 0;
  bool extensions = false;
};

int do_safety(const SafetyArgs& a, const CLI::App& sub, const Globals& g, std::ostream& out, std::ostream& err) {
  const DeBruijnGraph graph = a.src.load(err, g.verbose, g.threads);
  const std::size_t bound = sub.count("--bound") ? a.bound : default_safety_bound(graph.graph(), graph.k());
  const ContigSet contigs = unitig_contigs(graph);
  const SafetyReport rep = safety_suite(graph.graph(), contigs, bound);
  out << format_safety_table(rep, contigs);
  if (a.extensions && rep.applicable) {
    for (const auto& ext : safe_extensions(graph.graph(), bound)) {
      out << "extension\tunitig:" << ext.unitig << '\t' << spell_path(graph, ext.path).view() << '\n';
    }
  }
  if (rep.violations > 0) {
    err << "error: " << rep.violations << " unitig contigs reported unsafe\n";
    return kDomainError;
  }
  return kOk;
}

// ---- coverage ---------------------------------------------------------------

struct CoverageArgs {
  CoverageQuery q;
  std::size_t trials = 0;
};

int do_coverage(const CoverageArgs& a, const Globals& g, std::ostream& out) {
  const auto an = unspanned_probability(a.q, AnalyticMode{});
  out << "analytic=" << an.probability << '\n';
  if (a.trials > 0) {
    const auto mc = unspanned_probability(a.q, MonteCarloMode{a.trials, g.seed});
    out << "monte_carlo=" << mc.probability << "\nstandard_error=" << mc.standard_error << "\ntrials=" << mc.trials
        << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"asmlab: genome assembly models from superstrings to safe contigs"};
  app.name("asmlab");
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Random seed (default 1)");
  app.add_option("--threads", g.threads, "Worker threads for k-mer counting")->check(CLI::Range(1u, 1024u));
  app.add_flag("--verbose,-v", g.verbose, "Extra diagnostics on standard error");

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "Sample reads from a genome (idealized or uniform with errors and gaps)");
  s->add_option("--genome", sim.genome, "Genome FASTA (first record)");
  s->add_option("--random-length", sim.random_length, "Draw a random genome of this length")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 40));
  s->add_option("--plant-repeat", sim.plant, "LEN,COPIES: plant a repeat in the random genome");
  s->add_option("--reads", sim.reads_out, "Output reads FASTA")->required();
  s->add_option("--genome-out", sim.genome_out, "Also write the genome FASTA here");
  s->add_option("--num", sim.num, "Number of reads");
  s->add_option("--len", sim.len, "Read length")->required()->check(CLI::Range(std::size_t{1}, std::size_t{1} << 40));
  s->add_option("--error-rate", sim.error_rate, "Per-base substitution probability")->check(CLI::Range(0.0, 0.999999));
  s->add_option("--gap", sim.gaps, "START:END genome interval without reads (repeatable)");
  s->add_flag("--idealized", sim.idealized, "One read at every position; ignores --num, --error-rate, --gap");

  ScsArgs scs;
  auto* sc = app.add_subcommand("scs", "Shortest common superstring of the reads (greedy or exact)");
  sc->add_option("--reads", scs.reads, "Reads FASTA")->required();
  sc->add_flag("--greedy", scs.greedy, "Greedy maximal-overlap extension");
  sc->add_flag("--exact", scs.exact, "Exact search (small inputs)");
  sc->add_option("--out", scs.out, "Output FASTA (default stdout); the merge trace goes to OUT.trace");
  sc->add_option("--read-len", scs.read_len, "Read length; prints the repeat-collapse diagnostic")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 40));
  sc->add_option("--max-reads", scs.max_reads, "Cap on non-redundant reads for --exact")
      ->check(CLI::Range(std::size_t{1}, std::size_t{16}));

  AssembleArgs as;
  auto* asc = app.add_subcommand("assemble", "Contigs from a de Bruijn graph: maximal unitigs or shortest covering walks");
  asc->add_option("--reads", as.reads, "Reads FASTA/FASTQ")->required();
  asc->add_option("-k", as.k, "Graph order")->required()->check(CLI::Range(2, 31));
  asc->add_option("--method", as.method, "unitig or cpp-walk")->required();
  asc->add_option("--out", as.out, "Contigs FASTA (default stdout)");
  asc->add_option("--correct", as.correct, "Correct reads first with this minimum k-mer multiplicity");
  asc->add_option("--dot", as.dot, "Also write the graph in DOT format");
  asc->add_flag("--drop-ambiguous", as.drop_ambiguous, "Drop reads with symbols outside ACGT");

  EvalArgs ev;
  auto* evc = app.add_subcommand("eval", "Compare contigs against a reference genome");
  evc->add_option("--contigs", ev.contigs, "Contigs FASTA")->required();
  evc->add_option("--truth", ev.truth, "Reference FASTA (first record); for truth-free runs use 'stage --stage 3'")
      ->required();
  evc->add_option("-k", ev.k, "k for k-mer precision")->required()->check(CLI::Range(1, 31));
  evc->add_option("--report", ev.report, "Report file (default stdout)");
  evc->add_option("--format", ev.format, "table, kv or json")->check(CLI::IsMember({"table", "kv", "json"}));

  StageArgs st;
  auto* stc = app.add_subcommand("stage", "Run an evaluation stage: 1 idealized, 2 simulated errors/gaps, 3 external reads");
  stc->add_option("--stage", st.stage, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  stc->add_option("--config", st.config, "key = value configuration file")->required();
  stc->add_option("--artifacts", st.artifacts,
                  std::string("Artifact directory (default: config artifact_dir, then $") + kArtifactEnv +
                      "/stage<N>, then artifacts/stage<N>)");
  stc->add_option("--format", st.format, "table, kv or json")->check(CLI::IsMember({"table", "kv", "json"}));

  DbgArgs db;
  auto* dbc = app.add_subcommand("dbg", "De Bruijn graph tools");
  dbc->require_subcommand(1);
  dbc->fallthrough();
  auto* dbuild = dbc->add_subcommand("build", "Write the graph of the reads as an edge list");
  auto* dwalk = dbc->add_subcommand("walk", "Shortest edge-covering walk and the string it spells");
  auto* ddot = dbc->add_subcommand("dot", "Graphviz rendering");
  for (auto* c : {dbuild, dwalk, ddot}) {
    db.src.attach(c);
    c->add_option("--out", db.out, "Output file (default stdout; FASTA for walk)");
  }
  dwalk->add_flag("--oracle", db.oracle, "Also run the exhaustive search (at most 16 edges) and count optima");
  ddot->add_option("--highlight", db.highlight, "none, unitigs or walk");

  SafetyArgs sf;
  auto* sfc = app.add_subcommand("safety", "Check that unitig contigs are substrings of every covering walk");
  sf.src.attach(sfc);
  sfc->add_option("--bound", sf.bound, "Walk-length bound (default 2|E|+k)");
  sfc->add_flag("--extensions", sf.extensions, "Also grow unitigs into longer safe strings");

  CoverageArgs cv;
  auto* cvc = app.add_subcommand("coverage", "Probability that some k-window is spanned by no read");
  cvc->add_option("--genome-length", cv.q.genome_length, "Genome length")->required();
  cvc->add_option("--num", cv.q.num_reads, "Number of reads")->required();
  cvc->add_option("--len", cv.q.read_length, "Read length")->required();
  cvc->add_option("-k", cv.q.k, "Window width")->required();
  cvc->add_option("--trials", cv.trials, "Also estimate by simulation with this many trials");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }
  g.seed_given = app.count("--seed") > 0;
  g.threads_given = app.count("--threads") > 0;

  try {
    if (*s) return do_simulate(sim, *s, g, out, err);
    if (*sc) return do_scs(scs, *sc, g, out, err);
    if (*asc) return do_assemble(as, g, out, err);
    if (*evc) return do_eval(ev, g, out, err);
    if (*stc) return do_stage(st, g, out, err);
    if (*dbuild) return do_dbg_build(db, g, out, err);
    if (*dwalk) return do_dbg_walk(db, g, out, err);
    if (*ddot) return do_dbg_dot(db, g, out, err);
    if (*sfc) return do_safety(sf, *sfc, g, out, err);
    if (*cvc) return do_coverage(cv, g, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidParameter& e) {
    err << "invalid parameter: " << e.what() << '\n';
    return kUsageError;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kDomainError;
  } catch (const NoCoveringWalk& e) {
    err << "no covering walk: " << e.what() << '\n';
    return kDomainError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  err << "no subcommand given\n";
  return kUsageError;
}

}  // namespace asmlab::cli
