#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bitalign/bench.hpp"
#include "bitalign/errors.hpp"
#include "bitalign/io.hpp"
#include "bitalign/sim.hpp"
#include "bitalign/window.hpp"

namespace bitalign::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAlignFailure = 1;
constexpr int kExitUsage = 2;

struct WindowFlags {
  std::size_t window = 64;
  std::size_t overlap = 24;
  std::size_t k = 0;  // 0: same as window
  std::string mode = "improved";
  std::string priority = "MSID";
  std::size_t threads = 1;

  void attach(CLI::App& app) {
    app.add_option("--w", window, "Window size W")->capture_default_str();
    app.add_option("--o", overlap, "Window overlap O")->capture_default_str();
    app.add_option("--k", k, "Error threshold per window (default: W)");
    app.add_option("--mode", mode, "Engine: improved or baseline")
        ->check(CLI::IsMember({"improved", "baseline"}))
        ->capture_default_str();
    app.add_option("--priority", priority, "Traceback edge order over M,S,I,D")
        ->capture_default_str();
    app.add_option("--threads", threads, "Worker threads")->capture_default_str();
  }

  WindowConfig config() const {
    WindowConfig cfg;
    cfg.window = window;
    cfg.overlap = overlap;
    if (k != 0) cfg.k = k;
    cfg.mode = mode == "baseline" ? EngineMode::kBaseline : EngineMode::kImproved;
    cfg.priority = EdgePriority::parse(priority);
    cfg.validate();
    return cfg;
  }
};

std::vector<io::PairRecord> load_pairs(const std::string& path) {
  if (path == "-") return io::read_pairs(std::cin);
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open pairs file '" + path + "'");
  return io::read_pairs(in);
}

std::vector<SequencePair> views(const std::vector<io::PairRecord>& records) {
  std::vector<SequencePair> out;
  out.reserve(records.size());
  for (const io::PairRecord& r : records) out.push_back({r.pattern, r.text});
  return out;
}

std::string fmt_rate(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

int run_align(const std::string& pairs_path, const WindowFlags& flags,
              bool stats, bool collapse_m, std::ostream& out) {
  const WindowConfig cfg = flags.config();
  const std::vector<io::PairRecord> records = load_pairs(pairs_path);
  const std::vector<SequencePair> pairs = views(records);
  const std::vector<BatchEntry> results = align_batch(pairs, cfg, flags.threads);
  const io::CigarStyle style =
      collapse_m ? io::CigarStyle::kCollapsedMatch : io::CigarStyle::kExtended;

  int status = kExitOk;
  for (std::size_t i = 0; i < results.size(); ++i) {
    out << records[i].id << '\t';
    if (!results[i].ok()) {
      out << "ERROR " << results[i].message << '\n';
      status = kExitAlignFailure;
      continue;
    }
    const AlignmentResult& r = *results[i].result;
    out << r.cost << '\t' << r.text_consumed << '\t' << io::format_cigar(r.cigar, style);
    if (stats) {
      out << '\t' << r.rows_computed << '\t' << r.counters.entry_reads << '\t'
          << r.counters.entry_writes << '\t' << r.counters.words_allocated;
    }
    out << '\n';
  }
  return status;
}

int run_simulate(const sim::SimulationParams& params, const std::string& prefix,
                 std::ostream& out) {
  params.profile.validate();
  const sim::Simulation simulation = sim::simulate(params);
  const std::string header =
      "bitalign simulate ref_len=" + std::to_string(params.ref_len) +
      " count=" + std::to_string(params.count) +
      " read_len=" + std::to_string(params.read_len) +
      " sub=" + fmt_rate(params.profile.sub_rate) +
      " ins=" + fmt_rate(params.profile.ins_rate) +
      " del=" + fmt_rate(params.profile.del_rate) +
      " seed=" + std::to_string(params.profile.seed);

  auto open = [](const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write '" + path + "'");
    return f;
  };

  {
    std::ofstream f = open(prefix + ".ref.fa");
    const io::FastaRecord ref{"ref", header, simulation.reference, false};
    io::write_fasta(f, std::span(&ref, 1));
  }
  std::vector<io::FastaRecord> reads;
  std::vector<io::PairRecord> pairs;
  for (std::size_t r = 0; r < simulation.reads.size(); ++r) {
    const sim::SimRecord& rec = simulation.reads[r];
    const std::string id = "read" + std::to_string(r);
    reads.push_back({id,
                     "ref=" + rec.ref_id + " start=" + std::to_string(rec.ref_start),
                     rec.read, false});
    pairs.push_back({id, rec.read,
                     simulation.reference.substr(rec.ref_start, rec.ref_length)});
  }
  {
    std::ofstream f = open(prefix + ".reads.fa");
    io::write_fasta(f, reads);
  }
  {
    std::ofstream f = open(prefix + ".truth.tsv");
    f << "# " << header << '\n'
      << "#read_id\tref_id\tref_start\ttruth_cigar\ttruth_cost\n";
    for (std::size_t r = 0; r < simulation.reads.size(); ++r) {
      const sim::SimRecord& rec = simulation.reads[r];
      f << reads[r].id << '\t' << rec.ref_id << '\t' << rec.ref_start << '\t'
        << io::format_cigar(rec.truth_cigar) << '\t' << rec.truth_cost << '\n';
    }
  }
  {
    std::ofstream f = open(prefix + ".pairs.tsv");
    f << "# " << header << '\n';
    io::write_pairs(f, pairs);
  }
  out << "wrote " << simulation.reads.size() << " reads to " << prefix
      << ".{ref.fa,reads.fa,truth.tsv,pairs.tsv}\n";
  return kExitOk;
}

int run_bench(const std::string& pairs_path, const WindowFlags& flags,
              const std::vector<std::size_t>& sweep_k,
              std::uint64_t oracle_max_cells, std::ostream& out) {
  const WindowConfig base = flags.config();
  const std::vector<io::PairRecord> records = load_pairs(pairs_path);
  const std::vector<SequencePair> pairs = views(records);

  std::vector<std::size_t> ks = sweep_k;
  if (ks.empty()) ks.push_back(base.effective_k());

  out << bench::BenchRow::tsv_header() << '\n';
  int status = kExitOk;
  for (std::size_t k : ks) {
    bench::BenchConfig cfg;
    cfg.window = base;
    cfg.window.k = k;
    cfg.window.validate();
    cfg.threads = flags.threads;
    cfg.oracle_max_cells = oracle_max_cells;
    const bench::BenchRun run = bench::run_bench(pairs, cfg);
    out << run.row.tsv_row() << '\n';
    if (run.row.failures > 0) status = kExitAlignFailure;
  }
  return status;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bit-parallel windowed edit-distance aligner"};
  app.require_subcommand(1);

  std::string pairs_path;
  WindowFlags align_flags;
  bool stats = false;
  bool collapse_m = false;
  CLI::App* align_cmd = app.add_subcommand("align", "Align every pair of a TSV pair list");
  align_cmd->add_option("--pairs", pairs_path, "Pair list (id, pattern, text); '-' for stdin")
      ->required();
  align_flags.attach(*align_cmd);
  align_cmd->add_flag("--stats", stats, "Append rows_computed and access counters");
  align_cmd->add_flag("--collapse-m", collapse_m, "Write '=' and 'X' runs as 'M'");

  sim::SimulationParams sim_params;
  sim_params.read_len = 10000;
  sim_params.ref_len = 100000;
  std::string prefix;
  CLI::App* sim_cmd = app.add_subcommand("simulate", "Write a synthetic read workload");
  sim_cmd->add_option("--ref-len", sim_params.ref_len, "Reference length")->capture_default_str();
  sim_cmd->add_option("--count", sim_params.count, "Number of reads")->required();
  sim_cmd->add_option("--read-len", sim_params.read_len, "Reference bases per read")
      ->capture_default_str();
  sim_cmd->add_option("--sub", sim_params.profile.sub_rate, "Substitution rate")->capture_default_str();
  sim_cmd->add_option("--ins", sim_params.profile.ins_rate, "Insertion rate")->capture_default_str();
  sim_cmd->add_option("--del", sim_params.profile.del_rate, "Deletion rate")->capture_default_str();
  sim_cmd->add_option("--seed", sim_params.profile.seed, "RNG seed")->capture_default_str();
  sim_cmd->add_option("--out-prefix", prefix, "Output path prefix")->required();

  std::string bench_pairs;
  WindowFlags bench_flags;
  std::vector<std::size_t> sweep_k;
  std::uint64_t oracle_max_cells = bench::BenchConfig{}.oracle_max_cells;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Compare improved and baseline engines");
  bench_cmd->add_option("--pairs", bench_pairs, "Pair list; '-' for stdin")->required();
  bench_flags.attach(*bench_cmd);
  bench_cmd->add_option("--sweep-k", sweep_k, "Comma-separated k values")->delimiter(',');
  bench_cmd->add_option("--oracle-max-cells", oracle_max_cells,
                        "Largest pattern x text product checked against the oracle")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*align_cmd) return run_align(pairs_path, align_flags, stats, collapse_m, out);
    if (*sim_cmd) return run_simulate(sim_params, prefix, out);
    if (*bench_cmd) {
      return run_bench(bench_pairs, bench_flags, sweep_k, oracle_max_cells, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bitalign::cli
