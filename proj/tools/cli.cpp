#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sparsesum/error.hpp"
#include "sparsesum/experiments.hpp"
#include "sparsesum/io.hpp"
#include "sparsesum/nodes.hpp"
#include "sparsesum/oracle.hpp"
#include "sparsesum/report.hpp"
#include "sparsesum/transform.hpp"
#include "sparsesum/verify.hpp"

namespace sparsesum::cli {

namespace {

struct RunConfig {
  std::string command;
  std::vector<double> p_list{1.4, 1.5, 1.6, 1.7, 1.8, 2.0};
  std::optional<double> a;
  experiments::Grid grid;
  std::vector<double> k_list;
  std::optional<double> q;
  std::int64_t count = 151;
  std::string strategy = "q";
  std::optional<std::int64_t> flat_end;
  std::optional<std::int64_t> cutoff;
  std::string nodes_file;
  std::string samples_file;
  std::optional<std::string> format;
  std::string out_path;
  bool reference = false;
  bool force = false;
};

// Writes to --out when given, otherwise to the command's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorKind::Io, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

report::Format format_of(const RunConfig& cfg) {
  return cfg.format ? report::parse_format(*cfg.format) : report::Format::Text;
}

int run_zeta(const RunConfig& cfg, std::ostream& out) {
  const auto rows = experiments::run_zeta(cfg.p_list, cfg.q.value_or(1.15), cfg.count);
  Sink sink(cfg.out_path, out);
  if (!cfg.format) {
    report::write_zeta_text(sink.stream(), rows);
  } else {
    report::write(sink.stream(), report::zeta_table(rows), format_of(cfg));
  }
  return kExitOk;
}

int run_curve(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.a) throw Error(ErrorKind::OutOfRange, "--a is required");
  const double a = *cfg.a;
  const bool lorentzian = cfg.command == "example2";
  const auto curve = lorentzian ? experiments::run_example2(a, cfg.grid, cfg.count)
                                : experiments::run_example3(a, cfg.grid, cfg.count);
  auto table = report::curve_table(cfg.command, a, curve);
  if (cfg.reference) {
    if (curve.cutoff > oracle::kBruteForceLimit && !cfg.force) {
      throw Error(ErrorKind::CostGuard, "truncated reference needs " +
                                            std::to_string(curve.cutoff) +
                                            " terms per point; pass --force to run it");
    }
    table.columns.push_back("truncated");
    for (std::size_t i = 0; i < curve.rows.size(); ++i) {
      const double x = curve.rows[i].x;
      const auto f = lorentzian ? experiments::lorentzian_terms(a, curve.cutoff)
                                : experiments::resonant_terms(a, curve.cutoff);
      const auto s = oracle::brute_force_dft(f, 1, curve.cutoff, experiments::wavenumber_for(x),
                                             cfg.force);
      table.rows[i].push_back(lorentzian ? 1.0 / a + 2.0 / a * s.real()
                                         : 1.0 / a - 2.0 / a * s.real());
    }
  }
  Sink sink(cfg.out_path, out);
  report::write(sink.stream(), table, format_of(cfg));
  return kExitOk;
}

NodeSequence build_nodes(const RunConfig& cfg) {
  if (cfg.strategy == "q") return q_sequence({cfg.q.value_or(1.15), cfg.count});
  if (cfg.strategy == "hybrid") {
    HybridSpec spec{};
    if (cfg.a) {
      spec = HybridSpec::for_lorentzian(*cfg.a, cfg.count);
    } else if (cfg.flat_end && cfg.cutoff) {
      spec = {*cfg.flat_end, *cfg.cutoff, cfg.count};
    } else {
      throw Error(ErrorKind::OutOfRange, "hybrid nodes need --a or both --n0 and --cutoff");
    }
    return hybrid_nodes(spec);
  }
  throw Error(ErrorKind::OutOfRange, "unknown node strategy '" + cfg.strategy + "'");
}

int run_nodes(const RunConfig& cfg, std::ostream& out) {
  const auto nodes = build_nodes(cfg);
  Sink sink(cfg.out_path, out);
  io::write_nodes(sink.stream(), {nodes.nodes().begin(), nodes.nodes().end()});
  return kExitOk;
}

std::vector<double> wavenumbers(const RunConfig& cfg) {
  if (cfg.command == "sum") return {0.0};
  if (!cfg.k_list.empty()) return cfg.k_list;
  std::vector<double> ks;
  for (const double x : cfg.grid.points()) ks.push_back(experiments::wavenumber_for(x));
  return ks;
}

int run_transform(const RunConfig& cfg, std::ostream& out) {
  if (cfg.samples_file.empty()) throw Error(ErrorKind::OutOfRange, "--samples-file is required");
  auto samples = io::read_samples(cfg.samples_file);
  std::vector<std::int64_t> node_list;
  if (!cfg.nodes_file.empty()) {
    node_list = io::read_nodes(cfg.nodes_file);
  } else if (cfg.q) {
    const auto s = q_sequence({*cfg.q, cfg.count});
    node_list.assign(s.nodes().begin(), s.nodes().end());
  } else {
    for (const auto& [n, v] : samples) node_list.push_back(n);
  }
  const NodeSequence nodes(std::move(node_list));
  const auto f = SampledFunction::from_table(samples);

  report::Table table{cfg.command, {"k", "re", "im"}, {}, {}};
  table.meta = {{"node_count", static_cast<double>(nodes.size())},
                {"cutoff", static_cast<double>(nodes.last())},
                {"efficiency", static_cast<double>(nodes.last()) / static_cast<double>(nodes.size())}};
  if (cfg.reference) {
    table.columns.push_back("reference_re");
    table.columns.push_back("reference_im");
  }
  for (const double k : wavenumbers(cfg)) {
    const auto weights = assemble_weights(k, nodes);
    TransformResult r;
    if (cfg.command == "sin") {
      r = sine_transform(f, nodes, weights);
    } else if (cfg.command == "cos") {
      r = cosine_transform(f, nodes, weights);
    } else {
      r = dft(f, nodes, weights);
    }
    std::vector<std::optional<double>> row{k, r.value.real(), r.value.imag()};
    if (cfg.reference) {
      complex ref = oracle::brute_force_dft(f, nodes.first(), nodes.last(), k, cfg.force);
      // sine and cosine references for complex f by linearity
      if (cfg.command == "sin" || cfg.command == "cos") {
        const auto back = oracle::brute_force_dft(f, nodes.first(), nodes.last(), -k, cfg.force);
        ref = cfg.command == "cos" ? 0.5 * (ref + back) : complex(0.0, 0.5) * (ref - back);
      }
      row.push_back(ref.real());
      row.push_back(ref.imag());
    }
    table.rows.push_back(std::move(row));
  }
  Sink sink(cfg.out_path, out);
  report::write(sink.stream(), table, format_of(cfg));
  return kExitOk;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  const auto rep = verify::run_verify();
  Sink sink(cfg.out_path, out);
  verify::print(sink.stream(), rep);
  return rep.all_passed() ? kExitOk : kExitVerification;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Sparse weighted series sums and discrete Fourier transforms"};
  app.add_option("--command", cfg.command, "What to run")
      ->required()
      ->check(CLI::IsMember(
          {"sum", "dft", "sin", "cos", "zeta", "example2", "example3", "nodes", "verify"}));
  app.add_option("--p", cfg.p_list, "Zeta exponents (comma separated)")->delimiter(',');
  app.add_option("--a", cfg.a, "Series parameter a");
  app.add_option("--x-min", cfg.grid.x_min, "Grid start");
  app.add_option("--x-max", cfg.grid.x_max, "Grid end");
  app.add_option("--x-count", cfg.grid.count, "Grid points");
  app.add_option("--k", cfg.k_list, "Wavenumbers (comma separated); overrides the x grid")
      ->delimiter(',');
  app.add_option("--q", cfg.q, "q-sequence growth ratio");
  app.add_option("--M", cfg.count, "Node count (odd)");
  app.add_option("--strategy", cfg.strategy, "Node plan for 'nodes'")
      ->check(CLI::IsMember({"q", "hybrid"}));
  app.add_option("--n0", cfg.flat_end, "Flat-region end N0 for hybrid nodes");
  app.add_option("--cutoff", cfg.cutoff, "Cutoff N for hybrid nodes");
  app.add_option("--nodes-file", cfg.nodes_file, "Node file, one integer per line");
  app.add_option("--samples-file", cfg.samples_file, "Samples, lines of 'n re im'");
  app.add_option("--format", cfg.format, "Machine output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out_path, "Output path (default stdout)");
  app.add_flag("--reference", cfg.reference, "Add a term-by-term reference column");
  app.add_flag("--force", cfg.force, "Override the brute-force cost guard");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (cfg.command == "zeta") return run_zeta(cfg, out);
    if (cfg.command == "example2" || cfg.command == "example3") return run_curve(cfg, out);
    if (cfg.command == "nodes") return run_nodes(cfg, out);
    if (cfg.command == "verify") return run_verify(cfg, out);
    return run_transform(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace sparsesum::cli
