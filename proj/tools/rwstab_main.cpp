#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "rwstab/automorphisms.hpp"
#include "rwstab/dimacs.hpp"
#include "rwstab/property_suite.hpp"
#include "rwstab/report.hpp"
#include "rwstab/sweep.hpp"

namespace {

using namespace rwstab;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Settings {
  int n = 0, a = 0, r = 0;
  int n_min = 0, n_max = 0;
  std::optional<unsigned> jobs;
  std::string out_path;
  std::string format = "json";
  bool iso_fallback = false;
  std::optional<double> timeout_secs;
  std::string graph_file;
};

unsigned resolve_jobs(const Settings& s) {
  if (s.jobs) return *s.jobs;
  if (const char* env = std::getenv("RWSTAB_JOBS")) {
    try {
      std::size_t used = 0;
      const long value = std::stol(env, &used);
      if (used == std::string(env).size() && value >= 1) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("RWSTAB_JOBS must be a positive integer");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::optional<std::chrono::duration<double>> resolve_timeout(const Settings& s) {
  if (!s.timeout_secs) return std::nullopt;
  if (*s.timeout_secs <= 0) throw std::invalid_argument("--timeout-secs must be positive");
  return std::chrono::duration<double>(*s.timeout_secs);
}

/// Writes to the -o path, or standard output when none was given.
void emit(const Settings& s, const std::string& text) {
  if (s.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(s.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + s.out_path + " for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + s.out_path);
}

int cmd_classify(const Settings& s) {
  AnalysisOptions options;
  options.timeout = resolve_timeout(s);
  const auto record = analyze(RoseWindowParams::make(s.n, s.a, s.r), options);
  emit(s, record_to_json(record).dump(2) + "\n");
  return kOk;
}

int cmd_sweep(const Settings& s) {
  SweepOptions options;
  options.n_min = s.n_min;
  options.n_max = s.n_max;
  options.jobs = resolve_jobs(s);
  options.timeout = resolve_timeout(s);
  options.iso_fallback = s.iso_fallback;
  const SweepReport report = run_sweep(options);

  std::ostringstream text;
  if (s.format == "csv") {
    write_csv(text, report);
  } else {
    write_json(text, report);
  }
  emit(s, text.str());

  const auto& sum = report.summary;
  std::cerr << "swept " << report.records.size() << " triples, n = " << s.n_min << ".." << s.n_max << ": ";
  for (const auto& [kind, count] : sum.counts) std::cerr << kind << '=' << count << ' ';
  std::cerr << "V1=" << sum.v1.size() << " V2=" << sum.v2.size() << " V3=" << sum.v3.size();
  if (sum.iso_discrepancies) std::cerr << " iso_discrepancies=" << sum.iso_discrepancies->size();
  std::cerr << '\n';
  return sum.passed() ? kOk : kViolation;
}

int cmd_aut(const Settings& s) {
  const Graph g = read_dimacs_file(s.graph_file);
  SearchOptions options;
  if (auto t = resolve_timeout(s)) {
    options.deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(*t);
  }
  const PermGroup aut = automorphism_group(g, options);
  std::ostringstream text;
  text << "order " << aut.order().str() << '\n';
  text << "generators " << aut.generators().size() << '\n';
  for (const auto& gen : aut.generators()) {
    text << '[';
    for (std::size_t i = 0; i < gen.degree(); ++i) text << (i ? " " : "") << gen[i] + 1;
    text << "]\n";
  }
  emit(s, text.str());
  return kOk;
}

int cmd_cdc(const Settings& s) {
  const auto p = RoseWindowParams::make(s.n, s.a, s.r);
  const int n = p.n;
  std::vector<std::string> comments{
      "canonical double cover of R_" + std::to_string(n) + "(" + std::to_string(p.a) + "," +
          std::to_string(p.r) + ")",
      "vertex ids are 1-based; id - 1 = j*" + std::to_string(2 * n) + " + base",
      "base = i for u_i and " + std::to_string(n) + " + i for v_i, i in 0.." + std::to_string(n - 1),
      "j in {0,1} is the layer",
  };
  if (is_degenerate(p)) comments.emplace_back("degenerate triple: 2r = 0 mod n, hub edges coincide");
  std::ostringstream text;
  write_dimacs(text, build_cdc(p), comments);
  emit(s, text.str());
  return kOk;
}

int cmd_props(const Settings& s) {
  const auto result = run_property_suite(s.n_min, s.n_max, resolve_jobs(s));
  std::ostringstream text;
  print_property_table(text, result);
  emit(s, text.str());
  return result.passed() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rose Window graph stability toolkit"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  Settings s;

  auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option_function<unsigned>("--jobs", [&](unsigned k) { s.jobs = k; }, "worker threads")
        ->check(CLI::PositiveNumber);
  };
  auto add_out = [&](CLI::App* cmd) { cmd->add_option("-o,--out", s.out_path, "output file"); };
  auto add_timeout = [&](CLI::App* cmd) {
    cmd->add_option_function<double>("--timeout-secs", [&](double t) { s.timeout_secs = t; },
                                     "per-instance time budget in seconds");
  };

  auto* classify = app.add_subcommand("classify", "classify R_n(a,r) and print its record as JSON");
  classify->add_option("n", s.n)->required();
  classify->add_option("a", s.a)->required();
  classify->add_option("r", s.r)->required();
  add_out(classify);
  add_timeout(classify);

  auto* sweep = app.add_subcommand("sweep", "classify every canonical triple with n_min <= n <= n_max");
  sweep->add_option("n_min", s.n_min)->required();
  sweep->add_option("n_max", s.n_max)->required();
  add_jobs(sweep);
  add_out(sweep);
  sweep->add_option("--format", s.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sweep->add_flag("--iso-fallback", s.iso_fallback, "also match families by canonical form");
  add_timeout(sweep);

  auto* aut = app.add_subcommand("aut", "automorphism group of a DIMACS graph");
  aut->add_option("graph_file", s.graph_file)->required();
  add_out(aut);
  add_timeout(aut);

  auto* cdc = app.add_subcommand("cdc", "write the canonical double cover of R_n(a,r) as DIMACS");
  cdc->add_option("n", s.n)->required();
  cdc->add_option("a", s.a)->required();
  cdc->add_option("r", s.r)->required();
  add_out(cdc);

  auto* props = app.add_subcommand("props", "run the structural property suite");
  props->add_option("n_min", s.n_min)->required();
  props->add_option("n_max", s.n_max)->required();
  add_jobs(props);
  add_out(props);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify) return cmd_classify(s);
    if (*sweep) return cmd_sweep(s);
    if (*aut) return cmd_aut(s);
    if (*cdc) return cmd_cdc(s);
    if (*props) return cmd_props(s);
  } catch (const SearchTimeout& e) {
    std::cerr << "error: time budget exceeded\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
