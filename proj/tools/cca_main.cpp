#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cca/corpus.hpp"
#include "cca/errors.hpp"
#include "cca/report.hpp"

namespace {

using namespace cca;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream stream(path);
  if (!stream) throw DomainError("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream stream(path);
  if (!stream) throw DomainError("cannot open output file: " + path);
  stream << text;
}

struct CorpusFlags {
  CorpusSpec spec;
  void attach(CLI::App* cmd) {
    cmd->add_option("--dim", spec.dim, "Number of variables (1-3)")
        ->check(CLI::Range(1u, 3u));
    cmd->add_option("--max-deg", spec.max_degree,
                    "Total degree bound for generators")
        ->check(CLI::Range(1, 8));
    cmd->add_option("--count", spec.count, "Number of instances");
    cmd->add_option("--seed", spec.seed, "Corpus seed");
    cmd->add_option("--extra-gens", spec.max_extra_gens,
                    "Extra generators beyond the pure powers");
    cmd->add_flag("--require-normal", spec.require_normal,
                  "Keep only instances with integrally closed small powers");
    cmd->add_option("--field", spec.field, "Coefficient field, Q or fp:<p>");
  }
};

struct AnalysisFlags {
  AnalysisOptions opt;
  unsigned jobs = 1;
  void attach(CLI::App* cmd) {
    cmd->add_option("--budget-pairs", opt.groebner.max_pair_reductions,
                    "Pair reduction budget per basis");
    cmd->add_option("--window", opt.normality_window,
                    "Powers checked for integral closedness");
    cmd->add_flag("--full", opt.full,
                  "Run the reduction search on every instance");
    cmd->add_option("--jobs", jobs, "Worker threads")
        ->check(CLI::Range(1u, 64u));
  }
};

int exit_code_for(const std::vector<AnalysisRecord>& records) {
  bool errors = false;
  for (const AnalysisRecord& r : records) {
    if (r.verdict.cls == InstanceClass::counterexample_candidate) return 4;
    errors = errors || !r.error.empty();
  }
  return errors ? 3 : 0;
}

void aggregate_to_stderr(const std::vector<AnalysisRecord>& records) {
  std::size_t applicable = 0, verified = 0, candidates = 0, unresolved = 0;
  for (const AnalysisRecord& r : records) {
    applicable += r.dim == 3 && r.normal == true && r.e_star.size() > 3 &&
                  r.e_star[3] == 0;
    verified += r.verdict.cls == InstanceClass::verified;
    candidates += r.verdict.cls == InstanceClass::counterexample_candidate;
    unresolved += r.verdict.cls == InstanceClass::unresolved;
  }
  std::cerr << "instances " << records.size() << ", applicable " << applicable
            << ", verified " << verified << ", candidates " << candidates
            << ", unresolved " << unresolved << "\n";
}

int run_compute(const std::string& input, const std::string& format,
                const std::string& out, AnalysisFlags& analysis,
                std::uint64_t seed, bool seed_set) {
  IdealInput parsed = parse_ideal_input(read_input(input));
  if (parsed.mono && !mono_is_primary(*parsed.mono)) {
    std::cerr << "error: the ideal misses a pure power of some variable, "
                 "its quotient is not finite dimensional\n";
    return 2;
  }
  if (seed_set) parsed.seed = seed;
  AnalysisRecord record = analyze_instance(instance_from_input(parsed),
                                           analysis.opt);
  write_output(out, render_report({record}, format_from_name(format)));
  if (!record.error.empty()) std::cerr << "error: " << record.error << "\n";
  return exit_code_for({record});
}

int run_gen_corpus(const CorpusFlags& flags, const std::string& out) {
  Corpus corpus = generate_corpus(flags.spec);
  if (!corpus.warning.empty())
    std::cerr << "warning: " << corpus.warning << "\n";
  write_output(out, render_corpus_jsonl(corpus));
  return 0;
}

int run_verify(const CorpusFlags& flags, AnalysisFlags& analysis,
               const std::string& format, const std::string& out) {
  Corpus corpus = generate_corpus(flags.spec);
  if (!corpus.warning.empty())
    std::cerr << "warning: " << corpus.warning << "\n";
  const ReportFormat fmt = format_from_name(format);
  std::vector<AnalysisRecord> records =
      run_analysis(corpus.instances, analysis.opt, analysis.jobs);
  write_output(out, render_report(records, fmt));
  if (fmt != ReportFormat::table) aggregate_to_stderr(records);
  return exit_code_for(records);
}

int run_oracle_check(const CorpusFlags& flags, unsigned power_bound,
                     unsigned points) {
  OracleSummary summary = oracle_suite(flags.spec, power_bound, points);
  for (const std::string& d : summary.disagreements)
    std::cerr << "disagreement: " << d << "\n";
  std::cout << "length checks      " << summary.length_checks << "\n"
            << "operation checks   " << summary.operation_checks << "\n"
            << "membership checks  " << summary.membership_checks << "\n"
            << "disagreements      " << summary.disagreements.size() << "\n";
  return summary.disagreements.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Hilbert coefficients, reductions, integral closures and "
      "Cohen-Macaulay certificates for m-primary ideals"};
  app.require_subcommand(1);

  CLI::App* compute = app.add_subcommand(
      "compute", "Analyze one ideal from a JSON description");
  std::string input = "-";
  std::string compute_format = "table";
  std::string compute_out;
  std::uint64_t compute_seed = 1;
  AnalysisFlags compute_analysis;
  compute_analysis.opt.full = true;
  compute->add_option("--input", input,
                      "Ideal JSON file, - for standard input");
  compute->add_option("--format", compute_format, "jsonl, csv or table");
  compute->add_option("--out", compute_out, "Output file, default stdout");
  CLI::Option* seed_opt =
      compute->add_option("--seed", compute_seed, "Reduction search seed");
  compute->add_option("--budget-pairs",
                      compute_analysis.opt.groebner.max_pair_reductions,
                      "Pair reduction budget per basis");
  compute->add_option("--window", compute_analysis.opt.normality_window,
                      "Powers checked for integral closedness");

  CLI::App* gen = app.add_subcommand(
      "gen-corpus", "Emit a deterministic corpus of monomial ideals");
  CorpusFlags gen_flags;
  std::string gen_out;
  gen_flags.attach(gen);
  gen->add_option("--out", gen_out, "Output file, default stdout");

  CLI::App* verify = app.add_subcommand(
      "verify-itoh",
      "Sweep a corpus for counterexamples to the vanishing conjecture");
  CorpusFlags verify_flags;
  AnalysisFlags verify_analysis;
  std::string verify_format = "jsonl";
  std::string verify_out;
  verify_flags.attach(verify);
  verify_analysis.attach(verify);
  verify->add_option("--format", verify_format, "jsonl, csv or table");
  verify->add_option("--out", verify_out, "Output file, default stdout");

  CLI::App* oracle = app.add_subcommand(
      "oracle-check",
      "Cross check basis driven results against combinatorial oracles");
  CorpusFlags oracle_flags;
  oracle_flags.spec.count = 100;
  oracle_flags.spec.max_degree = 4;
  unsigned power_bound = 12;
  unsigned points = 20;
  oracle_flags.attach(oracle);
  oracle->add_option("--power-bound", power_bound,
                     "Largest power used by the membership oracle");
  oracle->add_option("--points", points, "Membership samples per instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& parse_failure) {
    const int code = app.exit(parse_failure);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed())
      return run_compute(input, compute_format, compute_out, compute_analysis,
                         compute_seed, seed_opt->count() > 0);
    if (gen->parsed()) return run_gen_corpus(gen_flags, gen_out);
    if (verify->parsed())
      return run_verify(verify_flags, verify_analysis, verify_format,
                        verify_out);
    if (oracle->parsed())
      return run_oracle_check(oracle_flags, power_bound, points);
  } catch (const ParseError& failure) {
    std::cerr << "error: " << failure.what() << "\n";
    return 2;
  } catch (const DomainError& failure) {
    std::cerr << "error: " << failure.what() << "\n";
    return 2;
  } catch (const ResourceError& failure) {
    std::cerr << "error: " << failure.what() << "\n";
    return 3;
  } catch (const Error& failure) {
    std::cerr << "error: " << failure.what() << "\n";
    return 1;
  } catch (const std::exception& failure) {
    std::cerr << "error: " << failure.what() << "\n";
    return 1;
  }
  return 0;
}
