#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cca/certificates.hpp"
#include "cca/newton.hpp"
#include "cca/rng.hpp"

namespace cca {

struct CorpusSpec {
  unsigned dim = 3;
  // Bound on the total degree of every generator.
  int max_degree = 5;
  unsigned count = 200;
  std::uint64_t seed = 2026;
  // Extra monomials beyond the pure powers; draws are capped at twice the
  // dimension.
  unsigned max_extra_gens = 6;
  // Keep only instances whose small powers are all integrally closed.
  bool require_normal = false;
  // "Q" or "fp:<p>"; the monomial data itself is field independent.
  std::string field = "Q";
};

struct CorpusInstance {
  std::string id;
  Ideal ideal;
  // Present when every generator is a single term; unlocks the polyhedral
  // closure route.
  std::optional<MonomialIdeal> mono;
  // Stream seed for the randomized steps of this instance's analysis.
  std::uint64_t seed = 0;
};

struct Corpus {
  std::vector<CorpusInstance> instances;
  // Set when filters and deduplication exhausted the attempt budget first;
  // the corpus is then shorter than spec.count.
  std::string warning;
};

// Deterministic stream of m-primary monomial ideals: one pure power per
// variable plus a few extra monomials, every generator of total degree at
// most spec.max_degree, minimalized and deduplicated. Equal specs give
// equal corpora.
Corpus generate_corpus(const CorpusSpec& spec);

struct AnalysisOptions {
  GroebnerConfig groebner;
  unsigned normality_window = 3;
  ReductionSearchConfig reduction;
  // Run the reduction search and graded ring test on every instance, not
  // only on those satisfying the conjecture hypothesis.
  bool full = false;
};

// Everything the pipeline established about one instance. Holds the seeds
// and windows used, so the record can be recomputed from itself.
struct AnalysisRecord {
  std::string id;
  unsigned dim = 0;
  std::vector<std::string> generators;
  std::string field = "Q";
  std::uint64_t seed = 0;

  std::vector<Int> e;
  std::vector<Int> h;
  unsigned postulation = 0;

  // Closure filtration side; empty when the input was not monomial.
  std::vector<Int> e_star;
  std::vector<Int> h_star;
  unsigned postulation_star = 0;

  unsigned normality_window = 0;
  std::optional<bool> normal;
  std::optional<unsigned> closure_failing_power;
  std::string closure_witness;

  std::optional<unsigned> reduction_number;
  std::vector<Int> sigma;
  std::vector<std::string> reduction_elements;
  unsigned reduction_attempts = 0;
  std::optional<CMCertificate> cm;

  SignChecks signs;
  InstanceVerdict verdict;
  // Nonempty when some stage threw; the verdict is then unresolved.
  std::string error;
  // Wall clock of the analysis; excluded from deterministic outputs.
  double seconds = 0.0;
};

AnalysisRecord analyze_instance(const CorpusInstance& inst,
                                const AnalysisOptions& opt);

// Cross checks basis driven results against the combinatorial oracles on a
// generated corpus: quotient lengths against staircase counts, ideal
// arithmetic against exponent arithmetic, and polyhedron membership
// against bounded power tests and the simplex route.
struct OracleSummary {
  std::uint64_t length_checks = 0;
  std::uint64_t operation_checks = 0;
  std::uint64_t membership_checks = 0;
  std::vector<std::string> disagreements;
};

OracleSummary oracle_suite(const CorpusSpec& spec, unsigned power_bound = 12,
                           unsigned points_per_instance = 20);

// Analyzes every instance with per-record fault isolation; a throwing
// record comes back unresolved instead of aborting the run. jobs > 1
// splits the corpus across threads; the output order always matches the
// corpus order.
std::vector<AnalysisRecord> run_analysis(
    const std::vector<CorpusInstance>& corpus, const AnalysisOptions& opt,
    unsigned jobs = 1);

}  // namespace cca
