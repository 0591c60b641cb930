#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cca/hilbert.hpp"
#include "cca/reduction.hpp"

namespace cca {

// Outcome of the intersection test a^n  cap  c = c a^{n-1} over the stages
// that decide it. Passing every stage up to the reduction number settles
// the test for all n, because a^{n} = c a^{n-1} from there on; the
// associated graded ring is then Cohen-Macaulay.
struct CMCertificate {
  bool cohen_macaulay = false;
  unsigned checked_upto = 0;
  // Stage where the intersection was strictly larger, if any.
  std::optional<unsigned> failing_stage;
};

CMCertificate cm_certificate(const Ideal& a, const MinimalReduction& red,
                             Engine& eng);

// Same test against the subideals (y_1..y_j) for j = 1..d over a finite
// stage window. A verified level j says the first j initial forms act as a
// regular sequence on the associated graded ring through that window,
// giving depth evidence; only level d is conclusive for every stage.
struct DepthLadder {
  unsigned window = 0;
  unsigned levels_verified = 0;
  bool cohen_macaulay = false;
  std::optional<std::pair<unsigned, unsigned>> failure;  // (level, stage)
};

DepthLadder depth_ladder(const Ideal& a, const MinimalReduction& red,
                         Engine& eng, unsigned extra_stages = 2);

// Relations between the polynomial coefficients and the sigma sequence of
// a reduction. They are equivalences when the associated graded ring has
// depth at least dim - 1, so mismatches measure depth loss rather than
// arithmetic failure.
struct CoefficientChecks {
  bool h_from_sigma = false;
  bool e1_sum = false;
  bool e2_weighted_sum = false;
  bool e3_binomial_sum = false;  // only meaningful in dimension 3
  bool e3_zero_forces_small_red = true;
};

CoefficientChecks coefficient_checks(const HilbertData& data,
                                     const MinimalReduction& red);

// Sign statements that hold unconditionally for the closure filtration of
// an m-primary ideal: e1* >= e0* - length(A/stage 1) >= 0, e2* >= 0, and
// e3* >= 0 in dimension 3.
struct SignChecks {
  bool e1_bound = false;
  bool e2_nonnegative = false;
  bool e3_nonnegative = true;
  std::string detail;
};

SignChecks sign_checks(const HilbertData& closure_data);

enum class InstanceClass {
  verified,
  vacuous,
  counterexample_candidate,
  unresolved,
};

std::string to_string(InstanceClass c);

// Classification of one ideal against the statement: a normal m-primary
// ideal of a three dimensional regular ring with vanishing third
// coefficient has a Cohen-Macaulay associated graded ring.
struct InstanceVerdict {
  InstanceClass cls = InstanceClass::unresolved;
  std::string reason;
};

InstanceVerdict classify_instance(unsigned dim, bool normal,
                                  const HilbertData& closure_data,
                                  const SignChecks& signs,
                                  const std::optional<CMCertificate>& cm);

}  // namespace cca
