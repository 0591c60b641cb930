#pragma once

#include <vector>

#include "cca/filtration.hpp"
#include "cca/rational.hpp"

namespace cca {

struct HilbertConfig {
  // Zero slots required after the last nonzero series coefficient before
  // the coefficient list is accepted.
  unsigned window = 3;
  // Hard cap on the number of stages whose lengths get computed.
  unsigned max_terms = 64;
};

// Numerical data of the function H(n) = length(A / stage n): the values
// themselves, the numerator coefficients h of the rational generating
// function sum H(n+1) t^n = h(t) / (1-t)^(d+1), the coefficients e_0..e_d
// of the eventual polynomial, and the index the polynomial takes over.
struct HilbertData {
  unsigned dim = 0;
  std::vector<Int> lengths;
  std::vector<Int> h;
  std::vector<Int> e;
  unsigned postulation = 0;
  // Zero slots observed past the last nonzero h entry, plus one fresh
  // stage checked against the prediction.
  unsigned certified_window = 0;
};

// Computes lengths until the numerator stabilizes through cfg.window zero
// slots and one further stage matches the extrapolation, then extracts h,
// e, and the postulation index. Throws ResourceError past cfg.max_terms
// and NotArtinianError when some stage has infinite colength.
HilbertData hilbert_data(Filtration& f, Engine& eng,
                         const HilbertConfig& cfg = {});

// Value at n of the degree-d polynomial that eventually equals H.
Int hilbert_polynomial_value(const HilbertData& data, long n);

// Multiplicity shortcut: e_0 from the adic filtration of a.
Int multiplicity(const Ideal& a, Engine& eng);

}  // namespace cca
