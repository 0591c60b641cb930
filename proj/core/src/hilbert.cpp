#include "cca/hilbert.hpp"

#include <algorithm>

#include "cca/errors.hpp"

namespace cca {

namespace {

Int stage_length(Filtration& f, Engine& eng, unsigned n) {
  const FiltrationTerm& t = f.term(eng, n);
  if (t.mono) return Int(mono_length(*t.mono));
  return Int(eng.quotient_length(t.ideal));
}

// Coefficient j of (1-t)^(d+1) * sum H(n+1) t^n, defined for j + 1 within
// the computed table.
Int series_coefficient(const std::vector<Int>& lengths, unsigned d,
                       unsigned j) {
  Int value = 0;
  for (unsigned i = 0; i <= std::min(j, d + 1); ++i) {
    const Int c = binomial(Int(d + 1), i);
    const Int& len = lengths.at(j - i + 1);
    if (i % 2 == 0)
      value += c * len;
    else
      value -= c * len;
  }
  return value;
}

Int predicted_length(const std::vector<Int>& h, unsigned d, long n) {
  // H(n) = sum_j h_j C(n - 1 - j + d, d) once every nonzero h_j is known.
  Int value = 0;
  for (std::size_t j = 0; j < h.size(); ++j)
    value += h[j] * binomial(Int(n - 1 - static_cast<long>(j) + d), d);
  return value;
}

}  // namespace

HilbertData hilbert_data(Filtration& f, Engine& eng, const HilbertConfig& cfg) {
  HilbertData data;
  const unsigned d = static_cast<unsigned>(f.ring()->nvars());
  data.dim = d;

  std::vector<Int>& H = data.lengths;
  auto extend_to = [&](unsigned n) {
    while (H.size() <= n) {
      if (H.size() > cfg.max_terms)
        throw ResourceError("length table for " + f.describe() +
                            " exceeded " + std::to_string(cfg.max_terms) +
                            " stages without stabilizing");
      H.push_back(stage_length(f, eng, static_cast<unsigned>(H.size())));
    }
  };

  unsigned N = d + cfg.window + 2;
  while (true) {
    extend_to(N);
    std::vector<Int> h;
    for (unsigned j = 0; j + 1 <= N; ++j)
      h.push_back(series_coefficient(H, d, j));
    unsigned last = 0;
    bool any = false;
    for (unsigned j = 0; j < h.size(); ++j)
      if (h[j] != 0) {
        last = j;
        any = true;
      }
    if (!any)
      throw DomainError("every stage has length zero; the filtration base "
                        "is the unit ideal");
    if (h.size() - 1 - last >= cfg.window) {
      h.resize(last + 1);
      extend_to(N + 1);
      if (H[N + 1] == predicted_length(h, d, static_cast<long>(N) + 1)) {
        data.h = std::move(h);
        data.certified_window = cfg.window + 1;
        break;
      }
    }
    N += cfg.window;
  }

  data.e.assign(d + 1, Int(0));
  for (unsigned i = 0; i <= d; ++i)
    for (std::size_t j = 0; j < data.h.size(); ++j)
      data.e[i] += binomial(Int(j), i) * data.h[j];

  data.postulation = 0;
  for (std::size_t n = 0; n < H.size(); ++n)
    if (H[n] != predicted_length(data.h, d, static_cast<long>(n)))
      data.postulation = static_cast<unsigned>(n) + 1;
  return data;
}

Int hilbert_polynomial_value(const HilbertData& data, long n) {
  return predicted_length(data.h, data.dim, n);
}

Int multiplicity(const Ideal& a, Engine& eng) {
  Filtration f = Filtration::adic(a);
  return hilbert_data(f, eng).e[0];
}

}  // namespace cca
