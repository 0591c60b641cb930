#include "cca/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>
#include <utility>

#include "cca/errors.hpp"
#include "cca/filtration.hpp"
#include "cca/hilbert.hpp"

namespace cca {

namespace {

std::vector<std::string> variable_names(unsigned dim) {
  static const char* names[] = {"x", "y", "z"};
  if (dim == 0 || dim > 3)
    throw DomainError("corpus dimension must be between one and three");
  return std::vector<std::string>(names, names + dim);
}

std::string instance_id(const CorpusSpec& spec, unsigned index) {
  std::string number = std::to_string(index);
  while (number.size() < 4) number.insert(number.begin(), '0');
  return "d" + std::to_string(spec.dim) + "-s" + std::to_string(spec.seed) +
         "-" + number;
}

Exponent random_bounded_exponent(RandomSource& rng, unsigned dim,
                                 int max_degree) {
  // Rejection keeps the draw uniform over the nonzero lattice points of
  // the degree simplex.
  while (true) {
    Exponent e(dim, 0);
    for (unsigned i = 0; i < dim; ++i) e[i] = rng.range(0, max_degree);
    const int t = total_degree(e);
    if (t >= 1 && t <= max_degree) return e;
  }
}

std::string monomial_string(const RingDescriptor& ring, const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.vars[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

Corpus generate_corpus(const CorpusSpec& spec) {
  if (spec.max_degree < 1)
    throw DomainError("generator degree bound must be positive");
  const Field field = field_from_name(spec.field);
  RingPtr ring = make_ring(variable_names(spec.dim), field);
  RandomSource root(spec.seed);
  const unsigned extra_cap = std::min(spec.max_extra_gens, 2 * spec.dim);

  Corpus corpus;
  corpus.instances.reserve(spec.count);
  std::set<std::string> seen;
  // Filters and duplicates only reject draws, so a generous multiple of
  // the requested count keeps full corpora deterministic while bounding
  // pathological specs.
  const std::uint64_t max_attempts = 40ULL * spec.count + 40;
  for (std::uint64_t attempt = 0;
       attempt < max_attempts && corpus.instances.size() < spec.count;
       ++attempt) {
    RandomSource rng = root.fork(attempt);
    std::vector<Exponent> gens;
    for (unsigned i = 0; i < spec.dim; ++i) {
      Exponent e(spec.dim, 0);
      e[i] = rng.range(1, spec.max_degree);
      gens.push_back(std::move(e));
    }
    const unsigned extras =
        static_cast<unsigned>(rng.range(0, static_cast<int>(extra_cap)));
    for (unsigned i = 0; i < extras; ++i)
      gens.push_back(random_bounded_exponent(rng, spec.dim, spec.max_degree));

    MonomialIdeal m = make_monomial_ideal(ring, std::move(gens));
    Ideal ideal = to_ideal(m);
    if (!seen.insert(ideal_key(ideal)).second) continue;
    if (spec.require_normal) {
      const unsigned window = spec.dim > 1 ? spec.dim - 1 : 1;
      if (!normality_report(m, window).normal) continue;
    }

    CorpusInstance inst;
    inst.id = instance_id(spec, static_cast<unsigned>(corpus.instances.size()));
    inst.ideal = std::move(ideal);
    inst.mono = std::move(m);
    inst.seed = rng.fork(0x5eedULL).next();
    corpus.instances.push_back(std::move(inst));
  }
  if (corpus.instances.size() < spec.count)
    corpus.warning = "attempt budget exhausted: generated " +
                     std::to_string(corpus.instances.size()) + " of " +
                     std::to_string(spec.count) + " requested instances";
  return corpus;
}

AnalysisRecord analyze_instance(const CorpusInstance& inst,
                                const AnalysisOptions& opt) {
  const auto started = std::chrono::steady_clock::now();
  AnalysisRecord record;
  record.id = inst.id;
  record.dim = static_cast<unsigned>(inst.ideal.ring->nvars());
  record.field = inst.ideal.ring->field.name();
  record.generators = generator_strings(inst.ideal);
  record.seed = inst.seed;

  Engine eng(opt.groebner);
  try {
    // Monomial primariness is visible in the generators; polynomial inputs
    // need the comparison of global and origin length to rule out zeros
    // elsewhere, which every length below would silently absorb.
    if (!inst.mono &&
        local_quotient_length(inst.ideal, eng) !=
            eng.quotient_length(inst.ideal))
      throw DomainError(
          "the ideal vanishes away from the origin; lengths would mix "
          "those points in");
    Filtration adic = inst.mono ? Filtration::adic(*inst.mono)
                                : Filtration::adic(inst.ideal);
    HilbertData adic_data = hilbert_data(adic, eng);
    record.e = adic_data.e;
    record.h = adic_data.h;
    record.postulation = adic_data.postulation;

    std::optional<HilbertData> closure_data;
    if (inst.mono) {
      const unsigned window = std::max(
          opt.normality_window, record.dim > 1 ? record.dim - 1 : 1u);
      NormalityReport normality = normality_report(*inst.mono, window);
      record.normality_window = normality.window;
      record.normal = normality.normal;
      record.closure_failing_power = normality.failing_power;
      if (normality.witness)
        record.closure_witness =
            monomial_string(*inst.ideal.ring, *normality.witness);

      Filtration closure = Filtration::closure(*inst.mono);
      closure_data = hilbert_data(closure, eng);
      record.e_star = closure_data->e;
      record.h_star = closure_data->h;
      record.postulation_star = closure_data->postulation;
      record.signs = sign_checks(*closure_data);
    }

    const bool hypothesis = record.dim == 3 && record.normal == true &&
                            closure_data && closure_data->e.at(3) == 0;
    if (hypothesis || opt.full) {
      ReductionSearchConfig red_cfg = opt.reduction;
      red_cfg.seed = inst.seed;
      MinimalReduction red =
          minimal_reduction(inst.ideal, eng, adic_data.e[0], red_cfg);
      record.reduction_number = red.reduction_number;
      record.sigma = red.sigma;
      record.reduction_attempts = red.attempts;
      for (const Polynomial& y : red.elements)
        record.reduction_elements.push_back(to_string(y));
      record.cm = cm_certificate(inst.ideal, red, eng);
    }

    if (closure_data) {
      record.verdict = classify_instance(record.dim, *record.normal,
                                         *closure_data, record.signs,
                                         record.cm);
    } else {
      record.verdict.cls = InstanceClass::unresolved;
      record.verdict.reason = "closure filtration needs a monomial ideal";
    }
  } catch (const Error& failure) {
    record.error = failure.what();
    record.verdict.cls = InstanceClass::unresolved;
    record.verdict.reason = failure.what();
  }
  record.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return record;
}

OracleSummary oracle_suite(const CorpusSpec& spec, unsigned power_bound,
                           unsigned points_per_instance) {
  Corpus corpus = generate_corpus(spec);
  Engine eng;
  OracleSummary summary;
  auto report = [&](const std::string& what, const std::string& id) {
    summary.disagreements.push_back(what + " on " + id);
  };

  RandomSource rng(spec.seed ^ 0x0eac1eULL);
  const auto& instances = corpus.instances;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const MonomialIdeal& a = *instances[i].mono;
    const Ideal& A = instances[i].ideal;
    const MonomialIdeal& b = *instances[(i + 1) % instances.size()].mono;
    const Ideal& B = instances[(i + 1) % instances.size()].ideal;

    ++summary.length_checks;
    if (eng.quotient_length(A) != mono_length(a))
      report("quotient length vs staircase count", instances[i].id);

    auto same = [&](const Ideal& lhs, const MonomialIdeal& rhs) {
      std::optional<MonomialIdeal> m = as_monomial_ideal(lhs);
      return m && mono_equal(*m, rhs);
    };
    ++summary.operation_checks;
    if (!same(eng.product(A, B), mono_product(a, b)))
      report("product", instances[i].id);
    ++summary.operation_checks;
    if (!same(eng.power(A, 2), mono_power(a, 2)))
      report("square", instances[i].id);
    ++summary.operation_checks;
    if (!same(eng.intersection(A, B), mono_intersection(a, b)))
      report("intersection", instances[i].id);
    ++summary.operation_checks;
    if (!same(eng.colon(A, B), mono_colon(a, b)))
      report("colon", instances[i].id);

    // Facet membership against the bounded power test: a certified point
    // must lie in the polyhedron, and power tests never certify points the
    // facets exclude. The simplex route must match the facets everywhere.
    NewtonPolyhedron np = newton_polyhedron(a);
    std::vector<MonomialIdeal> powers{a};
    for (unsigned k = 2; k <= power_bound; ++k)
      powers.push_back(mono_product(powers.back(), a));
    const unsigned dim = static_cast<unsigned>(a.ring->nvars());
    for (unsigned s = 0; s < points_per_instance; ++s) {
      Exponent v(dim, 0);
      for (unsigned t = 0; t < dim; ++t)
        v[t] = rng.range(0, 2 * spec.max_degree);
      bool certified = false;
      for (unsigned k = 1; k <= power_bound && !certified; ++k) {
        Exponent scaled(dim, 0);
        for (unsigned t = 0; t < dim; ++t)
          scaled[t] = static_cast<int>(k) * v[t];
        certified = mono_contains(powers[k - 1], scaled);
      }
      ++summary.membership_checks;
      const bool inside = np_contains(np, v);
      if (certified && !inside)
        report("power test certified a point outside the polyhedron",
               instances[i].id);
      if (inside != np_contains_lp(a.gens, v))
        report("facet membership vs simplex membership", instances[i].id);
    }
  }
  return summary;
}

std::vector<AnalysisRecord> run_analysis(
    const std::vector<CorpusInstance>& corpus, const AnalysisOptions& opt,
    unsigned jobs) {
  std::vector<AnalysisRecord> records(corpus.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i)
      records[i] = analyze_instance(corpus[i], opt);
    return records;
  }
  std::vector<std::thread> workers;
  std::atomic<std::size_t> cursor{0};
  for (unsigned w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      while (true) {
        const std::size_t i = cursor.fetch_add(1);
        if (i >= corpus.size()) return;
        records[i] = analyze_instance(corpus[i], opt);
      }
    });
  for (std::thread& t : workers) t.join();
  return records;
}

}  // namespace cca
