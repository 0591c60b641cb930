#include "cca/filtration.hpp"

#include <string>
#include <utility>

#include "cca/errors.hpp"

namespace cca {

namespace {

Ideal unit_ideal(const RingPtr& ring) {
  return make_ideal(ring, {poly_constant(ring, ring->field.one())});
}

}  // namespace

Filtration Filtration::adic(Ideal base) {
  Filtration f;
  f.kind_ = FiltrationKind::adic;
  f.ring_ = base.ring;
  if (auto m = as_monomial_ideal(base)) f.base_mono_ = std::move(*m);
  f.base_ = std::move(base);
  return f;
}

Filtration Filtration::adic(MonomialIdeal base) {
  Filtration f;
  f.kind_ = FiltrationKind::adic;
  f.ring_ = base.ring;
  f.base_ = to_ideal(base);
  f.base_mono_ = std::move(base);
  return f;
}

Filtration Filtration::closure(MonomialIdeal base) {
  Filtration f;
  f.kind_ = FiltrationKind::integral_closure;
  f.ring_ = base.ring;
  f.base_ = to_ideal(base);
  f.np_ = newton_polyhedron(base);
  f.base_mono_ = std::move(base);
  return f;
}

Filtration Filtration::ratliff_rush(Ideal base) {
  Filtration f;
  f.kind_ = FiltrationKind::ratliff_rush;
  f.ring_ = base.ring;
  if (auto m = as_monomial_ideal(base)) f.base_mono_ = std::move(*m);
  f.base_ = std::move(base);
  return f;
}

Filtration Filtration::ratliff_rush(MonomialIdeal base) {
  Filtration f;
  f.kind_ = FiltrationKind::ratliff_rush;
  f.ring_ = base.ring;
  f.base_ = to_ideal(base);
  f.base_mono_ = std::move(base);
  return f;
}

Filtration Filtration::veronese(Filtration inner, unsigned factor) {
  if (factor == 0) throw DomainError("veronese factor must be positive");
  Filtration f;
  f.kind_ = FiltrationKind::veronese;
  f.ring_ = inner.ring_;
  f.factor_ = factor;
  f.inner_ = std::make_shared<Filtration>(std::move(inner));
  return f;
}

Filtration Filtration::shift(Filtration inner, unsigned offset) {
  Filtration f;
  f.kind_ = FiltrationKind::shift;
  f.ring_ = inner.ring_;
  f.offset_ = offset;
  f.inner_ = std::make_shared<Filtration>(std::move(inner));
  return f;
}

const FiltrationTerm& Filtration::store(unsigned n, Ideal ideal,
                                        std::optional<MonomialIdeal> mono) {
  if (cache_.size() <= n) cache_.resize(n + 1);
  cache_[n].reset(new FiltrationTerm{std::move(ideal), std::move(mono)});
  return *cache_[n];
}

const FiltrationTerm& Filtration::term(Engine& eng, unsigned n) {
  if (n < cache_.size() && cache_[n]) return *cache_[n];
  switch (kind_) {
    case FiltrationKind::adic: {
      if (base_mono_) {
        MonomialIdeal p = mono_power(*base_mono_, n);
        Ideal ideal = to_ideal(p);
        return store(n, std::move(ideal), std::move(p));
      }
      return store(n, eng.power(base_, n), std::nullopt);
    }
    case FiltrationKind::integral_closure: {
      MonomialIdeal p = integral_closure_power(*np_, n);
      Ideal ideal = to_ideal(p);
      return store(n, std::move(ideal), std::move(p));
    }
    case FiltrationKind::ratliff_rush: {
      if (base_mono_) {
        MonomialIdeal p = ratliff_rush_stage(*base_mono_, n);
        Ideal ideal = to_ideal(p);
        return store(n, std::move(ideal), std::move(p));
      }
      return store(n, ratliff_rush_stage(eng, base_, n), std::nullopt);
    }
    case FiltrationKind::veronese: {
      const FiltrationTerm& t = inner_->term(eng, factor_ * n);
      return store(n, t.ideal, t.mono);
    }
    case FiltrationKind::shift: {
      const FiltrationTerm& t = inner_->term(eng, n + offset_);
      return store(n, t.ideal, t.mono);
    }
  }
  throw DomainError("unknown filtration kind");
}

void Filtration::check_axioms(Engine& eng, unsigned upto) {
  auto contained = [&](const FiltrationTerm& outer,
                       const FiltrationTerm& inner) {
    if (outer.mono && inner.mono) return mono_contains(*outer.mono, *inner.mono);
    return eng.contains(outer.ideal, inner.ideal);
  };

  bool shifted = false;
  for (const Filtration* f = this; f != nullptr; f = f->inner_.get())
    if (f->kind_ == FiltrationKind::shift) shifted = true;
  if (!shifted) {
    const FiltrationTerm& t0 = term(eng, 0);
    if (!eng.contains(t0.ideal, unit_ideal(ring_)))
      throw CertificationError(describe() + ": stage 0 is not the unit ideal");
  }

  for (unsigned n = 0; n < upto; ++n) {
    if (!contained(term(eng, n), term(eng, n + 1)))
      throw CertificationError(describe() + ": stage " + std::to_string(n + 1) +
                               " is not inside stage " + std::to_string(n));
  }
  for (unsigned m = 1; m <= upto; ++m) {
    for (unsigned n = m; m + n <= upto; ++n) {
      FiltrationTerm product;
      const FiltrationTerm& tm = term(eng, m);
      const FiltrationTerm& tn = term(eng, n);
      if (tm.mono && tn.mono) {
        product.mono = mono_product(*tm.mono, *tn.mono);
        product.ideal = to_ideal(*product.mono);
      } else {
        product.ideal = eng.product(tm.ideal, tn.ideal);
      }
      if (!contained(term(eng, m + n), product))
        throw CertificationError(
            describe() + ": stage " + std::to_string(m) + " times stage " +
            std::to_string(n) + " escapes stage " + std::to_string(m + n));
    }
  }
}

std::string Filtration::describe() const {
  switch (kind_) {
    case FiltrationKind::adic:
      return "adic{" + ideal_key(base_) + "}";
    case FiltrationKind::integral_closure:
      return "closure{" + ideal_key(base_) + "}";
    case FiltrationKind::ratliff_rush:
      return "ratliff_rush{" + ideal_key(base_) + "}";
    case FiltrationKind::veronese:
      return "veronese[" + std::to_string(factor_) + "]{" +
             inner_->describe() + "}";
    case FiltrationKind::shift:
      return "shift[" + std::to_string(offset_) + "]{" + inner_->describe() +
             "}";
  }
  return "filtration{?}";
}

Ideal ratliff_rush_stage(Engine& eng, const Ideal& base, unsigned n) {
  if (n == 0) return unit_ideal(base.ring);
  Ideal current = eng.power(base, n);
  unsigned stable = 0;
  for (unsigned k = 1; k <= kRatliffRushChainCap; ++k) {
    Ideal next = eng.colon(eng.power(base, n + k), eng.power(base, k));
    if (eng.equal(next, current)) {
      if (++stable == 2) return current;
    } else {
      current = std::move(next);
      stable = 0;
    }
  }
  throw ResourceError("colon chain for stage " + std::to_string(n) +
                      " still moving after " +
                      std::to_string(kRatliffRushChainCap) + " steps");
}

MonomialIdeal ratliff_rush_stage(const MonomialIdeal& base, unsigned n) {
  if (n == 0)
    return make_monomial_ideal(base.ring, {Exponent(base.ring->nvars(), 0)});
  MonomialIdeal current = mono_power(base, n);
  unsigned stable = 0;
  for (unsigned k = 1; k <= kRatliffRushChainCap; ++k) {
    MonomialIdeal next = mono_colon(mono_power(base, n + k), mono_power(base, k));
    if (mono_equal(next, current)) {
      if (++stable == 2) return current;
    } else {
      current = std::move(next);
      stable = 0;
    }
  }
  throw ResourceError("colon chain for stage " + std::to_string(n) +
                      " still moving after " +
                      std::to_string(kRatliffRushChainCap) + " steps");
}

}  // namespace cca
