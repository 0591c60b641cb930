#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cca/field.hpp"
#include "cca/monomial.hpp"

namespace cca {

// Ambient polynomial ring: named variables over a coefficient field with a
// fixed monomial order. Shared immutably by everything built on top.
struct RingDescriptor {
  std::vector<std::string> vars;
  Field field;
  MonomialOrder order;

  std::size_t nvars() const { return vars.size(); }
  std::optional<std::size_t> var_index(const std::string& name) const;
};

using RingPtr = std::shared_ptr<const RingDescriptor>;

// Validates variable names (identifiers, pairwise distinct, nonempty list).
// Throws DomainError on violations.
RingPtr make_ring(std::vector<std::string> vars, Field field,
                  MonomialOrder order = {});

// Structural equality; distinct RingPtr values may describe the same ring.
bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace cca
