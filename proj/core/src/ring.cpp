#include "cca/ring.hpp"

#include <cctype>
#include <set>

#include "cca/errors.hpp"

namespace cca {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

std::optional<std::size_t> RingDescriptor::var_index(
    const std::string& name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> vars, Field field,
                  MonomialOrder order) {
  if (vars.empty()) throw DomainError("a ring needs at least one variable");
  std::set<std::string> seen;
  for (const std::string& v : vars) {
    if (!valid_identifier(v))
      throw DomainError("invalid variable name: '" + v + "'");
    if (!seen.insert(v).second)
      throw DomainError("duplicate variable name: '" + v + "'");
  }
  if (order.kind == OrderKind::block &&
      (order.block_size == 0 || order.block_size >= vars.size()))
    throw DomainError("block order needs 0 < block_size < nvars");
  auto r = std::make_shared<RingDescriptor>();
  r->vars = std::move(vars);
  r->field = field;
  r->order = order;
  return r;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->vars == b->vars && a->field == b->field && a->order == b->order;
}

}  // namespace cca
