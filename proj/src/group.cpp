#include "nband/group.hpp"

#include <algorithm>
#include <numeric>

#include "nband/errors.hpp"

namespace nband {

std::optional<std::string> abelian_group_violation(const GroupTable& g) {
  const unsigned k = g.order();
  if (g.cayley.arity() != 2) return "group table is not binary";
  if (g.identity >= k) return "identity is not an element";
  for (Element x = 0; x < k; ++x)
    if (g.mul(g.identity, x) != x || g.mul(x, g.identity) != x)
      return "identity law fails at " + std::to_string(x);
  for (Element x = 0; x < k; ++x)
    for (Element y = 0; y < k; ++y)
      if (g.mul(x, y) != g.mul(y, x))
        return "not commutative at (" + std::to_string(x) + "," + std::to_string(y) + ")";
  for (Element x = 0; x < k; ++x)
    for (Element y = 0; y < k; ++y)
      for (Element z = 0; z < k; ++z)
        if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
          return "not associative at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                 std::to_string(z) + ")";
  for (Element x = 0; x < k; ++x) {
    bool has_inverse = false;
    for (Element y = 0; y < k && !has_inverse; ++y) has_inverse = g.mul(x, y) == g.identity;
    if (!has_inverse) return "element " + std::to_string(x) + " has no inverse";
  }
  return std::nullopt;
}

Element group_inverse(const GroupTable& g, Element x) {
  for (Element y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.identity) return y;
  throw ConsistencyError("group element without inverse");
}

Element group_power(const GroupTable& g, Element x, unsigned k) {
  Element r = g.identity;
  for (unsigned i = 0; i < k; ++i) r = g.mul(r, x);
  return r;
}

unsigned element_order(const GroupTable& g, Element x) {
  Element r = x;
  for (unsigned k = 1; k <= g.order(); ++k) {
    if (r == g.identity) return k;
    r = g.mul(r, x);
  }
  throw ConsistencyError("element order exceeds group order");
}

unsigned group_exponent(const GroupTable& g) {
  unsigned e = 1;
  for (Element x = 0; x < g.order(); ++x) e = std::lcm(e, element_order(g, x));
  return e;
}

std::vector<unsigned> invariant_factors(const GroupTable& g) {
  const unsigned k = g.order();
  std::vector<bool> in_sub(k, false);
  in_sub[g.identity] = true;
  unsigned sub_size = 1;
  std::vector<unsigned> factors;
  while (sub_size < k) {
    Element best = 0;
    unsigned best_order = 0;
    for (Element x = 0; x < k; ++x) {
      unsigned ord = 1;
      for (Element p = x; !in_sub[p]; p = g.mul(p, x)) ++ord;
      if (ord > best_order) {
        best_order = ord;
        best = x;
      }
    }
    // Close the subgroup under multiplication by the new generator.
    std::vector<Element> members;
    for (Element h = 0; h < k; ++h)
      if (in_sub[h]) members.push_back(h);
    Element power = best;
    for (unsigned j = 1; j < best_order; ++j, power = g.mul(power, best))
      for (Element h : members) in_sub[g.mul(h, power)] = true;
    sub_size = static_cast<unsigned>(std::count(in_sub.begin(), in_sub.end(), true));
    factors.push_back(best_order);
  }
  return factors;
}

GroupTable rebase(const GroupTable& g, Element e, unsigned arity) {
  if (arity < 2) throw InputError("arity must be at least 2");
  const Element shift = group_power(g, e, arity - 2);
  const unsigned k = g.order();
  std::vector<Element> values(static_cast<std::size_t>(k) * k);
  for (Element x = 0; x < k; ++x)
    for (Element y = 0; y < k; ++y) values[x * k + y] = g.mul(g.mul(x, y), shift);
  return GroupTable{OpTable(2, k, std::move(values)), e};
}

OpTable group_extension(const GroupTable& g, unsigned arity, const Budget& budget) {
  return nary_extension(g.cayley, arity, budget);
}

}  // namespace nband
