#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nband/optable.hpp"

namespace nband {

/// A finite group given by its Cayley table over positions 0..k-1.
struct GroupTable {
  OpTable cayley;
  Element identity = 0;

  unsigned order() const { return cayley.size(); }
  Element mul(Element a, Element b) const { return cayley.at2(a, b); }

  friend bool operator==(const GroupTable&, const GroupTable&) = default;
};

/// Describes the first failed group law, or nullopt when `g` is an Abelian
/// group with the stated identity.
std::optional<std::string> abelian_group_violation(const GroupTable& g);

Element group_inverse(const GroupTable& g, Element x);
Element group_power(const GroupTable& g, Element x, unsigned k);
unsigned element_order(const GroupTable& g, Element x);
unsigned group_exponent(const GroupTable& g);

/// Invariant factors d1, d2, ... with d_{i+1} | d_i and product |G|, obtained
/// by repeatedly extracting an element of maximal order modulo the subgroup
/// generated so far. The trivial group has an empty signature.
std::vector<unsigned> invariant_factors(const GroupTable& g);

/// x * y * e^(n-2) in g: the binary operation F(x, (n-2)e, y) of the n-ary
/// extension of g, re-based at e. Its identity is e.
GroupTable rebase(const GroupTable& g, Element e, unsigned arity);

/// The n-ary extension x1 * ... * xn of g as a table.
OpTable group_extension(const GroupTable& g, unsigned arity, const Budget& budget = {});

}  // namespace nband
