#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nband/structure.hpp"

namespace nband {

/// Cyclic factor orders of a finite Abelian group.
struct GroupSpec {
  std::vector<unsigned> factors;

  unsigned order() const;
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Direct product of cyclic groups in factor order, identity 0, elements
/// encoded mixed-radix with the first factor most significant. Throws
/// InputError when a factor does not divide n-1.
GroupTable make_group(const GroupSpec& spec, unsigned arity);

/// Invariant-factor specs (d1 >= d2 >= ..., d_{i+1} | d_i, each d_i | n-1)
/// whose product is `order`. Empty when no Abelian group of that order has
/// exponent dividing n-1.
std::vector<GroupSpec> group_specs(unsigned order, unsigned arity);

/// Every map h(x) = g2 * psi(x) with psi a group homomorphism g1 -> g2,
/// sorted lexicographically. Maps are over positions.
std::vector<std::vector<Element>> nary_homs(const GroupTable& g1, const GroupTable& g2,
                                            unsigned arity);

/// F(x1..xn) = product in class alpha of phi_{alpha_i, alpha}(x_i), alpha the
/// meet of the argument classes. Throws DomainError with the validation
/// report when the system is invalid.
OpTable compose(const StrongSystem& s, unsigned arity, Verify verify = Verify::yes);

struct BandCatalog {
  unsigned size = 0;
  unsigned arity = 0;
  bool up_to_iso = false;
  std::vector<OpTable> entries;  // sorted by values
  std::uint64_t labeled = 0;
  std::uint64_t iso = 0;
};

/// Calls `visit` once for every strong system on {0..m-1} (set partition,
/// semilattice on the classes, labeled group structure per class, coherent
/// homomorphisms). Distinct systems compose to distinct tables.
void for_each_system(unsigned size, unsigned arity,
                     const std::function<void(const StrongSystem&)>& visit,
                     const Budget& budget = {});

/// All symmetric n-ary bands on {0..m-1} via the structure theorem. With
/// up_to_iso the entries are canonical forms.
BandCatalog enumerate_bands(unsigned size, unsigned arity, bool up_to_iso,
                            const Budget& budget = {});

/// Independent oracle: all symmetric idempotent tables filtered by the
/// associativity check. Entries are labeled tables.
BandCatalog brute_force_bands(unsigned size, unsigned arity, const Budget& budget = {});

/// Sorted canonical forms of a set of tables.
std::vector<OpTable> canonical_set(const std::vector<OpTable>& tables, const Budget& budget = {});

}  // namespace nband
