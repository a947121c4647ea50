#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nband/bandcore.hpp"
#include "nband/group.hpp"

namespace nband {

/// The Abelian group carried by one sigma-class. The Cayley table is over
/// member positions; `group.identity` is the position of the neutral element.
struct ClassGroup {
  std::size_t class_index = 0;
  std::vector<Element> members;
  GroupTable group;
  std::vector<unsigned> factor_signature;

  Element neutral() const { return members[group.identity]; }
  std::size_t position_of(Element x) const;
  /// Cayley product on carrier elements.
  Element mul(Element x, Element y) const;
};

/// phi_{from,to}: members(from) -> members(to); image[i] is the image of
/// members(from)[i].
struct HomMap {
  std::size_t from = 0;
  std::size_t to = 0;
  std::vector<Element> image;

  friend bool operator==(const HomMap&, const HomMap&) = default;
};

/// A strong n-ary semilattice of n-ary extensions of Abelian groups.
struct StrongSystem {
  std::vector<std::string> labels;
  unsigned arity = 0;
  SigmaPartition partition;
  QuotientSemilattice quotient;
  std::vector<ClassGroup> groups;  // one per class, in class order
  std::vector<HomMap> homs;        // every comparable pair, sorted by (from, to)

  unsigned element_count() const { return static_cast<unsigned>(partition.class_of.size()); }
  std::size_t class_count() const { return partition.class_count(); }
  /// nullptr if no map is stored for the pair.
  const HomMap* hom(std::size_t from, std::size_t to) const;
  /// phi_{class_of(x), to}(x); throws InputError if not comparable.
  Element map_down(Element x, std::size_t to) const;
};

struct Violation {
  enum class Kind {
    semilattice,
    partition,
    group,
    exponent,
    missing_hom,
    hom_image,
    identity_hom,
    coherence,
    hom_shape,
  } kind;
  std::string message;
};

const char* to_string(Violation::Kind kind);

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(Violation::Kind kind) const;
  std::string summary() const;
};

/// Group G_e(x, y) = F(x, (n-2)e, y) on `members`.
ClassGroup class_group(const OpTable& f, const std::vector<Element>& members, Element neutral);

/// phi_{alpha,beta} = lambda_y restricted to members(alpha), y in beta, for
/// every alpha >= beta.
std::vector<HomMap> hom_maps(const OpTable& f, const SigmaPartition& p,
                             const QuotientSemilattice& q);

StrongSystem decompose(const OpTable& f, Verify verify = Verify::yes);

/// Checks every condition of a strong n-ary semilattice and collects all
/// violations.
ValidationReport validate_system(const StrongSystem& s, unsigned arity);

/// True when h is a homomorphism between the n-ary extensions of g1 and g2
/// (positions on both sides).
bool is_nary_hom(const GroupTable& g1, const GroupTable& g2, const std::vector<Element>& h,
                 unsigned arity);

/// True when h(x) = h(e1) * psi(x) with psi a group homomorphism.
bool is_translated_group_hom(const GroupTable& g1, const GroupTable& g2,
                             const std::vector<Element>& h);

/// Classes in a linear extension of >=: every class precedes all classes
/// strictly below it; ties broken by class index.
std::vector<std::size_t> top_down_order(const QuotientSemilattice& q);

}  // namespace nband
