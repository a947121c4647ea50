#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nband/optable.hpp"

namespace nband {

enum class Verify { yes, no };

/// Rows of the left translations: row x is y -> B(x, y).
struct LambdaTable {
  std::vector<std::vector<Element>> rows;

  unsigned size() const { return static_cast<unsigned>(rows.size()); }
  const std::vector<Element>& row(Element x) const { return rows[x]; }
};

/// The classes of the least semilattice congruence. Classes are sorted and
/// ordered by least member, so class indices are stable.
struct SigmaPartition {
  std::vector<std::size_t> class_of;
  std::vector<std::vector<Element>> classes;

  std::size_t class_count() const { return classes.size(); }

  /// Builds from a class list; throws InputError if it does not partition
  /// {0..m-1}. The list is normalized to least-member order.
  static SigmaPartition from_classes(std::vector<std::vector<Element>> classes, unsigned size);

  friend bool operator==(const SigmaPartition&, const SigmaPartition&) = default;
};

/// Meet table on the class set; beta <= alpha iff meet(alpha, beta) = beta.
struct QuotientSemilattice {
  OpTable meet;

  std::size_t size() const { return meet.size(); }
  bool leq(std::size_t beta, std::size_t alpha) const {
    return meet.at2(static_cast<Element>(alpha), static_cast<Element>(beta)) == beta;
  }
  bool geq(std::size_t alpha, std::size_t beta) const { return leq(beta, alpha); }

  friend bool operator==(const QuotientSemilattice&, const QuotientSemilattice&) = default;
};

struct Quotient {
  OpTable nary;    // F^sigma
  OpTable binary;  // B^sigma
  QuotientSemilattice semilattice;
};

enum class Classification { semilattice_extension, group_extension, general };

const char* to_string(Classification c);

struct RightNormalWitness {
  enum class Law { idempotent, associative, right_normal } law;
  std::vector<Element> tuple;
};

/// B(x, y) = F((n-1) x, y).
OpTable associated_band(const OpTable& f, Verify verify = Verify::yes);

LambdaTable lambda_table(const OpTable& f, Verify verify = Verify::yes);
LambdaTable lambda_rows(const OpTable& band);

/// nullopt iff B is idempotent, associative and right normal.
std::optional<RightNormalWitness> check_right_normal(const OpTable& band);

/// Groups elements by identical lambda rows.
SigmaPartition sigma_partition(const OpTable& f, Verify verify = Verify::yes);
SigmaPartition partition_by_rows(const LambdaTable& lambda);

/// Induced operations on the classes. Throws ConsistencyError if a value
/// depends on the choice of representatives.
Quotient quotient(const OpTable& f, const SigmaPartition& p);

Classification classify(const OpTable& f, Verify verify = Verify::yes);

/// Least semilattice congruence of a band: B(B(x,y),x) = x and B(B(y,x),y) = y.
bool band_congruent(const OpTable& band, Element x, Element y);
/// The right-normal shortcut: B(y,x) = x and B(x,y) = y.
bool right_normal_congruent(const OpTable& band, Element x, Element y);

/// Class order through representatives: alpha >= beta iff B(a, b) = b.
bool class_geq_by_representatives(const OpTable& band, const SigmaPartition& p,
                                  std::size_t alpha, std::size_t beta);

/// Composition (f o g)(y) = f(g(y)) of two self-maps.
std::vector<Element> compose_maps(const std::vector<Element>& f, const std::vector<Element>& g);

}  // namespace nband
