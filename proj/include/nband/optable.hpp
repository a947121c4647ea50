#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "nband/config.hpp"

namespace nband {

/// Elements of a carrier of size m are the indices 0..m-1.
using Element = std::uint32_t;

/// Bijection between n-tuples over {0..m-1} and flat indices, first
/// coordinate most significant.
class TupleCodec {
 public:
  TupleCodec(unsigned size, unsigned arity);

  unsigned size() const { return size_; }
  unsigned arity() const { return arity_; }
  std::uint64_t count() const { return count_; }

  std::uint64_t encode(std::span<const Element> tuple) const;
  void decode(std::uint64_t index, std::span<Element> out) const;
  std::vector<Element> decode(std::uint64_t index) const;

 private:
  unsigned size_;
  unsigned arity_;
  std::uint64_t count_;
};

/// Number of cells m^n, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> checked_power(std::uint64_t base, unsigned exp);

/// Dense value table of a finite n-ary operation on {0..m-1}. Immutable
/// after construction.
class OpTable {
 public:
  /// The binary operation on a one-element carrier.
  OpTable() : OpTable(2, 1, {0}) {}
  OpTable(unsigned arity, unsigned size, std::vector<Element> values);

  /// Tabulates fn over all tuples in index order.
  static OpTable tabulate(unsigned arity, unsigned size,
                          const std::function<Element(std::span<const Element>)>& fn);

  unsigned arity() const { return codec_.arity(); }
  unsigned size() const { return codec_.size(); }
  std::uint64_t cell_count() const { return values_.size(); }
  std::span<const Element> values() const { return values_; }
  const TupleCodec& codec() const { return codec_; }

  /// Checked evaluation; throws InputError on a wrong length or an
  /// out-of-range entry.
  Element eval(std::span<const Element> tuple) const;
  Element eval(std::initializer_list<Element> tuple) const {
    return eval(std::span<const Element>(tuple.begin(), tuple.size()));
  }

  /// Unchecked evaluation for hot loops.
  Element operator()(std::span<const Element> tuple) const {
    std::uint64_t idx = 0;
    for (Element x : tuple) idx = idx * size() + x;
    return values_[idx];
  }
  Element at(std::uint64_t index) const { return values_[index]; }
  /// Binary shorthand, unchecked.
  Element at2(Element x, Element y) const {
    return values_[static_cast<std::uint64_t>(x) * size() + y];
  }

  friend bool operator==(const OpTable& a, const OpTable& b) {
    return a.arity() == b.arity() && a.size() == b.size() && a.values_ == b.values_;
  }
  /// Orders by (arity, size, values) lexicographically.
  friend std::strong_ordering operator<=>(const OpTable& a, const OpTable& b);

 private:
  TupleCodec codec_;
  std::vector<Element> values_;
};

struct AssociativityWitness {
  std::vector<Element> tuple;  // length 2n-1
  unsigned position;           // bracket position i in 1..n-1
};

struct SymmetryWitness {
  std::vector<Element> tuple;
  std::vector<Element> swapped;  // tuple with an adjacent pair exchanged
};

struct IdempotencyWitness {
  Element element;
};

enum class AssociativityPath {
  automatic,       // fast path iff the table is symmetric
  general,         // every bracket position
  symmetric_fast,  // only i = n-1; correct only for symmetric tables
};

/// nullopt when the generalized associativity law holds. Bracket positions
/// are scanned from i = n-1 down to 1, tuples lexicographically within each
/// position, so the reported witness is deterministic and identical on both
/// paths for symmetric tables.
std::optional<AssociativityWitness> check_associative(
    const OpTable& t, AssociativityPath path = AssociativityPath::automatic);

/// nullopt when t is invariant under argument permutations. Adjacent
/// transpositions are scanned in ascending order, tuples lexicographically.
std::optional<SymmetryWitness> check_symmetric(const OpTable& t);

std::optional<IdempotencyWitness> check_idempotent(const OpTable& t);

/// True when all three axioms hold.
bool is_symmetric_band(const OpTable& t);

/// F^q, the (qn-q+1)-ary right-nested extension. q = 1 returns t.
OpTable extend(const OpTable& t, unsigned q, const Budget& budget = {});

/// n-ary extension of a binary operation (extend(g, n-1)).
OpTable nary_extension(const OpTable& binary, unsigned arity, const Budget& budget = {});

/// Neutral elements: F((k-1)e, x, (n-k)e) = x for all x and all k.
std::vector<Element> neutral_elements(const OpTable& t);

/// result(pi x1, ..., pi xn) = pi(t(x1, ..., xn)).
OpTable relabel(const OpTable& t, std::span<const Element> perm);

/// Lexicographically least values sequence over all m! relabelings.
OpTable canonical_form(const OpTable& t, const Budget& budget = {});

bool isomorphic(const OpTable& a, const OpTable& b, const Budget& budget = {});

/// Throws DomainError naming the first failed axiom and its witness.
void require_symmetric_band(const OpTable& t);

}  // namespace nband
