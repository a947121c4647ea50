#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nband/structure.hpp"

namespace nband {

/// e_alpha for every class alpha, indexed by class.
struct NeutralSelection {
  std::vector<Element> element_of_class;

  friend bool operator==(const NeutralSelection&, const NeutralSelection&) = default;
};

struct Reduction {
  NeutralSelection selection;
  OpTable table;  // binary
};

/// Mirrors the contradiction argument: `images` are the distinct values that
/// the already chosen neutrals `sources` force on `witness_class`.
struct Irreducible {
  std::size_t witness_class = 0;
  std::vector<Element> images;
  std::vector<std::pair<std::size_t, Element>> sources;  // (class, e_class)
};

using ReductionResult = std::variant<Reduction, Irreducible>;

inline bool is_reducible(const ReductionResult& r) {
  return std::holds_alternative<Reduction>(r);
}

/// Searches for neutrals with e_alpha in class alpha and
/// phi_{alpha,beta}(e_alpha) = e_beta, depth first from the maximal classes
/// down a linear extension of >=. Returns the lexicographically least
/// selection (by class index) and its reduction, or a witness.
ReductionResult decide_reducible(const StrongSystem& s, unsigned arity,
                                 Verify verify = Verify::yes);

/// Every selection satisfying both conditions, in lexicographic order.
std::vector<NeutralSelection> all_neutral_selections(const StrongSystem& s);

/// G(x, y) = G_gamma(phi(x), phi(y)) with gamma the meet of the two classes
/// and G_gamma the class group re-based at e_gamma. Throws InputError if the
/// selection breaks either condition.
OpTable build_reduction(const StrongSystem& s, const NeutralSelection& selection, unsigned arity);

struct ReductionReport {
  bool extension_matches = false;
  bool associative = false;
  bool symmetric = false;
  bool surjective = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Checks extend(G, n-1) = F cell by cell plus associativity, symmetry and
/// surjectivity of G.
ReductionReport verify_reduction(const OpTable& f, const OpTable& g, const Budget& budget = {});

enum class ReductionSearch {
  symmetric,  // m^(m(m+1)/2) symmetric candidates
  general,    // all m^(m*m) binary tables; a check on the symmetric restriction
};

/// Every binary table G with extend(G, n-1) = F, sorted by values.
std::vector<OpTable> brute_force_reductions(const OpTable& f,
                                            ReductionSearch search = ReductionSearch::symmetric,
                                            const Budget& budget = {});

}  // namespace nband
