#include <doctest.h>

#include <set>

#include "nband/compose.hpp"
#include "nband/errors.hpp"
#include "nband/reduce.hpp"
#include "support.hpp"

using namespace nband;
using fx::Tuple;

namespace {

bool is_group(const OpTable& g) {
  for (Element e = 0; e < g.size(); ++e) {
    bool identity = true;
    for (Element x = 0; x < g.size(); ++x)
      if (g.at2(e, x) != x || g.at2(x, e) != x) identity = false;
    if (!identity) continue;
    for (Element x = 0; x < g.size(); ++x) {
      bool inverse = false;
      for (Element y = 0; y < g.size(); ++y)
        if (g.at2(x, y) == e) inverse = true;
      if (!inverse) return false;
    }
    return true;
  }
  return false;
}

}  // namespace

TEST_CASE("the first golden table is irreducible") {
  ReductionResult r = decide_reducible(decompose(fx::f1()), 3);
  REQUIRE(std::holds_alternative<Irreducible>(r));
  const auto& w = std::get<Irreducible>(r);
  CHECK(w.witness_class == 2);
  CHECK(w.images == fx::zb({3, 4}));
  CHECK(w.sources == std::vector<std::pair<std::size_t, Element>>{{0, 0}, {1, 1}});
  CHECK(all_neutral_selections(decompose(fx::f1())).empty());
}

TEST_CASE("the second golden table is reducible") {
  StrongSystem s = decompose(fx::f2());
  ReductionResult r = decide_reducible(s, 3);
  REQUIRE(is_reducible(r));
  const auto& red = std::get<Reduction>(r);
  CHECK(red.selection.element_of_class == fx::zb({1, 2, 4}));
  CHECK(nary_extension(red.table, 3) == fx::f2());
  CHECK(verify_reduction(fx::f2(), red.table).ok());
  CHECK(all_neutral_selections(s).size() == 1);
}

TEST_CASE("semilattice extensions reduce to their associated band") {
  for (const OpTable& f : {fx::nary_min(3, 3), fx::nary_max(3, 4)}) {
    ReductionResult r = decide_reducible(decompose(f), 3);
    REQUIRE(is_reducible(r));
    CHECK(std::get<Reduction>(r).table == associated_band(f));
  }
}

TEST_CASE("group extensions reduce to a group") {
  ReductionResult r = decide_reducible(decompose(fx::sum_mod(3, 2)), 3);
  REQUIRE(is_reducible(r));
  const OpTable& g = std::get<Reduction>(r).table;
  CHECK(g == OpTable(2, 2, {0, 1, 1, 0}));
  for (const OpTable& h : brute_force_reductions(fx::sum_mod(3, 2))) CHECK(is_group(h));
}

TEST_CASE("build_reduction rejects bad selections") {
  StrongSystem s = decompose(fx::f2());
  CHECK_THROWS_AS(build_reduction(s, NeutralSelection{{0, 1}}, 3), InputError);
  CHECK_THROWS_AS(build_reduction(s, NeutralSelection{{0, 1, 1}}, 3), InputError);
  CHECK_THROWS_AS(build_reduction(s, NeutralSelection{{0, 1, 2}}, 3), InputError);
}

TEST_CASE("verify_reduction reports failures") {
  ReductionReport r = verify_reduction(fx::f2(), associated_band(fx::f2()));
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.extension_matches);
  ReductionReport bad = verify_reduction(fx::nary_min(3, 2), OpTable(2, 2, {0, 0, 1, 1}));
  CHECK_FALSE(bad.symmetric);
  CHECK_THROWS_AS(verify_reduction(fx::f2(), OpTable(2, 2, {0, 0, 0, 1})), InputError);
}

TEST_CASE("golden oracle reductions") {
  CHECK(brute_force_reductions(fx::f1()).empty());
  auto g = brute_force_reductions(fx::f2());
  REQUIRE(g.size() == 1);
  CHECK(g[0] == std::get<Reduction>(decide_reducible(decompose(fx::f2()), 3)).table);
}

TEST_CASE("decision agrees with the oracle and selections account for every reduction") {
  for (unsigned m = 1; m <= 3; ++m) {
    for (const OpTable& f : enumerate_bands(m, 3, false).entries) {
      StrongSystem s = decompose(f);
      auto oracle = brute_force_reductions(f);
      ReductionResult r = decide_reducible(s, 3);
      CHECK(is_reducible(r) == !oracle.empty());
      auto selections = all_neutral_selections(s);
      std::set<OpTable> built;
      for (const auto& sel : selections) built.insert(build_reduction(s, sel, 3));
      CHECK(built == std::set<OpTable>(oracle.begin(), oracle.end()));
      for (const OpTable& g : oracle) {
        CHECK(verify_reduction(f, g).ok());
        CHECK(isomorphic(g, oracle.front()));
      }
      if (is_reducible(r))
        CHECK(std::get<Reduction>(r).selection == selections.front());
    }
  }
}

TEST_CASE("every reduction found without the symmetry restriction is symmetric") {
  for (unsigned m = 1; m <= 3; ++m)
    for (const OpTable& f : enumerate_bands(m, 3, false).entries) {
      auto general = brute_force_reductions(f, ReductionSearch::general);
      CHECK(general == brute_force_reductions(f, ReductionSearch::symmetric));
    }
}

TEST_CASE("the irreducible witness blocks every selection") {
  for (const OpTable& f : enumerate_bands(4, 3, false).entries) {
    StrongSystem s = decompose(f);
    ReductionResult r = decide_reducible(s, 3);
    if (is_reducible(r)) continue;
    const auto& w = std::get<Irreducible>(r);
    CHECK(w.images.size() >= 2);
    for (Element x : w.images) CHECK(s.partition.class_of[x] == w.witness_class);
    for (auto [c, e] : w.sources) {
      CHECK(s.quotient.geq(c, w.witness_class));
      CHECK(s.partition.class_of[e] == c);
    }
  }
}

TEST_CASE("reduction budget") {
  Budget b;
  b.max_reduction_candidates = 1000;
  CHECK_THROWS_AS(brute_force_reductions(fx::f1(), ReductionSearch::symmetric, b), ResourceError);
}
