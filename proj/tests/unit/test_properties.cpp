// Invariants checked over every symmetric ternary band with at most four
// elements.
#include <doctest.h>

#include "nband/compose.hpp"
#include "support.hpp"

using namespace nband;
using fx::Tuple;

namespace {

const std::vector<OpTable>& catalog() {
  static const std::vector<OpTable> all = [] {
    std::vector<OpTable> out;
    for (unsigned m = 1; m <= 4; ++m)
      for (auto& t : enumerate_bands(m, 3, false).entries) out.push_back(t);
    return out;
  }();
  return all;
}

}  // namespace

TEST_CASE("extension preserves the axioms over the catalog") {
  for (const OpTable& f : catalog()) {
    OpTable e = extend(f, 2);
    CHECK(is_symmetric_band(e));
    if (f.size() <= 3) CHECK(fx::naive_band(e));
  }
}

TEST_CASE("lambda rows are idempotent maps and commute") {
  for (const OpTable& f : catalog()) {
    LambdaTable l = lambda_table(f);
    OpTable b = associated_band(f);
    for (Element x = 0; x < f.size(); ++x) {
      CHECK(compose_maps(l.row(x), l.row(x)) == l.row(x));
      for (Element y = 0; y < f.size(); ++y) {
        auto xy = compose_maps(l.row(x), l.row(y));
        CHECK(xy == compose_maps(l.row(y), l.row(x)));
        CHECK(l.row(b.at2(x, y)) == xy);
      }
    }
  }
}

TEST_CASE("congruence characterizations agree") {
  for (const OpTable& f : catalog()) {
    OpTable b = associated_band(f);
    LambdaTable l = lambda_table(f);
    SigmaPartition p = sigma_partition(f);
    for (Element x = 0; x < f.size(); ++x)
      for (Element y = 0; y < f.size(); ++y) {
        bool same = p.class_of[x] == p.class_of[y];
        CHECK(band_congruent(b, x, y) == same);
        CHECK(right_normal_congruent(b, x, y) == same);
        CHECK((l.row(x) == l.row(y)) == same);
      }
  }
}

TEST_CASE("quotient is a semilattice and the class order does not depend on representatives") {
  for (const OpTable& f : catalog()) {
    SigmaPartition p = sigma_partition(f);
    Quotient q = quotient(f, p);
    CHECK(fx::naive_band(q.binary));
    CHECK(q.nary == extend(q.binary, 2));
    OpTable b = associated_band(f);
    for (std::size_t a = 0; a < p.class_count(); ++a)
      for (std::size_t c = 0; c < p.class_count(); ++c)
        for (Element x : p.classes[a])
          for (Element y : p.classes[c])
            CHECK((b.at2(x, y) == y) == q.semilattice.geq(a, c));
  }
}

TEST_CASE("semilattice extensions are the extension of their band") {
  for (const OpTable& f : catalog())
    if (classify(f) == Classification::semilattice_extension)
      CHECK(extend(associated_band(f), 2) == f);
}

TEST_CASE("neutral choice does not change the class extension") {
  for (const OpTable& f : catalog()) {
    SigmaPartition p = sigma_partition(f);
    for (const auto& members : p.classes) {
      const auto k = static_cast<unsigned>(members.size());
      OpTable restricted = fx::table(3, k, [&](const Tuple& xs) {
        Element v = fx::get(f, {members[xs[0]], members[xs[1]], members[xs[2]]});
        return static_cast<Element>(std::find(members.begin(), members.end(), v) - members.begin());
      });
      std::vector<unsigned> signature;
      for (Element e : members) {
        ClassGroup g = class_group(f, members, e);
        CHECK(group_extension(g.group, 3) == restricted);
        if (signature.empty()) signature = g.factor_signature;
        CHECK(g.factor_signature == signature);
      }
    }
  }
}

TEST_CASE("reconstruction through the decomposed system") {
  for (const OpTable& f : catalog()) {
    StrongSystem s = decompose(f);
    fx::for_each_tuple(f.size(), 3, [&](const Tuple& xs) {
      std::size_t alpha = s.partition.class_of[xs[0]];
      for (Element x : xs)
        alpha = s.quotient.meet.at2(static_cast<Element>(alpha),
                                    static_cast<Element>(s.partition.class_of[x]));
      const ClassGroup& g = s.groups[alpha];
      Element v = g.neutral();
      for (Element x : xs) v = g.mul(v, s.map_down(x, alpha));
      CHECK(v == fx::get(f, xs));
    });
  }
}

TEST_CASE("connecting maps are homomorphisms of the class restrictions") {
  for (const OpTable& f : catalog()) {
    StrongSystem s = decompose(f);
    for (const HomMap& h : s.homs) {
      const auto& src = s.partition.classes[h.from];
      auto phi = [&](Element x) {
        return h.image[std::find(src.begin(), src.end(), x) - src.begin()];
      };
      for (Element a : src)
        for (Element b : src)
          for (Element c : src)
            CHECK(phi(fx::get(f, {a, b, c})) == fx::get(f, {phi(a), phi(b), phi(c)}));
    }
  }
}

TEST_CASE("factor signature is invariant under relabeling") {
  std::vector<Element> pi{3, 1, 0, 2};
  for (const OpTable& f : catalog()) {
    if (f.size() != 4) continue;
    StrongSystem a = decompose(f);
    StrongSystem b = decompose(relabel(f, pi));
    std::multiset<std::vector<unsigned>> sa, sb;
    for (const auto& g : a.groups) sa.insert(g.factor_signature);
    for (const auto& g : b.groups) sb.insert(g.factor_signature);
    CHECK(sa == sb);
  }
}

TEST_CASE("arity five catalogs contain the larger exponents") {
  // Under n = 5 the exponent may be 4, so Z4 appears as a group extension.
  BandCatalog c = enumerate_bands(4, 5, false);
  bool has_z4 = false;
  for (const OpTable& f : c.entries) {
    CHECK(is_symmetric_band(f));
    StrongSystem s = decompose(f);
    CHECK(compose(s, 5) == f);
    for (const auto& g : s.groups)
      if (g.factor_signature == std::vector<unsigned>{4}) has_z4 = true;
  }
  CHECK(has_z4);
}
