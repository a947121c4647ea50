#include <doctest.h>

#include "nband/compose.hpp"
#include "nband/errors.hpp"
#include "nband/group.hpp"
#include "support.hpp"

using namespace nband;

namespace {

GroupTable cyclic(unsigned k) {
  return GroupTable{fx::table(2, k, [k](const fx::Tuple& xs) { return (xs[0] + xs[1]) % k; }), 0};
}

}  // namespace

TEST_CASE("group laws") {
  CHECK_FALSE(abelian_group_violation(cyclic(4)));
  GroupTable wrong_identity = cyclic(3);
  wrong_identity.identity = 1;
  CHECK(abelian_group_violation(wrong_identity));
  CHECK(abelian_group_violation(GroupTable{fx::nary_min(2, 2), 1}));
  // x - y mod 3 has identity-like right action only.
  CHECK(abelian_group_violation(
      GroupTable{fx::table(2, 3, [](const fx::Tuple& xs) { return (xs[0] + 3 - xs[1]) % 3; }), 0}));
}

TEST_CASE("orders, inverses and exponent") {
  GroupTable z4 = cyclic(4);
  CHECK(element_order(z4, 0) == 1);
  CHECK(element_order(z4, 1) == 4);
  CHECK(element_order(z4, 2) == 2);
  CHECK(group_inverse(z4, 1) == 3);
  CHECK(group_power(z4, 3, 3) == 1);
  CHECK(group_exponent(z4) == 4);
  CHECK(group_exponent(cyclic(1)) == 1);
}

TEST_CASE("invariant factors") {
  CHECK(invariant_factors(cyclic(1)).empty());
  CHECK(invariant_factors(cyclic(2)) == std::vector<unsigned>{2});
  CHECK(invariant_factors(cyclic(6)) == std::vector<unsigned>{6});
  CHECK(invariant_factors(make_group({{2, 2}}, 3)) == std::vector<unsigned>{2, 2});
  CHECK(invariant_factors(make_group({{4, 2}}, 5)) == std::vector<unsigned>{4, 2});
  CHECK(invariant_factors(make_group({{2, 2, 2}}, 3)) == std::vector<unsigned>{2, 2, 2});
  // Z2 x Z3 presented as a product is cyclic of order 6.
  GroupTable z2z3{fx::table(2, 6,
                            [](const fx::Tuple& xs) {
                              Element a = (xs[0] / 3 + xs[1] / 3) % 2;
                              Element b = (xs[0] % 3 + xs[1] % 3) % 3;
                              return a * 3 + b;
                            }),
                  0};
  CHECK(invariant_factors(z2z3) == std::vector<unsigned>{6});
}

TEST_CASE("invariant factors do not depend on the labeling") {
  GroupTable v = make_group({{2, 2}}, 3);
  std::vector<Element> pi{3, 1, 0, 2};
  GroupTable w{relabel(v.cayley, pi), pi[v.identity]};
  CHECK(invariant_factors(w) == std::vector<unsigned>{2, 2});
}

TEST_CASE("rebase moves the identity and keeps the n-ary extension") {
  GroupTable z4 = make_group({{4}}, 5);
  for (Element e = 0; e < 4; ++e) {
    GroupTable g = rebase(z4, e, 5);
    CHECK(g.identity == e);
    CHECK_FALSE(abelian_group_violation(g));
    CHECK(group_extension(g, 5) == group_extension(z4, 5));
  }
}

TEST_CASE("group extension of Z2 is ternary xor") {
  CHECK(group_extension(cyclic(2), 3) == fx::sum_mod(3, 2));
}
