#pragma once
// Test fixtures and brute-force oracles. Nothing here calls into the library
// beyond constructing OpTable values.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "nband/optable.hpp"

namespace fx {

using nband::Element;
using nband::OpTable;
using Tuple = std::vector<Element>;

inline std::uint64_t index_of(const Tuple& xs, unsigned m) {
  std::uint64_t idx = 0;
  for (Element x : xs) idx = idx * m + x;
  return idx;
}

inline void for_each_tuple(unsigned m, unsigned len, const std::function<void(const Tuple&)>& fn) {
  Tuple xs(len, 0);
  while (true) {
    fn(xs);
    std::size_t i = len;
    while (i > 0 && ++xs[i - 1] == m) xs[--i] = 0;
    if (i == 0) return;
  }
}

inline OpTable table(unsigned n, unsigned m, const std::function<Element(const Tuple&)>& fn) {
  std::vector<Element> v;
  for_each_tuple(m, n, [&](const Tuple& xs) { v.push_back(fn(xs)); });
  return OpTable(n, m, std::move(v));
}

inline Element get(const OpTable& t, const Tuple& xs) { return t.values()[index_of(xs, t.size())]; }

// Level sets of the two 4-element ternary examples, as sorted 1-based
// multisets. Every multiset not listed maps to 4.
inline OpTable from_level_sets(const std::vector<std::pair<Element, std::vector<Tuple>>>& levels) {
  return table(3, 4, [&](const Tuple& xs) {
    Tuple key;
    for (Element x : xs) key.push_back(x + 1);
    std::sort(key.begin(), key.end());
    for (const auto& [value, sets] : levels)
      for (const auto& s : sets)
        if (s == key) return value - 1;
    return Element{3};
  });
}

inline OpTable f1() {
  return from_level_sets({{1, {{1, 1, 1}}},
                          {2, {{2, 2, 2}}},
                          {3, {{1, 1, 2}, {1, 1, 3}, {1, 2, 4}, {1, 3, 4}, {2, 2, 3}, {2, 3, 3},
                               {2, 4, 4}, {3, 3, 3}, {3, 4, 4}}}});
}

inline OpTable f2() {
  return from_level_sets({{1, {{1, 1, 1}}},
                          {2, {{2, 2, 2}}},
                          {3, {{1, 1, 3}, {1, 2, 3}, {1, 3, 4}, {2, 2, 3}, {2, 3, 4}, {3, 3, 3},
                               {3, 4, 4}}}});
}

inline OpTable majority() {
  return table(3, 2, [](const Tuple& xs) { return Element(xs[0] + xs[1] + xs[2] >= 2); });
}

inline OpTable nary_min(unsigned n, unsigned m) {
  return table(n, m, [](const Tuple& xs) { return *std::min_element(xs.begin(), xs.end()); });
}

inline OpTable nary_max(unsigned n, unsigned m) {
  return table(n, m, [](const Tuple& xs) { return *std::max_element(xs.begin(), xs.end()); });
}

inline OpTable sum_mod(unsigned n, unsigned m) {
  return table(n, m, [m](const Tuple& xs) {
    Element s = 0;
    for (Element x : xs) s += x;
    return s % m;
  });
}

inline OpTable heap3() {
  return table(3, 3, [](const Tuple& xs) { return (xs[0] + 3 - xs[1] + xs[2]) % 3; });
}

// 1-based labels to indices.
inline Tuple zb(std::initializer_list<Element> xs) {
  Tuple out;
  for (Element x : xs) out.push_back(x - 1);
  return out;
}

// Both sides of the generalized associative law, computed directly.
inline bool naive_associative(const OpTable& t) {
  const unsigned n = t.arity(), m = t.size();
  bool ok = true;
  for_each_tuple(m, 2 * n - 1, [&](const Tuple& xs) {
    if (!ok) return;
    auto side = [&](unsigned i) {
      Tuple inner(xs.begin() + i, xs.begin() + i + n);
      Tuple outer(xs.begin(), xs.begin() + i);
      outer.push_back(get(t, inner));
      outer.insert(outer.end(), xs.begin() + i + n, xs.end());
      return get(t, outer);
    };
    Element first = side(0);
    for (unsigned i = 1; i < n; ++i)
      if (side(i) != first) ok = false;
  });
  return ok;
}

inline bool naive_symmetric(const OpTable& t) {
  bool ok = true;
  for_each_tuple(t.size(), t.arity(), [&](const Tuple& xs) {
    Tuple s = xs;
    std::sort(s.begin(), s.end());
    if (get(t, s) != get(t, xs)) ok = false;
  });
  return ok;
}

inline bool naive_idempotent(const OpTable& t) {
  for (Element x = 0; x < t.size(); ++x)
    if (get(t, Tuple(t.arity(), x)) != x) return false;
  return true;
}

inline bool naive_band(const OpTable& t) {
  return naive_idempotent(t) && naive_symmetric(t) && naive_associative(t);
}

// Right-nested fold of a binary table over a tuple.
inline Element fold(const OpTable& g, const Tuple& xs) {
  Element v = xs.back();
  for (std::size_t i = xs.size() - 1; i-- > 0;) v = g.at2(xs[i], v);
  return v;
}

// All maps h: {0..k1-1} -> {0..k2-1} with h(x1*...*xn) = h(x1)*...*h(xn),
// where * is given by binary Cayley tables.
inline std::set<Tuple> brute_nary_homs(const OpTable& g1, const OpTable& g2, unsigned n) {
  std::set<Tuple> out;
  const unsigned k1 = g1.size(), k2 = g2.size();
  for_each_tuple(k2, k1, [&](const Tuple& h) {
    bool ok = true;
    for_each_tuple(k1, n, [&](const Tuple& xs) {
      if (!ok) return;
      Tuple ys;
      for (Element x : xs) ys.push_back(h[x]);
      if (h[fold(g1, xs)] != fold(g2, ys)) ok = false;
    });
    if (ok) out.insert(h);
  });
  return out;
}

// Every table on m elements that satisfies the three axioms, by exhausting
// all m^(m^n) tables; only for tiny m and n.
inline std::vector<OpTable> brute_all_bands(unsigned n, unsigned m) {
  std::vector<OpTable> out;
  std::uint64_t cells = 1;
  for (unsigned i = 0; i < n; ++i) cells *= m;
  for_each_tuple(m, static_cast<unsigned>(cells), [&](const Tuple& v) {
    OpTable t(n, m, v);
    if (naive_band(t)) out.push_back(t);
  });
  return out;
}

// Every symmetric ternary band on m elements: one value per sorted triple,
// assigned by backtracking, rejecting a partial table as soon as some fully
// determined instance of a bracket law fails.
inline std::vector<OpTable> backtrack_ternary_bands(unsigned m) {
  constexpr Element unset = ~Element{0};
  std::vector<Element> sorted(m * m * m, unset);
  auto key = [m](Element a, Element b, Element c) {
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    return (a * m + b) * m + c;
  };
  auto F = [&](Element a, Element b, Element c) {
    return (a == unset || b == unset || c == unset) ? unset : sorted[key(a, b, c)];
  };
  std::vector<Tuple> free;
  for (Element a = 0; a < m; ++a) {
    sorted[key(a, a, a)] = a;
    for (Element b = a; b < m; ++b)
      for (Element c = b; c < m; ++c)
        if (!(a == b && b == c)) free.push_back({a, b, c});
  }
  auto consistent = [&] {
    bool ok = true;
    for_each_tuple(m, 5, [&](const Tuple& t) {
      if (!ok) return;
      Element v[3] = {F(F(t[0], t[1], t[2]), t[3], t[4]), F(t[0], F(t[1], t[2], t[3]), t[4]),
                      F(t[0], t[1], F(t[2], t[3], t[4]))};
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (v[i] != unset && v[j] != unset && v[i] != v[j]) ok = false;
    });
    return ok;
  };
  std::vector<OpTable> out;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == free.size()) {
      out.push_back(table(3, m, [&](const Tuple& xs) { return F(xs[0], xs[1], xs[2]); }));
      return;
    }
    for (Element v = 0; v < m; ++v) {
      sorted[key(free[i][0], free[i][1], free[i][2])] = v;
      if (consistent()) rec(i + 1);
    }
    sorted[key(free[i][0], free[i][1], free[i][2])] = unset;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

// Lexicographically least relabeling, by trying every permutation.
inline OpTable brute_canonical(const OpTable& t) {
  const unsigned m = t.size();
  Tuple perm(m);
  for (Element i = 0; i < m; ++i) perm[i] = i;
  std::vector<Element> best;
  do {
    std::vector<Element> v(t.cell_count());
    for_each_tuple(m, t.arity(), [&](const Tuple& xs) {
      Tuple ys;
      for (Element x : xs) ys.push_back(perm[x]);
      v[index_of(ys, m)] = perm[get(t, xs)];
    });
    if (best.empty() || v < best) best = v;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return OpTable(t.arity(), m, best);
}

}  // namespace fx
