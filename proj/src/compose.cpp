#include "nband/compose.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "nband/errors.hpp"
#include "nband/parallel.hpp"

namespace nband {

unsigned GroupSpec::order() const {
  unsigned k = 1;
  for (unsigned f : factors) k *= f;
  return k;
}

GroupTable make_group(const GroupSpec& spec, unsigned arity) {
  if (arity < 2) throw InputError("arity must be at least 2");
  for (unsigned f : spec.factors) {
    if (f == 0) throw InputError("cyclic factor order must be positive");
    if ((arity - 1) % f != 0)
      throw InputError("cyclic factor " + std::to_string(f) + " does not divide n-1 = " +
                       std::to_string(arity - 1));
  }
  const unsigned k = spec.order();
  const std::size_t r = spec.factors.size();
  auto digits = [&](Element x) {
    std::vector<unsigned> d(r);
    for (std::size_t i = r; i-- > 0;) {
      d[i] = x % spec.factors[i];
      x /= spec.factors[i];
    }
    return d;
  };
  std::vector<Element> values(static_cast<std::size_t>(k) * k);
  for (Element x = 0; x < k; ++x)
    for (Element y = 0; y < k; ++y) {
      auto dx = digits(x);
      auto dy = digits(y);
      Element z = 0;
      for (std::size_t i = 0; i < r; ++i) z = z * spec.factors[i] + (dx[i] + dy[i]) % spec.factors[i];
      values[x * k + y] = z;
    }
  return GroupTable{OpTable(2, k, std::move(values)), 0};
}

std::vector<GroupSpec> group_specs(unsigned order, unsigned arity) {
  if (arity < 2) throw InputError("arity must be at least 2");
  std::vector<GroupSpec> out;
  std::vector<unsigned> current;
  // Each next factor divides the previous one (the first divides n-1).
  auto rec = [&](auto&& self, unsigned remaining, unsigned bound) -> void {
    if (remaining == 1) {
      out.push_back(GroupSpec{current});
      return;
    }
    for (unsigned d = bound; d >= 2; --d) {
      if (bound % d != 0 || remaining % d != 0) continue;
      current.push_back(d);
      self(self, remaining / d, d);
      current.pop_back();
    }
  };
  if (order >= 1) rec(rec, order, arity - 1);
  return out;
}

namespace {

void enumerate_group_homs(const GroupTable& g1, const GroupTable& g2,
                          std::vector<std::vector<Element>>& out) {
  const unsigned k1 = g1.order();
  const unsigned k2 = g2.order();
  std::vector<Element> psi(k1, 0);
  std::vector<bool> assigned(k1, false);
  psi[g1.identity] = g2.identity;
  assigned[g1.identity] = true;
  auto consistent = [&](Element x) {
    for (Element a = 0; a < k1; ++a) {
      if (!assigned[a]) continue;
      Element ab = g1.mul(a, x);
      if (assigned[ab] && psi[ab] != g2.mul(psi[a], psi[x])) return false;
      Element ba = g1.mul(x, a);
      if (assigned[ba] && psi[ba] != g2.mul(psi[x], psi[a])) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, Element x) -> void {
    if (x == k1) {
      out.push_back(psi);
      return;
    }
    if (assigned[x]) {
      self(self, x + 1);
      return;
    }
    assigned[x] = true;
    for (Element v = 0; v < k2; ++v) {
      psi[x] = v;
      if (consistent(x)) self(self, x + 1);
    }
    assigned[x] = false;
  };
  rec(rec, 0);
}

}  // namespace

std::vector<std::vector<Element>> nary_homs(const GroupTable& g1, const GroupTable& g2,
                                            unsigned arity) {
  for (const GroupTable* g : {&g1, &g2}) {
    if (auto why = abelian_group_violation(*g)) throw InputError("not an Abelian group: " + *why);
    if ((arity - 1) % group_exponent(*g) != 0)
      throw InputError("group exponent does not divide n-1");
  }
  std::vector<std::vector<Element>> psis;
  enumerate_group_homs(g1, g2, psis);
  std::vector<std::vector<Element>> homs;
  for (Element shift = 0; shift < g2.order(); ++shift)
    for (const auto& psi : psis) {
      std::vector<Element> h(psi.size());
      for (std::size_t x = 0; x < psi.size(); ++x) h[x] = g2.mul(shift, psi[x]);
      homs.push_back(std::move(h));
    }
  std::sort(homs.begin(), homs.end());
  homs.erase(std::unique(homs.begin(), homs.end()), homs.end());
  return homs;
}

OpTable compose(const StrongSystem& s, unsigned arity, Verify verify) {
  if (arity < 2) throw InputError("arity must be at least 2");
  if (verify == Verify::yes) {
    ValidationReport report = validate_system(s, arity);
    if (!report.ok()) throw DomainError("invalid strong system: " + report.summary());
  }
  const unsigned m = s.element_count();
  const std::size_t k = s.class_count();
  // down[x * k + c] = position of phi_{[x], c}(x) inside class c.
  constexpr Element none = UINT32_MAX;
  std::vector<Element> down(static_cast<std::size_t>(m) * k, none);
  for (const HomMap& h : s.homs) {
    const auto& src = s.partition.classes.at(h.from);
    for (std::size_t i = 0; i < src.size(); ++i)
      down[src[i] * k + h.to] = static_cast<Element>(s.groups.at(h.to).position_of(h.image.at(i)));
  }
  return OpTable::tabulate(arity, m, [&](std::span<const Element> xs) {
    auto alpha = static_cast<Element>(s.partition.class_of[xs[0]]);
    for (std::size_t i = 1; i < xs.size(); ++i)
      alpha = s.quotient.meet.at2(alpha, static_cast<Element>(s.partition.class_of[xs[i]]));
    const ClassGroup& g = s.groups[alpha];
    Element p = g.group.identity;
    for (Element x : xs) {
      Element d = down[x * k + alpha];
      if (d == none) throw InputError("system has no map for a required comparable pair");
      p = g.group.mul(p, d);
    }
    return g.members[p];
  });
}

namespace {

// All labeled semilattice (meet) tables on k points.
std::vector<OpTable> semilattices(unsigned k) {
  std::vector<std::pair<Element, Element>> cells;
  for (Element a = 0; a < k; ++a)
    for (Element b = a + 1; b < k; ++b) cells.emplace_back(a, b);
  std::vector<Element> meet(static_cast<std::size_t>(k) * k, UINT32_MAX);
  for (Element a = 0; a < k; ++a) meet[a * k + a] = a;
  auto get = [&](Element a, Element b) { return meet[a * k + b]; };
  auto associative_so_far = [&]() {
    for (Element a = 0; a < k; ++a)
      for (Element b = 0; b < k; ++b) {
        Element ab = get(a, b);
        if (ab == UINT32_MAX) continue;
        for (Element c = 0; c < k; ++c) {
          Element bc = get(b, c);
          if (bc == UINT32_MAX) continue;
          Element left = get(ab, c);
          Element right = get(a, bc);
          if (left != UINT32_MAX && right != UINT32_MAX && left != right) return false;
        }
      }
    return true;
  };
  std::vector<OpTable> out;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == cells.size()) {
      out.emplace_back(2, k, meet);
      return;
    }
    auto [a, b] = cells[i];
    for (Element v = 0; v < k; ++v) {
      meet[a * k + b] = meet[b * k + a] = v;
      if (associative_so_far()) self(self, i + 1);
    }
    meet[a * k + b] = meet[b * k + a] = UINT32_MAX;
  };
  rec(rec, 0);
  return out;
}

// Distinct labeled n-ary group structures on k positions, each re-based so
// that position 0 is the identity. Distinct entries have distinct n-ary
// extensions.
std::vector<GroupTable> labeled_groups(unsigned k, unsigned arity) {
  std::set<std::vector<Element>> seen;
  std::vector<GroupTable> out;
  for (const GroupSpec& spec : group_specs(k, arity)) {
    GroupTable g = make_group(spec, arity);
    std::vector<Element> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      // position i carries group element perm[i]
      std::vector<Element> inverse(k);
      for (Element i = 0; i < k; ++i) inverse[perm[i]] = i;
      std::vector<Element> values(static_cast<std::size_t>(k) * k);
      for (Element i = 0; i < k; ++i)
        for (Element j = 0; j < k; ++j) values[i * k + j] = inverse[g.mul(perm[i], perm[j])];
      GroupTable relabeled{OpTable(2, k, std::move(values)), inverse[g.identity]};
      GroupTable based = rebase(relabeled, 0, arity);
      std::vector<Element> key(based.cayley.values().begin(), based.cayley.values().end());
      if (seen.insert(key).second) out.push_back(std::move(based));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

struct EnumerationTables {
  std::vector<std::vector<GroupTable>> groups_by_size;  // index = class size
  std::vector<std::vector<OpTable>> semilattices_by_count;
};

std::vector<std::vector<std::vector<Element>>> set_partitions(unsigned m) {
  std::vector<std::vector<std::vector<Element>>> out;
  std::vector<std::size_t> block(m, 0);
  auto rec = [&](auto&& self, Element x, std::size_t blocks) -> void {
    if (x == m) {
      std::vector<std::vector<Element>> classes(blocks);
      for (Element y = 0; y < m; ++y) classes[block[y]].push_back(y);
      out.push_back(std::move(classes));
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      block[x] = b;
      self(self, x + 1, std::max(blocks, b + 1));
    }
  };
  rec(rec, 0, 0);
  return out;
}

// Mixed-radix increment; false once every digit has wrapped.
bool advance(std::vector<std::size_t>& digits,
             const std::vector<const std::vector<std::vector<Element>>*>& radix) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radix[i]->size()) return true;
    digits[i] = 0;
  }
  return false;
}

// Enumerates every strong system over one fixed partition.
void systems_for_partition(const std::vector<std::vector<Element>>& classes, unsigned m,
                           unsigned arity, const EnumerationTables& tables,
                           const std::function<void(const StrongSystem&)>& visit) {
  const std::size_t k = classes.size();
  for (const auto& cls : classes)
    if (tables.groups_by_size[cls.size()].empty()) return;

  SigmaPartition partition = SigmaPartition::from_classes(classes, m);
  std::vector<std::size_t> choice(k, 0);

  for (const OpTable& meet : tables.semilattices_by_count[k]) {
    QuotientSemilattice q{meet};
    const std::vector<std::size_t> order = top_down_order(q);
    // upper_covers[b]: classes a > b with nothing strictly between.
    std::vector<std::vector<std::size_t>> upper_covers(k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        if (a == b || !q.geq(a, b)) continue;
        bool cover = true;
        for (std::size_t c = 0; c < k && cover; ++c)
          if (c != a && c != b && q.geq(a, c) && q.geq(c, b)) cover = false;
        if (cover) upper_covers[b].push_back(a);
      }

    // Iterate over all group-structure assignments (mixed radix on choice).
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      std::vector<const GroupTable*> g(k);
      for (std::size_t c = 0; c < k; ++c)
        g[c] = &tables.groups_by_size[classes[c].size()][choice[c]];

      // phi[a][b] over positions; empty when not (yet) defined.
      std::vector<std::vector<std::vector<Element>>> phi(k, std::vector<std::vector<Element>>(k));
      for (std::size_t c = 0; c < k; ++c) {
        phi[c][c].resize(classes[c].size());
        std::iota(phi[c][c].begin(), phi[c][c].end(), 0);
      }
      std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<Element>>> hom_cache;
      auto candidates = [&](std::size_t a, std::size_t b) -> const std::vector<std::vector<Element>>& {
        auto [it, inserted] = hom_cache.try_emplace({a, b});
        if (inserted) it->second = nary_homs(*g[a], *g[b], arity);
        return it->second;
      };

      // Top-down: at class b choose phi from each upper cover, then derive
      // and cross-check phi_{c,b} for every c above b.
      auto emit = [&]() {
        StrongSystem s;
        s.arity = arity;
        for (Element x = 0; x < m; ++x) s.labels.push_back(std::to_string(x));
        s.partition = partition;
        s.quotient = q;
        for (std::size_t c = 0; c < k; ++c) {
          ClassGroup cg;
          cg.class_index = c;
          cg.members = classes[c];
          cg.group = *g[c];
          cg.factor_signature = invariant_factors(cg.group);
          s.groups.push_back(std::move(cg));
        }
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) {
            if (!q.geq(a, b)) continue;
            HomMap h{a, b, {}};
            for (Element p : phi[a][b]) h.image.push_back(classes[b][p]);
            s.homs.push_back(std::move(h));
          }
        visit(s);
      };
      auto rec = [&](auto&& self, std::size_t step) -> void {
        if (step == k) {
          emit();
          return;
        }
        const std::size_t b = order[step];
        const auto& covers = upper_covers[b];
        std::vector<const std::vector<std::vector<Element>>*> options;
        for (std::size_t a : covers) {
          options.push_back(&candidates(a, b));
          if (options.back()->empty()) return;
        }
        std::vector<std::size_t> pick(covers.size(), 0);
        do {
          for (std::size_t i = 0; i < covers.size(); ++i) phi[covers[i]][b] = (*options[i])[pick[i]];
          // Derive phi_{c,b} = phi_{a,b} o phi_{c,a} through every cover a <= c
          // and require all routes to agree.
          bool coherent = true;
          for (std::size_t c = 0; c < k && coherent; ++c) {
            if (c == b || !q.geq(c, b)) continue;
            if (std::find(covers.begin(), covers.end(), c) != covers.end()) continue;
            std::vector<Element> derived;
            for (std::size_t a : covers) {
              if (!q.geq(c, a)) continue;
              std::vector<Element> via(classes[c].size());
              for (std::size_t x = 0; x < via.size(); ++x) via[x] = phi[a][b][phi[c][a][x]];
              if (derived.empty()) derived = std::move(via);
              else if (derived != via) coherent = false;
            }
            phi[c][b] = std::move(derived);
          }
          if (coherent) self(self, step + 1);
        } while (advance(pick, options));
        for (std::size_t c = 0; c < k; ++c)
          if (c != b) phi[c][b].clear();
      };
      rec(rec, 0);

      std::size_t c = k;
      while (c > 0) {
        --c;
        if (++choice[c] < tables.groups_by_size[classes[c].size()].size()) break;
        choice[c] = 0;
        if (c == 0) {
          c = SIZE_MAX;
          break;
        }
      }
      if (c == SIZE_MAX) break;
    }
  }
}

EnumerationTables build_tables(unsigned m, unsigned arity) {
  EnumerationTables t;
  t.groups_by_size.resize(m + 1);
  t.semilattices_by_count.resize(m + 1);
  for (unsigned k = 1; k <= m; ++k) {
    t.groups_by_size[k] = labeled_groups(k, arity);
    t.semilattices_by_count[k] = semilattices(k);
  }
  return t;
}

void check_enumeration_budget(unsigned m, unsigned arity, const Budget& budget) {
  if (m < 1) throw InputError("carrier size must be at least 1");
  if (arity < 2) throw InputError("arity must be at least 2");
  if (m > budget.max_enumerate_size)
    throw ResourceError("enumeration at size " + std::to_string(m) + " exceeds the budget (max " +
                        std::to_string(budget.max_enumerate_size) + ")");
  auto cells = checked_power(m, arity);
  if (!cells || *cells > budget.max_cells) throw ResourceError("table cell budget exceeded");
}

}  // namespace

void for_each_system(unsigned size, unsigned arity,
                     const std::function<void(const StrongSystem&)>& visit, const Budget& budget) {
  check_enumeration_budget(size, arity, budget);
  const EnumerationTables tables = build_tables(size, arity);
  for (const auto& classes : set_partitions(size))
    systems_for_partition(classes, size, arity, tables, visit);
}

std::vector<OpTable> canonical_set(const std::vector<OpTable>& tables, const Budget& budget) {
  std::vector<OpTable> forms;
  forms.reserve(tables.size());
  for (const OpTable& t : tables) forms.push_back(canonical_form(t, budget));
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  return forms;
}

namespace {

BandCatalog finish_catalog(unsigned size, unsigned arity, bool up_to_iso,
                           std::vector<OpTable> labeled, const Budget& budget) {
  std::sort(labeled.begin(), labeled.end());
  labeled.erase(std::unique(labeled.begin(), labeled.end()), labeled.end());
  BandCatalog cat;
  cat.size = size;
  cat.arity = arity;
  cat.up_to_iso = up_to_iso;
  cat.labeled = labeled.size();
  std::vector<OpTable> forms = canonical_set(labeled, budget);
  cat.iso = forms.size();
  cat.entries = up_to_iso ? std::move(forms) : std::move(labeled);
  return cat;
}

}  // namespace

BandCatalog enumerate_bands(unsigned size, unsigned arity, bool up_to_iso, const Budget& budget) {
  check_enumeration_budget(size, arity, budget);
  if (size > budget.max_canonical_size)
    throw ResourceError("iso-class counting at this size exceeds the factorial budget");
  const EnumerationTables tables = build_tables(size, arity);
  const auto partitions = set_partitions(size);
  const unsigned workers = detail::resolve_workers(budget.workers);
  std::vector<std::vector<OpTable>> found(workers);
  detail::parallel_chunks(partitions.size(), workers,
                          [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
                            for (std::uint64_t i = begin; i < end; ++i)
                              systems_for_partition(
                                  partitions[i], size, arity, tables,
                                  [&](const StrongSystem& s) {
                                    found[w].push_back(compose(s, arity, Verify::no));
                                  });
                          });
  std::vector<OpTable> all;
  for (auto& part : found)
    for (auto& t : part) all.push_back(std::move(t));
  return finish_catalog(size, arity, up_to_iso, std::move(all), budget);
}

BandCatalog brute_force_bands(unsigned size, unsigned arity, const Budget& budget) {
  if (size < 1) throw InputError("carrier size must be at least 1");
  if (arity < 2) throw InputError("arity must be at least 2");
  TupleCodec codec(size, arity);
  if (codec.count() > budget.max_cells) throw ResourceError("table cell budget exceeded");
  if (size > budget.max_canonical_size)
    throw ResourceError("iso-class counting at this size exceeds the factorial budget");

  // Multiset id of every tuple; constant multisets are forced by idempotency.
  std::map<std::vector<Element>, std::size_t> multiset_id;
  std::vector<std::size_t> cell_multiset(codec.count());
  std::vector<Element> forced;  // per multiset: value if constant, else UINT32_MAX
  std::vector<Element> xs(arity);
  for (std::uint64_t idx = 0; idx < codec.count(); ++idx) {
    codec.decode(idx, xs);
    std::vector<Element> key = xs;
    std::sort(key.begin(), key.end());
    auto [it, inserted] = multiset_id.try_emplace(key, forced.size());
    if (inserted) forced.push_back(key.front() == key.back() ? key.front() : UINT32_MAX);
    cell_multiset[idx] = it->second;
  }
  std::vector<std::size_t> free_ids;
  for (std::size_t id = 0; id < forced.size(); ++id)
    if (forced[id] == UINT32_MAX) free_ids.push_back(id);
  auto candidates = checked_power(size, static_cast<unsigned>(free_ids.size()));
  if (!candidates || *candidates > budget.max_band_candidates)
    throw ResourceError("brute-force band search exceeds the candidate budget");

  const unsigned workers = detail::resolve_workers(budget.workers);
  std::vector<std::vector<OpTable>> found(workers);
  detail::parallel_chunks(*candidates, workers, [&](std::uint64_t begin, std::uint64_t end,
                                                    unsigned w) {
    std::vector<Element> ms_value = forced;
    std::vector<Element> values(codec.count());
    for (std::uint64_t c = begin; c < end; ++c) {
      std::uint64_t rest = c;
      for (std::size_t i = free_ids.size(); i-- > 0;) {
        ms_value[free_ids[i]] = static_cast<Element>(rest % size);
        rest /= size;
      }
      for (std::uint64_t idx = 0; idx < values.size(); ++idx) values[idx] = ms_value[cell_multiset[idx]];
      OpTable t(arity, size, values);
      if (!check_associative(t, AssociativityPath::symmetric_fast)) found[w].push_back(std::move(t));
    }
  });
  std::vector<OpTable> all;
  for (auto& part : found)
    for (auto& t : part) all.push_back(std::move(t));
  return finish_catalog(size, arity, false, std::move(all), budget);
}

}  // namespace nband
