#include "nband/reduce.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "nband/errors.hpp"
#include "nband/parallel.hpp"

namespace nband {

namespace {

struct EmptyRecord {
  std::vector<Element> images;
  std::vector<std::pair<std::size_t, Element>> sources;
};

struct SelectionSearch {
  const StrongSystem& s;
  std::vector<std::size_t> order;
  std::vector<Element> chosen;
  std::vector<bool> assigned;
  std::vector<NeutralSelection> solutions;
  std::vector<bool> ever_admissible;
  std::vector<std::optional<EmptyRecord>> first_empty;

  explicit SelectionSearch(const StrongSystem& system)
      : s(system),
        order(top_down_order(system.quotient)),
        chosen(system.class_count(), 0),
        assigned(system.class_count(), false),
        ever_admissible(system.class_count(), false),
        first_empty(system.class_count()) {}

  void run(std::size_t step) {
    if (step == order.size()) {
      solutions.push_back(NeutralSelection{chosen});
      return;
    }
    const std::size_t beta = order[step];
    std::set<Element> forced;
    std::vector<std::pair<std::size_t, Element>> sources;
    for (std::size_t alpha = 0; alpha < s.class_count(); ++alpha) {
      if (alpha == beta || !assigned[alpha] || !s.quotient.geq(alpha, beta)) continue;
      forced.insert(s.map_down(chosen[alpha], beta));
      sources.emplace_back(alpha, chosen[alpha]);
    }
    std::vector<Element> admissible;
    if (sources.empty())
      admissible = s.partition.classes[beta];
    else if (forced.size() == 1)
      admissible.push_back(*forced.begin());
    if (admissible.empty()) {
      if (!first_empty[beta])
        first_empty[beta] = EmptyRecord{{forced.begin(), forced.end()}, std::move(sources)};
      return;
    }
    ever_admissible[beta] = true;
    assigned[beta] = true;
    for (Element e : admissible) {
      chosen[beta] = e;
      run(step + 1);
    }
    assigned[beta] = false;
  }

  Irreducible witness() const {
    // Prefer a class that was blocked on every branch that reached it.
    for (bool strict : {true, false})
      for (std::size_t beta : order)
        if (first_empty[beta] && (!strict || !ever_admissible[beta]))
          return Irreducible{beta, first_empty[beta]->images, first_empty[beta]->sources};
    throw ConsistencyError("selection search failed without an empty admissible set");
  }
};

void require_valid(const StrongSystem& s, unsigned arity) {
  ValidationReport report = validate_system(s, arity);
  if (!report.ok()) throw DomainError("invalid strong system: " + report.summary());
}

}  // namespace

std::vector<NeutralSelection> all_neutral_selections(const StrongSystem& s) {
  SelectionSearch search(s);
  search.run(0);
  std::sort(search.solutions.begin(), search.solutions.end(),
            [](const auto& a, const auto& b) { return a.element_of_class < b.element_of_class; });
  return search.solutions;
}

ReductionResult decide_reducible(const StrongSystem& s, unsigned arity, Verify verify) {
  if (verify == Verify::yes) require_valid(s, arity);
  SelectionSearch search(s);
  search.run(0);
  if (search.solutions.empty()) return search.witness();
  auto best = std::min_element(
      search.solutions.begin(), search.solutions.end(),
      [](const auto& a, const auto& b) { return a.element_of_class < b.element_of_class; });
  OpTable table = build_reduction(s, *best, arity);
  return Reduction{*best, std::move(table)};
}

OpTable build_reduction(const StrongSystem& s, const NeutralSelection& selection, unsigned arity) {
  const std::size_t k = s.class_count();
  const auto& e = selection.element_of_class;
  if (e.size() != k) throw InputError("selection must name one element per class");
  for (std::size_t a = 0; a < k; ++a) {
    if (e[a] >= s.element_count() || s.partition.class_of[e[a]] != a)
      throw InputError("selected element for class " + std::to_string(a) + " is not in the class");
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (s.quotient.geq(a, b) && s.map_down(e[a], b) != e[b])
        throw InputError("selection is not preserved by phi_(" + std::to_string(a) + "," +
                         std::to_string(b) + ")");

  std::vector<GroupTable> based;
  for (std::size_t c = 0; c < k; ++c)
    based.push_back(rebase(s.groups[c].group,
                           static_cast<Element>(s.groups[c].position_of(e[c])), arity));
  const unsigned m = s.element_count();
  std::vector<Element> values(static_cast<std::size_t>(m) * m);
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y) {
      auto gamma = s.quotient.meet.at2(static_cast<Element>(s.partition.class_of[x]),
                                       static_cast<Element>(s.partition.class_of[y]));
      const ClassGroup& cg = s.groups[gamma];
      auto px = static_cast<Element>(cg.position_of(s.map_down(x, gamma)));
      auto py = static_cast<Element>(cg.position_of(s.map_down(y, gamma)));
      values[x * m + y] = cg.members[based[gamma].mul(px, py)];
    }
  return OpTable(2, m, std::move(values));
}

namespace {

// G(x1, G(x2, ... G(x_{n-1}, x_n))) == F on every cell, first cells first.
bool extends_to(const std::vector<Element>& g, unsigned m, const OpTable& f,
                std::vector<Element>& scratch) {
  const unsigned n = f.arity();
  for (std::uint64_t idx = 0; idx < f.cell_count(); ++idx) {
    std::uint64_t rest = idx;
    for (unsigned i = n; i-- > 0;) {
      scratch[i] = static_cast<Element>(rest % m);
      rest /= m;
    }
    Element v = scratch[n - 1];
    for (unsigned i = n - 1; i-- > 0;) v = g[scratch[i] * m + v];
    if (v != f.at(idx)) return false;
  }
  return true;
}

bool binary_associative(const std::vector<Element>& g, unsigned m) {
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y)
      for (Element z = 0; z < m; ++z)
        if (g[g[x * m + y] * m + z] != g[x * m + g[y * m + z]]) return false;
  return true;
}

}  // namespace

ReductionReport verify_reduction(const OpTable& f, const OpTable& g, const Budget& budget) {
  if (g.arity() != 2) throw InputError("reduction candidate must be binary");
  if (g.size() != f.size()) throw InputError("reduction candidate has a different carrier size");
  ReductionReport report;
  const unsigned m = g.size();
  OpTable ext = nary_extension(g, f.arity(), budget);
  report.extension_matches = ext == f;
  if (!report.extension_matches) {
    for (std::uint64_t idx = 0; idx < f.cell_count(); ++idx)
      if (ext.at(idx) != f.at(idx)) {
        std::string tuple;
        for (Element x : f.codec().decode(idx)) tuple += (tuple.empty() ? "" : ",") + std::to_string(x);
        report.failures.push_back("extension differs from F at (" + tuple + ")");
        break;
      }
  }
  std::vector<Element> values(g.values().begin(), g.values().end());
  report.associative = binary_associative(values, m);
  if (!report.associative) report.failures.push_back("G is not associative");
  report.symmetric = !check_symmetric(g);
  if (!report.symmetric) report.failures.push_back("G is not symmetric");
  std::vector<bool> hit(m, false);
  for (Element v : g.values()) hit[v] = true;
  report.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  if (!report.surjective) report.failures.push_back("G is not surjective");
  return report;
}

std::vector<OpTable> brute_force_reductions(const OpTable& f, ReductionSearch search,
                                            const Budget& budget) {
  const unsigned m = f.size();
  // Free cells of the candidate table: (x, y) with x <= y, or every cell.
  std::vector<std::pair<Element, Element>> cells;
  for (Element x = 0; x < m; ++x)
    for (Element y = search == ReductionSearch::symmetric ? x : 0; y < m; ++y) cells.emplace_back(x, y);
  auto candidates = checked_power(m, static_cast<unsigned>(cells.size()));
  if (!candidates || *candidates > budget.max_reduction_candidates)
    throw ResourceError("brute-force reduction search exceeds the candidate budget");

  const unsigned workers = detail::resolve_workers(budget.workers);
  std::vector<std::vector<OpTable>> found(workers);
  detail::parallel_chunks(*candidates, workers, [&](std::uint64_t begin, std::uint64_t end,
                                                    unsigned w) {
    std::vector<Element> g(static_cast<std::size_t>(m) * m);
    std::vector<Element> scratch(f.arity());
    for (std::uint64_t c = begin; c < end; ++c) {
      std::uint64_t rest = c;
      for (std::size_t i = cells.size(); i-- > 0;) {
        auto [x, y] = cells[i];
        auto v = static_cast<Element>(rest % m);
        rest /= m;
        g[x * m + y] = v;
        if (search == ReductionSearch::symmetric) g[y * m + x] = v;
      }
      if (extends_to(g, m, f, scratch) && binary_associative(g, m)) found[w].emplace_back(2, m, g);
    }
  });
  std::vector<OpTable> all;
  for (auto& part : found)
    for (auto& t : part) all.push_back(std::move(t));
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace nband
