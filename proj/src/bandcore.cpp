#include "nband/bandcore.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "nband/errors.hpp"

namespace nband {

const char* to_string(Classification c) {
  switch (c) {
    case Classification::semilattice_extension: return "SemilatticeExtension";
    case Classification::group_extension: return "GroupExtension";
    case Classification::general: return "General";
  }
  return "General";
}

SigmaPartition SigmaPartition::from_classes(std::vector<std::vector<Element>> classes,
                                            unsigned size) {
  SigmaPartition p;
  p.class_of.assign(size, SIZE_MAX);
  for (auto& c : classes) {
    if (c.empty()) throw InputError("empty class in partition");
    std::sort(c.begin(), c.end());
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (Element x : classes[i]) {
      if (x >= size) throw InputError("class member " + std::to_string(x) + " out of range");
      if (p.class_of[x] != SIZE_MAX)
        throw InputError("element " + std::to_string(x) + " appears in two classes");
      p.class_of[x] = i;
    }
  for (Element x = 0; x < size; ++x)
    if (p.class_of[x] == SIZE_MAX)
      throw InputError("element " + std::to_string(x) + " belongs to no class");
  p.classes = std::move(classes);
  return p;
}

OpTable associated_band(const OpTable& f, Verify verify) {
  if (verify == Verify::yes) require_symmetric_band(f);
  const unsigned m = f.size();
  const unsigned n = f.arity();
  std::vector<Element> values(static_cast<std::size_t>(m) * m);
  std::vector<Element> xs(n);
  for (Element x = 0; x < m; ++x) {
    std::fill(xs.begin(), xs.end() - 1, x);
    for (Element y = 0; y < m; ++y) {
      xs.back() = y;
      values[x * m + y] = f(xs);
    }
  }
  return OpTable(2, m, std::move(values));
}

LambdaTable lambda_rows(const OpTable& band) {
  LambdaTable lt;
  const unsigned m = band.size();
  lt.rows.resize(m);
  for (Element x = 0; x < m; ++x) {
    auto row = band.values().subspan(static_cast<std::size_t>(x) * m, m);
    lt.rows[x].assign(row.begin(), row.end());
  }
  return lt;
}

LambdaTable lambda_table(const OpTable& f, Verify verify) {
  return lambda_rows(associated_band(f, verify));
}

std::optional<RightNormalWitness> check_right_normal(const OpTable& b) {
  if (b.arity() != 2) throw InputError("check_right_normal expects a binary table");
  using Law = RightNormalWitness::Law;
  const unsigned m = b.size();
  for (Element x = 0; x < m; ++x)
    if (b.at2(x, x) != x) return RightNormalWitness{Law::idempotent, {x}};
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y)
      for (Element z = 0; z < m; ++z)
        if (b.at2(b.at2(x, y), z) != b.at2(x, b.at2(y, z)))
          return RightNormalWitness{Law::associative, {x, y, z}};
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y)
      for (Element z = 0; z < m; ++z)
        if (b.at2(b.at2(x, y), z) != b.at2(b.at2(y, x), z))
          return RightNormalWitness{Law::right_normal, {x, y, z}};
  return std::nullopt;
}

SigmaPartition partition_by_rows(const LambdaTable& lambda) {
  std::map<std::vector<Element>, std::size_t> index_of_row;
  SigmaPartition p;
  p.class_of.resize(lambda.size());
  for (Element x = 0; x < lambda.size(); ++x) {
    auto [it, inserted] = index_of_row.try_emplace(lambda.row(x), p.classes.size());
    if (inserted) p.classes.emplace_back();
    p.classes[it->second].push_back(x);
    p.class_of[x] = it->second;
  }
  return p;
}

SigmaPartition sigma_partition(const OpTable& f, Verify verify) {
  return partition_by_rows(lambda_table(f, verify));
}

namespace {

// Tabulates the induced operation on classes and verifies that every element
// tuple agrees with the representative-based value.
OpTable induced(const OpTable& f, const SigmaPartition& p, const char* what) {
  const auto k = static_cast<unsigned>(p.class_count());
  const unsigned n = f.arity();
  OpTable table = OpTable::tabulate(n, k, [&](std::span<const Element> cs) {
    std::vector<Element> reps(n);
    for (unsigned i = 0; i < n; ++i) reps[i] = p.classes[cs[i]].front();
    return static_cast<Element>(p.class_of[f(reps)]);
  });
  std::vector<Element> xs(n);
  std::vector<Element> cs(n);
  for (std::uint64_t idx = 0; idx < f.cell_count(); ++idx) {
    f.codec().decode(idx, xs);
    for (unsigned i = 0; i < n; ++i) cs[i] = static_cast<Element>(p.class_of[xs[i]]);
    if (p.class_of[f.at(idx)] != table(cs))
      throw ConsistencyError(std::string("partition is not a congruence for ") + what);
  }
  return table;
}

}  // namespace

Quotient quotient(const OpTable& f, const SigmaPartition& p) {
  if (p.class_of.size() != f.size()) throw InputError("partition does not match the table size");
  OpTable nary = induced(f, p, "F");
  OpTable binary = induced(associated_band(f, Verify::no), p, "B");
  if (extend(binary, f.arity() - 1) != nary)
    throw ConsistencyError("induced n-ary operation is not the extension of the induced band");
  QuotientSemilattice q{binary};
  return Quotient{std::move(nary), std::move(binary), std::move(q)};
}

Classification classify(const OpTable& f, Verify verify) {
  const LambdaTable lt = lambda_table(f, verify);
  const unsigned m = lt.size();
  bool constant_identity = true;
  for (Element x = 0; x < m && constant_identity; ++x)
    for (Element y = 0; y < m && constant_identity; ++y) constant_identity = lt.row(x)[y] == y;
  if (constant_identity) return Classification::group_extension;
  if (partition_by_rows(lt).class_count() == m) return Classification::semilattice_extension;
  return Classification::general;
}

bool band_congruent(const OpTable& b, Element x, Element y) {
  return b.at2(b.at2(x, y), x) == x && b.at2(b.at2(y, x), y) == y;
}

bool right_normal_congruent(const OpTable& b, Element x, Element y) {
  return b.at2(y, x) == x && b.at2(x, y) == y;
}

bool class_geq_by_representatives(const OpTable& band, const SigmaPartition& p,
                                  std::size_t alpha, std::size_t beta) {
  Element a = p.classes[alpha].front();
  Element b = p.classes[beta].front();
  return band.at2(a, b) == b;
}

std::vector<Element> compose_maps(const std::vector<Element>& f, const std::vector<Element>& g) {
  std::vector<Element> out(g.size());
  for (std::size_t y = 0; y < g.size(); ++y) out[y] = f[g[y]];
  return out;
}

}  // namespace nband
