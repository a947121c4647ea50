#include "nband/optable.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "nband/errors.hpp"

namespace nband {

namespace {

// Advances tuple to its lexicographic successor; false after the last one.
bool next_tuple(std::span<Element> tuple, unsigned size) {
  for (std::size_t i = tuple.size(); i-- > 0;) {
    if (++tuple[i] < size) return true;
    tuple[i] = 0;
  }
  return false;
}

std::string format_tuple(std::span<const Element> tuple) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < tuple.size(); ++i) out << (i ? "," : "") << tuple[i];
  out << ')';
  return out.str();
}

// F(x_1..x_{s}, F(x_{s+1}..x_{s+n}), x_{s+n+1}..x_{2n-1}) with 0-based start s.
Element bracket_at(const OpTable& t, std::span<const Element> xs, unsigned start) {
  const unsigned n = t.arity();
  const unsigned m = t.size();
  Element inner = t(xs.subspan(start, n));
  std::uint64_t idx = 0;
  for (unsigned j = 0; j < start; ++j) idx = idx * m + xs[j];
  idx = idx * m + inner;
  for (std::size_t j = start + n; j < xs.size(); ++j) idx = idx * m + xs[j];
  return t.at(idx);
}

}  // namespace

std::optional<std::uint64_t> checked_power(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return std::nullopt;
    r *= base;
  }
  return r;
}

TupleCodec::TupleCodec(unsigned size, unsigned arity) : size_(size), arity_(arity) {
  if (size < 1) throw InputError("carrier size must be at least 1");
  if (arity < 1) throw InputError("arity must be at least 1");
  auto c = checked_power(size, arity);
  if (!c) throw ResourceError("table size m^n overflows 64 bits");
  count_ = *c;
}

std::uint64_t TupleCodec::encode(std::span<const Element> tuple) const {
  if (tuple.size() != arity_)
    throw InputError("tuple has length " + std::to_string(tuple.size()) +
                     ", expected " + std::to_string(arity_));
  std::uint64_t idx = 0;
  for (Element x : tuple) {
    if (x >= size_)
      throw InputError("tuple entry " + std::to_string(x) + " out of range for size " +
                       std::to_string(size_));
    idx = idx * size_ + x;
  }
  return idx;
}

void TupleCodec::decode(std::uint64_t index, std::span<Element> out) const {
  if (out.size() != arity_) throw InputError("decode buffer has wrong length");
  if (index >= count_) throw InputError("tuple index out of range");
  for (std::size_t i = arity_; i-- > 0;) {
    out[i] = static_cast<Element>(index % size_);
    index /= size_;
  }
}

std::vector<Element> TupleCodec::decode(std::uint64_t index) const {
  std::vector<Element> out(arity_);
  decode(index, out);
  return out;
}

OpTable::OpTable(unsigned arity, unsigned size, std::vector<Element> values)
    : codec_(size, arity), values_(std::move(values)) {
  if (arity < 2) throw InputError("arity must be at least 2");
  if (values_.size() != codec_.count())
    throw InputError("values has length " + std::to_string(values_.size()) + ", expected m^n = " +
                     std::to_string(codec_.count()));
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] >= size)
      throw InputError("value " + std::to_string(values_[i]) + " at index " + std::to_string(i) +
                       " is not an element of a carrier of size " + std::to_string(size));
}

OpTable OpTable::tabulate(unsigned arity, unsigned size,
                          const std::function<Element(std::span<const Element>)>& fn) {
  TupleCodec codec(size, arity);
  std::vector<Element> values;
  values.reserve(codec.count());
  std::vector<Element> tuple(arity, 0);
  do {
    values.push_back(fn(tuple));
  } while (next_tuple(tuple, size));
  return OpTable(arity, size, std::move(values));
}

Element OpTable::eval(std::span<const Element> tuple) const {
  return values_[codec_.encode(tuple)];
}

std::strong_ordering operator<=>(const OpTable& a, const OpTable& b) {
  if (auto c = a.arity() <=> b.arity(); c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.values_.begin(), a.values_.end(),
                                                b.values_.begin(), b.values_.end());
}

std::optional<AssociativityWitness> check_associative(const OpTable& t, AssociativityPath path) {
  const unsigned n = t.arity();
  if (path == AssociativityPath::automatic)
    path = check_symmetric(t) ? AssociativityPath::general : AssociativityPath::symmetric_fast;
  // Position i (1-based) compares brackets starting at 0-based i-1 and i.
  const unsigned lowest = path == AssociativityPath::symmetric_fast ? n - 1 : 1;
  std::vector<Element> xs(2 * n - 1);
  for (unsigned i = n - 1; i >= lowest; --i) {
    std::fill(xs.begin(), xs.end(), 0);
    do {
      if (bracket_at(t, xs, i - 1) != bracket_at(t, xs, i)) return AssociativityWitness{xs, i};
    } while (next_tuple(xs, t.size()));
  }
  return std::nullopt;
}

std::optional<SymmetryWitness> check_symmetric(const OpTable& t) {
  const unsigned n = t.arity();
  std::vector<Element> xs(n);
  for (unsigned j = 0; j + 1 < n; ++j) {
    std::fill(xs.begin(), xs.end(), 0);
    do {
      if (xs[j] == xs[j + 1]) continue;
      std::vector<Element> swapped = xs;
      std::swap(swapped[j], swapped[j + 1]);
      if (t(xs) != t(swapped)) return SymmetryWitness{xs, std::move(swapped)};
    } while (next_tuple(xs, t.size()));
  }
  return std::nullopt;
}

std::optional<IdempotencyWitness> check_idempotent(const OpTable& t) {
  std::vector<Element> xs(t.arity());
  for (Element x = 0; x < t.size(); ++x) {
    std::fill(xs.begin(), xs.end(), x);
    if (t(xs) != x) return IdempotencyWitness{x};
  }
  return std::nullopt;
}

bool is_symmetric_band(const OpTable& t) {
  return !check_idempotent(t) && !check_symmetric(t) &&
         !check_associative(t, AssociativityPath::symmetric_fast);
}

void require_symmetric_band(const OpTable& t) {
  if (auto w = check_idempotent(t))
    throw DomainError("not idempotent: F(x,...,x) != x for x = " + std::to_string(w->element));
  if (auto w = check_symmetric(t))
    throw DomainError("not symmetric: F" + format_tuple(w->tuple) + " != F" +
                      format_tuple(w->swapped));
  if (auto w = check_associative(t, AssociativityPath::symmetric_fast))
    throw DomainError("not associative: bracket positions " + std::to_string(w->position) +
                      " and " + std::to_string(w->position + 1) + " differ on " +
                      format_tuple(w->tuple));
}

OpTable extend(const OpTable& t, unsigned q, const Budget& budget) {
  if (q < 1) throw InputError("extension order q must be at least 1");
  if (q == 1) return t;
  const unsigned n = t.arity();
  const unsigned m = t.size();
  const unsigned target_arity = q * (n - 1) + 1;
  auto cells = checked_power(m, target_arity);
  if (!cells || *cells > budget.max_cells)
    throw ResourceError("extension to arity " + std::to_string(target_arity) +
                        " exceeds the table cell budget");
  const std::uint64_t block = t.cell_count();  // m^n suffix tuples
  std::vector<Element> current(t.values().begin(), t.values().end());
  for (unsigned step = 2; step <= q; ++step) {
    // new[prefix * m^n + suffix] = current[prefix * m + F(suffix)]
    const std::uint64_t prefixes = current.size() / m;
    std::vector<Element> next(prefixes * block);
    for (std::uint64_t p = 0; p < prefixes; ++p)
      for (std::uint64_t s = 0; s < block; ++s) next[p * block + s] = current[p * m + t.at(s)];
    current = std::move(next);
  }
  return OpTable(target_arity, m, std::move(current));
}

OpTable nary_extension(const OpTable& binary, unsigned arity, const Budget& budget) {
  if (binary.arity() != 2) throw InputError("nary_extension expects a binary table");
  if (arity < 2) throw InputError("arity must be at least 2");
  return extend(binary, arity - 1, budget);
}

std::vector<Element> neutral_elements(const OpTable& t) {
  const unsigned n = t.arity();
  std::vector<Element> result;
  std::vector<Element> xs(n);
  for (Element e = 0; e < t.size(); ++e) {
    bool neutral = true;
    for (unsigned k = 0; k < n && neutral; ++k) {
      std::fill(xs.begin(), xs.end(), e);
      for (Element x = 0; x < t.size() && neutral; ++x) {
        xs[k] = x;
        neutral = t(xs) == x;
      }
    }
    if (neutral) result.push_back(e);
  }
  return result;
}

OpTable relabel(const OpTable& t, std::span<const Element> perm) {
  const unsigned m = t.size();
  if (perm.size() != m) throw InputError("permutation has the wrong length");
  std::vector<bool> seen(m, false);
  for (Element p : perm) {
    if (p >= m || seen[p]) throw InputError("relabeling map is not a bijection");
    seen[p] = true;
  }
  std::vector<Element> values(t.cell_count());
  std::vector<Element> xs(t.arity(), 0);
  std::uint64_t src = 0;
  do {
    std::uint64_t dst = 0;
    for (Element x : xs) dst = dst * m + perm[x];
    values[dst] = perm[t.at(src++)];
  } while (next_tuple(xs, m));
  return OpTable(t.arity(), m, std::move(values));
}

OpTable canonical_form(const OpTable& t, const Budget& budget) {
  const unsigned m = t.size();
  if (m > budget.max_canonical_size)
    throw ResourceError("canonical form of a size-" + std::to_string(m) +
                        " table exceeds the factorial budget");
  std::vector<Element> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Element> inverse(m);
  std::vector<Element> best(t.values().begin(), t.values().end());
  std::vector<Element> candidate(t.cell_count());
  std::vector<Element> ys(t.arity());
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (Element i = 0; i < m; ++i) inverse[perm[i]] = i;
    std::fill(ys.begin(), ys.end(), 0);
    // candidate[y] = perm[t(inverse y)], compared against best as it is built.
    int order = 0;
    std::uint64_t dst = 0;
    do {
      std::uint64_t src = 0;
      for (Element y : ys) src = src * m + inverse[y];
      Element v = perm[t.at(src)];
      candidate[dst] = v;
      if (order == 0 && v != best[dst]) {
        order = v < best[dst] ? -1 : 1;
        if (order > 0) break;
      }
      ++dst;
    } while (next_tuple(ys, m));
    if (order < 0) best.swap(candidate);
  }
  return OpTable(t.arity(), m, std::move(best));
}

bool isomorphic(const OpTable& a, const OpTable& b, const Budget& budget) {
  if (a.arity() != b.arity() || a.size() != b.size()) return false;
  return canonical_form(a, budget) == canonical_form(b, budget);
}

}  // namespace nband
