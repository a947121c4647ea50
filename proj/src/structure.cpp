#include "nband/structure.hpp"

#include <algorithm>
#include <sstream>

#include "nband/errors.hpp"

namespace nband {

std::size_t ClassGroup::position_of(Element x) const {
  auto it = std::lower_bound(members.begin(), members.end(), x);
  if (it == members.end() || *it != x)
    throw InputError("element " + std::to_string(x) + " is not in class " +
                     std::to_string(class_index));
  return static_cast<std::size_t>(it - members.begin());
}

Element ClassGroup::mul(Element x, Element y) const {
  return members[group.mul(static_cast<Element>(position_of(x)),
                           static_cast<Element>(position_of(y)))];
}

const HomMap* StrongSystem::hom(std::size_t from, std::size_t to) const {
  auto it = std::lower_bound(homs.begin(), homs.end(), std::pair{from, to},
                             [](const HomMap& h, const std::pair<std::size_t, std::size_t>& key) {
                               return std::pair{h.from, h.to} < key;
                             });
  if (it == homs.end() || it->from != from || it->to != to) return nullptr;
  return &*it;
}

Element StrongSystem::map_down(Element x, std::size_t to) const {
  const std::size_t from = partition.class_of.at(x);
  const HomMap* h = hom(from, to);
  if (h == nullptr)
    throw InputError("no homomorphism from class " + std::to_string(from) + " to class " +
                     std::to_string(to));
  return h->image[groups[from].position_of(x)];
}

const char* to_string(Violation::Kind kind) {
  using K = Violation::Kind;
  switch (kind) {
    case K::semilattice: return "semilattice";
    case K::partition: return "partition";
    case K::group: return "group";
    case K::exponent: return "exponent";
    case K::missing_hom: return "missing_hom";
    case K::hom_image: return "hom_image";
    case K::identity_hom: return "identity_hom";
    case K::coherence: return "coherence";
    case K::hom_shape: return "hom_shape";
  }
  return "unknown";
}

bool ValidationReport::has(Violation::Kind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i)
    out << (i ? "; " : "") << to_string(violations[i].kind) << ": " << violations[i].message;
  return out.str();
}

ClassGroup class_group(const OpTable& f, const std::vector<Element>& members, Element neutral) {
  const unsigned n = f.arity();
  ClassGroup cg;
  cg.members = members;
  std::sort(cg.members.begin(), cg.members.end());
  const auto k = static_cast<unsigned>(cg.members.size());
  const auto e_pos = static_cast<Element>(cg.position_of(neutral));
  std::vector<Element> values(static_cast<std::size_t>(k) * k);
  std::vector<Element> xs(n, neutral);
  for (Element i = 0; i < k; ++i)
    for (Element j = 0; j < k; ++j) {
      xs.front() = cg.members[i];
      xs.back() = cg.members[j];
      Element v = f(xs);
      auto it = std::lower_bound(cg.members.begin(), cg.members.end(), v);
      if (it == cg.members.end() || *it != v)
        throw ConsistencyError("class is not closed under F");
      values[i * k + j] = static_cast<Element>(it - cg.members.begin());
    }
  cg.group = GroupTable{OpTable(2, k, std::move(values)), e_pos};
  if (auto why = abelian_group_violation(cg.group))
    throw ConsistencyError("class restriction is not an Abelian group: " + *why);
  if ((n - 1) % group_exponent(cg.group) != 0)
    throw ConsistencyError("class group exponent does not divide n-1");
  cg.factor_signature = invariant_factors(cg.group);
  return cg;
}

std::vector<HomMap> hom_maps(const OpTable& f, const SigmaPartition& p,
                             const QuotientSemilattice& q) {
  const OpTable band = associated_band(f, Verify::no);
  std::vector<HomMap> homs;
  for (std::size_t alpha = 0; alpha < p.class_count(); ++alpha)
    for (std::size_t beta = 0; beta < p.class_count(); ++beta) {
      if (!q.geq(alpha, beta)) continue;
      HomMap h{alpha, beta, {}};
      for (Element y : p.classes[beta]) {
        std::vector<Element> image;
        for (Element x : p.classes[alpha]) {
          Element v = band.at2(y, x);
          if (p.class_of[v] != beta) throw ConsistencyError("lambda_y leaves the target class");
          image.push_back(v);
        }
        if (h.image.empty())
          h.image = std::move(image);
        else if (h.image != image)
          throw ConsistencyError("phi depends on the representative of the target class");
      }
      homs.push_back(std::move(h));
    }
  return homs;
}

StrongSystem decompose(const OpTable& f, Verify verify) {
  if (verify == Verify::yes) require_symmetric_band(f);
  StrongSystem s;
  s.arity = f.arity();
  for (Element x = 0; x < f.size(); ++x) s.labels.push_back(std::to_string(x));
  s.partition = sigma_partition(f, Verify::no);
  s.quotient = quotient(f, s.partition).semilattice;
  for (std::size_t c = 0; c < s.partition.class_count(); ++c) {
    const auto& members = s.partition.classes[c];
    ClassGroup g = class_group(f, members, members.front());
    g.class_index = c;
    s.groups.push_back(std::move(g));
  }
  s.homs = hom_maps(f, s.partition, s.quotient);
  if (verify == Verify::yes) {
    ValidationReport report = validate_system(s, f.arity());
    if (!report.ok()) throw ConsistencyError("decomposition failed validation: " + report.summary());
  }
  return s;
}

bool is_nary_hom(const GroupTable& g1, const GroupTable& g2, const std::vector<Element>& h,
                 unsigned arity) {
  const unsigned k = g1.order();
  std::vector<Element> xs(arity, 0);
  while (true) {
    Element p1 = g1.identity;
    Element p2 = g2.identity;
    for (Element x : xs) {
      p1 = g1.mul(p1, x);
      p2 = g2.mul(p2, h[x]);
    }
    if (h[p1] != p2) return false;
    std::size_t i = arity;
    while (i > 0 && ++xs[i - 1] == k) xs[--i] = 0;
    if (i == 0) return true;
  }
}

bool is_translated_group_hom(const GroupTable& g1, const GroupTable& g2,
                             const std::vector<Element>& h) {
  const Element shift_inverse = group_inverse(g2, h[g1.identity]);
  auto psi = [&](Element x) { return g2.mul(shift_inverse, h[x]); };
  for (Element x = 0; x < g1.order(); ++x)
    for (Element y = 0; y < g1.order(); ++y)
      if (psi(g1.mul(x, y)) != g2.mul(psi(x), psi(y))) return false;
  return true;
}

std::vector<std::size_t> top_down_order(const QuotientSemilattice& q) {
  const std::size_t k = q.size();
  std::vector<bool> placed(k, false);
  std::vector<std::size_t> order;
  while (order.size() < k) {
    for (std::size_t c = 0; c < k; ++c) {
      if (placed[c]) continue;
      bool ready = true;
      for (std::size_t a = 0; a < k && ready; ++a)
        if (a != c && !placed[a] && q.geq(a, c)) ready = false;
      if (ready) {
        placed[c] = true;
        order.push_back(c);
        break;
      }
    }
  }
  return order;
}

namespace {

using K = Violation::Kind;

void check_semilattice(const OpTable& meet, std::vector<Violation>& out) {
  const unsigned k = meet.size();
  for (Element a = 0; a < k; ++a)
    if (meet.at2(a, a) != a)
      out.push_back({K::semilattice, "meet is not idempotent at class " + std::to_string(a)});
  for (Element a = 0; a < k; ++a)
    for (Element b = a + 1; b < k; ++b)
      if (meet.at2(a, b) != meet.at2(b, a))
        out.push_back({K::semilattice, "meet is not commutative at (" + std::to_string(a) + "," +
                                           std::to_string(b) + ")"});
  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < k; ++b)
      for (Element c = 0; c < k; ++c)
        if (meet.at2(meet.at2(a, b), c) != meet.at2(a, meet.at2(b, c))) {
          out.push_back({K::semilattice, "meet is not associative at (" + std::to_string(a) + "," +
                                             std::to_string(b) + "," + std::to_string(c) + ")"});
          return;
        }
}

}  // namespace

ValidationReport validate_system(const StrongSystem& s, unsigned arity) {
  ValidationReport report;
  auto& out = report.violations;
  const std::size_t k = s.class_count();
  const unsigned m = s.element_count();

  if (s.quotient.meet.arity() != 2 || s.quotient.size() != k) {
    out.push_back({K::semilattice, "meet table does not match the number of classes"});
    return report;
  }
  check_semilattice(s.quotient.meet, out);

  // Partition: classes cover {0..m-1} exactly once and agree with class_of.
  std::vector<int> seen(m, 0);
  bool partition_ok = true;
  for (std::size_t c = 0; c < k; ++c) {
    const auto& cls = s.partition.classes[c];
    if (cls.empty()) {
      out.push_back({K::partition, "class " + std::to_string(c) + " is empty"});
      partition_ok = false;
      continue;
    }
    for (Element x : cls) {
      if (x >= m || seen[x]++ > 0 || s.partition.class_of[x] != c) {
        out.push_back({K::partition, "element " + std::to_string(x) + " misplaced in class " +
                                         std::to_string(c)});
        partition_ok = false;
      }
    }
  }
  for (Element x = 0; x < m; ++x)
    if (seen[x] == 0) {
      out.push_back({K::partition, "element " + std::to_string(x) + " belongs to no class"});
      partition_ok = false;
    }
  if (s.groups.size() != k) {
    out.push_back({K::partition, "expected one group per class"});
    return report;
  }
  for (std::size_t c = 0; c < k; ++c)
    if (s.groups[c].members != s.partition.classes[c] ||
        s.groups[c].group.order() != s.partition.classes[c].size()) {
      out.push_back({K::partition, "group " + std::to_string(c) + " does not cover its class"});
      partition_ok = false;
    }
  if (!partition_ok) return report;

  std::vector<bool> group_ok(k, true);
  for (std::size_t c = 0; c < k; ++c) {
    const GroupTable& g = s.groups[c].group;
    if (auto why = abelian_group_violation(g)) {
      out.push_back({K::group, "class " + std::to_string(c) + ": " + *why});
      group_ok[c] = false;
      continue;
    }
    unsigned exp = group_exponent(g);
    if ((arity - 1) % exp != 0) {
      out.push_back({K::exponent, "class " + std::to_string(c) + " has exponent " +
                                      std::to_string(exp) + ", which does not divide " +
                                      std::to_string(arity - 1)});
    }
  }

  // Homomorphisms: exactly one per comparable pair, mapping into the target.
  std::vector<std::vector<const HomMap*>> phi(k, std::vector<const HomMap*>(k, nullptr));
  for (const HomMap& h : s.homs) {
    if (h.from >= k || h.to >= k || !s.quotient.geq(h.from, h.to)) {
      out.push_back({K::missing_hom, "map stored for non-comparable pair (" +
                                         std::to_string(h.from) + "," + std::to_string(h.to) + ")"});
      continue;
    }
    if (phi[h.from][h.to] != nullptr) {
      out.push_back({K::missing_hom, "duplicate map for pair (" + std::to_string(h.from) + "," +
                                         std::to_string(h.to) + ")"});
      continue;
    }
    bool image_ok = h.image.size() == s.partition.classes[h.from].size();
    for (Element v : h.image) image_ok = image_ok && v < m && s.partition.class_of[v] == h.to;
    if (!image_ok) {
      out.push_back({K::hom_image, "phi_(" + std::to_string(h.from) + "," + std::to_string(h.to) +
                                       ") does not map into its target class"});
      continue;
    }
    phi[h.from][h.to] = &h;
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (s.quotient.geq(a, b) && phi[a][b] == nullptr)
        out.push_back({K::missing_hom, "no usable map for pair (" + std::to_string(a) + "," +
                                           std::to_string(b) + ")"});

  for (std::size_t a = 0; a < k; ++a) {
    const HomMap* h = phi[a][a];
    if (h == nullptr) continue;
    if (h->image != s.partition.classes[a])
      out.push_back({K::identity_hom, "phi_(" + std::to_string(a) + "," + std::to_string(a) +
                                          ") is not the identity"});
  }

  // (b): phi_{b,c} o phi_{a,b} = phi_{a,c} for a >= b >= c.
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c) {
        const HomMap* ab = phi[a][b];
        const HomMap* bc = phi[b][c];
        const HomMap* ac = phi[a][c];
        if (ab == nullptr || bc == nullptr || ac == nullptr) continue;
        for (std::size_t i = 0; i < ab->image.size(); ++i) {
          Element mid = ab->image[i];
          Element via = bc->image[s.groups[b].position_of(mid)];
          if (via != ac->image[i]) {
            out.push_back({K::coherence, "phi_(" + std::to_string(b) + "," + std::to_string(c) +
                                             ") o phi_(" + std::to_string(a) + "," +
                                             std::to_string(b) + ") != phi_(" + std::to_string(a) +
                                             "," + std::to_string(c) + ")"});
            break;
          }
        }
      }

  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const HomMap* h = phi[a][b];
      if (h == nullptr || !group_ok[a] || !group_ok[b]) continue;
      std::vector<Element> positions;
      for (Element v : h->image) positions.push_back(static_cast<Element>(s.groups[b].position_of(v)));
      if (!is_translated_group_hom(s.groups[a].group, s.groups[b].group, positions))
        out.push_back({K::hom_shape, "phi_(" + std::to_string(a) + "," + std::to_string(b) +
                                         ") is not a translated group homomorphism"});
    }
  return report;
}

}  // namespace nband
