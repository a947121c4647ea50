#include "nband/serialize.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "nband/errors.hpp"

namespace nband {

using Json = nlohmann::ordered_json;

namespace {

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

unsigned to_unsigned(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw InputError(std::string(what) + " must be a non-negative integer");
  auto v = j.get<std::uint64_t>();
  if (v > 0xffffffffu) throw InputError(std::string(what) + " is out of range");
  return static_cast<unsigned>(v);
}

Element index(const Json& j, unsigned bound, const char* what) {
  unsigned v = to_unsigned(j, what);
  if (v >= bound)
    throw InputError(std::string(what) + " " + std::to_string(v) + " is out of range");
  return v;
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  return j;
}

std::vector<std::string> parse_labels(const Json& j) {
  std::vector<std::string> labels;
  for (const auto& v : array(j, "elements")) {
    if (!v.is_string()) throw InputError("element labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  if (labels.empty()) throw InputError("the carrier must have at least one element");
  std::set<std::string> distinct(labels.begin(), labels.end());
  if (distinct.size() != labels.size()) throw InputError("element labels must be distinct");
  return labels;
}

unsigned parse_arity(const Json& j) {
  unsigned n = to_unsigned(field(j, "arity"), "arity");
  if (n < 2) throw InputError("arity must be at least 2");
  return n;
}

Json table_values(const OpTable& t) {
  Json values = Json::array();
  for (Element v : t.values()) values.push_back(v);
  return values;
}

Json square(const OpTable& t, const std::vector<Element>& names) {
  Json rows = Json::array();
  for (Element x = 0; x < t.size(); ++x) {
    Json row = Json::array();
    for (Element y = 0; y < t.size(); ++y) row.push_back(names[t.at2(x, y)]);
    rows.push_back(std::move(row));
  }
  return rows;
}

Json table_json(const OpTable& t, const std::vector<std::string>& labels) {
  Json j;
  j["arity"] = t.arity();
  j["elements"] = labels;
  j["values"] = table_values(t);
  return j;
}

}  // namespace

std::vector<std::string> default_labels(unsigned size) {
  std::vector<std::string> labels;
  for (unsigned i = 0; i < size; ++i) labels.push_back(std::to_string(i));
  return labels;
}

std::string table_to_json(const OpTable& t, const std::vector<std::string>& labels) {
  if (labels.size() != t.size()) throw InputError("label count does not match the carrier");
  return table_json(t, labels).dump();
}

std::string table_to_json(const LabeledTable& t) { return table_to_json(t.table, t.labels); }

LabeledTable table_from_json(std::string_view text) {
  Json j = parse(text);
  unsigned n = parse_arity(j);
  auto labels = parse_labels(field(j, "elements"));
  const auto m = static_cast<unsigned>(labels.size());
  const Json& vals = array(field(j, "values"), "values");
  auto cells = checked_power(m, n);
  if (!cells || vals.size() != *cells)
    throw InputError("values must have " + std::to_string(m) + "^" + std::to_string(n) +
                     " entries, found " + std::to_string(vals.size()));
  std::vector<Element> values;
  values.reserve(vals.size());
  for (const auto& v : vals) values.push_back(index(v, m, "value"));
  return LabeledTable{OpTable(n, m, std::move(values)), std::move(labels)};
}

std::string system_to_json(const StrongSystem& s) {
  Json j;
  j["arity"] = s.arity;
  j["elements"] = s.labels;
  j["classes"] = s.partition.classes;
  std::vector<Element> ids(s.class_count());
  for (std::size_t c = 0; c < ids.size(); ++c) ids[c] = static_cast<Element>(c);
  j["meet"] = square(s.quotient.meet, ids);
  Json groups = Json::array();
  for (const ClassGroup& g : s.groups) {
    Json jg;
    jg["class"] = g.class_index;
    jg["neutral"] = g.neutral();
    jg["cayley"] = square(g.group.cayley, g.members);
    groups.push_back(std::move(jg));
  }
  j["groups"] = std::move(groups);
  Json homs = Json::array();
  const auto& classes = s.partition.classes;
  for (const HomMap& h : s.homs) {
    Json jh;
    jh["from"] = h.from;
    jh["to"] = h.to;
    Json map = Json::object();
    for (std::size_t i = 0; i < h.image.size(); ++i)
      map[std::to_string(classes[h.from][i])] = h.image[i];
    jh["map"] = std::move(map);
    homs.push_back(std::move(jh));
  }
  j["homs"] = std::move(homs);
  return j.dump();
}

StrongSystem system_from_json(std::string_view text) {
  Json j = parse(text);
  StrongSystem s;
  s.arity = parse_arity(j);
  s.labels = parse_labels(field(j, "elements"));
  const auto m = static_cast<unsigned>(s.labels.size());

  const Json& jclasses = array(field(j, "classes"), "classes");
  const std::size_t k = jclasses.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  s.partition.class_of.assign(m, unset);
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<Element> members;
    for (const auto& v : array(jclasses[c], "class")) {
      Element x = index(v, m, "class member");
      if (s.partition.class_of[x] != unset)
        throw InputError("element " + std::to_string(x) + " appears in two classes");
      s.partition.class_of[x] = c;
      members.push_back(x);
    }
    if (members.empty()) throw InputError("class " + std::to_string(c) + " is empty");
    s.partition.classes.push_back(std::move(members));
  }
  for (Element x = 0; x < m; ++x)
    if (s.partition.class_of[x] == unset)
      throw InputError("element " + std::to_string(x) + " belongs to no class");

  const Json& jmeet = array(field(j, "meet"), "meet");
  if (jmeet.size() != k) throw InputError("meet must be a k x k table");
  std::vector<Element> meet;
  for (const auto& row : jmeet) {
    if (array(row, "meet row").size() != k) throw InputError("meet must be a k x k table");
    for (const auto& v : row) meet.push_back(index(v, static_cast<unsigned>(k), "meet entry"));
  }
  s.quotient = QuotientSemilattice{OpTable(2, static_cast<unsigned>(k), std::move(meet))};

  const Json& jgroups = array(field(j, "groups"), "groups");
  if (jgroups.size() != k) throw InputError("expected one group per class");
  s.groups.resize(k);
  std::vector<bool> have_group(k, false);
  for (const auto& jg : jgroups) {
    std::size_t c = index(field(jg, "class"), static_cast<unsigned>(k), "group class");
    if (have_group[c]) throw InputError("class " + std::to_string(c) + " has two groups");
    have_group[c] = true;
    const auto& members = s.partition.classes[c];
    const auto size = static_cast<unsigned>(members.size());
    auto position = [&](const Json& v, const char* what) {
      Element x = index(v, m, what);
      auto it = std::find(members.begin(), members.end(), x);
      if (it == members.end())
        throw InputError(std::string(what) + " " + std::to_string(x) + " is not in class " +
                         std::to_string(c));
      return static_cast<Element>(it - members.begin());
    };
    Element identity = position(field(jg, "neutral"), "neutral");
    const Json& jc = array(field(jg, "cayley"), "cayley");
    if (jc.size() != size) throw InputError("cayley table size does not match its class");
    std::vector<Element> cayley;
    for (const auto& row : jc) {
      if (array(row, "cayley row").size() != size)
        throw InputError("cayley table size does not match its class");
      for (const auto& v : row) cayley.push_back(position(v, "cayley entry"));
    }
    ClassGroup& g = s.groups[c];
    g.class_index = c;
    g.members = members;
    g.group = GroupTable{OpTable(2, size, std::move(cayley)), identity};
    if (!abelian_group_violation(g.group)) g.factor_signature = invariant_factors(g.group);
  }

  for (const auto& jh : array(field(j, "homs"), "homs")) {
    HomMap h;
    h.from = index(field(jh, "from"), static_cast<unsigned>(k), "hom source");
    h.to = index(field(jh, "to"), static_cast<unsigned>(k), "hom target");
    const Json& map = field(jh, "map");
    if (!map.is_object()) throw InputError("hom map must be an object");
    const auto& source = s.partition.classes[h.from];
    if (map.size() != source.size())
      throw InputError("hom map must cover its source class exactly");
    for (Element x : source) {
      auto it = map.find(std::to_string(x));
      if (it == map.end())
        throw InputError("hom map misses element " + std::to_string(x));
      h.image.push_back(index(*it, m, "hom image"));
    }
    s.homs.push_back(std::move(h));
  }
  std::sort(s.homs.begin(), s.homs.end(), [](const HomMap& a, const HomMap& b) {
    return std::pair{a.from, a.to} < std::pair{b.from, b.to};
  });
  for (std::size_t i = 1; i < s.homs.size(); ++i)
    if (s.homs[i].from == s.homs[i - 1].from && s.homs[i].to == s.homs[i - 1].to)
      throw InputError("duplicate hom for a class pair");
  return s;
}

std::string reduction_to_json(const ReductionResult& r, const std::vector<std::string>& labels) {
  Json j;
  if (const auto* red = std::get_if<Reduction>(&r)) {
    j["reducible"] = true;
    Json sel = Json::object();
    const auto& e = red->selection.element_of_class;
    for (std::size_t c = 0; c < e.size(); ++c) sel[std::to_string(c)] = e[c];
    j["selection"] = std::move(sel);
    j["table"] = table_json(red->table, labels);
  } else {
    const auto& w = std::get<Irreducible>(r);
    j["reducible"] = false;
    Json sources = Json::array();
    for (auto [c, e] : w.sources) sources.push_back(Json::array({c, e}));
    j["witness"] = {{"class", w.witness_class}, {"images", w.images}, {"sources", sources}};
  }
  return j.dump();
}

std::string catalog_summary_json(const BandCatalog& cat) {
  Json j;
  j["labeled"] = cat.labeled;
  j["iso"] = cat.iso;
  return j.dump();
}

}  // namespace nband
