#include "nband/analysis.hpp"

#include <sstream>

#include <json.hpp>

namespace nband {

using Json = nlohmann::ordered_json;

AnalysisReport analyze(const LabeledTable& input) {
  const OpTable& f = input.table;
  AnalysisReport r;
  r.arity = f.arity();
  r.labels = input.labels;
  auto sym = check_symmetric(f);
  r.symmetric.holds = !sym;
  if (sym) {
    r.symmetric.witness = sym->tuple;
    r.symmetric.partner = sym->swapped;
  }
  auto assoc = check_associative(f);
  r.associative.holds = !assoc;
  if (assoc) {
    r.associative.witness = assoc->tuple;
    r.associative.position = assoc->position;
  }
  auto idem = check_idempotent(f);
  r.idempotent.holds = !idem;
  if (idem) r.idempotent.witness = {idem->element};
  if (!r.is_band()) return r;

  StrongSystem s = decompose(f, Verify::no);
  r.classification = classify(f, Verify::no);
  r.sigma_classes = s.partition.classes;
  r.quotient_meet = s.quotient.meet;
  for (const ClassGroup& g : s.groups) r.class_signatures.push_back(g.factor_signature);
  r.reducible = is_reducible(decide_reducible(s, f.arity(), Verify::no));
  return r;
}

namespace {

Json axiom_json(const AxiomResult& a, bool with_position, bool with_partner) {
  Json j;
  j["holds"] = a.holds;
  if (a.holds) {
    j["witness"] = nullptr;
    return j;
  }
  Json w;
  w["tuple"] = a.witness;
  if (with_position) w["position"] = a.position;
  if (with_partner) w["swapped"] = a.partner;
  j["witness"] = std::move(w);
  return j;
}

std::string tuple_text(const std::vector<Element>& xs, const std::vector<std::string>& labels) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + labels[xs[i]];
  return out + ")";
}

std::string class_text(const std::vector<Element>& xs, const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + labels[xs[i]];
  return out + "}";
}

}  // namespace

std::string report_to_json(const AnalysisReport& r) {
  Json j;
  j["arity"] = r.arity;
  j["elements"] = r.labels;
  j["axioms"] = {{"associative", axiom_json(r.associative, true, false)},
                 {"symmetric", axiom_json(r.symmetric, false, true)},
                 {"idempotent", axiom_json(r.idempotent, false, false)}};
  if (!r.is_band()) return j.dump();
  j["classification"] = to_string(*r.classification);
  j["sigma_classes"] = r.sigma_classes;
  Json meet = Json::array();
  for (Element a = 0; a < r.quotient_meet->size(); ++a) {
    Json row = Json::array();
    for (Element b = 0; b < r.quotient_meet->size(); ++b) row.push_back(r.quotient_meet->at2(a, b));
    meet.push_back(std::move(row));
  }
  j["quotient_meet"] = std::move(meet);
  j["class_groups"] = r.class_signatures;
  j["reducible"] = *r.reducible;
  return j.dump();
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream out;
  const auto& L = r.labels;
  out << "arity " << r.arity << ", " << L.size() << " elements\n";
  out << "associative: " << (r.associative.holds ? "yes" : "no");
  if (!r.associative.holds)
    out << ", fails at " << tuple_text(r.associative.witness, L) << " bracket "
        << r.associative.position;
  out << "\nsymmetric: " << (r.symmetric.holds ? "yes" : "no");
  if (!r.symmetric.holds)
    out << ", F" << tuple_text(r.symmetric.witness, L) << " != F"
        << tuple_text(r.symmetric.partner, L);
  out << "\nidempotent: " << (r.idempotent.holds ? "yes" : "no");
  if (!r.idempotent.holds) out << ", fails at " << L[r.idempotent.witness[0]];
  out << "\n";
  if (!r.is_band()) return out.str();

  out << "classification: " << to_string(*r.classification) << "\n";
  out << "sigma classes:";
  for (const auto& c : r.sigma_classes) out << " " << class_text(c, L);
  out << "\nquotient meet:\n";
  const OpTable& meet = *r.quotient_meet;
  for (Element a = 0; a < meet.size(); ++a) {
    out << " ";
    for (Element b = 0; b < meet.size(); ++b) out << " " << meet.at2(a, b);
    out << "\n";
  }
  out << "class groups:";
  for (std::size_t c = 0; c < r.class_signatures.size(); ++c) {
    out << " " << class_text(r.sigma_classes[c], L) << "=";
    const auto& sig = r.class_signatures[c];
    if (sig.empty()) out << "trivial";
    for (std::size_t i = 0; i < sig.size(); ++i) out << (i ? "xZ" : "Z") << sig[i];
  }
  out << "\nreducible to a semigroup: " << (*r.reducible ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace nband
