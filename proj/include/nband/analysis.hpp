#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nband/reduce.hpp"
#include "nband/serialize.hpp"

namespace nband {

struct AxiomResult {
  bool holds = false;
  std::vector<Element> witness;  // empty when the axiom holds
  std::vector<Element> partner;  // associativity: none; symmetry: swapped tuple
  unsigned position = 0;         // associativity bracket position
};

/// Everything `check` prints. The structural fields are filled only when all
/// three axioms hold.
struct AnalysisReport {
  unsigned arity = 0;
  std::vector<std::string> labels;
  AxiomResult associative;
  AxiomResult symmetric;
  AxiomResult idempotent;
  std::optional<Classification> classification;
  std::vector<std::vector<Element>> sigma_classes;
  std::optional<OpTable> quotient_meet;
  std::vector<std::vector<unsigned>> class_signatures;
  std::optional<bool> reducible;

  bool is_band() const { return associative.holds && symmetric.holds && idempotent.holds; }
};

AnalysisReport analyze(const LabeledTable& input);

/// Element indices throughout.
std::string report_to_json(const AnalysisReport& r);
/// Multi-line, using element labels.
std::string report_to_text(const AnalysisReport& r);

}  // namespace nband
