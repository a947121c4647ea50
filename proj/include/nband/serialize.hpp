#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nband/compose.hpp"
#include "nband/reduce.hpp"

namespace nband {

/// An operation table together with the external labels of its elements.
struct LabeledTable {
  OpTable table;
  std::vector<std::string> labels;
};

/// "0", "1", ..., "m-1".
std::vector<std::string> default_labels(unsigned size);

/// {"arity": n, "elements": [...], "values": [...]}, compact, one line.
std::string table_to_json(const OpTable& t, const std::vector<std::string>& labels);
std::string table_to_json(const LabeledTable& t);
/// Throws InputError on any schema or range violation.
LabeledTable table_from_json(std::string_view text);

/// {"arity", "elements", "classes", "meet", "groups", "homs"}.
std::string system_to_json(const StrongSystem& s);
/// Structural checks only (shapes and index ranges); semantic conditions are
/// left to validate_system.
StrongSystem system_from_json(std::string_view text);

/// Element indices in "selection", "images" and "sources".
std::string reduction_to_json(const ReductionResult& r, const std::vector<std::string>& labels);

/// {"labeled": L, "iso": I}
std::string catalog_summary_json(const BandCatalog& cat);

}  // namespace nband
