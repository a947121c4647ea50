#include "nband/nband.h"

#include <atomic>
#include <cstring>
#include <new>
#include <string>

#include "nband/analysis.hpp"
#include "nband/errors.hpp"

struct nband_table {
  nband::LabeledTable value;
};

struct nband_system {
  nband::StrongSystem value;
};

namespace {

thread_local std::string last_error;
std::atomic<unsigned> threads{0};
std::atomic<bool> verify_inputs{true};

nband::Budget budget() {
  nband::Budget b;
  b.workers = threads.load();
  return b;
}

nband::Verify verify() { return verify_inputs.load() ? nband::Verify::yes : nband::Verify::no; }

template <typename Fn>
nband_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const nband::InputError& e) {
    last_error = e.what();
    return NBAND_E_INPUT;
  } catch (const nband::DomainError& e) {
    last_error = e.what();
    return NBAND_E_DOMAIN;
  } catch (const nband::ResourceError& e) {
    last_error = e.what();
    return NBAND_E_RESOURCE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return NBAND_E_RESOURCE;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return NBAND_E_INTERNAL;
  } catch (...) {
    last_error = "internal error";
    return NBAND_E_INTERNAL;
  }
}

nband_status missing(const char* what) {
  last_error = std::string("null argument: ") + what;
  return NBAND_E_INPUT;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nband_table* wrap(nband::OpTable t) {
  auto labels = nband::default_labels(t.size());
  return new nband_table{{std::move(t), std::move(labels)}};
}

nband_status stream(const nband::BandCatalog& cat, nband_table_callback cb, void* user,
                    uint64_t* labeled, uint64_t* iso) {
  if (cb) {
    for (const auto& t : cat.entries) {
      nband_table view{{t, nband::default_labels(t.size())}};
      if (cb(&view, user) != 0) break;
    }
  }
  if (labeled) *labeled = cat.labeled;
  if (iso) *iso = cat.iso;
  return NBAND_OK;
}

}  // namespace

extern "C" {

const char* nband_version(void) { return NBAND_VERSION_STRING; }

const char* nband_last_error(void) { return last_error.c_str(); }

const char* nband_status_name(nband_status status) {
  switch (status) {
    case NBAND_OK: return "ok";
    case NBAND_FALSE: return "false";
    case NBAND_E_INPUT: return "input error";
    case NBAND_E_DOMAIN: return "domain error";
    case NBAND_E_RESOURCE: return "resource error";
    case NBAND_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void nband_set_threads(unsigned n) { threads.store(n); }

void nband_set_verify(int v) { verify_inputs.store(v != 0); }

void nband_string_free(char* s) { delete[] s; }

nband_status nband_table_from_json(const char* text, nband_table** out) {
  if (!text) return missing("text");
  if (!out) return missing("out");
  return guarded([&] {
    *out = new nband_table{nband::table_from_json(text)};
    return NBAND_OK;
  });
}

nband_status nband_table_to_json(const nband_table* t, char** out) {
  if (!t) return missing("table");
  if (!out) return missing("out");
  return guarded([&] {
    *out = copy_string(nband::table_to_json(t->value));
    return NBAND_OK;
  });
}

nband_status nband_table_create(unsigned arity, unsigned size, const uint32_t* values,
                                nband_table** out) {
  if (!values) return missing("values");
  if (!out) return missing("out");
  return guarded([&] {
    auto cells = nband::checked_power(size, arity);
    if (!cells || *cells > nband::Budget{}.max_cells)
      throw nband::ResourceError("table too large");
    *out = wrap(nband::OpTable(arity, size, std::vector<nband::Element>(values, values + *cells)));
    return NBAND_OK;
  });
}

void nband_table_free(nband_table* t) { delete t; }

unsigned nband_table_arity(const nband_table* t) { return t ? t->value.table.arity() : 0; }

unsigned nband_table_size(const nband_table* t) { return t ? t->value.table.size() : 0; }

const char* nband_table_label(const nband_table* t, uint32_t element) {
  if (!t || element >= t->value.labels.size()) return nullptr;
  return t->value.labels[element].c_str();
}

nband_status nband_table_values(const nband_table* t, const uint32_t** values, uint64_t* count) {
  if (!t) return missing("table");
  if (values) *values = t->value.table.values().data();
  if (count) *count = t->value.table.cell_count();
  return NBAND_OK;
}

nband_status nband_table_eval(const nband_table* t, const uint32_t* tuple, size_t len,
                              uint32_t* out) {
  if (!t) return missing("table");
  if (!tuple) return missing("tuple");
  if (!out) return missing("out");
  return guarded([&] {
    *out = t->value.table.eval(std::span<const nband::Element>(tuple, len));
    return NBAND_OK;
  });
}

nband_status nband_check(const nband_table* t) {
  if (!t) return missing("table");
  return guarded([&] { return nband::is_symmetric_band(t->value.table) ? NBAND_OK : NBAND_FALSE; });
}

nband_status nband_analyze(const nband_table* t, int json, char** report) {
  if (!t) return missing("table");
  if (!report) return missing("report");
  return guarded([&] {
    nband::AnalysisReport r = nband::analyze(t->value);
    *report = copy_string(json ? nband::report_to_json(r) : nband::report_to_text(r));
    return r.is_band() ? NBAND_OK : NBAND_FALSE;
  });
}

nband_status nband_extend(const nband_table* binary, unsigned arity, nband_table** out) {
  if (!binary) return missing("table");
  if (!out) return missing("out");
  return guarded([&] {
    if (binary->value.table.arity() != 2) throw nband::InputError("extend expects a binary table");
    if (arity < 2) throw nband::InputError("arity must be at least 2");
    nband::OpTable ext = nband::nary_extension(binary->value.table, arity, budget());
    *out = new nband_table{{std::move(ext), binary->value.labels}};
    return NBAND_OK;
  });
}

nband_status nband_canonical_form(const nband_table* t, nband_table** out) {
  if (!t) return missing("table");
  if (!out) return missing("out");
  return guarded([&] {
    *out = wrap(nband::canonical_form(t->value.table, budget()));
    return NBAND_OK;
  });
}

nband_status nband_isomorphic(const nband_table* a, const nband_table* b) {
  if (!a || !b) return missing("table");
  return guarded([&] {
    return nband::isomorphic(a->value.table, b->value.table, budget()) ? NBAND_OK : NBAND_FALSE;
  });
}

nband_status nband_decompose(const nband_table* t, nband_system** out) {
  if (!t) return missing("table");
  if (!out) return missing("out");
  return guarded([&] {
    nband::StrongSystem s = nband::decompose(t->value.table, verify());
    s.labels = t->value.labels;
    *out = new nband_system{std::move(s)};
    return NBAND_OK;
  });
}

nband_status nband_system_from_json(const char* text, nband_system** out) {
  if (!text) return missing("text");
  if (!out) return missing("out");
  return guarded([&] {
    *out = new nband_system{nband::system_from_json(text)};
    return NBAND_OK;
  });
}

nband_status nband_system_to_json(const nband_system* s, char** out) {
  if (!s) return missing("system");
  if (!out) return missing("out");
  return guarded([&] {
    *out = copy_string(nband::system_to_json(s->value));
    return NBAND_OK;
  });
}

void nband_system_free(nband_system* s) { delete s; }

nband_status nband_compose(const nband_system* s, unsigned arity, nband_table** out) {
  if (!s) return missing("system");
  if (!out) return missing("out");
  return guarded([&] {
    unsigned n = arity ? arity : s->value.arity;
    if (n < 2) throw nband::InputError("arity must be at least 2");
    nband::OpTable t = nband::compose(s->value, n, verify());
    *out = new nband_table{{std::move(t), s->value.labels}};
    return NBAND_OK;
  });
}

nband_status nband_validate(const nband_system* s, unsigned arity, char** summary) {
  if (!s) return missing("system");
  return guarded([&] {
    unsigned n = arity ? arity : s->value.arity;
    nband::ValidationReport report = nband::validate_system(s->value, n);
    if (summary) *summary = copy_string(report.summary());
    return report.ok() ? NBAND_OK : NBAND_FALSE;
  });
}

nband_status nband_reduce(const nband_table* t, char** result, nband_table** reduction) {
  if (!t) return missing("table");
  return guarded([&] {
    const nband::OpTable& f = t->value.table;
    nband::StrongSystem s = nband::decompose(f, verify());
    nband::ReductionResult r = nband::decide_reducible(s, f.arity(), nband::Verify::no);
    if (result) *result = copy_string(nband::reduction_to_json(r, t->value.labels));
    if (auto* red = std::get_if<nband::Reduction>(&r)) {
      if (reduction) *reduction = new nband_table{{red->table, t->value.labels}};
      return NBAND_OK;
    }
    return NBAND_FALSE;
  });
}

nband_status nband_verify_reduction(const nband_table* f, const nband_table* g, char** failures) {
  if (!f || !g) return missing("table");
  return guarded([&] {
    nband::ReductionReport report = nband::verify_reduction(f->value.table, g->value.table, budget());
    if (failures) {
      std::string text;
      for (const auto& line : report.failures) text += line + "\n";
      *failures = copy_string(text);
    }
    return report.ok() ? NBAND_OK : NBAND_FALSE;
  });
}

nband_status nband_enumerate(unsigned size, unsigned arity, int up_to_iso, nband_table_callback cb,
                             void* user, uint64_t* labeled, uint64_t* iso) {
  return guarded([&] {
    return stream(nband::enumerate_bands(size, arity, up_to_iso != 0, budget()), cb, user, labeled,
                  iso);
  });
}

nband_status nband_brute_force_bands(unsigned size, unsigned arity, nband_table_callback cb,
                                     void* user, uint64_t* labeled, uint64_t* iso) {
  return guarded([&] {
    return stream(nband::brute_force_bands(size, arity, budget()), cb, user, labeled, iso);
  });
}

nband_status nband_brute_force_reductions(const nband_table* t, int general,
                                          nband_table_callback cb, void* user, uint64_t* count) {
  if (!t) return missing("table");
  return guarded([&] {
    auto mode = general ? nband::ReductionSearch::general : nband::ReductionSearch::symmetric;
    auto found = nband::brute_force_reductions(t->value.table, mode, budget());
    if (cb) {
      for (const auto& g : found) {
        nband_table view{{g, t->value.labels}};
        if (cb(&view, user) != 0) break;
      }
    }
    if (count) *count = found.size();
    return NBAND_OK;
  });
}

}  // extern "C"
