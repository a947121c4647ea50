// nband: command-line front end for the nband C library.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nband/nband.h"

namespace {

enum Exit { ok = 0, fails = 1, error = 2 };

struct TableDeleter {
  void operator()(nband_table* t) const { nband_table_free(t); }
};
struct SystemDeleter {
  void operator()(nband_system* s) const { nband_system_free(s); }
};
struct StringDeleter {
  void operator()(char* s) const { nband_string_free(s); }
};
using Table = std::unique_ptr<nband_table, TableDeleter>;
using System = std::unique_ptr<nband_system, SystemDeleter>;
using String = std::unique_ptr<char, StringDeleter>;

struct Failure {
  int code;
};

int exit_code(nband_status s) {
  switch (s) {
    case NBAND_OK: return ok;
    case NBAND_FALSE:
    case NBAND_E_DOMAIN: return fails;
    default: return error;
  }
}

// Throws Failure for anything but OK and FALSE.
nband_status call(nband_status s) {
  if (s == NBAND_OK || s == NBAND_FALSE) return s;
  std::cerr << "nband: " << nband_status_name(s) << ": " << nband_last_error() << "\n";
  throw Failure{exit_code(s)};
}

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "nband: cannot read " << path << "\n";
    throw Failure{error};
  }
  return {std::istreambuf_iterator<char>(in), {}};
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text << "\n";
  if (!out) {
    std::cerr << "nband: cannot write " << path << "\n";
    throw Failure{error};
  }
}

Table load_table(const std::string& path) {
  nband_table* t = nullptr;
  call(nband_table_from_json(slurp(path).c_str(), &t));
  return Table(t);
}

std::string to_json(const nband_table* t) {
  char* s = nullptr;
  call(nband_table_to_json(t, &s));
  return String(s).get();
}

// On a table that is not a symmetric n-ary band, prints the labeled axiom
// report to stderr and exits 1.
void require_band(const nband_table* t) {
  char* report = nullptr;
  if (call(nband_analyze(t, 0, &report)) == NBAND_OK) {
    nband_string_free(report);
    return;
  }
  String text(report);
  std::cerr << "not a symmetric n-ary band\n" << text.get();
  throw Failure{fails};
}

int stream_line(const nband_table* t, void*) {
  char* s = nullptr;
  if (nband_table_to_json(t, &s) != NBAND_OK) return 1;
  std::cout << s << "\n";
  nband_string_free(s);
  return 0;
}

struct Options {
  bool no_verify = false;
  unsigned threads = 0;
  std::string file, file_b, output, report = "text";
  unsigned arity = 0, size = 0;
  bool up_to_iso = false, count_only = false, general = false;
};

int cmd_check(const Options& o) {
  Table t = load_table(o.file);
  char* report = nullptr;
  nband_status s = call(nband_analyze(t.get(), o.report == "json", &report));
  String text(report);
  std::cout << text.get();
  if (o.report == "json") std::cout << "\n";
  return exit_code(s);
}

int cmd_decompose(const Options& o) {
  Table t = load_table(o.file);
  if (!o.no_verify) require_band(t.get());
  nband_system* s = nullptr;
  call(nband_decompose(t.get(), &s));
  System sys(s);
  char* json = nullptr;
  call(nband_system_to_json(sys.get(), &json));
  emit(String(json).get(), o.output);
  return ok;
}

int cmd_compose(const Options& o) {
  nband_system* s = nullptr;
  call(nband_system_from_json(slurp(o.file).c_str(), &s));
  System sys(s);
  if (!o.no_verify) {
    char* summary = nullptr;
    nband_status v = call(nband_validate(sys.get(), o.arity, &summary));
    String text(summary);
    if (v != NBAND_OK) {
      std::cerr << "invalid strong system: " << text.get() << "\n";
      return fails;
    }
  }
  nband_table* t = nullptr;
  call(nband_compose(sys.get(), o.arity, &t));
  emit(to_json(Table(t).get()), o.output);
  return ok;
}

int cmd_reduce(const Options& o) {
  Table t = load_table(o.file);
  if (!o.no_verify) require_band(t.get());
  char* result = nullptr;
  nband_status s = call(nband_reduce(t.get(), &result, nullptr));
  emit(String(result).get(), o.output);
  return exit_code(s);
}

int cmd_extend(const Options& o) {
  Table t = load_table(o.file);
  nband_table* out = nullptr;
  call(nband_extend(t.get(), o.arity, &out));
  emit(to_json(Table(out).get()), o.output);
  return ok;
}

int cmd_enumerate(const Options& o) {
  std::uint64_t labeled = 0, iso = 0;
  call(nband_enumerate(o.size, o.arity, o.up_to_iso, o.count_only ? nullptr : stream_line, nullptr,
                       &labeled, &iso));
  std::cout << "{\"labeled\":" << labeled << ",\"iso\":" << iso << "}\n";
  return ok;
}

int cmd_oracle_bands(const Options& o) {
  std::uint64_t labeled = 0, iso = 0;
  call(nband_brute_force_bands(o.size, o.arity, o.count_only ? nullptr : stream_line, nullptr,
                               &labeled, &iso));
  std::cout << "{\"labeled\":" << labeled << ",\"iso\":" << iso << "}\n";
  return ok;
}

int cmd_oracle_reductions(const Options& o) {
  Table t = load_table(o.file);
  std::uint64_t count = 0;
  call(nband_brute_force_reductions(t.get(), o.general, o.count_only ? nullptr : stream_line,
                                    nullptr, &count));
  std::cout << "{\"reductions\":" << count << "}\n";
  return count > 0 ? ok : fails;
}

int cmd_isomorphic(const Options& o) {
  Table a = load_table(o.file);
  Table b = load_table(o.file_b);
  nband_status s = call(nband_isomorphic(a.get(), b.get()));
  std::cout << (s == NBAND_OK ? "isomorphic" : "not isomorphic") << "\n";
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite symmetric n-ary bands: checks, decomposition, reduction, enumeration"};
  app.set_version_flag("--version", std::string("nband ") + nband_version());
  app.require_subcommand(1);
  Options o;
  app.add_flag("--no-verify", o.no_verify, "Skip re-checking the axioms of inputs");
  app.add_option("--threads", o.threads, "Worker threads for exhaustive scans (0 = all cores)");

  int (*run)(const Options&) = nullptr;
  auto file_arg = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Input file, - for stdin")->required();
  };
  auto out_opt = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "Output file (default stdout)");
  };

  auto* check = app.add_subcommand("check", "Check the axioms and analyze the structure");
  file_arg(check);
  check->add_option("--report", o.report, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  check->callback([&] { run = cmd_check; });

  auto* decompose = app.add_subcommand("decompose", "Write the strong semilattice decomposition");
  file_arg(decompose);
  out_opt(decompose);
  decompose->callback([&] { run = cmd_decompose; });

  auto* compose = app.add_subcommand("compose", "Build the table of a strong system");
  file_arg(compose);
  compose->add_option("--arity", o.arity, "Arity (default: the system's)");
  out_opt(compose);
  compose->callback([&] { run = cmd_compose; });

  auto* reduce = app.add_subcommand("reduce", "Decide reducibility to a binary semigroup");
  file_arg(reduce);
  out_opt(reduce);
  reduce->callback([&] { run = cmd_reduce; });

  auto* extend = app.add_subcommand("extend", "n-ary extension of a binary table");
  file_arg(extend);
  extend->add_option("--arity", o.arity, "Target arity")->required();
  out_opt(extend);
  extend->callback([&] { run = cmd_extend; });

  auto* enumerate = app.add_subcommand("enumerate", "List all symmetric n-ary bands");
  enumerate->add_option("--size", o.size, "Carrier size")->required();
  enumerate->add_option("--arity", o.arity, "Arity")->required();
  enumerate->add_flag("--up-to-iso", o.up_to_iso, "One canonical table per isomorphism class");
  enumerate->add_flag("--count-only", o.count_only, "Print only the summary line");
  enumerate->callback([&] { run = cmd_enumerate; });

  auto* oracle = app.add_subcommand("oracle", "Brute-force cross-checks");
  oracle->require_subcommand(1);
  auto* bands = oracle->add_subcommand("bands", "All symmetric idempotent associative tables");
  bands->add_option("--size", o.size, "Carrier size")->required();
  bands->add_option("--arity", o.arity, "Arity")->required();
  bands->add_flag("--count-only", o.count_only, "Print only the summary line");
  bands->callback([&] { run = cmd_oracle_bands; });
  auto* reductions = oracle->add_subcommand("reductions", "All binary tables extending to F");
  file_arg(reductions);
  reductions->add_flag("--general", o.general, "Also try non-symmetric tables");
  reductions->add_flag("--count-only", o.count_only, "Print only the summary line");
  reductions->callback([&] { run = cmd_oracle_reductions; });

  auto* iso = app.add_subcommand("isomorphic", "Exit 0 iff the two tables are isomorphic");
  iso->add_option("a", o.file, "First table")->required();
  iso->add_option("b", o.file_b, "Second table")->required();
  iso->callback([&] { run = cmd_isomorphic; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : error;
  }
  nband_set_threads(o.threads);
  nband_set_verify(!o.no_verify);
  try {
    return run(o);
  } catch (const Failure& f) {
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "nband: " << e.what() << "\n";
    return error;
  }
}
