// grcat: command-line front end.
//
// Exit codes: 0 success / all checks pass, 1 domain failure (violations,
// failed checks, unknown object, size guard), 2 IO or parse error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "grcat/catspec.hpp"
#include "grcat/filtration.hpp"
#include "grcat/generator.hpp"
#include "grcat/guards.hpp"
#include "grcat/measure.hpp"
#include "grcat/render.hpp"
#include "grcat/simpleminded.hpp"
#include "grcat/theorems.hpp"

namespace {

using namespace grcat;

struct Options {
  std::string format = "table";
  std::string out;
  bool verbose = false;
  SizeGuards guards;
};

Format format_of(const Options& o) { return o.format == "json" ? Format::json : Format::table; }

class Failure : public std::runtime_error {
 public:
  Failure(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

void emit(const Options& o, const std::string& payload) {
  if (o.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file || !(file << payload)) throw Failure(2, "cannot write " + o.out);
}

CategorySpec load(const std::string& path, const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  CategorySpec spec = load_spec(path);
  if (o.verbose) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    std::cerr << "loaded " << spec.name << " from " << path << " (" << spec.size()
              << " indecomposables) in " << ms.count() << " ms\n";
  }
  return spec;
}

/// Measures and reports assume a well-formed instance.
void require_valid(const CategorySpec& spec) {
  const ValidationReport v = validate_spec(spec);
  if (!v.ok()) {
    std::cerr << render_validation(spec, v, Format::table);
    throw Failure(1, "invalid spec");
  }
}

int cmd_validate(const std::string& path, const Options& o) {
  const CategorySpec spec = load(path, o);
  const ValidationReport report = validate_spec(spec);
  emit(o, render_validation(spec, report, format_of(o)));
  return report.ok() ? 0 : 1;
}

int cmd_measure(const std::string& path, const std::optional<std::string>& object,
                const Options& o) {
  const CategorySpec spec = load(path, o);
  require_valid(spec);
  const MeasureTable table = gr_table(spec);
  if (object) {
    const auto i = spec.index_of(*object);
    if (!i) throw Failure(1, "unknown object \"" + *object + "\"");
    const std::string m = table.measures[*i].str();
    emit(o, format_of(o) == Format::json ? "{\"object\": \"" + *object + "\", \"measure\": \"" + m + "\"}\n"
                                         : m + "\n");
    return 0;
  }
  emit(o, render_measure_table(spec, table, format_of(o)));
  return 0;
}

int cmd_check(const std::string& path, const std::string& suite, const Options& o) {
  const CategorySpec spec = load(path, o);
  const ValidationReport v = validate_spec(spec);
  if (!v.ok() && o.verbose) std::cerr << render_validation(spec, v, Format::table);
  Report report;
  if (suite == "gr-axioms") {
    report = check_gr_axioms(spec);
  } else if (suite == "main-property") {
    report = check_main_property(spec);
  } else if (suite == "ext-bound") {
    report = check_ext_bound(spec);
  } else if (suite == "small-lemmas") {
    report = check_small_lemmas(spec);
  } else {
    report = check_all(spec);
  }
  emit(o, format_of(o) == Format::json ? report_to_json(report) : report_to_table(report));
  return report.passed() ? 0 : 1;
}

int cmd_report(const std::string& path, const Options& o) {
  const CategorySpec spec = load(path, o);
  require_valid(spec);
  const BrauerThrallSummary s = brauer_thrall_report(spec);
  if (o.verbose) {
    for (const auto& line : filt_closure(spec, s.theta_inf.members).frontier_log) {
      std::cerr << line << "\n";
    }
  }
  emit(o, render_brauer_thrall(spec, s, format_of(o)));
  return s.report.passed() ? 0 : 1;
}

int write_generated(const CategorySpec& spec, const Options& o) {
  emit(o, render_spec(spec));
  std::ostream& summary = o.out.empty() ? std::cerr : std::cout;
  summary << "generated " << spec.name << ": " << spec.size() << " indecomposables, "
          << spec.inflations.size() << " inflations, " << spec.conflations.size() << " conflations";
  if (!o.out.empty()) summary << " -> " << o.out;
  summary << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gabriel-Roiter measures and length-category checks on finite instances"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  app.add_option("--out", o.out, "Write the payload to this file instead of stdout");
  app.add_flag("--verbose", o.verbose, "Diagnostics on stderr");

  std::string path;
  auto* validate = app.add_subcommand("validate", "Check a spec file against the structural rules");
  validate->add_option("spec", path, "Spec file")->required();

  std::optional<std::string> object;
  auto* measure = app.add_subcommand("measure", "GR measures of every indecomposable");
  measure->add_option("spec", path, "Spec file")->required();
  measure->add_option("--object", object, "Print the measure of one object only");

  std::string suite = "all";
  auto* check = app.add_subcommand("check", "Run a checker suite");
  check->add_option("spec", path, "Spec file")->required();
  check->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"gr-axioms", "main-property", "ext-bound", "small-lemmas", "all"}))
      ->capture_default_str();

  auto* report = app.add_subcommand("report", "GR chain, Theta tower and length bounds");
  report->add_option("spec", path, "Spec file")->required();

  auto* generate = app.add_subcommand("generate", "Write a generated or transcribed spec");
  generate->require_subcommand(1);
  int n = 0;
  auto* an = generate->add_subcommand("an", "mod kA_n over F2");
  an->add_option("--n", n, "Number of vertices")->required();
  std::string fixture_name;
  int window = 1;
  auto* fixture = generate->add_subcommand("fixture", "A transcribed example");
  fixture->add_option("--name", fixture_name, "Fixture name")
      ->required()
      ->check(CLI::IsMember({"final-example", "db-window"}));
  fixture->add_option("--window", window, "Window size for db-window")->capture_default_str();

  for (auto* sub : {validate, measure, check, report, generate, an, fixture}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    o.guards = SizeGuards::from_env();
    if (*validate) return cmd_validate(path, o);
    if (*measure) return cmd_measure(path, object, o);
    if (*check) return cmd_check(path, suite, o);
    if (*report) return cmd_report(path, o);
    if (*an) return write_generated(gen::generate_an(n, {o.guards.an_max}), o);
    return write_generated(gen::fixture(fixture_name, window, o.guards.window_max), o);
  } catch (const Failure& e) {
    std::cerr << "grcat: " << e.what() << "\n";
    return e.code();
  } catch (const ParseError& e) {
    std::cerr << "grcat: parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "grcat: " << e.what() << "\n";
    return 2;
  } catch (const SizeGuardError& e) {
    std::cerr << "grcat: size guard: " << e.what() << "\n";
    return 1;
  } catch (const SpecError& e) {
    std::cerr << "grcat: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "grcat: " << e.what() << "\n";
    return 1;
  }
}
