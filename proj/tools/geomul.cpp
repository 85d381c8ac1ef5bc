// geomul: evaluate geometric products, run verification suites, execute and
// render construction scripts.
//
// Exit status: 0 success, 1 verification or assertion failure, 2 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "geomul/dsl/interpreter.hpp"
#include "geomul/dsl/parser.hpp"
#include "geomul/report.hpp"
#include "geomul/segment_arithmetic.hpp"
#include "geomul/suites.hpp"
#include "geomul/svg.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInputError = 2;

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out.flush());
}

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

int cmd_eval(const std::string& a_text, const std::string& b_text, const std::string& trace_path,
             const std::string& svg_path) {
  geomul::Rational a, b;
  try {
    a = geomul::Rational::parse(a_text);
    b = geomul::Rational::parse(b_text);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  geomul::TracedValue r = geomul::geom_mul_traced(a, b);
  std::cout << r.value.to_string() << "\n";
  if (!trace_path.empty() && !write_file(trace_path, geomul::emit_json(r.trace))) {
    std::cerr << "error: cannot write " << trace_path << "\n";
    return kFailure;
  }
  if (!svg_path.empty()) {
    geomul::SvgOptions opts;
    opts.title = a.to_string() + " x " + b.to_string();
    if (!write_file(svg_path, geomul::emit_svg(r.trace, opts))) {
      std::cerr << "error: cannot write " << svg_path << "\n";
      return kFailure;
    }
  }
  return kOk;
}

int cmd_verify(const std::string& suite_name, long long cases, long long seed, const std::string& report_path) {
  geomul::SuiteConfig config;
  if (suite_name != "all") {
    auto s = geomul::suite_from_string(suite_name);
    if (!s) {
      std::cerr << "error: unknown suite '" << suite_name << "'\n";
      return kInputError;
    }
    config.suites = {*s};
  }
  if (cases < 1) {
    std::cerr << "error: --cases must be at least 1\n";
    return kInputError;
  }
  config.cases = static_cast<std::size_t>(cases);
  config.seed = static_cast<std::uint64_t>(seed);

  std::cout << "seed: " << seed << "  cases: " << cases << "\n";
  auto outcomes = geomul::run_suites(config);
  std::size_t failed = 0;
  for (const auto& o : outcomes) {
    std::printf("%-10s %6zu passed %6zu failed  (%zu fixed + %zu random)\n",
                std::string(geomul::to_string(o.suite)).c_str(), o.passed(), o.failed(), o.fixed_cases,
                o.random_cases);
    failed += o.failed();
  }
  std::cout.flush();

  std::string failures_path = report_path;
  if (!report_path.empty()) {
    if (!write_file(report_path, geomul::suites_to_json(config, outcomes).dump(2) + "\n")) {
      std::cerr << "error: cannot write " << report_path << "\n";
      return kFailure;
    }
  } else if (failed > 0) {
    failures_path = "geomul-failures.json";
    if (!write_file(failures_path, geomul::suites_to_json(config, outcomes, true).dump(2) + "\n")) {
      std::cerr << "error: cannot write " << failures_path << "\n";
    }
  }
  if (failed > 0) {
    std::cout << failed << " case(s) failed; traces in " << failures_path << "\n";
    return kFailure;
  }
  std::cout << "all suites passed\n";
  return kOk;
}

// Parses and executes a script, reporting source errors on stderr.
bool load_script(const std::string& path, geomul::dsl::ExecutionReport& report, int& status) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    status = kInputError;
    return false;
  }
  try {
    report = geomul::dsl::execute(geomul::dsl::parse(text), path);
  } catch (const geomul::dsl::SourceError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    status = kInputError;
    return false;
  }
  return true;
}

int cmd_run(const std::string& path) {
  geomul::dsl::ExecutionReport report;
  int status = kOk;
  if (!load_script(path, report, status)) return status;
  for (const auto& a : report.assertions) {
    std::cout << path << ":" << a.pos.line << ":" << a.pos.column << ": " << (a.passed ? "pass" : "FAIL") << "  "
              << a.text;
    if (!a.operands.empty()) {
      std::cout << "  [";
      for (std::size_t k = 0; k < a.operands.size(); ++k) std::cout << (k ? ", " : "") << a.operands[k];
      std::cout << "]";
    }
    std::cout << "\n";
  }
  for (const auto& [name, value] : report.environment) {
    std::cout << "  " << name << " = " << geomul::dsl::to_string(value) << "\n";
  }
  bool ok = report.passed();
  std::cout << (ok ? "pass" : "fail") << "\n";
  return ok ? kOk : kFailure;
}

int cmd_render(const std::string& path, const std::string& out) {
  geomul::dsl::ExecutionReport report;
  int status = kOk;
  if (!load_script(path, report, status)) return status;
  geomul::SvgOptions opts;
  opts.title = path;
  if (!write_file(out, geomul::emit_svg(report.trace, opts))) {
    std::cerr << "error: cannot write " << out << "\n";
    return kFailure;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact geometric multiplication by parallel-line constructions"};
  app.require_subcommand(1);
  int status = kOk;

  std::string a_text, b_text, trace_path, svg_path;
  auto* eval = app.add_subcommand("eval", "Multiply two rationals geometrically");
  eval->add_option("a", a_text, "First factor (p or p/q)")->required();
  eval->add_option("b", b_text, "Second factor (p or p/q)")->required();
  eval->add_option("--trace", trace_path, "Write the construction trace as JSON");
  eval->add_option("--svg", svg_path, "Write the construction figure as SVG");
  eval->callback([&] { status = cmd_eval(a_text, b_text, trace_path, svg_path); });

  std::string suite = "all", report_path;
  long long cases = 1000, seed = 42;
  auto* verify = app.add_subcommand("verify", "Run seeded theorem verification suites");
  verify->add_option("--suite", suite, "all or one suite name");
  verify->add_option("--cases", cases, "Random cases per suite");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--report", report_path, "Write every report as JSON");
  verify->callback([&] { status = cmd_verify(suite, cases, seed, report_path); });

  std::string script;
  auto* run = app.add_subcommand("run", "Execute a construction script");
  run->add_option("path", script, "Script (.geo)")->required();
  run->callback([&] { status = cmd_run(script); });

  std::string render_path, out_path;
  auto* render = app.add_subcommand("render", "Render a construction script as SVG");
  render->add_option("path", render_path, "Script (.geo)")->required();
  render->add_option("-o", out_path, "Output SVG")->required();
  render->callback([&] { status = cmd_render(render_path, out_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  return status;
}
