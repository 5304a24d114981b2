#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "geo/conformance.hpp"
#include "geo/render.hpp"
#include "geo/script.hpp"

// Exit codes: 0 success, 1 failed assertions / violations / evaluation
// errors, 2 parse errors, 3 I/O errors.

namespace {

int write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return 3;
  }
  out << text;
  return out ? 0 : 3;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int print_diagnostics(const std::vector<geo::script::Diagnostic>& diags) {
  for (const auto& d : diags) {
    const char* kind = d.kind == geo::script::Diagnostic::Kind::Syntax
                           ? "syntax"
                           : (d.kind ==
                                      geo::script::Diagnostic::Kind::
                                          UnknownIdentifier
                                  ? "unknown-identifier"
                                  : "arity-mismatch");
    std::cerr << "line " << d.line << ":" << d.column << ": " << kind << ": "
              << d.message << "\n";
  }
  return 2;
}

int cmd_run(const std::string& path, const std::string& format,
            const std::string& out) {
  auto src = read_file(path);
  if (!src) {
    std::cerr << "error: cannot read " << path << "\n";
    return 3;
  }
  auto parsed = geo::script::parse(*src);
  if (!parsed.ok()) return print_diagnostics(parsed.diagnostics);
  auto report = geo::script::evaluate(*parsed.script);
  auto text = geo::script::format_report(
      report, format == "json" ? geo::script::ReportFormat::Json
                               : geo::script::ReportFormat::Text);
  int wr = write_out(out, text);
  if (wr) return wr;
  return (report.fails() || report.errors()) ? 1 : 0;
}

int cmd_suite(geo::conf::SuiteKind kind, std::uint64_t seed, long n,
              const std::string& filter, const std::string& format,
              const std::string& out) {
  auto report = geo::conf::run_suite(kind, filter, seed, n);
  std::string text = format == "json" ? geo::conf::report_json(report)
                                      : geo::conf::report_text(report);
  int wr = write_out(out, text);
  if (wr) return wr;
  return report.ok() ? 0 : 1;
}

int cmd_render(const std::string& path, std::string out) {
  auto src = read_file(path);
  if (!src) {
    std::cerr << "error: cannot read " << path << "\n";
    return 3;
  }
  auto parsed = geo::script::parse(*src);
  if (!parsed.ok()) return print_diagnostics(parsed.diagnostics);
  std::map<std::string, geo::Point> env;
  auto report = geo::script::evaluate(*parsed.script, &env);
  if (report.errors()) {
    std::cerr << "error: script evaluation failed\n";
    std::cerr << geo::script::format_report(report,
                                            geo::script::ReportFormat::Text);
    return 1;
  }
  if (out.empty()) {
    out = path;
    auto dotpos = out.rfind('.');
    if (dotpos != std::string::npos) out.resize(dotpos);
    out += ".svg";
  }
  return write_out(out, geo::render::to_svg(*parsed.script, env));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact constructive-geometry kernel"};
  app.require_subcommand(1);

  std::string path, out, format = "text", filter;
  std::uint64_t seed = 42;
  long n = 1000;

  auto* run = app.add_subcommand("run", "evaluate a .geo script");
  run->add_option("script", path, "script file")->required();
  run->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  run->add_option("--out", out, "output path (default stdout)");

  auto* axioms = app.add_subcommand("axioms", "run the axiom suite");
  auto* theorems = app.add_subcommand("theorems", "run the theorem suite");
  for (auto* s : {axioms, theorems}) {
    s->add_option("--seed", seed, "generator seed");
    s->add_option("--n", n, "instances per spec");
    s->add_option("--filter", filter, "spec id glob");
    s->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    s->add_option("--out", out, "output path (default stdout)");
  }

  auto* render = app.add_subcommand("render", "render a script to SVG");
  render->add_option("script", path, "script file")->required();
  render->add_option("--out", out, "output .svg (default: script stem)");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return cmd_run(path, format, out);
  if (axioms->parsed())
    return cmd_suite(geo::conf::SuiteKind::Axioms, seed, n, filter, format,
                     out);
  if (theorems->parsed())
    return cmd_suite(geo::conf::SuiteKind::Theorems, seed, n, filter, format,
                     out);
  if (render->parsed()) return cmd_render(path, out);
  return 0;
}
