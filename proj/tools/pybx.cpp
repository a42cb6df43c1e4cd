#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pybx/workbench.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw pybx::Error(pybx::Errc::MissingInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic workbench for Poisson bialgebras, classical "
               "r-matrices, Rota-Baxter operators, and differential algebra "
               "induction"};
  app.require_subcommand(1);

  std::string in_path, out_path, direction, weight_text;
  std::string format = "human";

  auto add_common = [&](CLI::App* sub, bool with_convert_opts) {
    sub->add_option("--in", in_path, "input spec file")->required();
    sub->add_option("--format", format, "report format: human or machine")
        ->check(CLI::IsMember({"human", "machine"}));
    sub->add_option("--out", out_path, "write the result to this file");
    if (with_convert_opts) {
      sub->add_option("--direction", direction,
                      "rb2fact, fact2rb, tilde, or tau")
          ->required();
      sub->add_option("--weight", weight_text,
                      "rational weight, overrides the spec weight");
    }
  };

  add_common(app.add_subcommand("check", "run every applicable axiom suite"),
             false);
  add_common(app.add_subcommand("classify",
                                "classify the r section of the input"),
             false);
  add_common(app.add_subcommand(
                 "double", "build the double on A + A* and emit it as a spec"),
             false);
  add_common(app.add_subcommand(
                 "convert",
                 "translate between r-matrix and Rota-Baxter presentations"),
             true);
  add_common(app.add_subcommand(
                 "induce",
                 "induce a Poisson bialgebra from commuting derivation data"),
             false);
  add_common(app.add_subcommand("report", "parse and echo the canonical form"),
             false);

  CLI11_PARSE(app, argc, argv);
  const std::string cmd = app.get_subcommands().front()->get_name();

  const auto t0 = std::chrono::steady_clock::now();
  pybx::ReportDocument doc;
  try {
    const std::string text = read_file(in_path);
    const pybx::WorkbenchSpec spec = pybx::load_spec_text(text);
    pybx::CommandOptions opt;
    opt.direction = direction;
    if (!weight_text.empty()) opt.weight = pybx::Scalar::parse(weight_text);
    opt.input_digest = pybx::fnv1a_hex(text);
    doc = pybx::run_command(cmd, spec, opt);
  } catch (const pybx::Error& e) {
    doc = pybx::ReportDocument{};
    doc.root.add("command", cmd);
    doc.root.add("verdict", "fail");
    pybx::ReportNode& en = doc.root.add("error", pybx::errc_name(e.code));
    en.add("message", e.what());
    doc.pass = false;
  } catch (const std::exception& e) {
    doc = pybx::ReportDocument{};
    doc.root.add("command", cmd);
    doc.root.add("verdict", "fail");
    pybx::ReportNode& en = doc.root.add("error", "internal");
    en.add("message", e.what());
    doc.pass = false;
  }
  const auto t1 = std::chrono::steady_clock::now();
  doc.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  const bool emits_spec =
      cmd == "double" || cmd == "convert" || cmd == "induce";
  const std::string rendered =
      format == "machine" ? pybx::render_machine(doc) : pybx::render_human(doc);

  std::cout << rendered;
  if (!out_path.empty()) {
    std::ofstream of(out_path, std::ios::binary);
    if (!of) {
      std::cerr << "cannot write '" << out_path << "'\n";
      return 1;
    }
    if (emits_spec && doc.pass && !doc.emitted.empty())
      of << doc.emitted;
    else
      of << rendered;
  }
  return doc.pass ? 0 : 1;
}
