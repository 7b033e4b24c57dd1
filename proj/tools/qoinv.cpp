// qoinv: invariants of quasi-ordinary singularities from characteristic exponents.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qoinv/report.hpp"

namespace {

bool read_input(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of quasi-ordinary hypersurface singularities"};
  app.require_subcommand(1);

  std::string input_path;
  std::string format = "json";
  std::string phi;
  std::string ideal = "logjac";
  std::string point = "1";
  std::string bound;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", input_path, "Input file, or - for stdin")->required();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  for (const char* name : {"semigroup", "ideals", "poincare", "branch"}) {
    add_common(app.add_subcommand(name, std::string("Run the ") + name + " report"));
  }
  CLI::App* nubar = app.add_subcommand("nubar", "Asymptotic order of φ along an ideal");
  add_common(nubar);
  nubar->add_option("--phi", phi, "Exponents \"a,b;c,d\" in options.basis coordinates, or \"zero\"");
  nubar->add_option("--ideal", ideal, "Ideal")->check(CLI::IsMember({"jac", "logjac", "toric-log", "custom"}));
  CLI::App* verify = app.add_subcommand("verify", "Leading-ideal check of a deformation");
  add_common(verify);
  verify->add_option("--point", point, "0 for the origin, 1 for the unit point")->check(CLI::IsMember({"0", "1"}));
  verify->add_option("--bound", bound, "Truncation bound (rational, e-coordinate weight)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : qoinv::kExitValidation;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::string text;
  if (!read_input(input_path, text)) {
    std::cerr << "qoinv: cannot read " << input_path << '\n';
    return qoinv::kExitValidation;
  }

  qoinv::CommandOptions opts;
  if (nubar->parsed()) {
    if (!phi.empty()) opts.phi = phi;
    opts.ideal = ideal;
  }
  opts.point = point == "0" ? qoinv::Point::Zero : qoinv::Point::Unit;
  qoinv::CommandResult result;
  try {
    if (!bound.empty()) opts.bound = qoinv::parse_rational(bound);
    result = qoinv::run_command_text(command, text, opts);
  } catch (const qoinv::Error& e) {
    result.exit_code = qoinv::exit_code_for(e.code());
    result.report = {{"command", command},
                     {"error", {{"code", std::string(qoinv::errc_name(e.code()))}, {"message", e.what()}}}};
  }

  if (result.report.contains("error")) std::cerr << "qoinv: " << result.report["error"]["message"].get<std::string>() << '\n';
  if (format == "text") std::cout << qoinv::render_text(result.report);
  else std::cout << result.report.dump(2) << '\n';
  return result.exit_code;
}
