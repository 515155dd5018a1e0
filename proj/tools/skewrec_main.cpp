#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "skewrec/render.hpp"
#include "skewrec/spec_file.hpp"

namespace {

constexpr int kFail = 1;
constexpr int kUsage = 2;

skewrec::RecurrenceSpec load(const std::string& path, unsigned height) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  auto spec = skewrec::parse_spec_file(buf.str());
  if (height > 0) spec.height = height;
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed forms for left linear recurrences over fields, quaternions and octonions"};
  app.require_subcommand(1);
  unsigned height = 0;
  app.add_option("--height", height, "Search height for spherical representatives (overrides the file)")
      ->check(CLI::PositiveNumber);

  std::string file;
  unsigned long long k = 0;

  auto* solve = app.add_subcommand("solve", "Print the closed form");
  solve->add_option("FILE", file)->required();

  auto* eval = app.add_subcommand("eval", "Evaluate the closed form at K");
  eval->add_option("FILE", file)->required();
  eval->add_option("K", k)->required();

  auto* oracle = app.add_subcommand("oracle", "Iterate the recurrence up to K");
  oracle->add_option("FILE", file)->required();
  oracle->add_option("K", k)->required();

  auto* verify = app.add_subcommand("verify", "Compare closed form and iteration for k = 0..KMAX");
  verify->add_option("FILE", file)->required();
  verify->add_option("KMAX", k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  skewrec::RecurrenceSpec spec;
  try {
    spec = load(file, height);
  } catch (const skewrec::ParseError& e) {
    std::cerr << file << ":" << e.line() << ":" << e.column() << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (oracle->parsed()) {
      std::cout << skewrec::render_element(skewrec::iterate_oracle(spec, k)) << "\n";
      return 0;
    }
    const auto cf = skewrec::solve(spec);
    if (solve->parsed()) {
      std::cout << skewrec::render_closed_form(cf);
    } else if (eval->parsed()) {
      std::cout << skewrec::render_element(skewrec::eval_closed_form(cf, k)) << "\n";
    } else {
      const auto report = skewrec::verify_closed_form(spec, cf, k);
      std::cout << skewrec::render_report(report) << "\n";
      return report.ok ? 0 : kFail;
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kFail;
  }
  return 0;
}
