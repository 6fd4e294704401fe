#include <iostream>

#include <CLI11.hpp>

#include "morita/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Rational curves in G(d, 2d) and equivalence to the Morita curve"};
  app.require_subcommand(1);

  std::string format = "structured";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"structured", "plain"}));

  std::string path;
  auto* analyze = app.add_subcommand("analyze", "Degree, splitting, width, delta and sigma");
  analyze->add_option("file", path, "Curve file")->required();
  auto* decide = app.add_subcommand("decide", "Decide equivalence to the Morita curve");
  decide->add_option("file", path, "Curve file")->required();
  auto* klein = app.add_subcommand("klein", "Pluecker coordinates of a d = 2 curve");
  klein->add_option("file", path, "Curve file")->required();

  morita::Index d = 2;
  int trials = 100;
  std::uint64_t seed = 1;
  std::string replay;
  auto* laws = app.add_subcommand("laws", "Seeded checks of the sigma laws");
  laws->add_option("--d", d, "Dimension d");
  laws->add_option("--trials", trials, "Instances per suite");
  laws->add_option("--seed", seed, "Random seed");
  laws->add_option("--replay", replay, "Re-run one serialized failing instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  morita::Report report;
  if (*analyze) {
    report = morita::cmd_analyze(path);
  } else if (*decide) {
    report = morita::cmd_decide(path);
  } else if (*klein) {
    report = morita::cmd_klein(path);
  } else if (!replay.empty()) {
    report = morita::cmd_replay(replay);
  } else {
    report = morita::cmd_laws(d, trials, seed);
  }
  const auto fmt = format == "plain" ? morita::Format::Plain : morita::Format::Structured;
  std::cout << morita::render(report, fmt);
  return report.exit_code;
}
