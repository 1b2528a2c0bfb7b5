#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "welded/cli.hpp"
#include "welded/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Alexander invariants of colored welded tangles"};
  app.require_subcommand(1);

  welded::RunConfig cfg;
  std::string format = "text";
  std::string split;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--mu", cfg.mu, "Number of color variables (default: largest color used)");
    sub->add_flag("--raw", cfg.raw, "Print tensors as computed instead of in canonical unit form");
  };

  const std::map<std::string, std::pair<welded::Command, std::string>> commands = {
      {"compute", {welded::Command::compute, "Invariant tensor of a tangle"}},
      {"alexpoly", {welded::Command::alexpoly, "Alexander polynomial of a (1-1)-tangle"}},
      {"burau", {welded::Command::burau, "Graded maps of the split invariant"}},
      {"compose", {welded::Command::compose, "Apply a circuit to tangles: circuit file, then one tangle per disk"}},
      {"compare", {welded::Command::compare, "Exit 0 iff two tensors agree up to a unit"}},
      {"selftest", {welded::Command::selftest, "Fixture corpus and randomized property suites"}},
  };
  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.second);
    common(sub);
    const welded::Command command = entry.first;
    sub->callback([&cfg, command] { cfg.command = command; });
    if (name != "selftest") sub->add_option("files", cfg.inputs, "Input files ('-' for stdin)")->required();
    if (name == "burau") sub->add_option("--split", split, "Boundary split n0,n1 (default n,n)");
    if (name == "compose") sub->add_flag("--glue", cfg.glue, "Print the glued tangle instead of the tensor");
    if (name == "selftest") {
      sub->add_option("--seed", cfg.seed, "Seed for the randomized suites");
      sub->add_option("--scale", cfg.scale, "Multiplier for the number of random trials");
    }
  }

  CLI11_PARSE(app, argc, argv);
  cfg.format = format == "json" ? welded::OutputFormat::json : welded::OutputFormat::text;
  if (!split.empty()) {
    try {
      cfg.split = welded::parse_split(split);
    } catch (const welded::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return welded::run(cfg, std::cout, std::cerr);
}
