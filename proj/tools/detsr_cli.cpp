// detsr: exact det^{S^r} evaluation and r-equilibrium solving.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "detsr/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact det^{S^r} maps and the r-equilibrium problem"};
  app.require_subcommand(1);

  std::string input, output;
  bool matrix = false, parallel = false;
  std::uint64_t seed = 1;
  std::size_t trials = 10;
  long bound = 5;
  int r = 2, d = 2;

  auto* det = app.add_subcommand("det", "Evaluate det^{S^r} of a tensor file (q = r*d)");
  det->add_option("--input,input", input, "Tensor file")->required();
  det->add_flag("--matrix", matrix, "Dump the labeled system matrix");

  auto* solve = app.add_subcommand("solve", "Decide the r-equilibrium problem for a forces file");
  solve->add_option("--input,input", input, "Tensor file (kind = forces)")->required();

  std::string example_name;
  detsr::ExampleParams params;
  auto* example = app.add_subcommand("example", "Write a generated example tensor file");
  example->add_option("name", example_name, "cross-product | wedge | differences")->required();
  example->add_option("--s", params.s, "Ambient dimension for wedge");
  example->add_option("--d", params.d, "Dimension for differences");
  example->add_option("--q", params.q, "Point count for cross-product");
  example->add_option("--seed", params.seed, "Random seed");
  example->add_option("--bound", params.bound, "Coordinate bound");
  example->add_option("--output,-o", output, "Output path (stdout if omitted)");

  auto* witness = app.add_subcommand("witness-search", "Random search for det^{S^r} != 0");
  witness->add_option("--r", r, "Arity")->required();
  witness->add_option("--d", d, "Dimension")->required();
  witness->add_option("--trials", trials, "Number of random configurations");
  witness->add_option("--bound", bound, "Entries drawn from [-bound, bound]");
  witness->add_option("--seed", seed, "Random seed");
  witness->add_flag("--parallel", parallel, "Run trials on all cores");
  witness->add_option("--output,-o", output, "Write the JSON report here");

  auto* verify = app.add_subcommand("verify-relations", "Check dependence relations on a tensor file");
  verify->add_option("--input,input", input, "Tensor file")->required();
  verify->add_option("--trials", trials, "Random coefficient systems to try");
  verify->add_option("--seed", seed, "Random seed");

  auto* selfcheck = app.add_subcommand("selfcheck", "Run the fast invariant suite");
  selfcheck->add_option("--trials", trials, "Trials per property");
  selfcheck->add_option("--seed", seed, "Random seed");
  selfcheck->add_flag("--parallel", parallel, "Run trials on all cores");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : detsr::exit_code::input_error;
  }

  if (*det) return detsr::cmd_det(input, matrix, std::cout, std::cerr);
  if (*solve) return detsr::cmd_solve(input, std::cout, std::cerr);
  if (*example) return detsr::cmd_example(example_name, params, output, std::cout, std::cerr);
  if (*witness) return detsr::cmd_witness_search(r, d, trials, bound, seed, parallel, output, std::cout, std::cerr);
  if (*verify) return detsr::cmd_verify_relations(input, trials, seed, std::cout, std::cerr);
  if (*selfcheck) return detsr::cmd_selfcheck({trials, seed, parallel, detsr::standard_sign}, std::cout);
  return detsr::exit_code::input_error;
}
