#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ccq/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Connectivity queries on real algebraic curves"};
  app.require_subcommand(1);
  ccq::CommandOptions opts;
  std::string file, eps;

  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "problem file (JSON)")->required();
    sub->add_option("--dot", opts.dot_path, "write the topology graph as DOT");
    sub->add_option("--svg", opts.svg_path, "write the topology graph as SVG");
    sub->add_option("--eps", eps, "ordinate precision, a positive rational such as 1/1000000");
    sub->add_flag("--components-only", opts.components_only, "ignore queries and report the component count");
    return sub;
  };
  add("validate", "check the parametrizations and the decidable genericity conditions");
  add("appsing", "print q_app and its real roots");
  add("topo", "print the topology graph of the plane projection as DOT");
  add("connect", "partition the query points by connected component");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (!eps.empty()) {
    try {
      opts.eps = ccq::parse_rational(eps);
    } catch (const ccq::Error&) {
      std::cerr << "ccq: --eps expects a rational such as 1/1000000\n";
      return 2;
    }
    if (*opts.eps <= 0) {
      std::cerr << "ccq: --eps must be positive\n";
      return 2;
    }
  }
  const ccq::CommandOutput r = ccq::run_command(app.get_subcommands().front()->get_name(), file, opts);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
