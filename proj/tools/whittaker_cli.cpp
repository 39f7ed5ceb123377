// Command-line front end: whittaker <command> [flags]
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "whittaker/tasks.hpp"

int main(int argc, char** argv) {
  using namespace whittaker;
  CLI::App app{"Exact Whittaker-module computations for the Schrodinger algebra"};
  app.set_version_flag("--version", std::string(tool_version));

  std::string command;
  app.add_option("command", command, "Task to run")->required()->check(CLI::IsMember(task_commands()));

  const std::vector<std::pair<std::string, std::string>> value_flags = {
      {"algebra", "Built-in algebra name or algebra file path"},
      {"module", "Module kind"},
      {"element", "Special element: casimir_sl2 | quasi_central"},
      {"e", "e-value (num/den)"},
      {"p", "p-value (num/den)"},
      {"z", "Level (num/den)"},
      {"a", "Quasi-central scalar (num/den)"},
      {"xi", "q-eigenvalue for L_xi (num/den)"},
      {"omega", "Casimir scalar (num/den)"},
      {"alpha", "Highest weight (num/den)"},
      {"probe-e", "Probe type e-value (num/den)"},
      {"probe-p", "Probe type p-value (num/den)"},
      {"max-degree", "Total-degree bound"},
      {"max-n", "Largest power n for the identity suite"},
      {"i-max", "Deepest filtration layer"},
      {"seed", "Seed for randomized checks"},
  };
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  for (const auto& [name, help] : value_flags) {
    options[name] = app.add_option("--" + name, values[name], help);
  }
  bool modulo_z = false;
  auto* modulo_option = app.add_flag("--modulo-z", modulo_z, "Accept commutators lying in z U(g)");
  std::vector<std::string> generators;
  app.add_option("--generator", generators, "Submodule generator, applied to the cyclic vector (repeatable)");
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  std::string out;
  app.add_option("--out", out, "Write the report to this path instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  TaskRequest request;
  request.command = command;
  for (const auto& [name, option] : options) {
    if (option->count() > 0) request.parameters[name] = values[name];
  }
  if (modulo_option->count() > 0) request.parameters["modulo-z"] = modulo_z ? "true" : "false";
  request.generators = generators;

  ReportEnvelope report = execute_task(request);
  if (!emit_report(report, format, out, std::cout)) {
    std::cerr << "error: cannot write report to '" << out << "'\n";
    return 2;
  }
  return report.exit_code();
}
