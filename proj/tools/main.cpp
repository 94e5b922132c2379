#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "scenario.hpp"
#include "tatecoh/errors.hpp"

namespace {

using namespace tatecoh::cli;

std::string read_input(const std::string& file) {
  if (file == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(file, std::ios::binary);
  if (!in) throw tatecoh::InputError("cannot read '" + file + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Json& rep, const std::string& format) {
  if (format == "json")
    std::cout << rep.dump(2) << "\n";
  else
    std::cout << render_text(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tate hypercohomology, class formations and reciprocity for finite groups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string range, engine, format = "text";
  int window = 6;
  std::size_t max_order = 24;
  bool timing = false;
  auto* range_opt = app.add_option("--range", range, "Degrees qmin..qmax for Tate analyses (default -2..3)");
  auto* engine_opt = app.add_option("--engine", engine, "Resolution engine (default auto)")
                         ->check(CLI::IsMember({"bar", "periodic", "auto"}));
  auto* window_opt = app.add_option("--window", window, "Largest resolution window N (default 6)")->check(CLI::Range(1, 64));
  auto* order_opt = app.add_option("--max-order", max_order, "Largest group order accepted (default 24)")
                        ->check(CLI::Range(1, 1 << 20));
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", timing, "Include per-analysis timings");

  std::string file, name;
  auto* run = app.add_subcommand("run", "Run a scenario document ('-' reads standard input)");
  run->add_option("file", file, "Scenario document")->required();
  auto* demo = app.add_subcommand("demo", "Run a bundled scenario");
  demo->add_option("name", name, "Scenario name")->required();
  auto* list = app.add_subcommand("list", "List the bundled scenarios");
  auto* validate = app.add_subcommand("validate", "Check a scenario document without running it");
  validate->add_option("file", file, "Scenario document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    Overrides ov;
    if (*range_opt) ov.range = parse_range(range);
    if (*engine_opt) ov.engine = engine;
    if (*window_opt) ov.window = window;
    if (*order_opt) ov.max_order = max_order;

    if (*list) {
      if (format == "json") {
        Json j = Json::array();
        for (const CatalogEntry& e : catalog())
          j.push_back({{"name", e.name}, {"description", e.description}, {"expect", e.expect}});
        std::cout << j.dump(2) << "\n";
      } else {
        for (const CatalogEntry& e : catalog())
          std::cout << e.name << "\n  " << e.description << "\n  expect: " << e.expect << "\n";
      }
      return 0;
    }
    if (*validate) {
      const ScenarioSpec s = parse_scenario(read_input(file), ov);
      if (format == "json")
        std::cout << Json{{"valid", true}, {"scenario", serialize(s)}}.dump(2) << "\n";
      else
        std::cout << "valid: " << (s.name.empty() ? file : s.name) << " (" << s.analyses.size() << " analyses)\n";
      return 0;
    }
    const std::string doc = *demo ? catalog_entry(name).document : read_input(file);
    emit(run_scenario(parse_scenario(doc, ov), timing), format);
    return 0;
  } catch (const tatecoh::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const tatecoh::ComputationError& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 2;
  }
}
