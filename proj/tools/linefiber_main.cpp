// linefiber: exact invariants of Milnor fibers of triple-point line
// arrangements in the complex projective plane.
//
// Exit codes: 0 success, 1 internal consistency failure, 2 hypothesis
// violation, 3 input parse error, 64 flag usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include <linefiber/linefiber.hpp>

namespace {

constexpr int kExitConsistency = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitParse = 3;
constexpr int kExitUsage = 64;

struct OutputFlags {
  std::string format = "json";
};

void print_report(const linefiber::RunReport& report, const OutputFlags& flags) {
  if (flags.format == "text") std::cout << linefiber::report_to_text(report);
  else std::cout << linefiber::report_to_json(report).dump(2) << "\n";
}

linefiber::Arrangement load_input(const std::string& input_path, const std::string& builtin) {
  if (!builtin.empty()) return linefiber::make_builtin(builtin);
  std::ifstream in(input_path);
  if (!in) throw linefiber::ParseError("cannot open input file '" + input_path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw linefiber::ParseError("input is not valid JSON: " + std::string(e.what()));
  }
  return linefiber::load_arrangement(doc);
}

int report_exit(const linefiber::RunReport& report) {
  if (report.all_checks_pass()) return 0;
  std::cerr << "internal consistency failure; failed checks:\n";
  for (const auto& c : report.checks)
    if (!c.pass) std::cerr << "  " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  return kExitConsistency;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spectrum, defect and equivariant Hodge table of the Milnor fiber of a "
               "projective line arrangement with only double and triple points"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand(
      "analyze", "run the full geometric pipeline on an arrangement file or builtin");
  std::string input_path, builtin_name;
  OutputFlags analyze_output;
  long long assume_beta3 = -1;
  auto* input_opt = analyze->add_option("--input", input_path, "arrangement JSON file");
  auto* builtin_opt = analyze->add_option("--builtin", builtin_name, "builtin arrangement name");
  input_opt->excludes(builtin_opt);
  analyze->add_option("--output", analyze_output.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  analyze->add_option("--assume-beta3", assume_beta3,
                      "skip the rank computation and use this beta3 (report is flagged)")
      ->check(CLI::Range(0, 2));

  // formulas
  auto* formulas = app.add_subcommand(
      "formulas", "evaluate the closed formulas from d, n3 and beta3, bypassing geometry");
  int f_d = 0;
  long long f_n3 = 0, f_beta3 = 0;
  OutputFlags formulas_output;
  formulas->add_option("--d", f_d, "number of lines")->required()->check(CLI::Range(2, 100000));
  formulas->add_option("--n3", f_n3, "number of triple points")
      ->required()
      ->check(CLI::Range(0LL, 1000000000LL));
  formulas->add_option("--beta3", f_beta3, "defect of the triple points")
      ->check(CLI::Range(0, 2))
      ->capture_default_str();
  formulas->add_option("--output", formulas_output.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  // check
  auto* check = app.add_subcommand(
      "check", "run the builtin golden values and the invariant suite on random arrangements");
  int c_count = 50, c_max_d = 9;
  std::uint64_t c_seed = 1;
  check->add_option("--count", c_count, "number of random arrangements")
      ->check(CLI::Range(0, 1000000))
      ->capture_default_str();
  check->add_option("--max-d", c_max_d, "largest number of lines to draw")
      ->check(CLI::Range(3, 64))
      ->capture_default_str();
  check->add_option("--seed", c_seed, "corpus seed")->capture_default_str();

  // builtin-list
  auto* builtin_list_cmd = app.add_subcommand("builtin-list", "list builtin arrangements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (analyze->parsed()) {
      if (input_path.empty() && builtin_name.empty()) {
        std::cerr << "analyze: one of --input or --builtin is required\n";
        return kExitUsage;
      }
      const linefiber::Arrangement arr = load_input(input_path, builtin_name);
      linefiber::AnalyzeOptions options;
      if (analyze->count("--assume-beta3") > 0) {
        if (assume_beta3 != 0 && arr.d() % 3 != 0) {
          std::cerr << "analyze: --assume-beta3 > 0 requires d divisible by 3\n";
          return kExitUsage;
        }
        options.assume_beta3 = assume_beta3;
      }
      const linefiber::RunReport report = linefiber::analyze_arrangement(arr, options);
      print_report(report, analyze_output);
      return report_exit(report);
    }

    if (formulas->parsed()) {
      if (f_beta3 != 0 && f_d % 3 != 0) {
        std::cerr << "formulas: --beta3 > 0 requires --d divisible by 3\n";
        return kExitUsage;
      }
      const linefiber::RunReport report = linefiber::formulas_report(f_d, f_n3, f_beta3);
      print_report(report, formulas_output);
      return report_exit(report);
    }

    if (check->parsed()) {
      bool ok = true;
      for (const auto& g : linefiber::run_builtin_goldens()) {
        std::cout << (g.pass ? "PASS " : "FAIL ") << g.name
                  << (g.detail.empty() ? "" : " (" + g.detail + ")") << "\n";
        ok = ok && g.pass;
      }
      const linefiber::CorpusResult corpus =
          linefiber::run_corpus({c_count, c_max_d, c_seed});
      if (corpus.failures.empty()) {
        std::cout << "PASS corpus: " << corpus.checked << " random arrangement(s), max d "
                  << c_max_d << ", seed " << c_seed << "\n";
      } else {
        ok = false;
        std::cout << "FAIL corpus: " << corpus.failures.size() << " failed check(s) over "
                  << corpus.checked << " arrangement(s)\n";
        for (const auto& f : corpus.failures) std::cout << "  " << f << "\n";
      }
      return ok ? 0 : kExitConsistency;
    }

    if (builtin_list_cmd->parsed()) {
      for (const auto& b : linefiber::builtin_list())
        std::cout << b.name << "  " << b.description << "\n";
      return 0;
    }
  } catch (const linefiber::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const linefiber::HypothesisError& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const linefiber::ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const linefiber::GenerationError& e) {
    std::cerr << "random generation failed: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
