// aft: command-line front end. Every command prints one JSON document.
// Exit codes: 0 pass, 1 violation, 2 usage or input error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aft/aft.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

void emit(const aft::Json& j, const std::string& out = {}) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw aft::Error("io: cannot write " + out);
  f << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite abelian group actions: homology, fixed points and index bounds"};
  app.require_subcommand(1);

  std::string file;
  std::vector<std::int64_t> primes{2, 3, 5};
  auto* analyze = app.add_subcommand("analyze", "Homology of a simplicial complex");
  analyze->add_option("complex", file, "complex JSON")->required();
  analyze->add_option("--primes", primes, "primes for F_p Betti numbers")->delimiter(',');

  auto* action = app.add_subcommand("action", "Simplicial action tools");
  action->require_subcommand(1);
  auto* check = action->add_subcommand("check", "Validate an action and certify goodness");
  check->add_option("action", file, "action JSON")->required();

  std::int64_t lambda = 0;
  auto* descent = app.add_subcommand("descent", "Descent to a lambda-stable subgroup on each p-part");
  descent->add_option("model", file, "linear model JSON")->required();
  descent->add_option("--lambda", lambda, "stability threshold")->required()->check(CLI::NonNegativeNumber);

  std::string suite, scale = "small", out;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "suite name")->required();
  verify->add_option("--seed", seed, "master seed")->required();
  verify->add_option("--scale", scale, "small or full")->check(CLI::IsMember({"small", "full"}));
  verify->add_option("--out", out, "write the report here instead of stdout");

  std::string table;
  std::int64_t max_k = 30;
  auto* bounds = app.add_subcommand("bounds", "Constants for a bounds configuration, or the f table");
  bounds->add_option("config", file, "bounds configuration JSON");
  bounds->add_option("--table", table, "table to print")->check(CLI::IsMember({"f"}));
  bounds->add_option("--max-k", max_k, "largest k in the table")->check(CLI::Range(-1, 1000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const auto base = std::filesystem::path(file).parent_path();
    if (analyze->parsed()) {
      for (auto p : primes) {
        if (!aft::is_prime(p)) throw aft::Error("analyze: " + std::to_string(p) + " is not prime");
      }
      emit(aft::analyze_report(aft::complex_from_json(aft::read_json_file(file), base), primes));
      return kPass;
    }
    if (check->parsed()) {
      auto r = aft::goodness_report(aft::action_from_json(aft::read_json_file(file), base));
      emit(r);
      return r.at("is_good").get<bool>() ? kPass : kViolation;
    }
    if (descent->parsed()) {
      auto r = aft::descent_report(aft::model_from_json(aft::read_json_file(file)), lambda);
      emit(r);
      return r.at("chi_condition").get<bool>() ? kPass : kViolation;
    }
    if (verify->parsed()) {
      auto r = aft::run_suite(suite, seed, aft::scale_from_string(scale));
      emit(r.to_json(), out);
      std::cerr << "suite " << r.suite << ": " << r.cases.size() << " cases, " << r.violations() << " violations\n";
      return r.ok() ? kPass : kViolation;
    }
    if (bounds->parsed()) {
      if (!table.empty()) {
        if (!file.empty()) throw aft::Error("bounds: give either a configuration or --table, not both");
        emit(aft::f_table(max_k));
        return kPass;
      }
      if (file.empty()) throw aft::Error("bounds: a configuration file or --table f is required");
      emit(aft::constants_report(aft::bounds_config_from_json(aft::read_json_file(file))));
      return kPass;
    }
  } catch (const aft::Error& e) {
    std::cerr << "aft: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "aft: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
