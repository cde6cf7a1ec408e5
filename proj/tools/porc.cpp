#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "porc/errors.hpp"
#include "porc/report.hpp"

namespace {

porc::OutputFormat parse_format(const std::string& s) {
  return s == "json" ? porc::OutputFormat::kJson : porc::OutputFormat::kCsv;
}

const auto kFormatCheck = CLI::IsMember({"csv", "json"}, CLI::ignore_case);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Descendant counts for L_p and the arithmetic behind them"};
  app.require_subcommand(1);

  porc::RunConfig cfg;
  bool no_timing = false;
  auto* sweep = app.add_subcommand("sweep", "One CSV/JSON row per prime in [min, max]");
  sweep->add_option("--min", cfg.min, "Smallest prime considered")->default_val(5);
  sweep->add_option("--max", cfg.max, "Largest prime considered")->default_val(100);
  sweep->add_option("--brute-max", cfg.brute_max, "Largest p for the orbit-enumeration oracle (0 disables)")
      ->default_val(61)
      ->check(CLI::Range(std::uint64_t{0}, porc::kBruteHardCap));
  sweep->add_option("--jobs", cfg.jobs, "Worker threads")->default_val(1)->check(CLI::PositiveNumber);
  std::string sweep_format = "csv";
  sweep->add_option("--format", sweep_format, "csv or json")->transform(kFormatCheck)->capture_default_str();
  sweep->add_option("--out", cfg.out, "Output file (default: standard output)");
  sweep->add_flag("--no-timing", no_timing, "Drop the elapsed_ms column");

  std::uint64_t verify_p = 0;
  auto* verify = app.add_subcommand("verify", "Run every check for one prime");
  verify->add_option("p", verify_p, "Prime >= 5")->required();

  std::uint64_t density_max = 1000000;
  std::string density_format = "csv";
  auto* density = app.add_subcommand("density", "Frequencies of the quartic and V_p > 0 among p = 1 mod 12");
  density->add_option("--max", density_max, "Upper bound for p")->default_val(1000000)->check(CLI::Range(
      std::uint64_t{100}, std::uint64_t{1} << 40));
  density->add_option("--format", density_format, "text (csv) or json")->transform(kFormatCheck)->capture_default_str();

  std::uint64_t subcong_d = 2;
  std::uint64_t subcong_max = 100000;
  std::string subcong_format = "csv";
  auto* subcong = app.add_subcommand("subcong", "Witness primes in each class c mod 12d with c = 1 mod 12");
  subcong->add_option("--d", subcong_d, "Refinement factor d")->default_val(2)->check(CLI::PositiveNumber);
  subcong->add_option("--max", subcong_max, "Upper bound for p")->default_val(100000)->check(CLI::Range(
      std::uint64_t{100}, std::uint64_t{1} << 40));
  subcong->add_option("--format", subcong_format, "text (csv) or json")->transform(kFormatCheck)->capture_default_str();

  std::uint64_t covering_p = 5;
  bool dump = false;
  auto* covering = app.add_subcommand("covering", "Dimensions of the covering algebra of L_p");
  covering->add_option("p", covering_p, "Prime >= 5")->required();
  covering->add_flag("--dump", dump, "Print the covering algebra in text form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return porc::kExitUsage;
  }

  try {
    if (*sweep) {
      cfg.timing = !no_timing;
      cfg.format = parse_format(sweep_format);
      cfg.validate();
      if (cfg.out.empty()) return porc::run_sweep(cfg, std::cout, std::cerr);
      std::ofstream file(cfg.out);
      if (!file) {
        std::cerr << "cannot open " << cfg.out << " for writing\n";
        return porc::kExitUsage;
      }
      return porc::run_sweep(cfg, file, std::cerr);
    }
    if (*verify) return porc::run_verify(verify_p, std::cout);
    if (*density) return porc::run_density(density_max, parse_format(density_format), std::cout);
    if (*subcong) return porc::run_subcong(subcong_d, subcong_max, parse_format(subcong_format), std::cout);
    if (*covering) return porc::run_covering(covering_p, dump, std::cout);
  } catch (const porc::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return porc::kExitInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return porc::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return porc::kExitInvariant;
  }
  return porc::kExitUsage;
}
