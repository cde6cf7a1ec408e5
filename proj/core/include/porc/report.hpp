#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace porc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvariant = 2;

/// Largest prime the brute-force orbit oracle may be asked to handle.
inline constexpr std::uint64_t kBruteHardCap = 199;

enum class OutputFormat { kCsv, kJson };

struct RunConfig {
  std::uint64_t min = 5;
  std::uint64_t max = 100;
  std::uint64_t brute_max = 61;
  unsigned jobs = 1;
  OutputFormat format = OutputFormat::kCsv;
  std::string out;  // empty: standard output
  bool timing = true;

  /// Throws std::invalid_argument on an unusable configuration.
  void validate() const;
};

/// One CSV/JSON row. Fields that do not apply to p are nullopt.
struct PrimeReport {
  std::uint64_t p = 0;
  std::uint64_t class12 = 0;
  std::optional<std::uint64_t> a;
  std::optional<std::uint64_t> b;
  std::optional<std::uint64_t> a_mod3;
  bool quartic360_root = false;
  bool octic_root = false;
  unsigned v_p = 0;
  std::uint64_t ec_naive = 0;
  std::optional<std::uint64_t> ec_formula;
  std::size_t s_size = 0;
  std::uint64_t group_order = 0;
  std::uint64_t dp_formula = 0;
  std::uint64_t dp_burnside = 0;
  std::int64_t dp_brute = -1;
  double elapsed_ms = 0.0;
};

PrimeReport make_report(std::uint64_t p, std::uint64_t brute_max);

/// Empty when the row is internally consistent; otherwise one message per
/// failed relation between its fields.
std::vector<std::string> row_violations(const PrimeReport& r);

std::string csv_header(bool timing);
std::string to_csv(const PrimeReport& r, bool timing);
/// Single JSON object on one line.
std::string to_json(const PrimeReport& r, bool timing);

/// Emits rows in ascending p, computed on cfg.jobs threads. Returns an exit
/// code; violations are reported on `diag`.
int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

/// Every per-prime check, one line each. Returns an exit code.
int run_verify(std::uint64_t p, std::ostream& out);

int run_density(std::uint64_t max, OutputFormat format, std::ostream& out);
int run_subcong(std::uint64_t d, std::uint64_t max, OutputFormat format, std::ostream& out);
int run_covering(std::uint64_t p, bool dump, std::ostream& out);

}  // namespace porc
