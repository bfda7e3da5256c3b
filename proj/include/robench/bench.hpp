#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "robench/catalog.hpp"
#include "robench/engine.hpp"

namespace robench::bench {

inline constexpr std::size_t kWarmupBatches = 3;

struct ProtocolConfig {
  std::vector<FunctionId> fns;
  std::vector<std::size_t> dims{10, 32, 64, 96};
  std::size_t batch = 50;
  std::size_t runs = 1000;
  Precision precision = Precision::Single;
  std::uint64_t seed = 1;
  int threads = 0;
  bool instrument_timing = true;
};

struct ReportRow {
  FunctionId fn = FunctionId::Sphere;
  std::size_t dim = 0;
  Precision precision = Precision::Double;
  std::size_t batch = 0;
  std::size_t runs = 0;
  std::size_t total_evals = 0;  // batch * runs, warm-up excluded
  double engine_mean_ns = 0;    // per batch
  double engine_min_ns = 0;
  double baseline_mean_ns = 0;  // per batch of single-point calls
  double baseline_min_ns = 0;
  double paired_ratio = 0;      // median over runs of baseline / engine time, 0 without timing
  std::uint64_t checksum = 0;   // FNV-1a over the bits of every engine value
  bool baseline_consistent = true;  // single-point calls reproduced every value

  [[nodiscard]] double engine_ns_per_eval() const noexcept;
  [[nodiscard]] double baseline_ns_per_eval() const noexcept;
  [[nodiscard]] double engine_evals_per_sec() const noexcept;
  /// baseline / engine ns per eval; 0 without timing.
  [[nodiscard]] double ratio() const noexcept;
};

struct EvalReport {
  std::vector<ReportRow> rows;
};

/// Disabled functions at a dimension are skipped. Throws InvalidArgument for
/// an empty function/dimension list, batch < 1 or runs < 1.
EvalReport run_protocol(const ProtocolConfig& config);

/// CSV with a header row.
std::string render_report(const EvalReport& report);

std::uint64_t fnv1a(std::span<const std::uint8_t> bytes, std::uint64_t h = 0xcbf29ce484222325ull);

/// Named function sets: "all", "cec14", or a comma list of ids/names.
std::vector<FunctionId> parse_function_set(std::string_view text);

}  // namespace robench::bench
