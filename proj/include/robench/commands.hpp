#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "robench/catalog.hpp"
#include "robench/io.hpp"

namespace robench::cli {

struct GenOptions {
  std::string fn = "all";  // id, name or "all"
  std::size_t dim = 10;
  std::uint64_t seed = 1;
  std::filesystem::path out = ".";
};

struct EvalOptions {
  std::string fn;
  std::size_t dim = 10;
  std::uint64_t seed = 1;
  std::filesystem::path in;
  std::filesystem::path out;  // empty: return the text only
  bool single = false;
  std::optional<std::filesystem::path> instance;
  int threads = 0;
};

struct GridOptions {
  std::string fn;
  std::uint64_t seed = 1;
  std::string range = "-100:100";
  std::size_t steps = 101;
  std::filesystem::path out;
};

struct BenchOptions {
  std::string dims = "10,32,64,96";
  std::size_t batch = 50;
  std::size_t runs = 1000;
  std::string fns = "cec14";
  bool single = false;
  std::uint64_t seed = 1;
  int threads = 0;
  std::filesystem::path out;
};

/// "all" expands to every function available at dim; an explicit id below
/// its minimum dimension is an error. Returns the written paths.
std::vector<std::filesystem::path> cmd_gen(const GenOptions& opt);

/// Returns the rendered values (also written to opt.out when set).
std::string cmd_eval(const EvalOptions& opt);

/// Throws UnsupportedAtDim2 for functions that need D >= 10.
io::Grid compute_grid(FunctionId fn, std::uint64_t seed, double lo, double hi,
                      std::size_t steps);
std::string cmd_grid(const GridOptions& opt);

std::string cmd_bench(const BenchOptions& opt);

/// "lo:hi" with lo < hi.
std::pair<double, double> parse_range(std::string_view text);

/// Comma-separated positive integers.
std::vector<std::size_t> parse_dims(std::string_view text);

}  // namespace robench::cli
