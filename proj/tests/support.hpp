#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "reference.hpp"
#include "robench/catalog.hpp"
#include "robench/random.hpp"
#include "robench/transforms.hpp"

namespace support {

inline ref::Data to_ref(const robench::Instance& inst) {
  ref::Data d;
  d.fn = robench::to_int(inst.function);
  d.shift = inst.shift;
  d.perm = inst.blocks.permutation;
  for (const auto& q : inst.blocks.blocks) {
    ref::Mat m(q.rows(), ref::Vec(q.cols()));
    for (std::size_t r = 0; r < q.rows(); ++r) {
      for (std::size_t c = 0; c < q.cols(); ++c) m[r][c] = q(r, c);
    }
    d.blocks.push_back(std::move(m));
  }
  for (const auto& c : inst.components) d.comps.push_back(to_ref(c));
  return d;
}

inline std::vector<double> random_point(robench::RandomStream& rng, std::size_t dim,
                                        double lo = -100.0, double hi = 100.0) {
  std::vector<double> x(dim);
  for (auto& v : x) v = rng.uniform(lo, hi);
  return x;
}

/// |a - b| / max(|b|, 1)
inline double rel_err(double a, double b) {
  return std::fabs(a - b) / std::max(std::fabs(b), 1.0);
}

/// Oracle tolerance: 1e-12 for functions built only from polynomial kernels,
/// 1e-9 otherwise.
inline double oracle_tol(robench::FunctionId fn) {
  return ref::polynomial(robench::to_int(fn)) ? 1e-12 : 1e-9;
}

inline bool contains_schwefel(robench::FunctionId fn) {
  switch (robench::to_int(fn)) {
    case 15: case 16: case 23: case 25: case 26: case 27: case 28:
    case 30: case 31: case 32: case 33: case 34: case 35: case 36:
      return true;
    default:
      return false;
  }
}

/// Optimum-value tolerance: 3e-4 * D where a Schwefel term is involved
/// (its 418.9829 constant is rounded), 1e-8 otherwise.
inline double optimum_tol(robench::FunctionId fn, std::size_t dim) {
  return contains_schwefel(fn) ? 3e-4 * static_cast<double>(dim) : 1e-8;
}

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

/// Runs the CLI binary with the given argument string.
inline Run run_cli(const std::string& args, const std::filesystem::path& scratch) {
  std::filesystem::create_directories(scratch);
  const auto out = scratch / "stdout.txt";
  const auto err = scratch / "stderr.txt";
  const std::string cmd = std::string("\"") + ROBENCH_CLI_PATH + "\" " + args + " > \"" +
                          out.string() + "\" 2> \"" + err.string() + "\"";
  const int rc = std::system(cmd.c_str());
  Run r;
  r.status = rc == -1 ? -1 : WEXITSTATUS(rc);
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

inline std::filesystem::path temp_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("robench_test_" + std::to_string(::getpid()) + "_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace support
