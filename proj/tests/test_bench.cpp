#include <sstream>

#include "doctest.h"
#include "robench/bench.hpp"
#include "robench/error.hpp"

using namespace robench;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::size_t columns(const std::string& line) {
  return static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
}

}  // namespace

TEST_CASE("two dims, one function, ten runs") {
  bench::ProtocolConfig cfg;
  cfg.fns = {FunctionId::Sphere};
  cfg.dims = {10, 32};
  cfg.runs = 10;
  const auto report = bench::run_protocol(cfg);
  REQUIRE(report.rows.size() == 2);
  for (const auto& row : report.rows) {
    CHECK(row.total_evals == 500);
    CHECK(row.ratio() > 0);
    CHECK(row.paired_ratio > 0);
    CHECK(row.engine_min_ns <= row.engine_mean_ns);
    CHECK(row.baseline_min_ns <= row.baseline_mean_ns);
    CHECK(row.baseline_consistent);
    CHECK(row.engine_evals_per_sec() > 0);
  }
  const auto lines = lines_of(bench::render_report(report));
  REQUIRE(lines.size() == 3);
  for (const auto& l : lines) CHECK(columns(l) == columns(lines[0]));
  CHECK(lines[0].rfind("fn,name,dim,", 0) == 0);
}

TEST_CASE("every function at D = 10") {
  bench::ProtocolConfig cfg;
  cfg.fns = bench::parse_function_set("all");
  cfg.dims = {10};
  cfg.batch = 8;
  cfg.runs = 2;
  cfg.precision = Precision::Double;
  CHECK(bench::run_protocol(cfg).rows.size() == 37);
}

TEST_CASE("checksums are run invariant and unaffected by timing") {
  bench::ProtocolConfig cfg;
  cfg.fns = {FunctionId::Rastrigin, FunctionId::Hybrid2, FunctionId::Composition1};
  cfg.dims = {10};
  cfg.runs = 5;
  const auto a = bench::run_protocol(cfg);
  const auto b = bench::run_protocol(cfg);
  cfg.instrument_timing = false;
  cfg.threads = 1;
  const auto c = bench::run_protocol(cfg);
  REQUIRE(a.rows.size() == 3);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].checksum == b.rows[i].checksum);
    CHECK(a.rows[i].checksum == c.rows[i].checksum);
  }
  CHECK(c.rows[0].ratio() == 0);
  CHECK(c.rows[0].paired_ratio == 0);
  CHECK(a.rows[0].checksum != a.rows[1].checksum);
}

TEST_CASE("runs = 1 gives a point estimate") {
  bench::ProtocolConfig cfg;
  cfg.fns = {FunctionId::Ackley};
  cfg.dims = {10};
  cfg.runs = 1;
  const auto r = bench::run_protocol(cfg);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].engine_min_ns == r.rows[0].engine_mean_ns);
  CHECK(r.rows[0].total_evals == 50);
}

TEST_CASE("function sets") {
  const auto cec = bench::parse_function_set("cec14");
  CHECK(cec.size() == 30);
  CHECK(bench::parse_function_set("0,3,rastrigin") ==
        std::vector<FunctionId>{FunctionId::Sphere, function_from_int(3), FunctionId::Rastrigin});
  CHECK_THROWS_AS(bench::parse_function_set("0,99"), Error);
  CHECK_THROWS_AS(bench::parse_function_set(""), Error);
}

TEST_CASE("protocol validation") {
  bench::ProtocolConfig cfg;
  CHECK_THROWS_AS(bench::run_protocol(cfg), Error);
  cfg.fns = {FunctionId::Sphere};
  cfg.runs = 0;
  CHECK_THROWS_AS(bench::run_protocol(cfg), Error);
  cfg.runs = 1;
  cfg.batch = 0;
  CHECK_THROWS_AS(bench::run_protocol(cfg), Error);
}

TEST_CASE("hybrids are skipped below their floor") {
  bench::ProtocolConfig cfg;
  cfg.fns = {FunctionId::Sphere, FunctionId::Hybrid1};
  cfg.dims = {2, 10};
  cfg.runs = 1;
  CHECK(bench::run_protocol(cfg).rows.size() == 3);
}

TEST_CASE("fnv1a reference values") {
  CHECK(bench::fnv1a({}) == 0xcbf29ce484222325ull);
  const std::uint8_t a[] = {'a'};
  CHECK(bench::fnv1a(a) == 0xaf63dc4c8601ec8cull);
}
