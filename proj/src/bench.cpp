#include "robench/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <limits>
#include <sstream>

#include "robench/error.hpp"
#include "robench/io.hpp"
#include "robench/random.hpp"

namespace robench::bench {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kPointsPurpose = 0x50;

template <class T>
void fill_points(std::span<T> out, std::uint64_t seed, std::size_t dim, FunctionId fn,
                 std::size_t run) {
  RandomStream stream(derive_stream_key(
      {seed, dim, static_cast<std::uint64_t>(fn), kPointsPurpose, run}));
  for (auto& v : out) {
    v = static_cast<T>(stream.uniform(SuiteConstants::search_lower, SuiteConstants::search_upper));
  }
}

template <class T>
std::uint64_t hash_values(std::span<const T> values, std::uint64_t h) {
  for (T v : values) {
    std::uint8_t bytes[sizeof(T)];
    std::memcpy(bytes, &v, sizeof(T));
    h = fnv1a(bytes, h);
  }
  return h;
}

struct Stats {
  double sum = 0;
  double min = std::numeric_limits<double>::infinity();
  std::size_t n = 0;

  void add(double ns) {
    sum += ns;
    min = std::min(min, ns);
    ++n;
  }
  [[nodiscard]] double mean() const { return n ? sum / static_cast<double>(n) : 0.0; }
};

template <class T>
ReportRow measure(const Engine& engine, FunctionId fn, const ProtocolConfig& config) {
  const std::size_t dim = engine.config().dim;
  const std::size_t batch = config.batch;
  std::vector<T> points(batch * dim);
  std::vector<T> values(batch);
  std::vector<T> single(batch);
  Stats eng;
  Stats base;
  std::vector<double> paired;
  paired.reserve(config.runs);
  std::uint64_t checksum = 0xcbf29ce484222325ull;
  bool consistent = true;

  const auto time_ns = [&](auto&& body) -> double {
    if (!config.instrument_timing) {
      body();
      return 0.0;
    }
    const auto t0 = Clock::now();
    body();
    const auto t1 = Clock::now();
    return static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  };

  for (std::size_t run = 0; run < kWarmupBatches + config.runs; ++run) {
    fill_points<T>(points, config.seed, dim, fn, run);
    const PointBatch<T> all{points, dim};
    const auto engine_pass = [&] { engine.evaluate_into(fn, all, std::span<T>(values)); };
    const auto baseline_pass = [&] {
      for (std::size_t p = 0; p < batch; ++p) {
        engine.evaluate_into(fn, PointBatch<T>{all.row(p), dim}, std::span<T>(&single[p], 1));
      }
    };
    // Whichever pass goes second replays the same points with warm branch
    // predictors and caches, so the order alternates.
    double t_engine = 0;
    double t_base = 0;
    if (run % 2 == 0) {
      t_engine = time_ns(engine_pass);
      t_base = time_ns(baseline_pass);
    } else {
      t_base = time_ns(baseline_pass);
      t_engine = time_ns(engine_pass);
    }
    if (run < kWarmupBatches) continue;
    eng.add(t_engine);
    base.add(t_base);
    if (t_engine > 0) paired.push_back(t_base / t_engine);
    checksum = hash_values<T>(values, checksum);
    consistent = consistent && std::memcmp(values.data(), single.data(), batch * sizeof(T)) == 0;
  }

  ReportRow row;
  row.fn = fn;
  row.dim = dim;
  row.precision = config.precision;
  row.batch = batch;
  row.runs = config.runs;
  row.total_evals = batch * config.runs;
  row.engine_mean_ns = eng.mean();
  row.engine_min_ns = config.instrument_timing ? eng.min : 0.0;
  row.baseline_mean_ns = base.mean();
  row.baseline_min_ns = config.instrument_timing ? base.min : 0.0;
  if (!paired.empty()) {
    auto mid = paired.begin() + static_cast<std::ptrdiff_t>(paired.size() / 2);
    std::nth_element(paired.begin(), mid, paired.end());
    row.paired_ratio = *mid;
  }
  row.checksum = checksum;
  row.baseline_consistent = consistent;
  return row;
}

std::string fixed(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << v;
  return os.str();
}

}  // namespace

double ReportRow::engine_ns_per_eval() const noexcept {
  return batch ? engine_mean_ns / static_cast<double>(batch) : 0.0;
}

double ReportRow::baseline_ns_per_eval() const noexcept {
  return batch ? baseline_mean_ns / static_cast<double>(batch) : 0.0;
}

double ReportRow::engine_evals_per_sec() const noexcept {
  const double ns = engine_ns_per_eval();
  return ns > 0 ? 1e9 / ns : 0.0;
}

double ReportRow::ratio() const noexcept {
  const double e = engine_ns_per_eval();
  return e > 0 ? baseline_ns_per_eval() / e : 0.0;
}

std::uint64_t fnv1a(std::span<const std::uint8_t> bytes, std::uint64_t h) {
  for (auto b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  return h;
}

EvalReport run_protocol(const ProtocolConfig& config) {
  if (config.fns.empty()) throw Error(ErrorCode::InvalidArgument, "no functions selected");
  if (config.dims.empty()) throw Error(ErrorCode::InvalidArgument, "no dimensions selected");
  if (config.batch < 1) throw Error(ErrorCode::InvalidArgument, "batch must be >= 1");
  if (config.runs < 1) throw Error(ErrorCode::InvalidArgument, "runs must be >= 1");

  EvalReport report;
  for (std::size_t dim : config.dims) {
    EngineConfig ec;
    ec.dim = dim;
    ec.max_concurrency = config.batch;
    ec.seed = config.seed;
    ec.precision = config.precision;
    ec.threads = config.threads;
    const Engine engine(ec);
    for (FunctionId fn : config.fns) {
      if (!engine.enabled(fn)) continue;
      report.rows.push_back(config.precision == Precision::Double
                                ? measure<double>(engine, fn, config)
                                : measure<float>(engine, fn, config));
    }
  }
  return report;
}

std::string render_report(const EvalReport& report) {
  std::ostringstream os;
  os << "fn,name,dim,precision,batch,runs,total_evals,engine_mean_ns,engine_min_ns,"
        "engine_ns_per_eval,engine_evals_per_sec,baseline_mean_ns,baseline_min_ns,"
        "baseline_ns_per_eval,ratio,paired_ratio,checksum,baseline_consistent\n";
  for (const auto& r : report.rows) {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(r.checksum));
    os << to_int(r.fn) << ',' << lookup(r.fn).name << ',' << r.dim << ','
       << (r.precision == Precision::Double ? "double" : "single") << ',' << r.batch << ','
       << r.runs << ',' << r.total_evals << ',' << fixed(r.engine_mean_ns) << ','
       << fixed(r.engine_min_ns) << ',' << fixed(r.engine_ns_per_eval()) << ','
       << fixed(r.engine_evals_per_sec()) << ',' << fixed(r.baseline_mean_ns) << ','
       << fixed(r.baseline_min_ns) << ',' << fixed(r.baseline_ns_per_eval()) << ','
       << fixed(r.ratio()) << ',' << fixed(r.paired_ratio) << ',' << hex << ',' << (r.baseline_consistent ? 1 : 0) << '\n';
  }
  return os.str();
}

std::vector<FunctionId> parse_function_set(std::string_view text) {
  if (text == "all") return {all_functions().begin(), all_functions().end()};
  if (text == "cec14") return {cec14_overlap().begin(), cec14_overlap().end()};
  std::vector<FunctionId> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    if (item.empty()) throw Error(ErrorCode::InvalidArgument, "empty entry in function list");
    out.push_back(parse_function(item));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "empty function list");
  return out;
}

}  // namespace robench::bench
