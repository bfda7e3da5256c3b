#include "robench/commands.hpp"

#include <charconv>
#include <string>

#include "robench/bench.hpp"
#include "robench/engine.hpp"
#include "robench/error.hpp"
#include "robench/evaluator.hpp"

namespace robench::cli {
namespace {

std::string fn_label(FunctionId fn) {
  return std::to_string(to_int(fn)) + " (" + std::string(lookup(fn).name) + ")";
}

template <class T>
std::string eval_points(const Engine& engine, FunctionId fn, const std::filesystem::path& in) {
  const std::size_t dim = engine.config().dim;
  const auto points = io::read_points<T>(in, dim);
  const std::size_t count = points.size() / dim;
  std::vector<T> values(count);
  const std::size_t chunk = engine.config().max_concurrency;
  for (std::size_t start = 0; start < count; start += chunk) {
    const std::size_t n = std::min(chunk, count - start);
    const PointBatch<T> batch{std::span<const T>(points).subspan(start * dim, n * dim), dim};
    engine.evaluate_into(fn, batch, std::span<T>(values).subspan(start, n));
  }
  return io::render_values<T>(values);
}

}  // namespace

std::vector<std::filesystem::path> cmd_gen(const GenOptions& opt) {
  std::vector<FunctionId> fns;
  if (opt.fn == "all") {
    for (FunctionId fn : all_functions()) {
      if (opt.dim >= min_dimension(fn)) fns.push_back(fn);
    }
  } else {
    fns.push_back(parse_function(opt.fn));
  }
  std::error_code ec;
  std::filesystem::create_directories(opt.out, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create '" + opt.out.string() + "'");
  std::vector<std::filesystem::path> written;
  for (FunctionId fn : fns) {
    Instance inst;
    try {
      inst = generate_instance(fn, opt.dim, opt.seed);
    } catch (const Error& e) {
      throw Error(e.code(), "function " + fn_label(fn) + ": " + e.what());
    }
    auto path = opt.out / io::instance_file_name(fn, opt.dim, opt.seed);
    io::store_instance(inst, path);
    written.push_back(std::move(path));
  }
  return written;
}

std::string cmd_eval(const EvalOptions& opt) {
  const FunctionId fn = parse_function(opt.fn);
  EngineConfig config;
  config.dim = opt.dim;
  config.seed = opt.seed;
  config.precision = opt.single ? Precision::Single : Precision::Double;
  config.threads = opt.threads;
  config.max_concurrency = 1024;

  std::vector<Instance> overrides;
  if (opt.instance) {
    Instance inst = io::load_instance(*opt.instance);
    if (inst.function != fn) {
      throw Error(ErrorCode::InvalidArgument, "instance file holds function " +
                                                  fn_label(inst.function) + ", not " +
                                                  fn_label(fn));
    }
    overrides.push_back(std::move(inst));
  }
  if (opt.dim < min_dimension(fn)) {
    throw Error(ErrorCode::DimensionTooSmall,
                "dimension too small: function " + fn_label(fn) + " needs D >= " +
                    std::to_string(min_dimension(fn)));
  }
  const Engine engine(config, overrides);
  std::string text = opt.single ? eval_points<float>(engine, fn, opt.in)
                                : eval_points<double>(engine, fn, opt.in);
  if (!opt.out.empty()) io::write_text(opt.out, text);
  return text;
}

io::Grid compute_grid(FunctionId fn, std::uint64_t seed, double lo, double hi,
                      std::size_t steps) {
  constexpr std::size_t dim = 2;
  if (min_dimension(fn) > dim) {
    throw Error(ErrorCode::UnsupportedAtDim2,
                "function " + fn_label(fn) + " is not defined at D = 2 (needs D >= " +
                    std::to_string(min_dimension(fn)) + ")");
  }
  if (steps < 1) throw Error(ErrorCode::InvalidArgument, "steps must be >= 1");
  if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "range needs lo < hi");
  io::Grid grid;
  grid.function = fn;
  grid.seed = seed;
  grid.lo = lo;
  grid.hi = hi;
  grid.steps = steps;
  grid.values.resize(steps * steps);

  const Instance inst = generate_instance(fn, dim, seed);
  const FunctionEvaluator<double> eval(inst);
  Workspace<double> ws(dim);
  for (std::size_t i = 0; i < steps; ++i) {
    for (std::size_t j = 0; j < steps; ++j) {
      const double x[dim] = {grid.node(j), grid.node(i)};
      grid.values[i * steps + j] = eval(x, ws);
    }
  }
  return grid;
}

std::string cmd_grid(const GridOptions& opt) {
  const auto [lo, hi] = parse_range(opt.range);
  const auto grid = compute_grid(parse_function(opt.fn), opt.seed, lo, hi, opt.steps);
  std::string text = io::render_grid(grid);
  if (!opt.out.empty()) io::write_text(opt.out, text);
  return text;
}

std::string cmd_bench(const BenchOptions& opt) {
  bench::ProtocolConfig config;
  config.fns = bench::parse_function_set(opt.fns);
  config.dims = parse_dims(opt.dims);
  config.batch = opt.batch;
  config.runs = opt.runs;
  config.precision = opt.single ? Precision::Single : Precision::Double;
  config.seed = opt.seed;
  config.threads = opt.threads;
  std::string text = bench::render_report(bench::run_protocol(config));
  if (!opt.out.empty()) io::write_text(opt.out, text);
  return text;
}

std::pair<double, double> parse_range(std::string_view text) {
  const auto colon = text.find(':', 1);
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::InvalidArgument, "range must look like lo:hi");
  }
  double lo = 0;
  double hi = 0;
  try {
    lo = io::parse_double(text.substr(0, colon));
    hi = io::parse_double(text.substr(colon + 1));
  } catch (const Error&) {
    throw Error(ErrorCode::InvalidArgument, "range must look like lo:hi");
  }
  if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "range needs lo < hi");
  return {lo, hi};
}

std::vector<std::size_t> parse_dims(std::string_view text) {
  std::vector<std::size_t> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    std::size_t v = 0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || res.ec != std::errc{} || res.ptr != item.data() + item.size() || v == 0) {
      throw Error(ErrorCode::InvalidArgument, "bad dimension '" + std::string(item) + "'");
    }
    out.push_back(v);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "empty dimension list");
  return out;
}

}  // namespace robench::cli
