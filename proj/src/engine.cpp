#include "robench/engine.hpp"

#include <cmath>
#include <string>

#include <omp.h>

#include "robench/error.hpp"

namespace robench {

struct Engine::State {
  std::array<std::optional<Instance>, kFunctionCount> instances;
  std::array<std::optional<FunctionEvaluator<double>>, kFunctionCount> f64;
  std::array<std::optional<FunctionEvaluator<float>>, kFunctionCount> f32;
};

void validate_config(const EngineConfig& config) {
  if (config.dim < SuiteConstants::min_dim) {
    throw Error(ErrorCode::InvalidArgument,
                "dim must be >= 2, got " + std::to_string(config.dim));
  }
  if (config.max_concurrency < 1) {
    throw Error(ErrorCode::InvalidArgument, "max_concurrency must be >= 1");
  }
  if (config.threads < 0) {
    throw Error(ErrorCode::InvalidArgument, "threads must be >= 0");
  }
}

Engine::Engine(const EngineConfig& config) : Engine(config, {}) {}

Engine::Engine(const EngineConfig& config, std::span<const Instance> overrides)
    : config_(config), state_(std::make_unique<State>()) {
  validate_config(config);
  for (const Instance& inst : overrides) {
    if (inst.dim != config.dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "instance for function " + std::to_string(to_int(inst.function)) +
                      " has dim " + std::to_string(inst.dim) + ", engine has " +
                      std::to_string(config.dim));
    }
    validate_instance(inst);
    state_->instances[static_cast<std::size_t>(inst.function)] = inst;
  }
  for (FunctionId fn : all_functions()) {
    const auto i = static_cast<std::size_t>(fn);
    if (config.dim < min_dimension(fn)) continue;
    auto& slot = state_->instances[i];
    if (!slot) slot = generate_instance(fn, config.dim, config.seed);
    if (config.precision == Precision::Double) {
      state_->f64[i].emplace(*slot);
    } else {
      state_->f32[i].emplace(*slot);
    }
  }
}

Engine::~Engine() = default;
Engine::Engine(Engine&&) noexcept = default;
Engine& Engine::operator=(Engine&&) noexcept = default;

bool Engine::enabled(FunctionId fn) const {
  if (!state_) throw Error(ErrorCode::UseAfterDispose, "engine has been disposed");
  return state_->instances[static_cast<std::size_t>(fn)].has_value();
}

std::vector<FunctionId> Engine::enabled_functions() const {
  std::vector<FunctionId> out;
  for (FunctionId fn : all_functions()) {
    if (enabled(fn)) out.push_back(fn);
  }
  return out;
}

std::vector<FunctionId> Engine::disabled_functions() const {
  std::vector<FunctionId> out;
  for (FunctionId fn : all_functions()) {
    if (!enabled(fn)) out.push_back(fn);
  }
  return out;
}

const Instance& Engine::instance(FunctionId fn) const {
  if (!enabled(fn)) {
    throw Error(ErrorCode::DisabledFunction,
                "function " + std::to_string(to_int(fn)) + " is disabled at dim " +
                    std::to_string(config_.dim));
  }
  return *state_->instances[static_cast<std::size_t>(fn)];
}

template <class T>
void Engine::run(FunctionId fn, PointBatch<T> batch, std::span<T> out) const {
  (void)instance(fn);
  constexpr bool want_double = std::is_same_v<T, double>;
  if (want_double != (config_.precision == Precision::Double)) {
    throw Error(ErrorCode::PrecisionMismatch,
                want_double ? "engine is configured for single precision"
                            : "engine is configured for double precision");
  }
  const std::size_t dim = config_.dim;
  if (batch.dim != dim || batch.data.size() % dim != 0) {
    throw Error(ErrorCode::DimensionMismatch,
                "batch dim " + std::to_string(batch.dim) + " != engine dim " + std::to_string(dim));
  }
  const std::size_t count = batch.count();
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "empty batch");
  if (count > config_.max_concurrency) {
    throw Error(ErrorCode::BatchTooLarge, "batch of " + std::to_string(count) +
                                              " exceeds max_concurrency " +
                                              std::to_string(config_.max_concurrency));
  }
  if (out.size() != count) {
    throw Error(ErrorCode::InvalidArgument, "output length differs from batch count");
  }
  for (T v : batch.data) {
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteInput, "non-finite coordinate in batch");
  }

  const auto i = static_cast<std::size_t>(fn);
  const FunctionEvaluator<T>* eval = nullptr;
  if constexpr (want_double) {
    eval = &*state_->f64[i];
  } else {
    eval = &*state_->f32[i];
  }

  if (config_.schedule == Schedule::Serial || count == 1) {
    Workspace<T> ws(dim);
    for (std::size_t p = 0; p < count; ++p) out[p] = (*eval)(batch.row(p), ws);
    return;
  }
  const int threads = config_.threads > 0 ? config_.threads : omp_get_max_threads();
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel num_threads(threads)
  {
    Workspace<T> ws(dim);
#pragma omp for schedule(static)
    for (std::ptrdiff_t p = 0; p < n; ++p) {
      out[static_cast<std::size_t>(p)] = (*eval)(batch.row(static_cast<std::size_t>(p)), ws);
    }
  }
}

EvalResult<double> Engine::evaluate(FunctionId fn, PointBatch<double> batch) const {
  EvalResult<double> result;
  result.values.resize(batch.count());
  run<double>(fn, batch, result.values);
  return result;
}

void Engine::evaluate_into(FunctionId fn, PointBatch<double> batch, std::span<double> out) const {
  run<double>(fn, batch, out);
}

EvalResult<float> Engine::evaluate_single_precision(FunctionId fn, PointBatch<float> batch) const {
  EvalResult<float> result;
  result.values.resize(batch.count());
  run<float>(fn, batch, result.values);
  return result;
}

void Engine::evaluate_into(FunctionId fn, PointBatch<float> batch, std::span<float> out) const {
  run<float>(fn, batch, out);
}

void Engine::dispose() noexcept { state_.reset(); }

Engine initialize(const EngineConfig& config) { return Engine(config); }

EvalResult<double> evaluate(const Engine& engine, FunctionId fn, PointBatch<double> batch) {
  return engine.evaluate(fn, batch);
}

EvalResult<float> evaluate_single_precision(const Engine& engine, FunctionId fn,
                                            PointBatch<float> batch) {
  return engine.evaluate_single_precision(fn, batch);
}

void dispose(Engine& engine) noexcept { engine.dispose(); }

}  // namespace robench
