#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "robench/catalog.hpp"
#include "robench/evaluator.hpp"
#include "robench/transforms.hpp"

namespace robench {

enum class Precision { Single, Double };

enum class Schedule {
  Parallel,  // OpenMP across batch points
  Serial,    // one point after another on the calling thread
};

struct EngineConfig {
  std::size_t dim = 10;
  std::size_t max_concurrency = 50;
  std::uint64_t seed = 1;
  Precision precision = Precision::Double;
  int threads = 0;  // 0: OpenMP default
  Schedule schedule = Schedule::Parallel;
};

/// Row-major count x dim points, non-owning.
template <class T>
struct PointBatch {
  std::span<const T> data;
  std::size_t dim = 0;

  [[nodiscard]] std::size_t count() const noexcept { return dim == 0 ? 0 : data.size() / dim; }
  [[nodiscard]] std::span<const T> row(std::size_t i) const noexcept {
    return data.subspan(i * dim, dim);
  }
};

template <class T>
struct EvalResult {
  std::vector<T> values;
};

/// Throws InvalidArgument for dim < 2 or max_concurrency < 1.
void validate_config(const EngineConfig& config);

class Engine {
 public:
  /// Generates and caches every instance available at config.dim. Ids below
  /// their minimum dimension are disabled rather than failing.
  explicit Engine(const EngineConfig& config);

  /// Uses the given instances (e.g. loaded from files) in place of generated
  /// ones for their function ids.
  Engine(const EngineConfig& config, std::span<const Instance> overrides);

  ~Engine();
  Engine(Engine&&) noexcept;
  Engine& operator=(Engine&&) noexcept;
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  [[nodiscard]] const EngineConfig& config() const noexcept { return config_; }
  [[nodiscard]] bool disposed() const noexcept { return state_ == nullptr; }
  [[nodiscard]] bool enabled(FunctionId fn) const;
  [[nodiscard]] std::vector<FunctionId> enabled_functions() const;
  [[nodiscard]] std::vector<FunctionId> disabled_functions() const;

  /// Cached instance; throws UseAfterDispose / DisabledFunction.
  [[nodiscard]] const Instance& instance(FunctionId fn) const;

  /// Double-precision batch. Error order: UseAfterDispose, DisabledFunction,
  /// PrecisionMismatch, DimensionMismatch, BatchTooLarge, NonFiniteInput.
  EvalResult<double> evaluate(FunctionId fn, PointBatch<double> batch) const;
  void evaluate_into(FunctionId fn, PointBatch<double> batch, std::span<double> out) const;

  /// Single-precision batch; the engine must be configured for Single.
  EvalResult<float> evaluate_single_precision(FunctionId fn, PointBatch<float> batch) const;
  void evaluate_into(FunctionId fn, PointBatch<float> batch, std::span<float> out) const;

  /// Releases all cached data. Idempotent.
  void dispose() noexcept;

 private:
  struct State;

  template <class T>
  void run(FunctionId fn, PointBatch<T> batch, std::span<T> out) const;

  EngineConfig config_;
  std::unique_ptr<State> state_;
};

/// Shorthands mirroring the four host entry points.
Engine initialize(const EngineConfig& config);
EvalResult<double> evaluate(const Engine& engine, FunctionId fn, PointBatch<double> batch);
EvalResult<float> evaluate_single_precision(const Engine& engine, FunctionId fn,
                                            PointBatch<float> batch);
void dispose(Engine& engine) noexcept;

}  // namespace robench
