#pragma once

#include <span>
#include <variant>

#include "robench/basic.hpp"
#include "robench/composition.hpp"
#include "robench/hybrid.hpp"
#include "robench/transforms.hpp"

namespace robench {

/// Any of the 37 functions, materialized at precision T.
template <class T>
class FunctionEvaluator {
 public:
  explicit FunctionEvaluator(const Instance& inst);

  [[nodiscard]] FunctionId id() const noexcept { return id_; }
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

  /// Value without the f_opt bias. x.size() == dim().
  T raw(std::span<const T> x, Workspace<T>& ws) const noexcept;

  /// raw(x) + f_opt.
  T operator()(std::span<const T> x, Workspace<T>& ws) const noexcept {
    return raw(x, ws) + static_cast<T>(SuiteConstants::f_opt);
  }

 private:
  FunctionId id_;
  std::size_t dim_;
  std::variant<BasicEvaluator<T>, HybridEvaluator<T>, CompositionEvaluator<T>> impl_;
};

extern template class FunctionEvaluator<float>;
extern template class FunctionEvaluator<double>;

/// F(x) including the f_opt bias, double precision, checked.
double evaluate_function(const Instance& inst, std::span<const double> x);

/// Point where the function attains its optimum value: x_opt for most
/// functions, the first component's optimum for compositions, and for
/// Lunacek x_opt + 25 (R^T 1 - 1), which is where its rotated offset puts
/// the minimum.
std::vector<double> optimum_location(const Instance& inst);

}  // namespace robench
