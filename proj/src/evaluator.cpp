#include "robench/evaluator.hpp"

#include <cmath>
#include <string>

#include "robench/error.hpp"
#include "robench/kernels.hpp"

namespace robench {

template <class T>
FunctionEvaluator<T>::FunctionEvaluator(const Instance& inst)
    : id_(inst.function),
      dim_(inst.dim),
      impl_(BasicEvaluator<T>{}) {
  switch (category_of(inst.function)) {
    case Category::Hybrid:
      impl_ = HybridEvaluator<T>::from(inst);
      break;
    case Category::Composition:
      impl_ = CompositionEvaluator<T>::from(inst);
      break;
    default:
      impl_ = BasicEvaluator<T>::from(inst);
      break;
  }
}

template <class T>
T FunctionEvaluator<T>::raw(std::span<const T> x, Workspace<T>& ws) const noexcept {
  return std::visit([&](const auto& impl) { return impl(x, ws); }, impl_);
}

template class FunctionEvaluator<float>;
template class FunctionEvaluator<double>;

double evaluate_function(const Instance& inst, std::span<const double> x) {
  if (x.size() != inst.dim) {
    throw Error(ErrorCode::DimensionMismatch, "point length " + std::to_string(x.size()) +
                                                  " != dimension " + std::to_string(inst.dim));
  }
  for (double v : x) {
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteInput, "non-finite coordinate");
  }
  const FunctionEvaluator<double> eval(inst);
  Workspace<double> ws(inst.dim);
  return eval(x, ws);
}

std::vector<double> optimum_location(const Instance& inst) {
  if (is_composition(inst.function)) return inst.components.front().shift;
  std::vector<double> x = inst.shift;
  if (inst.function == FunctionId::Lunacek) {
    // R(0.1 (x - x_opt) + mu1) = mu1  =>  x = x_opt + 10 (R^T mu1 - mu1)
    const double mu1 = kernels::Constants::lunacek_mu1;
    const auto& r = inst.rotation;
    for (std::size_t c = 0; c < inst.dim; ++c) {
      double t = 0.0;
      for (std::size_t row = 0; row < inst.dim; ++row) t += r(row, c) * mu1;
      x[c] += 10.0 * (t - mu1);
    }
  }
  return x;
}

}  // namespace robench
