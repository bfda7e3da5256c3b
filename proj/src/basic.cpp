#include "robench/basic.hpp"

#include <string>
#include <variant>

#include "robench/error.hpp"
#include "robench/kernels.hpp"

namespace robench {

template <class T>
BasicEvaluator<T> BasicEvaluator<T>::from(const Instance& inst) {
  const auto* recipe = std::get_if<BasicRecipe>(&lookup(inst.function).recipe);
  if (recipe == nullptr) {
    throw Error(ErrorCode::InvalidArgument,
                "function " + std::to_string(to_int(inst.function)) + " is not a basic function");
  }
  BasicEvaluator out;
  out.kernel = recipe->kernel;
  out.transform = recipe->transform;
  out.shift.assign(inst.shift.begin(), inst.shift.end());
  out.rotation = inst.rotation.template cast<T>();
  return out;
}

template <class T>
T BasicEvaluator<T>::operator()(std::span<const T> x, Workspace<T>& ws) const noexcept {
  const std::size_t n = x.size();
  std::span<T> z(ws.z.data(), n);
  transform_point<T>(x, shift, transform.rotate ? &rotation : nullptr, transform,
                     std::span<T>(ws.scratch.data(), n), z);
  return kernels::value<T>(kernel, z);
}

template struct BasicEvaluator<float>;
template struct BasicEvaluator<double>;

double eval_basic(const Instance& inst, std::span<const double> x) {
  if (x.size() != inst.dim) {
    throw Error(ErrorCode::DimensionMismatch, "point length " + std::to_string(x.size()) +
                                                  " != dimension " + std::to_string(inst.dim));
  }
  const auto eval = BasicEvaluator<double>::from(inst);
  Workspace<double> ws(inst.dim);
  return eval(x, ws);
}

}  // namespace robench
