#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "robench/catalog.hpp"
#include "robench/matrix.hpp"
#include "robench/transforms.hpp"

namespace robench {

/// Per-thread scratch for one point evaluation.
template <class T>
struct Workspace {
  explicit Workspace(std::size_t dim) : y(dim), scratch(dim), z(dim) {}

  std::vector<T> y;
  std::vector<T> scratch;
  std::vector<T> z;
};

/// Shifted (and usually rotated) basic function, materialized at precision
/// T. Returns values without the f_opt bias.
template <class T>
struct BasicEvaluator {
  Kernel kernel = Kernel::Sphere;
  TransformSpec transform;
  std::vector<T> shift;
  Matrix<T> rotation;

  /// inst.function must be a basic function id.
  static BasicEvaluator from(const Instance& inst);

  T operator()(std::span<const T> x, Workspace<T>& ws) const noexcept;
};

extern template struct BasicEvaluator<float>;
extern template struct BasicEvaluator<double>;

/// Pre-bias value of a basic function instance (double precision).
double eval_basic(const Instance& inst, std::span<const double> x);

}  // namespace robench
