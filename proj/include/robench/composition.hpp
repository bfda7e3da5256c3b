#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "robench/basic.hpp"
#include "robench/catalog.hpp"
#include "robench/hybrid.hpp"
#include "robench/transforms.hpp"

namespace robench {

struct CompositionSpec {
  FunctionId id = FunctionId::Composition1;
  std::size_t dim = 0;
  std::vector<FunctionId> components;
  std::vector<double> sigma;
  std::vector<double> lambda;
  std::vector<double> bias;
};

/// Throws InvalidArgument for non-composition ids, DimensionTooSmall below
/// min_dimension(id).
CompositionSpec build_composition(FunctionId id, std::size_t dim);

/// Below this distance x is treated as sitting on a component optimum.
inline constexpr double kCoincidenceDistance = 1e-12;

/// Normalized weights. For each component
///   w_i = exp(-d_i^2 / (2 D sigma_i^2)) / d_i,
/// evaluated in log space and normalized against the largest term. When x
/// coincides with an optimum the weights are the indicator of the nearest
/// one. optima is a flat N x D row-major array; out has N entries.
template <class T>
void composition_weights_into(std::span<const T> sigma, std::span<const T> optima,
                              std::span<const T> x, std::span<T> out) noexcept;

extern template void composition_weights_into<float>(std::span<const float>,
                                                     std::span<const float>,
                                                     std::span<const float>,
                                                     std::span<float>) noexcept;
extern template void composition_weights_into<double>(std::span<const double>,
                                                      std::span<const double>,
                                                      std::span<const double>,
                                                      std::span<double>) noexcept;

std::vector<double> composition_weights(const CompositionSpec& spec,
                                        std::span<const std::vector<double>> optima,
                                        std::span<const double> x);

template <class T>
struct CompositionEvaluator {
  using Part = std::variant<BasicEvaluator<T>, HybridEvaluator<T>>;

  std::vector<Part> parts;
  std::vector<T> sigma;
  std::vector<T> lambda;
  std::vector<T> bias;
  std::vector<T> optima;  // N x D, row i is component i's optimum

  static CompositionEvaluator from(const CompositionSpec& spec, const Instance& inst);
  static CompositionEvaluator from(const Instance& inst);

  /// sum_i w_i (lambda_i G_i(x) + bias_i); components with zero weight are
  /// not evaluated.
  T operator()(std::span<const T> x, Workspace<T>& ws) const noexcept;
};

extern template struct CompositionEvaluator<float>;
extern template struct CompositionEvaluator<double>;

/// Pre-bias composition value. Throws DimensionMismatch.
double eval_composition(const CompositionSpec& spec, const Instance& inst,
                        std::span<const double> x);

}  // namespace robench
