#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "robench/basic.hpp"
#include "robench/catalog.hpp"
#include "robench/matrix.hpp"
#include "robench/transforms.hpp"

namespace robench {

/// Structure of a hybrid function at a given dimension. The random parts
/// (shift, split permutation, per-subcomponent rotations) live in the
/// Instance.
struct HybridSpec {
  FunctionId id = FunctionId::Hybrid1;
  std::size_t dim = 0;
  std::vector<FunctionId> components;
  std::vector<int> percent;
  std::vector<std::size_t> sizes;
};

/// n_i = ceil(p_i * D) for i < N, n_N = D - sum. If that leaves the last
/// subcomponent empty, one variable at a time is moved to it from the
/// largest earlier subcomponent (the last one on ties). Throws
/// DimensionTooSmall when dim < N.
std::vector<std::size_t> hybrid_partition(std::span<const int> percent, std::size_t dim);

/// Throws InvalidArgument for non-hybrid ids, DimensionTooSmall below 10.
HybridSpec build_hybrid(FunctionId id, std::size_t dim);

template <class T>
struct HybridEvaluator {
  struct Chunk {
    Kernel kernel = Kernel::Sphere;
    TransformSpec transform;
    std::size_t offset = 0;
    std::size_t size = 0;
    Matrix<T> rotation;
  };

  std::vector<T> shift;
  std::vector<std::size_t> permutation;
  std::vector<Chunk> chunks;

  static HybridEvaluator from(const HybridSpec& spec, const Instance& inst);
  static HybridEvaluator from(const Instance& inst);

  /// sum_i G_i(R_i (scale_i * y_chunk_i + pre_i) + post_i), y = x - shift
  /// gathered through the permutation.
  T operator()(std::span<const T> x, Workspace<T>& ws) const noexcept;
};

extern template struct HybridEvaluator<float>;
extern template struct HybridEvaluator<double>;

/// Pre-bias hybrid value. Throws DimensionMismatch on length mismatch.
double eval_hybrid(const HybridSpec& spec, const Instance& inst, std::span<const double> x);

}  // namespace robench
