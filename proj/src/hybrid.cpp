#include "robench/hybrid.hpp"

#include <numeric>
#include <string>
#include <variant>

#include "robench/error.hpp"
#include "robench/kernels.hpp"

namespace robench {

std::vector<std::size_t> hybrid_partition(std::span<const int> percent, std::size_t dim) {
  const std::size_t n = percent.size();
  if (n == 0 || dim < n) {
    throw Error(ErrorCode::DimensionTooSmall,
                "dimension too small: " + std::to_string(dim) + " variables for " +
                    std::to_string(n) + " subcomponents");
  }
  std::vector<std::size_t> sizes(n, 0);
  std::size_t used = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    // ceil(p * D / 100) in integers.
    sizes[i] = (static_cast<std::size_t>(percent[i]) * dim + 99) / 100;
    used += sizes[i];
  }
  // The ceiling rule can leave nothing for the last subcomponent (e.g. D = 11
  // with p = [.1 .2 .2 .2 .3]); borrow from the largest earlier one.
  while (used + 1 > dim) {
    std::size_t largest = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (sizes[i] >= sizes[largest]) largest = i;
    }
    --sizes[largest];
    --used;
  }
  sizes[n - 1] = dim - used;
  return sizes;
}

HybridSpec build_hybrid(FunctionId id, std::size_t dim) {
  const auto* recipe = std::get_if<HybridRecipe>(&lookup(id).recipe);
  if (recipe == nullptr) {
    throw Error(ErrorCode::InvalidArgument,
                "function " + std::to_string(to_int(id)) + " is not a hybrid function");
  }
  if (dim < SuiteConstants::hybrid_min_dim) {
    throw Error(ErrorCode::DimensionTooSmall,
                "dimension too small: hybrid functions need D >= 10, got " + std::to_string(dim));
  }
  HybridSpec spec;
  spec.id = id;
  spec.dim = dim;
  spec.components.assign(recipe->components.begin(), recipe->components.end());
  spec.percent.assign(recipe->percent.begin(), recipe->percent.end());
  spec.sizes = hybrid_partition(recipe->percent, dim);
  return spec;
}

template <class T>
HybridEvaluator<T> HybridEvaluator<T>::from(const HybridSpec& spec, const Instance& inst) {
  if (inst.dim != spec.dim || inst.blocks.sizes() != spec.sizes ||
      inst.blocks.permutation.size() != spec.dim) {
    throw Error(ErrorCode::CorruptInstance, "hybrid instance does not match its partition");
  }
  HybridEvaluator out;
  out.shift.assign(inst.shift.begin(), inst.shift.end());
  out.permutation = inst.blocks.permutation;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    const auto& basic = std::get<BasicRecipe>(lookup(spec.components[i]).recipe);
    Chunk chunk;
    chunk.kernel = basic.kernel;
    chunk.transform = basic.transform;
    chunk.offset = offset;
    chunk.size = spec.sizes[i];
    chunk.rotation = inst.blocks.blocks[i].template cast<T>();
    offset += chunk.size;
    out.chunks.push_back(std::move(chunk));
  }
  return out;
}

template <class T>
HybridEvaluator<T> HybridEvaluator<T>::from(const Instance& inst) {
  return from(build_hybrid(inst.function, inst.dim), inst);
}

template <class T>
T HybridEvaluator<T>::operator()(std::span<const T> x, Workspace<T>& ws) const noexcept {
  const std::size_t dim = x.size();
  T* y = ws.y.data();
  for (std::size_t k = 0; k < dim; ++k) {
    const std::size_t src = permutation[k];
    y[k] = x[src] - shift[src];
  }
  T total{};
  for (const auto& chunk : chunks) {
    const std::size_t n = chunk.size;
    const T scale = static_cast<T>(chunk.transform.scale);
    const T pre = static_cast<T>(chunk.transform.pre_offset);
    const T post = static_cast<T>(chunk.transform.post_offset);
    std::span<T> scratch(ws.scratch.data(), n);
    std::span<T> z(ws.z.data(), n);
    for (std::size_t i = 0; i < n; ++i) scratch[i] = scale * y[chunk.offset + i] + pre;
    matvec(chunk.rotation, std::span<const T>(scratch), z);
    for (std::size_t i = 0; i < n; ++i) z[i] += post;
    total += kernels::value<T>(chunk.kernel, std::span<const T>(z));
  }
  return total;
}

template struct HybridEvaluator<float>;
template struct HybridEvaluator<double>;

double eval_hybrid(const HybridSpec& spec, const Instance& inst, std::span<const double> x) {
  if (x.size() != spec.dim) {
    throw Error(ErrorCode::DimensionMismatch, "point length " + std::to_string(x.size()) +
                                                  " != dimension " + std::to_string(spec.dim));
  }
  const auto eval = HybridEvaluator<double>::from(spec, inst);
  Workspace<double> ws(spec.dim);
  return eval(x, ws);
}

}  // namespace robench
