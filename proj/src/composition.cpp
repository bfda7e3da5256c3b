#include "robench/composition.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <limits>
#include <string>

#include "robench/error.hpp"

namespace robench {
namespace {

constexpr std::size_t kMaxComponents = 8;

}  // namespace

CompositionSpec build_composition(FunctionId id, std::size_t dim) {
  const auto* recipe = std::get_if<CompositionRecipe>(&lookup(id).recipe);
  if (recipe == nullptr) {
    throw Error(ErrorCode::InvalidArgument,
                "function " + std::to_string(to_int(id)) + " is not a composition function");
  }
  if (dim < min_dimension(id)) {
    throw Error(ErrorCode::DimensionTooSmall,
                "dimension too small: function " + std::to_string(to_int(id)) + " needs D >= " +
                    std::to_string(min_dimension(id)) + ", got " + std::to_string(dim));
  }
  CompositionSpec spec;
  spec.id = id;
  spec.dim = dim;
  spec.components.assign(recipe->components.begin(), recipe->components.end());
  spec.sigma.assign(recipe->sigma.begin(), recipe->sigma.end());
  spec.lambda.assign(recipe->lambda.begin(), recipe->lambda.end());
  spec.bias.assign(recipe->bias.begin(), recipe->bias.end());
  return spec;
}

template <class T>
void composition_weights_into(std::span<const T> sigma, std::span<const T> optima,
                              std::span<const T> x, std::span<T> out) noexcept {
  const std::size_t n = sigma.size();
  const std::size_t dim = x.size();
  assert(n <= kMaxComponents && optima.size() == n * dim && out.size() == n);
  std::array<T, kMaxComponents> dist2{};
  std::size_t nearest = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const T* o = optima.data() + i * dim;
    T s{};
    for (std::size_t j = 0; j < dim; ++j) {
      const T d = x[j] - o[j];
      s += d * d;
    }
    dist2[i] = s;
    if (s < dist2[nearest]) nearest = i;
  }
  const T tiny = static_cast<T>(kCoincidenceDistance * kCoincidenceDistance);
  if (dist2[nearest] < tiny) {
    for (std::size_t i = 0; i < n; ++i) out[i] = i == nearest ? T{1} : T{0};
    return;
  }
  // log w_i = -0.5 log d_i^2 - d_i^2 / (2 D sigma_i^2)
  std::array<T, kMaxComponents> logw{};
  T top = -std::numeric_limits<T>::infinity();
  const T d = static_cast<T>(dim);
  for (std::size_t i = 0; i < n; ++i) {
    logw[i] = T{-0.5} * std::log(dist2[i]) - dist2[i] / (T{2} * d * sigma[i] * sigma[i]);
    top = std::max(top, logw[i]);
  }
  T sum{};
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::exp(logw[i] - top);
    sum += out[i];
  }
  for (std::size_t i = 0; i < n; ++i) out[i] /= sum;
}

template void composition_weights_into<float>(std::span<const float>, std::span<const float>,
                                              std::span<const float>, std::span<float>) noexcept;
template void composition_weights_into<double>(std::span<const double>, std::span<const double>,
                                               std::span<const double>,
                                               std::span<double>) noexcept;

std::vector<double> composition_weights(const CompositionSpec& spec,
                                        std::span<const std::vector<double>> optima,
                                        std::span<const double> x) {
  const std::size_t n = spec.sigma.size();
  if (optima.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(n) + " optima");
  }
  std::vector<double> flat;
  flat.reserve(n * x.size());
  for (const auto& o : optima) {
    if (o.size() != x.size()) {
      throw Error(ErrorCode::DimensionMismatch, "optimum length differs from point length");
    }
    flat.insert(flat.end(), o.begin(), o.end());
  }
  std::vector<double> out(n);
  composition_weights_into<double>(spec.sigma, flat, x, out);
  return out;
}

template <class T>
CompositionEvaluator<T> CompositionEvaluator<T>::from(const CompositionSpec& spec,
                                                      const Instance& inst) {
  if (inst.components.size() != spec.components.size() || inst.dim != spec.dim) {
    throw Error(ErrorCode::CorruptInstance, "composition instance does not match its recipe");
  }
  CompositionEvaluator out;
  for (std::size_t k = 0; k < spec.components.size(); ++k) {
    const auto& sub = inst.components[k];
    if (is_hybrid(spec.components[k])) {
      out.parts.emplace_back(HybridEvaluator<T>::from(sub));
    } else {
      out.parts.emplace_back(BasicEvaluator<T>::from(sub));
    }
    out.optima.insert(out.optima.end(), sub.shift.begin(), sub.shift.end());
  }
  out.sigma.assign(spec.sigma.begin(), spec.sigma.end());
  out.lambda.assign(spec.lambda.begin(), spec.lambda.end());
  out.bias.assign(spec.bias.begin(), spec.bias.end());
  return out;
}

template <class T>
CompositionEvaluator<T> CompositionEvaluator<T>::from(const Instance& inst) {
  return from(build_composition(inst.function, inst.dim), inst);
}

template <class T>
T CompositionEvaluator<T>::operator()(std::span<const T> x, Workspace<T>& ws) const noexcept {
  const std::size_t n = parts.size();
  std::array<T, kMaxComponents> weights{};
  composition_weights_into<T>(sigma, optima, x, std::span<T>(weights.data(), n));
  T total{};
  for (std::size_t i = 0; i < n; ++i) {
    if (weights[i] == T{0}) continue;
    const T g = std::visit([&](const auto& part) { return part(x, ws); }, parts[i]);
    total += weights[i] * (lambda[i] * g + bias[i]);
  }
  return total;
}

template struct CompositionEvaluator<float>;
template struct CompositionEvaluator<double>;

double eval_composition(const CompositionSpec& spec, const Instance& inst,
                        std::span<const double> x) {
  if (x.size() != spec.dim) {
    throw Error(ErrorCode::DimensionMismatch, "point length " + std::to_string(x.size()) +
                                                  " != dimension " + std::to_string(spec.dim));
  }
  const auto eval = CompositionEvaluator<double>::from(spec, inst);
  Workspace<double> ws(spec.dim);
  return eval(x, ws);
}

}  // namespace robench
