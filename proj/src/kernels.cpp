#include "robench/kernels.hpp"

#include <string>

#include "robench/error.hpp"

namespace robench::kernels {
namespace {

template <class T>
T checked(Kernel kernel, std::span<const T> z) {
  if (z.empty()) {
    throw Error(ErrorCode::DimensionTooSmall,
                std::string(kernel_name(kernel)) + ": empty input");
  }
  if (kernel == Kernel::SchaffersF7 && z.size() < 2) {
    throw Error(ErrorCode::DimensionTooSmall, "schaffers_f7 needs D >= 2");
  }
  for (const T v : z) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::NonFiniteInput,
                  std::string(kernel_name(kernel)) + ": non-finite coordinate");
    }
  }
  return value(kernel, z);
}

}  // namespace

double evaluate(Kernel kernel, std::span<const double> z) { return checked(kernel, z); }
float evaluate(Kernel kernel, std::span<const float> z) { return checked(kernel, z); }

double canonical_optimum(Kernel kernel) noexcept {
  switch (kernel) {
    case Kernel::GrieRosen:
    case Kernel::Rosenbrock:
      return 1.0;
    case Kernel::HappyCat:
    case Kernel::HGBat:
      return -1.0;
    case Kernel::Lunacek:
      return Constants::lunacek_mu1;
    default:
      return 0.0;
  }
}

}  // namespace robench::kernels
