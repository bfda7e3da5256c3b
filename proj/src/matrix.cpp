#include "robench/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace robench {

double orthonormality_residual(const Matrix<double>& q) {
  const std::size_t n = q.cols();
  double worst = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      double dot = 0.0;
      for (std::size_t r = 0; r < q.rows(); ++r) dot += q(r, a) * q(r, b);
      worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

}  // namespace robench
