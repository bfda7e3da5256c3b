#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "robench/catalog.hpp"
#include "robench/matrix.hpp"
#include "robench/random.hpp"

namespace robench {

/// Variables are grouped by a permutation and each group is rotated by its
/// own orthogonal block. Grouped position k holds variable permutation[k].
struct RotationBlocks {
  std::vector<std::size_t> permutation;
  std::vector<Matrix<double>> blocks;

  [[nodiscard]] std::vector<std::size_t> sizes() const;
  friend bool operator==(const RotationBlocks&, const RotationBlocks&) = default;
};

/// All random data behind one concrete function.
///
/// Basic functions: shift is x_opt, blocks hold three-group rotation data,
/// rotation is the dense D x D matrix.
/// Hybrid functions: blocks.permutation is the variable split S and
/// blocks.blocks hold one rotation per subcomponent.
/// Compositions: components hold one sub-instance per component function
/// (its shift is that component's optimum); shift mirrors the first
/// component's optimum, the global one.
struct Instance {
  FunctionId function = FunctionId::Sphere;
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  std::vector<double> shift;
  RotationBlocks blocks;
  Matrix<double> rotation;
  std::vector<Instance> components;

  [[nodiscard]] std::vector<std::vector<double>> component_optima() const;
};

bool operator==(const Instance& a, const Instance& b);

/// ceil(D/3), ceil((D - ceil(D/3))/2), remainder; zero-size groups are
/// dropped (D < 3).
std::vector<std::size_t> rotation_block_sizes(std::size_t dim);

/// Modified Gram-Schmidt with one re-orthogonalization pass over the
/// columns of a square matrix. Returns nullopt when a column's residual
/// norm falls below 1e-12 (the caller should redraw).
std::optional<Matrix<double>> gram_schmidt(const Matrix<double>& raw);

/// n x n orthogonal matrix from standard normal entries.
Matrix<double> random_orthogonal(std::size_t n, RandomStream& stream);

/// Fisher-Yates shuffle of 0..n-1.
std::vector<std::size_t> random_permutation(std::size_t n, RandomStream& stream);

/// Dense blockdiag(blocks) * P.
Matrix<double> assemble_rotation(const RotationBlocks& blocks);

/// Pure function of (fn, dim, seed). Throws DimensionTooSmall below
/// min_dimension(fn).
Instance generate_instance(FunctionId fn, std::size_t dim, std::uint64_t seed);

/// Checks the structural invariants (sizes, orthonormality < 1e-10,
/// permutation bijectivity, shift range is not checked). Throws
/// CorruptInstance with a description on failure.
void validate_instance(const Instance& inst);

bool is_permutation_of_iota(std::span<const std::size_t> perm);

/// z = R(scale * (x - shift) + pre) + post, R = identity when !spec.rotate.
/// scratch and z have length x.size(); rotation may be null when !rotate.
template <class T>
void transform_point(std::span<const T> x, std::span<const T> shift,
                     const Matrix<T>* rotation, const TransformSpec& spec,
                     std::span<T> scratch, std::span<T> z) noexcept {
  const T scale = static_cast<T>(spec.scale);
  const T pre = static_cast<T>(spec.pre_offset);
  const T post = static_cast<T>(spec.post_offset);
  const std::size_t n = x.size();
  if (spec.rotate) {
    for (std::size_t i = 0; i < n; ++i) scratch[i] = scale * (x[i] - shift[i]) + pre;
    matvec(*rotation, std::span<const T>(scratch.data(), n), z.first(n));
    for (std::size_t i = 0; i < n; ++i) z[i] += post;
  } else {
    for (std::size_t i = 0; i < n; ++i) z[i] = (scale * (x[i] - shift[i]) + pre) + post;
  }
}

/// Checked double-precision wrapper over transform_point using the
/// instance's shift and dense rotation.
std::vector<double> apply_transform(std::span<const double> x, const Instance& inst,
                                    const TransformSpec& spec);

}  // namespace robench
