#include "robench/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "robench/error.hpp"
#include "robench/hybrid.hpp"

namespace robench {
namespace {

constexpr double kRankTolerance = 1e-12;
constexpr double kOrthonormalityGate = 1e-10;

std::string describe(FunctionId fn) {
  return std::to_string(to_int(fn)) + " (" + std::string(lookup(fn).name) + ")";
}

class StreamFactory {
 public:
  explicit StreamFactory(std::vector<std::uint64_t> prefix) : prefix_(std::move(prefix)) {}

  RandomStream make(StreamPurpose purpose) const {
    auto words = prefix_;
    words.push_back(static_cast<std::uint64_t>(purpose));
    return RandomStream(derive_stream_key(words));
  }

  StreamFactory child(std::uint64_t index, FunctionId fn) const {
    auto words = prefix_;
    words.push_back(static_cast<std::uint64_t>(StreamPurpose::Component));
    words.push_back(index);
    words.push_back(static_cast<std::uint64_t>(fn));
    return StreamFactory(std::move(words));
  }

 private:
  std::vector<std::uint64_t> prefix_;
};

std::vector<double> random_shift(std::size_t dim, RandomStream& stream) {
  std::vector<double> shift(dim);
  for (auto& v : shift) v = stream.uniform(SuiteConstants::shift_lower, SuiteConstants::shift_upper);
  return shift;
}

RotationBlocks random_blocks(std::span<const std::size_t> sizes, RandomStream& perm_stream,
                             RandomStream& rot_stream) {
  const std::size_t dim = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  RotationBlocks blocks;
  blocks.permutation = random_permutation(dim, perm_stream);
  blocks.blocks.reserve(sizes.size());
  for (auto n : sizes) blocks.blocks.push_back(random_orthogonal(n, rot_stream));
  return blocks;
}

Instance generate_impl(FunctionId fn, std::size_t dim, std::uint64_t seed,
                       const StreamFactory& streams) {
  Instance inst;
  inst.function = fn;
  inst.dim = dim;
  inst.seed = seed;

  const auto& recipe = lookup(fn).recipe;
  if (const auto* comp = std::get_if<CompositionRecipe>(&recipe)) {
    inst.components.reserve(comp->components.size());
    for (std::size_t k = 0; k < comp->components.size(); ++k) {
      const FunctionId part = comp->components[k];
      Instance sub = generate_impl(part, dim, seed, streams.child(k, part));
      // The third component's optimum sits at the origin.
      if (k == 2) std::fill(sub.shift.begin(), sub.shift.end(), 0.0);
      inst.components.push_back(std::move(sub));
    }
    inst.shift = inst.components.front().shift;
    return inst;
  }

  auto shift_stream = streams.make(StreamPurpose::Shift);
  auto perm_stream = streams.make(StreamPurpose::Permutation);
  auto rot_stream = streams.make(StreamPurpose::Rotation);
  inst.shift = random_shift(dim, shift_stream);
  const auto sizes = std::holds_alternative<HybridRecipe>(recipe)
                         ? build_hybrid(fn, dim).sizes
                         : rotation_block_sizes(dim);
  inst.blocks = random_blocks(sizes, perm_stream, rot_stream);
  inst.rotation = assemble_rotation(inst.blocks);
  return inst;
}

[[noreturn]] void corrupt(const Instance& inst, const std::string& what) {
  throw Error(ErrorCode::CorruptInstance, "instance of function " + describe(inst.function) +
                                              ": " + what);
}

}  // namespace

std::vector<std::size_t> RotationBlocks::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) out.push_back(b.rows());
  return out;
}

std::vector<std::vector<double>> Instance::component_optima() const {
  std::vector<std::vector<double>> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.shift);
  return out;
}

bool operator==(const Instance& a, const Instance& b) {
  return a.function == b.function && a.dim == b.dim && a.seed == b.seed &&
         a.shift == b.shift && a.blocks == b.blocks && a.rotation == b.rotation &&
         a.components == b.components;
}

std::vector<std::size_t> rotation_block_sizes(std::size_t dim) {
  const std::size_t first = (dim + 2) / 3;
  const std::size_t rest = dim - first;
  const std::size_t second = (rest + 1) / 2;
  const std::size_t third = rest - second;
  std::vector<std::size_t> sizes;
  for (auto s : {first, second, third}) {
    if (s > 0) sizes.push_back(s);
  }
  return sizes;
}

std::optional<Matrix<double>> gram_schmidt(const Matrix<double>& raw) {
  if (raw.rows() != raw.cols()) {
    throw Error(ErrorCode::InvalidArgument, "gram_schmidt needs a square matrix");
  }
  const std::size_t n = raw.rows();
  Matrix<double> q = raw;
  std::vector<double> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t r = 0; r < n; ++r) v[r] = q(r, j);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        double dot = 0.0;
        for (std::size_t r = 0; r < n; ++r) dot += q(r, k) * v[r];
        for (std::size_t r = 0; r < n; ++r) v[r] -= dot * q(r, k);
      }
    }
    double norm = 0.0;
    for (double e : v) norm += e * e;
    norm = std::sqrt(norm);
    if (!(norm >= kRankTolerance)) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r) q(r, j) = v[r] / norm;
  }
  return q;
}

Matrix<double> random_orthogonal(std::size_t n, RandomStream& stream) {
  for (;;) {
    Matrix<double> raw(n, n);
    for (auto& e : raw.data()) e = stream.normal();
    if (auto q = gram_schmidt(raw)) return std::move(*q);
  }
}

std::vector<std::size_t> random_permutation(std::size_t n, RandomStream& stream) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(stream.below(i));
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

Matrix<double> assemble_rotation(const RotationBlocks& blocks) {
  const std::size_t dim = blocks.permutation.size();
  Matrix<double> r(dim, dim);
  std::size_t offset = 0;
  for (const auto& q : blocks.blocks) {
    const std::size_t m = q.rows();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        r(offset + i, blocks.permutation[offset + j]) = q(i, j);
      }
    }
    offset += m;
  }
  return r;
}

Instance generate_instance(FunctionId fn, std::size_t dim, std::uint64_t seed) {
  const std::size_t min_dim = min_dimension(fn);
  if (dim < min_dim) {
    throw Error(ErrorCode::DimensionTooSmall,
                "dimension too small: function " + describe(fn) + " needs D >= " +
                    std::to_string(min_dim) + ", got " + std::to_string(dim));
  }
  StreamFactory streams({seed, static_cast<std::uint64_t>(dim), static_cast<std::uint64_t>(fn)});
  return generate_impl(fn, dim, seed, streams);
}

bool is_permutation_of_iota(std::span<const std::size_t> perm) {
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

void validate_instance(const Instance& inst) {
  if (inst.dim < SuiteConstants::min_dim) corrupt(inst, "dimension below 2");
  if (inst.shift.size() != inst.dim) corrupt(inst, "shift length differs from dimension");
  for (double v : inst.shift) {
    if (!std::isfinite(v)) corrupt(inst, "non-finite shift coordinate");
  }

  const auto& recipe = lookup(inst.function).recipe;
  if (const auto* comp = std::get_if<CompositionRecipe>(&recipe)) {
    if (inst.components.size() != comp->components.size()) {
      corrupt(inst, "wrong number of components");
    }
    for (std::size_t k = 0; k < inst.components.size(); ++k) {
      const auto& sub = inst.components[k];
      if (sub.function != comp->components[k] || sub.dim != inst.dim) {
        corrupt(inst, "component " + std::to_string(k) + " does not match the recipe");
      }
      validate_instance(sub);
    }
    if (inst.components.size() > 2 &&
        std::any_of(inst.components[2].shift.begin(), inst.components[2].shift.end(),
                    [](double v) { return v != 0.0; })) {
      corrupt(inst, "third component optimum is not the origin");
    }
    if (inst.shift != inst.components.front().shift) {
      corrupt(inst, "shift differs from the first component optimum");
    }
    return;
  }

  if (!inst.components.empty()) corrupt(inst, "unexpected components");
  if (inst.blocks.permutation.size() != inst.dim ||
      !is_permutation_of_iota(inst.blocks.permutation)) {
    corrupt(inst, "permutation is not a bijection on 0..D-1");
  }
  const auto expected = std::holds_alternative<HybridRecipe>(recipe)
                            ? build_hybrid(inst.function, inst.dim).sizes
                            : rotation_block_sizes(inst.dim);
  if (inst.blocks.sizes() != expected) corrupt(inst, "rotation block sizes do not match");
  for (const auto& q : inst.blocks.blocks) {
    if (q.rows() != q.cols()) corrupt(inst, "rotation block is not square");
    const double residual = orthonormality_residual(q);
    if (!(residual < kOrthonormalityGate)) {
      corrupt(inst, "rotation block not orthonormal (residual " + std::to_string(residual) + ")");
    }
  }
  if (inst.rotation != assemble_rotation(inst.blocks)) {
    corrupt(inst, "dense rotation does not match its blocks");
  }
}

std::vector<double> apply_transform(std::span<const double> x, const Instance& inst,
                                    const TransformSpec& spec) {
  if (x.size() != inst.dim || inst.shift.size() != inst.dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "point has " + std::to_string(x.size()) + " coordinates, instance has D = " +
                    std::to_string(inst.dim));
  }
  if (spec.rotate && inst.rotation.rows() != inst.dim) {
    throw Error(ErrorCode::InvalidArgument, "instance carries no dense rotation");
  }
  std::vector<double> scratch(x.size());
  std::vector<double> z(x.size());
  transform_point<double>(x, inst.shift, spec.rotate ? &inst.rotation : nullptr, spec, scratch, z);
  return z;
}

}  // namespace robench
