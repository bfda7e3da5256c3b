#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace robench {

/// Catalog numbering 0..36. The numeric value is the public function id.
enum class FunctionId : std::uint8_t {
  Sphere = 0,
  Ellipsoid,
  Elliptic,
  Discus,
  Cigar,
  Powers,
  SharpValley,
  Step,
  Weierstrass,
  Griewank,
  RastriginUnrotated,
  Rastrigin,
  SchaffersF7,
  GrieRosen,
  Rosenbrock,
  SchwefelUnrotated,
  Schwefel,
  Katsuura,
  Lunacek,
  Ackley,
  HappyCat,
  HGBat,
  SchaffersF6,
  Hybrid1,
  Hybrid2,
  Hybrid3,
  Hybrid4,
  Hybrid5,
  Hybrid6,
  Composition1,
  Composition2,
  Composition3,
  Composition4,
  Composition5,
  Composition6,
  Composition7,
  Composition8,
};

inline constexpr std::size_t kFunctionCount = 37;

enum class Category { Unimodal, BasicMultimodal, Hybrid, Composition };

/// Kernels evaluated on an already transformed vector. Two catalog
/// entries share a kernel when they differ only in rotation.
enum class Kernel : std::uint8_t {
  Sphere,
  Ellipsoid,
  Elliptic,
  Discus,
  Cigar,
  Powers,
  SharpValley,
  Step,
  Weierstrass,
  Griewank,
  Rastrigin,
  SchaffersF7,
  GrieRosen,
  Rosenbrock,
  Schwefel,
  Katsuura,
  Lunacek,
  Ackley,
  HappyCat,
  HGBat,
  SchaffersF6,
};

/// z = R(scale * (x - x_opt) + pre_offset * 1) + post_offset * 1.
/// With rotate == false, R is the identity.
struct TransformSpec {
  double scale = 1.0;
  bool rotate = true;
  double pre_offset = 0.0;
  double post_offset = 0.0;

  friend bool operator==(const TransformSpec&, const TransformSpec&) = default;
};

struct SuiteConstants {
  static constexpr double search_lower = -100.0;
  static constexpr double search_upper = 100.0;
  static constexpr double shift_lower = -70.0;
  static constexpr double shift_upper = 70.0;
  static constexpr double f_opt = 100.0;
  /// Hybrid functions need at least this many variables.
  static constexpr std::size_t hybrid_min_dim = 10;
  static constexpr std::size_t min_dim = 2;
};

struct BasicRecipe {
  Kernel kernel;
  TransformSpec transform;
};

/// Percentages are integers so the ceiling split is exact.
struct HybridRecipe {
  std::span<const FunctionId> components;
  std::span<const int> percent;
};

struct CompositionRecipe {
  std::span<const FunctionId> components;
  std::span<const double> sigma;
  std::span<const double> lambda;
  std::span<const double> bias;
};

using Recipe = std::variant<BasicRecipe, HybridRecipe, CompositionRecipe>;

struct CatalogEntry {
  FunctionId id;
  std::string_view name;   // symbolic id, e.g. "SPHERE", "HYBRID1"
  std::string_view title;  // human readable
  Category category;
  std::string_view note;
  Recipe recipe;
};

/// Throws Error(UnknownFunction) outside 0..36.
const CatalogEntry& lookup(int id);
const CatalogEntry& lookup(FunctionId id) noexcept;

FunctionId function_from_int(int id);
/// Accepts a numeric id or a symbolic name (case-insensitive).
FunctionId parse_function(std::string_view text);

constexpr int to_int(FunctionId id) noexcept { return static_cast<int>(id); }

Category category_of(FunctionId id) noexcept;
bool is_basic(FunctionId id) noexcept;
bool is_hybrid(FunctionId id) noexcept;
bool is_composition(FunctionId id) noexcept;

/// Smallest dimension at which the function can be instantiated: 2 for
/// basic functions and compositions of basic functions, 10 for hybrids and
/// compositions built from hybrids.
std::size_t min_dimension(FunctionId id) noexcept;

std::string_view kernel_name(Kernel kernel) noexcept;

const std::array<FunctionId, kFunctionCount>& all_functions() noexcept;
/// The 30 functions shared with the CEC'14 suite, used by the throughput
/// protocol.
std::span<const FunctionId> cec14_overlap() noexcept;

}  // namespace robench
