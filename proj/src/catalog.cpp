#include "robench/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "robench/error.hpp"

namespace robench {
namespace {

using F = FunctionId;

constexpr BasicRecipe basic(Kernel k, double scale, bool rotate = true,
                            double pre = 0.0, double post = 0.0) {
  return BasicRecipe{k, TransformSpec{scale, rotate, pre, post}};
}

// Hybrid recipes.
constexpr std::array<F, 3> kH1{F::Schwefel, F::Rastrigin, F::Elliptic};
constexpr std::array<F, 3> kH2{F::Cigar, F::HGBat, F::Rastrigin};
constexpr std::array<F, 4> kH3{F::Griewank, F::Weierstrass, F::Rosenbrock,
                               F::SchaffersF6};
constexpr std::array<F, 4> kH4{F::HGBat, F::Discus, F::GrieRosen, F::Rastrigin};
constexpr std::array<F, 5> kH5{F::SchaffersF6, F::HGBat, F::Rosenbrock,
                               F::Schwefel, F::Elliptic};
constexpr std::array<F, 5> kH6{F::Katsuura, F::HappyCat, F::GrieRosen,
                               F::Schwefel, F::Ackley};
constexpr std::array<int, 3> kP3{30, 30, 40};
constexpr std::array<int, 4> kP4{20, 20, 30, 30};
constexpr std::array<int, 5> kP5{10, 20, 20, 20, 30};

// Composition recipes.
constexpr std::array<double, 3> kBias3{0, 100, 200};
constexpr std::array<double, 5> kBias5{0, 100, 200, 300, 400};
constexpr std::array<double, 3> kOnes3{1, 1, 1};

constexpr std::array<F, 5> kC1{F::Rosenbrock, F::Elliptic, F::Cigar, F::Discus,
                               F::Elliptic};
constexpr std::array<double, 5> kC1Sigma{10, 20, 30, 40, 50};
constexpr std::array<double, 5> kC1Lambda{1e-10, 1e-6, 1e-26, 1e-6, 1e-6};

constexpr std::array<F, 3> kC2{F::Schwefel, F::Rastrigin, F::HGBat};
constexpr std::array<double, 3> kC2Sigma{15, 15, 15};

constexpr std::array<F, 3> kC3{F::Schwefel, F::Rastrigin, F::Elliptic};
constexpr std::array<double, 3> kC3Sigma{20, 50, 40};
constexpr std::array<double, 3> kC3Lambda{0.25, 1, 1e-7};

constexpr std::array<F, 5> kC4{F::Schwefel, F::HappyCat, F::Elliptic,
                               F::Weierstrass, F::Griewank};
constexpr std::array<double, 5> kC4Sigma{20, 15, 10, 10, 40};
constexpr std::array<double, 5> kC4Lambda{2.5e-2, 0.1, 1e-8, 0.25, 1};

// Listed order; lambda[k] pairs with the k-th listed component.
constexpr std::array<F, 5> kC5{F::HGBat, F::Rastrigin, F::Schwefel,
                               F::Weierstrass, F::Elliptic};
constexpr std::array<double, 5> kC5Sigma{15, 15, 15, 15, 15};
constexpr std::array<double, 5> kC5Lambda{10, 10, 2.5, 2.5, 1e-6};

constexpr std::array<F, 5> kC6{F::GrieRosen, F::HappyCat, F::Schwefel,
                               F::SchaffersF6, F::Elliptic};
constexpr std::array<double, 5> kC6Sigma{10, 20, 30, 40, 50};
constexpr std::array<double, 5> kC6Lambda{2.5, 10, 2.5, 5e-4, 1e-6};

constexpr std::array<F, 3> kC7{F::Hybrid1, F::Hybrid2, F::Hybrid3};
constexpr std::array<F, 3> kC8{F::Hybrid4, F::Hybrid5, F::Hybrid6};
constexpr std::array<double, 3> kC78Sigma{10, 30, 50};

constexpr std::string_view kEasy = "optimum easy to track";
constexpr std::string_view kHard = "optimum hard to track";
constexpr std::string_view kAdequate = "adequate global structure";
constexpr std::string_view kWeak = "weak global structure";
constexpr std::string_view kMixed = "different properties per variable subcomponent";
constexpr std::string_view kBlend = "resembles the nearest component near its optimum";

using C = Category;
using K = Kernel;

const std::array<CatalogEntry, kFunctionCount> kCatalog{{
    {F::Sphere, "SPHERE", "Rotated Sphere", C::Unimodal, kEasy, basic(K::Sphere, 1)},
    {F::Ellipsoid, "ELLIPSOID", "Rotated Ellipsoid", C::Unimodal, kEasy,
     basic(K::Ellipsoid, 1)},
    {F::Elliptic, "ELLIPTIC", "Rotated Elliptic", C::Unimodal, kHard,
     basic(K::Elliptic, 1)},
    {F::Discus, "DISCUS", "Rotated Discus", C::Unimodal, kHard, basic(K::Discus, 1)},
    {F::Cigar, "CIGAR", "Rotated Bent Cigar", C::Unimodal, kHard, basic(K::Cigar, 1)},
    {F::Powers, "POWERS", "Rotated Different Powers", C::Unimodal, kHard,
     basic(K::Powers, 0.01)},
    {F::SharpValley, "SHARPV", "Rotated Sharp Valley", C::Unimodal, kHard,
     basic(K::SharpValley, 1)},
    {F::Step, "STEP", "Rotated Step", C::BasicMultimodal, kAdequate, basic(K::Step, 1)},
    {F::Weierstrass, "WEIERSTRASS", "Rotated Weierstrass", C::BasicMultimodal,
     kAdequate, basic(K::Weierstrass, 0.005)},
    {F::Griewank, "GRIEWANK", "Rotated Griewank", C::BasicMultimodal, kAdequate,
     basic(K::Griewank, 6)},
    {F::RastriginUnrotated, "RARSTRIGIN_U", "Rastrigin", C::BasicMultimodal,
     kAdequate, basic(K::Rastrigin, 0.0512, false)},
    {F::Rastrigin, "RARSTRIGIN", "Rotated Rastrigin", C::BasicMultimodal, kAdequate,
     basic(K::Rastrigin, 0.0512)},
    {F::SchaffersF7, "SCHAFFERSF7", "Rotated Schaffer's F7", C::BasicMultimodal,
     kAdequate, basic(K::SchaffersF7, 1)},
    {F::GrieRosen, "GRIE_ROSEN", "Rotated Expanded Griewank plus Rosenbrock",
     C::BasicMultimodal, kAdequate, basic(K::GrieRosen, 0.05, true, 0.0, 1.0)},
    {F::Rosenbrock, "ROSENBROCK", "Rotated Rosenbrock", C::BasicMultimodal, kWeak,
     basic(K::Rosenbrock, 0.02048, true, 0.0, 1.0)},
    {F::SchwefelUnrotated, "SCHWEFEL_U", "Modified Schwefel", C::BasicMultimodal,
     kWeak, basic(K::Schwefel, 10, false)},
    {F::Schwefel, "SCHWEFEL", "Rotated Modified Schwefel", C::BasicMultimodal, kWeak,
     basic(K::Schwefel, 10)},
    {F::Katsuura, "KATSUURA", "Rotated Katsuura", C::BasicMultimodal, kWeak,
     basic(K::Katsuura, 0.05)},
    {F::Lunacek, "LUNACEK", "Rotated Lunacek bi-Rastrigin", C::BasicMultimodal,
     kWeak, basic(K::Lunacek, 0.1, true, 2.5, 0.0)},
    {F::Ackley, "ACKLEY", "Rotated Ackley", C::BasicMultimodal, kWeak,
     basic(K::Ackley, 1)},
    {F::HappyCat, "HAPPYCAT", "Rotated HappyCat", C::BasicMultimodal, kWeak,
     basic(K::HappyCat, 0.05, true, 0.0, -1.0)},
    {F::HGBat, "HGBAT", "Rotated HGBat", C::BasicMultimodal, kWeak,
     basic(K::HGBat, 0.05, true, 0.0, -1.0)},
    {F::SchaffersF6, "SCHAFFERSF6", "Rotated Expanded Schaffer's F6",
     C::BasicMultimodal, kWeak, basic(K::SchaffersF6, 1)},
    {F::Hybrid1, "HYBRID1", "Hybrid Function 1", C::Hybrid, kMixed,
     HybridRecipe{kH1, kP3}},
    {F::Hybrid2, "HYBRID2", "Hybrid Function 2", C::Hybrid, kMixed,
     HybridRecipe{kH2, kP3}},
    {F::Hybrid3, "HYBRID3", "Hybrid Function 3", C::Hybrid, kMixed,
     HybridRecipe{kH3, kP4}},
    {F::Hybrid4, "HYBRID4", "Hybrid Function 4", C::Hybrid, kMixed,
     HybridRecipe{kH4, kP4}},
    {F::Hybrid5, "HYBRID5", "Hybrid Function 5", C::Hybrid, kMixed,
     HybridRecipe{kH5, kP5}},
    {F::Hybrid6, "HYBRID6", "Hybrid Function 6", C::Hybrid, kMixed,
     HybridRecipe{kH6, kP5}},
    {F::Composition1, "COMPOSITION1", "Composition Function 1", C::Composition,
     kBlend, CompositionRecipe{kC1, kC1Sigma, kC1Lambda, kBias5}},
    {F::Composition2, "COMPOSITION2", "Composition Function 2", C::Composition,
     kBlend, CompositionRecipe{kC2, kC2Sigma, kOnes3, kBias3}},
    {F::Composition3, "COMPOSITION3", "Composition Function 3", C::Composition,
     kBlend, CompositionRecipe{kC3, kC3Sigma, kC3Lambda, kBias3}},
    {F::Composition4, "COMPOSITION4", "Composition Function 4", C::Composition,
     kBlend, CompositionRecipe{kC4, kC4Sigma, kC4Lambda, kBias5}},
    {F::Composition5, "COMPOSITION5", "Composition Function 5", C::Composition,
     kBlend, CompositionRecipe{kC5, kC5Sigma, kC5Lambda, kBias5}},
    {F::Composition6, "COMPOSITION6", "Composition Function 6", C::Composition,
     kBlend, CompositionRecipe{kC6, kC6Sigma, kC6Lambda, kBias5}},
    {F::Composition7, "COMPOSITION7", "Composition Function 7", C::Composition,
     kBlend, CompositionRecipe{kC7, kC78Sigma, kOnes3, kBias3}},
    {F::Composition8, "COMPOSITION8", "Composition Function 8", C::Composition,
     kBlend, CompositionRecipe{kC8, kC78Sigma, kOnes3, kBias3}},
}};

constexpr std::array<FunctionId, kFunctionCount> make_all() {
  std::array<FunctionId, kFunctionCount> out{};
  for (std::size_t i = 0; i < kFunctionCount; ++i) {
    out[i] = static_cast<FunctionId>(i);
  }
  return out;
}

constexpr std::array<FunctionId, kFunctionCount> kAll = make_all();

constexpr std::array<FunctionId, 30> kCec14{
    F::Discus,      F::Cigar,        F::Powers,       F::Weierstrass,
    F::Griewank,    F::RastriginUnrotated, F::Rastrigin, F::GrieRosen,
    F::Rosenbrock,  F::SchwefelUnrotated,  F::Schwefel,  F::Katsuura,
    F::Ackley,      F::HappyCat,     F::HGBat,        F::SchaffersF6,
    F::Hybrid1,     F::Hybrid2,      F::Hybrid3,      F::Hybrid4,
    F::Hybrid5,     F::Hybrid6,      F::Composition1, F::Composition2,
    F::Composition3, F::Composition4, F::Composition5, F::Composition6,
    F::Composition7, F::Composition8,
};

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

}  // namespace

const CatalogEntry& lookup(int id) {
  if (id < 0 || id >= static_cast<int>(kFunctionCount)) {
    throw Error(ErrorCode::UnknownFunction,
                "unknown function id " + std::to_string(id) + " (valid: 0..36)");
  }
  return kCatalog[static_cast<std::size_t>(id)];
}

const CatalogEntry& lookup(FunctionId id) noexcept {
  return kCatalog[static_cast<std::size_t>(id)];
}

FunctionId function_from_int(int id) { return lookup(id).id; }

FunctionId parse_function(std::string_view text) {
  int value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (auto [ptr, ec] = std::from_chars(first, last, value);
      ec == std::errc{} && ptr == last) {
    return function_from_int(value);
  }
  const std::string key = upper(text);
  for (const auto& entry : kCatalog) {
    if (entry.name == key) return entry.id;
  }
  // Correct spellings of RARSTRIGIN and RARSTRIGIN_U.
  if (key == "RASTRIGIN") return F::Rastrigin;
  if (key == "RASTRIGIN_U") return F::RastriginUnrotated;
  throw Error(ErrorCode::UnknownFunction, "unknown function '" + std::string(text) + "'");
}

Category category_of(FunctionId id) noexcept { return lookup(id).category; }

bool is_basic(FunctionId id) noexcept {
  return std::holds_alternative<BasicRecipe>(lookup(id).recipe);
}
bool is_hybrid(FunctionId id) noexcept {
  return std::holds_alternative<HybridRecipe>(lookup(id).recipe);
}
bool is_composition(FunctionId id) noexcept {
  return std::holds_alternative<CompositionRecipe>(lookup(id).recipe);
}

std::size_t min_dimension(FunctionId id) noexcept {
  if (is_hybrid(id)) return SuiteConstants::hybrid_min_dim;
  if (const auto* comp = std::get_if<CompositionRecipe>(&lookup(id).recipe)) {
    std::size_t dim = SuiteConstants::min_dim;
    for (auto c : comp->components) dim = std::max(dim, min_dimension(c));
    return dim;
  }
  return SuiteConstants::min_dim;
}

std::string_view kernel_name(Kernel kernel) noexcept {
  switch (kernel) {
    case K::Sphere: return "sphere";
    case K::Ellipsoid: return "ellipsoid";
    case K::Elliptic: return "elliptic";
    case K::Discus: return "discus";
    case K::Cigar: return "cigar";
    case K::Powers: return "powers";
    case K::SharpValley: return "sharp_valley";
    case K::Step: return "step";
    case K::Weierstrass: return "weierstrass";
    case K::Griewank: return "griewank";
    case K::Rastrigin: return "rastrigin";
    case K::SchaffersF7: return "schaffers_f7";
    case K::GrieRosen: return "grie_rosen";
    case K::Rosenbrock: return "rosenbrock";
    case K::Schwefel: return "schwefel";
    case K::Katsuura: return "katsuura";
    case K::Lunacek: return "lunacek";
    case K::Ackley: return "ackley";
    case K::HappyCat: return "happycat";
    case K::HGBat: return "hgbat";
    case K::SchaffersF6: return "schaffers_f6";
  }
  return "?";
}

const std::array<FunctionId, kFunctionCount>& all_functions() noexcept { return kAll; }

std::span<const FunctionId> cec14_overlap() noexcept { return kCec14; }

}  // namespace robench
