#pragma once

// Basic function kernels g(z). Each takes the already transformed vector z
// and returns the value without the f_opt bias. Dimension is z.size().

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>

#include "robench/catalog.hpp"

namespace robench::kernels {

struct Constants {
  static constexpr double weierstrass_a = 0.5;
  static constexpr double weierstrass_b = 3.0;
  static constexpr int weierstrass_kmax = 20;
  static constexpr double schwefel_shift = 420.9687462275036;
  static constexpr double schwefel_magic = 418.9829;
  static constexpr int katsuura_terms = 32;
  static constexpr double lunacek_mu1 = 2.5;
  static constexpr double lunacek_mu2 = -2.5;
  static constexpr double lunacek_d = 1.0;
  static constexpr double lunacek_s = 0.9;
  static constexpr double condition = 1e6;
  static constexpr double sharp_valley_weight = 100.0;
};

template <class T>
inline constexpr T two_pi = static_cast<T>(2.0 * std::numbers::pi);

template <class T>
T sphere(std::span<const T> z) noexcept {
  T s{};
  for (const T v : z) s += v * v;
  return s;
}

template <class T>
T ellipsoid(std::span<const T> z) noexcept {
  T s{};
  for (std::size_t i = 0; i < z.size(); ++i) s += static_cast<T>(i + 1) * z[i] * z[i];
  return s;
}

// (i-1)/(D-1) is taken as 0 when D == 1 (single-variable hybrid chunks).
template <class T>
T elliptic(std::span<const T> z) noexcept {
  const std::size_t n = z.size();
  if (n == 1) return z[0] * z[0];
  const T cond = static_cast<T>(Constants::condition);
  const T denom = static_cast<T>(n - 1);
  T s{};
  for (std::size_t i = 0; i < n; ++i) {
    s += std::pow(cond, static_cast<T>(i) / denom) * z[i] * z[i];
  }
  return s;
}

template <class T>
T discus(std::span<const T> z) noexcept {
  T rest{};
  for (std::size_t i = 1; i < z.size(); ++i) rest += z[i] * z[i];
  return static_cast<T>(Constants::condition) * z[0] * z[0] + rest;
}

template <class T>
T cigar(std::span<const T> z) noexcept {
  T rest{};
  for (std::size_t i = 1; i < z.size(); ++i) rest += z[i] * z[i];
  return z[0] * z[0] + static_cast<T>(Constants::condition) * rest;
}

template <class T>
T powers(std::span<const T> z) noexcept {
  const std::size_t n = z.size();
  const T denom = n > 1 ? static_cast<T>(n - 1) : T{1};
  T s{};
  for (std::size_t i = 0; i < n; ++i) {
    s += std::pow(std::abs(z[i]), T{2} + T{4} * static_cast<T>(i) / denom);
  }
  return std::sqrt(s);
}

template <class T>
T sharp_valley(std::span<const T> z) noexcept {
  T rest{};
  for (std::size_t i = 1; i < z.size(); ++i) rest += z[i] * z[i];
  return z[0] * z[0] + static_cast<T>(Constants::sharp_valley_weight) * std::sqrt(rest);
}

template <class T>
T step(std::span<const T> z) noexcept {
  T s{};
  for (const T v : z) {
    const T r = std::floor(v + T{0.5});
    s += r * r;
  }
  return s;
}

namespace detail {

template <class T>
struct WeierstrassTable {
  std::array<T, Constants::weierstrass_kmax + 1> amplitude{};
  std::array<T, Constants::weierstrass_kmax + 1> frequency{};  // 2*pi*b^k
  T offset{};  // sum_k a^k cos(2 pi b^k * 0.5)

  WeierstrassTable() {
    double a = 1.0;
    double b = 1.0;
    for (int k = 0; k <= Constants::weierstrass_kmax; ++k) {
      amplitude[k] = static_cast<T>(a);
      frequency[k] = static_cast<T>(2.0 * std::numbers::pi * b);
      a *= Constants::weierstrass_a;
      b *= Constants::weierstrass_b;
    }
    offset = series(T{0.5});
  }

  T series(T u) const noexcept {
    T s{};
    for (std::size_t k = 0; k < amplitude.size(); ++k) {
      s += amplitude[k] * std::cos(frequency[k] * u);
    }
    return s;
  }
};

template <class T>
const WeierstrassTable<T>& weierstrass_table() {
  static const WeierstrassTable<T> table;
  return table;
}

}  // namespace detail

/// Each coordinate contributes series(z_i + 0.5) - series(0.5), so z = 0
/// gives exactly zero.
template <class T>
T weierstrass(std::span<const T> z) noexcept {
  const auto& table = detail::weierstrass_table<T>();
  T s{};
  for (const T v : z) s += table.series(v + T{0.5}) - table.offset;
  return s;
}

template <class T>
T griewank(std::span<const T> z) noexcept {
  T sum{};
  T prod{1};
  for (std::size_t i = 0; i < z.size(); ++i) {
    sum += z[i] * z[i];
    prod *= std::cos(z[i] / std::sqrt(static_cast<T>(i + 1)));
  }
  return (sum / T{4000} - prod) + T{1};
}

template <class T>
T rastrigin(std::span<const T> z) noexcept {
  T s{};
  for (const T v : z) s += v * v - T{10} * std::cos(two_pi<T> * v) + T{10};
  return s;
}

template <class T>
T schaffers_f7(std::span<const T> z) noexcept {
  const std::size_t n = z.size();
  if (n < 2) return T{};
  T s{};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const T w = std::sqrt(z[i] * z[i] + z[i + 1] * z[i + 1]);
    const T t = std::sin(T{50} * std::pow(w, T{0.2}));
    s += (T{1} + t * t) * std::sqrt(w);
  }
  s /= static_cast<T>(n - 1);
  return s * s;
}

template <class T>
T g2_rosenbrock_pair(T x, T y) noexcept {
  const T a = x * x - y;
  const T b = x - T{1};
  return T{100} * a * a + b * b;
}

template <class T>
T g3_griewank_1d(T x) noexcept {
  return (x * x / T{4000} - std::cos(x)) + T{1};
}

template <class T>
T grie_rosen(std::span<const T> z) noexcept {
  const std::size_t n = z.size();
  T s{};
  for (std::size_t i = 0; i + 1 < n; ++i) s += g3_griewank_1d(g2_rosenbrock_pair(z[i], z[i + 1]));
  return s + g3_griewank_1d(g2_rosenbrock_pair(z[n - 1], z[0]));
}

template <class T>
T rosenbrock(std::span<const T> z) noexcept {
  T s{};
  for (std::size_t i = 0; i + 1 < z.size(); ++i) s += g2_rosenbrock_pair(z[i], z[i + 1]);
  return s;
}

/// Floored modulo; the callers only pass positive arguments.
template <class T>
T bmod500(T a) noexcept {
  const T m = std::fmod(a, T{500});
  return m < T{0} ? m + T{500} : m;
}

template <class T>
T schwefel_g1(T w, std::size_t dim) noexcept {
  const T d = static_cast<T>(dim);
  if (std::abs(w) <= T{500}) return w * std::sin(std::sqrt(std::abs(w)));
  if (w > T{500}) {
    const T r = T{500} - bmod500(w);
    const T t = w - T{500};
    return r * std::sin(std::sqrt(r)) - t * t / (T{10000} * d);
  }
  const T m = bmod500(-w);
  const T t = w + T{500};
  return (m - T{500}) * std::sin(std::sqrt(T{500} - m)) - t * t / (T{10000} * d);
}

template <class T>
T schwefel(std::span<const T> z) noexcept {
  const std::size_t n = z.size();
  const T shift = static_cast<T>(Constants::schwefel_shift);
  T s{};
  for (const T v : z) s += schwefel_g1(v + shift, n);
  return static_cast<T>(Constants::schwefel_magic) * static_cast<T>(n) - s;
}

/// Product form evaluated as exp(sum of logs); the D-fold product
/// overflows at large D otherwise.
template <class T>
T katsuura(std::span<const T> z) noexcept {
  const std::size_t n = z.size();
  const T d = static_cast<T>(n);
  const T exponent = T{10} / std::pow(d, T{1.2});
  const T prefactor = T{10} / (d * d);
  T log_sum{};
  for (std::size_t i = 0; i < n; ++i) {
    T t{};
    T p{1};
    for (int j = 1; j <= Constants::katsuura_terms; ++j) {
      p *= T{2};
      const T v = p * z[i];
      t += std::abs(v - std::round(v)) / p;
    }
    log_sum += exponent * std::log1p(static_cast<T>(i + 1) * t);
  }
  return prefactor * std::exp(log_sum) - prefactor;
}

template <class T>
T lunacek(std::span<const T> z) noexcept {
  const T mu1 = static_cast<T>(Constants::lunacek_mu1);
  const T mu2 = static_cast<T>(Constants::lunacek_mu2);
  const T d = static_cast<T>(z.size());
  T s1{};
  T s2{};
  T c{};
  for (const T v : z) {
    s1 += (v - mu1) * (v - mu1);
    s2 += (v - mu2) * (v - mu2);
    c += std::cos(two_pi<T> * (v - mu1));
  }
  const T second = static_cast<T>(Constants::lunacek_d) * d +
                   static_cast<T>(Constants::lunacek_s) * s2;
  return std::min(s1, second) + T{10} * (d - c);
}

/// 20 - 20 exp(-0.2 sqrt(m2)) and e - exp(mc) are written with expm1 so the
/// optimum evaluates to exactly zero.
template <class T>
T ackley(std::span<const T> z) noexcept {
  const T d = static_cast<T>(z.size());
  T sq{};
  T cs{};
  for (const T v : z) {
    sq += v * v;
    cs += std::cos(two_pi<T> * v);
  }
  const T e = std::numbers::e_v<T>;
  return T{-20} * std::expm1(T{-0.2} * std::sqrt(sq / d)) - e * std::expm1(cs / d - T{1});
}

template <class T>
T happycat(std::span<const T> z) noexcept {
  const T d = static_cast<T>(z.size());
  T sq{};
  T sum{};
  for (const T v : z) {
    sq += v * v;
    sum += v;
  }
  return std::pow(std::abs(sq - d), T{0.25}) + (T{0.5} * sq + sum) / d + T{0.5};
}

template <class T>
T hgbat(std::span<const T> z) noexcept {
  const T d = static_cast<T>(z.size());
  T sq{};
  T sum{};
  for (const T v : z) {
    sq += v * v;
    sum += v;
  }
  return std::sqrt(std::abs(sq * sq - sum * sum)) + (T{0.5} * sq + sum) / d + T{0.5};
}

template <class T>
T g4_schaffer_f6_pair(T x, T y) noexcept {
  const T r2 = x * x + y * y;
  const T s = std::sin(std::sqrt(r2));
  const T den = T{1} + T{0.001} * r2;
  return (s * s - T{0.5}) / (den * den) + T{0.5};
}

template <class T>
T schaffers_f6(std::span<const T> z) noexcept {
  const std::size_t n = z.size();
  T s{};
  for (std::size_t i = 0; i + 1 < n; ++i) s += g4_schaffer_f6_pair(z[i], z[i + 1]);
  return s + g4_schaffer_f6_pair(z[n - 1], z[0]);
}

/// Unchecked dispatch used on the hot path. z must be non-empty.
template <class T>
T value(Kernel kernel, std::span<const T> z) noexcept {
  switch (kernel) {
    case Kernel::Sphere: return sphere(z);
    case Kernel::Ellipsoid: return ellipsoid(z);
    case Kernel::Elliptic: return elliptic(z);
    case Kernel::Discus: return discus(z);
    case Kernel::Cigar: return cigar(z);
    case Kernel::Powers: return powers(z);
    case Kernel::SharpValley: return sharp_valley(z);
    case Kernel::Step: return step(z);
    case Kernel::Weierstrass: return weierstrass(z);
    case Kernel::Griewank: return griewank(z);
    case Kernel::Rastrigin: return rastrigin(z);
    case Kernel::SchaffersF7: return schaffers_f7(z);
    case Kernel::GrieRosen: return grie_rosen(z);
    case Kernel::Rosenbrock: return rosenbrock(z);
    case Kernel::Schwefel: return schwefel(z);
    case Kernel::Katsuura: return katsuura(z);
    case Kernel::Lunacek: return lunacek(z);
    case Kernel::Ackley: return ackley(z);
    case Kernel::HappyCat: return happycat(z);
    case Kernel::HGBat: return hgbat(z);
    case Kernel::SchaffersF6: return schaffers_f6(z);
  }
  return T{};
}

/// Checked entry point: throws NonFiniteInput for inf/nan coordinates and
/// DimensionTooSmall for an empty z (or D < 2 for Schaffer's F7).
double evaluate(Kernel kernel, std::span<const double> z);
float evaluate(Kernel kernel, std::span<const float> z);

/// z-space point where the kernel attains zero: 0, 1 (rosenbrock-type),
/// -1 (happycat/hgbat) or mu1 (lunacek).
double canonical_optimum(Kernel kernel) noexcept;

}  // namespace robench::kernels
