#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "robench/transforms.hpp"

namespace robench::io {

inline constexpr std::string_view kInstanceMagic = "robench-instance";
inline constexpr int kInstanceVersion = 1;

/// Shortest text that parses back to the same value (17 / 9 significant
/// digits at most).
std::string format_number(double v);
std::string format_number(float v);

/// Strict full-token parse; throws ParseError.
double parse_double(std::string_view token);
float parse_float(std::string_view token);

/// Text instance format, see docs/formats.md.
std::string render_instance(const Instance& inst);
/// Throws ParseError on malformed text and CorruptInstance when the payload
/// fails validate_instance.
Instance parse_instance(std::string_view text);

void store_instance(const Instance& inst, const std::filesystem::path& path);
Instance load_instance(const std::filesystem::path& path);

/// Default file name for an instance, e.g. "f03_d10_s1.inst".
std::string instance_file_name(FunctionId fn, std::size_t dim, std::uint64_t seed);

/// Row-major points. Rows split on commas, spaces or tabs; blank lines and
/// '#' comments are skipped. Throws ParseError on ragged rows or bad tokens.
template <class T>
std::vector<T> parse_points(std::string_view text, std::size_t dim);
template <class T>
std::vector<T> read_points(const std::filesystem::path& path, std::size_t dim);

template <class T>
std::string render_points(std::span<const T> data, std::size_t dim);

/// One value per line.
template <class T>
std::string render_values(std::span<const T> values);
template <class T>
void write_values(std::span<const T> values, const std::filesystem::path& path);

struct Grid {
  FunctionId function = FunctionId::Sphere;
  std::uint64_t seed = 0;
  double lo = -100.0;
  double hi = 100.0;
  std::size_t steps = 0;
  std::vector<double> values;  // steps x steps, row i holds x2 = node(i)

  [[nodiscard]] double node(std::size_t i) const noexcept;
  [[nodiscard]] double at(std::size_t i, std::size_t j) const noexcept {
    return values[i * steps + j];
  }
};

std::string render_grid(const Grid& grid);
Grid parse_grid(std::string_view text);

/// Writes text to path; throws IoError.
void write_text(const std::filesystem::path& path, std::string_view text);
/// Reads a whole file; throws IoError.
std::string read_text(const std::filesystem::path& path);

}  // namespace robench::io
