#include "robench/io.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "robench/error.hpp"

namespace robench::io {
namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

template <class T>
std::string format_impl(T v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

template <class T>
T parse_impl(std::string_view token) {
  T v{};
  const char* first = token.data();
  const char* last = first + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  // nan/inf are rejected here; no file format carries them.
  if (res.ec != std::errc{} || res.ptr != last || token.empty() || !std::isfinite(v)) {
    parse_error("bad number '" + std::string(token) + "'");
  }
  return v;
}

bool is_delim(char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; }

/// Whitespace tokenizer over the instance format.
class Tokens {
 public:
  explicit Tokens(std::string_view text) : text_(text) {}

  std::string_view next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) parse_error("unexpected end of instance file");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  bool at_end() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_ >= text_.size();
  }

  void expect(std::string_view keyword) {
    const auto t = next();
    if (t != keyword) {
      parse_error("expected '" + std::string(keyword) + "', found '" + std::string(t) + "'");
    }
  }

  std::uint64_t unsigned_value() {
    const auto t = next();
    std::uint64_t v = 0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc{} || res.ptr != t.data() + t.size()) {
      parse_error("bad integer '" + std::string(t) + "'");
    }
    return v;
  }

  std::size_t count(std::size_t limit) {
    const auto v = unsigned_value();
    if (v > limit) parse_error("count " + std::to_string(v) + " out of range");
    return static_cast<std::size_t>(v);
  }

  double real() { return parse_impl<double>(next()); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

constexpr std::size_t kMaxDim = 1u << 16;

void render_row(std::ostringstream& os, std::span<const double> row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) os << ' ';
    os << format_number(row[i]);
  }
  os << '\n';
}

void render_body(std::ostringstream& os, const Instance& inst) {
  os << "function " << to_int(inst.function) << '\n';
  os << "dim " << inst.dim << '\n';
  os << "seed " << inst.seed << '\n';
  if (is_composition(inst.function)) {
    os << "components " << inst.components.size() << '\n';
    for (const auto& sub : inst.components) {
      render_body(os, sub);
    }
    os << "end\n";
    return;
  }
  os << "shift\n";
  render_row(os, inst.shift);
  os << "permutation\n";
  for (std::size_t i = 0; i < inst.blocks.permutation.size(); ++i) {
    if (i) os << ' ';
    os << inst.blocks.permutation[i];
  }
  os << '\n';
  os << "blocks " << inst.blocks.blocks.size() << '\n';
  for (const auto& q : inst.blocks.blocks) {
    os << "block " << q.rows() << '\n';
    for (std::size_t r = 0; r < q.rows(); ++r) render_row(os, q.row(r));
  }
  os << "end\n";
}

Instance parse_body(Tokens& in, int depth) {
  if (depth > 2) parse_error("components nested too deeply");
  Instance inst;
  in.expect("function");
  const auto id = in.unsigned_value();
  if (id >= kFunctionCount) parse_error("unknown function id " + std::to_string(id));
  inst.function = static_cast<FunctionId>(id);
  in.expect("dim");
  inst.dim = in.count(kMaxDim);
  in.expect("seed");
  inst.seed = in.unsigned_value();

  if (is_composition(inst.function)) {
    in.expect("components");
    const std::size_t n = in.count(16);
    for (std::size_t k = 0; k < n; ++k) inst.components.push_back(parse_body(in, depth + 1));
    in.expect("end");
    if (!inst.components.empty()) inst.shift = inst.components.front().shift;
    return inst;
  }

  in.expect("shift");
  inst.shift.resize(inst.dim);
  for (auto& v : inst.shift) v = in.real();
  in.expect("permutation");
  inst.blocks.permutation.resize(inst.dim);
  for (auto& p : inst.blocks.permutation) p = in.count(kMaxDim);
  in.expect("blocks");
  const std::size_t nblocks = in.count(inst.dim);
  std::size_t total = 0;
  for (std::size_t b = 0; b < nblocks; ++b) {
    in.expect("block");
    const std::size_t n = in.count(inst.dim);
    total += n;
    if (total > inst.dim) parse_error("rotation blocks exceed the dimension");
    Matrix<double> q(n, n);
    for (auto& v : q.data()) v = in.real();
    inst.blocks.blocks.push_back(std::move(q));
  }
  in.expect("end");
  if (total != inst.dim) parse_error("rotation blocks do not cover the dimension");
  if (!is_permutation_of_iota(inst.blocks.permutation)) {
    throw Error(ErrorCode::CorruptInstance, "permutation is not a bijection on 0..D-1");
  }
  inst.rotation = assemble_rotation(inst.blocks);
  return inst;
}

}  // namespace

std::string format_number(double v) { return format_impl(v); }
std::string format_number(float v) { return format_impl(v); }

double parse_double(std::string_view token) { return parse_impl<double>(token); }
float parse_float(std::string_view token) { return parse_impl<float>(token); }

std::string render_instance(const Instance& inst) {
  std::ostringstream os;
  os << kInstanceMagic << ' ' << kInstanceVersion << '\n';
  render_body(os, inst);
  return os.str();
}

Instance parse_instance(std::string_view text) {
  Tokens in(text);
  in.expect(kInstanceMagic);
  const auto version = in.unsigned_value();
  if (version != kInstanceVersion) {
    parse_error("unsupported instance format version " + std::to_string(version));
  }
  Instance inst = parse_body(in, 0);
  if (!in.at_end()) parse_error("trailing data after instance");
  validate_instance(inst);
  return inst;
}

void store_instance(const Instance& inst, const std::filesystem::path& path) {
  write_text(path, render_instance(inst));
}

Instance load_instance(const std::filesystem::path& path) {
  return parse_instance(read_text(path));
}

std::string instance_file_name(FunctionId fn, std::size_t dim, std::uint64_t seed) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "f%02d_d%zu_s%llu.inst", to_int(fn), dim,
                static_cast<unsigned long long>(seed));
  return buf;
}

template <class T>
std::vector<T> parse_points(std::string_view text, std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "dim must be positive");
  std::vector<T> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::size_t cols = 0;
    std::size_t i = 0;
    while (true) {
      while (i < line.size() && is_delim(line[i])) ++i;
      if (i >= line.size()) break;
      const std::size_t start = i;
      while (i < line.size() && !is_delim(line[i])) ++i;
      const auto token = line.substr(start, i - start);
      try {
        out.push_back(parse_impl<T>(token));
      } catch (const Error&) {
        parse_error("line " + std::to_string(line_no) + ": bad number '" + std::string(token) +
                    "'");
      }
      ++cols;
    }
    if (cols != 0 && cols != dim) {
      parse_error("line " + std::to_string(line_no) + ": expected " + std::to_string(dim) +
                  " columns, found " + std::to_string(cols));
    }
  }
  return out;
}

template <class T>
std::vector<T> read_points(const std::filesystem::path& path, std::size_t dim) {
  return parse_points<T>(read_text(path), dim);
}

template <class T>
std::string render_points(std::span<const T> data, std::size_t dim) {
  std::string out;
  for (std::size_t i = 0; i < data.size(); ++i) {
    out += format_number(data[i]);
    out += (i + 1) % dim == 0 ? '\n' : ',';
  }
  return out;
}

template <class T>
std::string render_values(std::span<const T> values) {
  std::string out;
  for (T v : values) {
    out += format_number(v);
    out += '\n';
  }
  return out;
}

template <class T>
void write_values(std::span<const T> values, const std::filesystem::path& path) {
  write_text(path, render_values(values));
}

template std::vector<double> parse_points<double>(std::string_view, std::size_t);
template std::vector<float> parse_points<float>(std::string_view, std::size_t);
template std::vector<double> read_points<double>(const std::filesystem::path&, std::size_t);
template std::vector<float> read_points<float>(const std::filesystem::path&, std::size_t);
template std::string render_points<double>(std::span<const double>, std::size_t);
template std::string render_points<float>(std::span<const float>, std::size_t);
template std::string render_values<double>(std::span<const double>);
template std::string render_values<float>(std::span<const float>);
template void write_values<double>(std::span<const double>, const std::filesystem::path&);
template void write_values<float>(std::span<const float>, const std::filesystem::path&);

double Grid::node(std::size_t i) const noexcept {
  if (steps < 2) return lo;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

std::string render_grid(const Grid& grid) {
  std::ostringstream os;
  os << "# robench-grid 1\n";
  os << "# function " << to_int(grid.function) << '\n';
  os << "# seed " << grid.seed << '\n';
  os << "# range " << format_number(grid.lo) << ':' << format_number(grid.hi) << '\n';
  os << "# steps " << grid.steps << '\n';
  os << "# row i: x2 = node(i), column j: x1 = node(j), node(k) = lo + (hi - lo) k / (steps - 1)\n";
  for (std::size_t i = 0; i < grid.steps; ++i) {
    for (std::size_t j = 0; j < grid.steps; ++j) {
      if (j) os << ',';
      os << format_number(grid.at(i, j));
    }
    os << '\n';
  }
  return os.str();
}

Grid parse_grid(std::string_view text) {
  Grid grid;
  bool have_steps = false;
  std::string body;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (line.rfind("# ", 0) != 0) {
      body += line;
      body += '\n';
      continue;
    }
    std::istringstream hs(line.substr(2));
    std::string key;
    hs >> key;
    if (key == "function") {
      int id = -1;
      hs >> id;
      grid.function = function_from_int(id);
    } else if (key == "seed") {
      hs >> grid.seed;
    } else if (key == "range") {
      std::string range;
      hs >> range;
      const auto colon = range.find(':');
      if (colon == std::string::npos) parse_error("bad grid range '" + range + "'");
      grid.lo = parse_double(std::string_view(range).substr(0, colon));
      grid.hi = parse_double(std::string_view(range).substr(colon + 1));
    } else if (key == "steps") {
      hs >> grid.steps;
      have_steps = !hs.fail() && grid.steps > 0;
    }
  }
  if (!have_steps) parse_error("grid header lacks steps");
  grid.values = parse_points<double>(body, grid.steps);
  if (grid.values.size() != grid.steps * grid.steps) parse_error("grid is not steps x steps");
  return grid;
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
  os.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!os) throw Error(ErrorCode::IoError, "write to '" + path.string() + "' failed");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace robench::io
