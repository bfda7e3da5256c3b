#include <cstring>
#include <limits>

#include "doctest.h"
#include "robench/error.hpp"
#include "robench/io.hpp"
#include "support.hpp"

using namespace robench;

namespace {

ErrorCode parse_code(std::string_view text) {
  try {
    (void)io::parse_instance(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

template <class T>
ErrorCode points_code(std::string_view text, std::size_t dim) {
  try {
    (void)io::parse_points<T>(text, dim);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("instance round trip for every function") {
  for (auto fn : all_functions()) {
    CAPTURE(to_int(fn));
    const auto inst = generate_instance(fn, 10, 1);
    const auto text = io::render_instance(inst);
    const auto back = io::parse_instance(text);
    CHECK(back == inst);
    CHECK(io::render_instance(back) == text);
  }
}

TEST_CASE("instance files on disk") {
  const auto dir = support::temp_dir("io_files");
  const auto inst = generate_instance(FunctionId::Composition6, 12, 3);
  const auto path = dir / io::instance_file_name(inst.function, 12, 3);
  CHECK(path.filename() == "f34_d12_s3.inst");
  io::store_instance(inst, path);
  CHECK(io::load_instance(path) == inst);
  try {
    (void)io::load_instance(dir / "missing.inst");
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("malformed instance text") {
  const auto text = io::render_instance(generate_instance(FunctionId::Rastrigin, 10, 2));
  CHECK(parse_code(text.substr(0, text.size() / 2)) == ErrorCode::ParseError);
  CHECK(parse_code("") == ErrorCode::ParseError);
  CHECK(parse_code("not-an-instance 1") == ErrorCode::ParseError);
  auto bumped = text;
  bumped.replace(bumped.find(" 1\n"), 3, " 9\n");
  CHECK(parse_code(bumped) == ErrorCode::ParseError);
  CHECK(parse_code(text + " extra") == ErrorCode::ParseError);
  auto bad_token = text;
  const auto shift_at = bad_token.find("shift") + 6;
  bad_token.replace(shift_at, 1, "x");
  CHECK(parse_code(bad_token) == ErrorCode::ParseError);
}

TEST_CASE("perturbed rotation entry is rejected as corrupt") {
  auto inst = generate_instance(FunctionId::Rastrigin, 10, 2);
  inst.blocks.blocks[1](0, 1) += 1e-3;
  inst.rotation = assemble_rotation(inst.blocks);
  CHECK(parse_code(io::render_instance(inst)) == ErrorCode::CorruptInstance);

  auto perm = generate_instance(FunctionId::Rastrigin, 10, 2);
  perm.blocks.permutation[0] = perm.blocks.permutation[1];
  CHECK(parse_code(io::render_instance(perm)) == ErrorCode::CorruptInstance);
}

TEST_CASE("points parsing") {
  const std::string text =
      "# three points\n"
      "1,2,3,4,5,6,7,8,9,10\n"
      "\n"
      "1 2\t3 4 5 6 7 8 9 10\r\n"
      "-1e-3, +2.5, 3, 4, 5, 6, 7, 8, 9, 0.1 # trailing\n";
  const auto pts = io::parse_points<double>(text, 10);
  REQUIRE(pts.size() == 30);
  CHECK(pts[0] == 1);
  CHECK(pts[19] == 10);
  CHECK(pts[20] == -1e-3);
  CHECK(pts[21] == 2.5);
  CHECK(pts[29] == 0.1);
  CHECK(io::parse_points<float>(text, 10)[29] == 0.1f);
  CHECK(points_code<double>("1,2,3\n1,2\n", 3) == ErrorCode::ParseError);
  CHECK(points_code<double>("1,abc,3\n", 3) == ErrorCode::ParseError);
  CHECK(points_code<double>("1,nan,3\n", 3) == ErrorCode::ParseError);
  CHECK(points_code<double>("1,,3\n", 3) == ErrorCode::ParseError);
  CHECK(io::parse_points<double>("", 3).empty());
}

TEST_CASE("numbers survive a text round trip") {
  RandomStream rng(derive_stream_key({31, 41}));
  for (int i = 0; i < 2000; ++i) {
    const double v = std::ldexp(rng.uniform(-1, 1), static_cast<int>(rng.below(200)) - 100);
    CHECK(io::parse_double(io::format_number(v)) == v);
    const auto f = static_cast<float>(v);
    CHECK(io::parse_float(io::format_number(f)) == f);
  }
  CHECK(io::format_number(0.1) == "0.1");
  CHECK(io::format_number(100.0) == "100");
  CHECK(io::parse_double(io::format_number(std::numeric_limits<double>::denorm_min())) ==
        std::numeric_limits<double>::denorm_min());
  CHECK_THROWS_AS(io::parse_double("1.0x"), Error);
  CHECK_THROWS_AS(io::parse_double(""), Error);
  CHECK_THROWS_AS(io::parse_double("inf"), Error);
}

TEST_CASE("points and values rendering") {
  const std::vector<double> pts{1.5, -2, 0.1, 3};
  const auto text = io::render_points<double>(pts, 2);
  CHECK(io::parse_points<double>(text, 2) == pts);
  const std::vector<double> vals{100, 100.5, 1e300};
  CHECK(io::render_values<double>(vals) == "100\n100.5\n1e+300\n");
  const std::vector<float> fv{100.25f};
  CHECK(io::render_values<float>(fv) == "100.25\n");
}

TEST_CASE("grid round trip") {
  io::Grid g;
  g.function = FunctionId::Ackley;
  g.seed = 4;
  g.lo = -5;
  g.hi = 5;
  g.steps = 3;
  g.values = {1, 2, 3, 4, 5, 6, 7, 8, 9.25};
  CHECK(g.node(0) == -5);
  CHECK(g.node(1) == 0);
  CHECK(g.node(2) == 5);
  CHECK(g.at(2, 0) == 7);
  const auto text = io::render_grid(g);
  CHECK(text.rfind("# robench-grid 1\n", 0) == 0);
  const auto back = io::parse_grid(text);
  CHECK(back.function == g.function);
  CHECK(back.seed == 4);
  CHECK(back.lo == -5);
  CHECK(back.hi == 5);
  CHECK(back.steps == 3);
  CHECK(back.values == g.values);
  CHECK_THROWS_AS(io::parse_grid("# robench-grid 1\n1,2\n"), Error);
}
