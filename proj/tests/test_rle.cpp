#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stegrle/error.hpp"
#include "stegrle/rle.hpp"

using namespace stegrle;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::IoError;
}

GrayImage random_image(std::mt19937& rng, std::size_t w, std::size_t h, int levels) {
  std::uniform_int_distribution<int> v(0, levels - 1);
  GrayImage g(w, h);
  for (auto& p : g.pixels()) p = static_cast<std::uint8_t>(v(rng) * (255 / std::max(levels - 1, 1)));
  return g;
}

}  // namespace

TEST_SUITE("rle") {

TEST_CASE("element and run-length vectors") {
  const GrayImage row(10, 1, std::vector<std::uint8_t>{109, 109, 99, 99, 99, 99, 99, 97, 97, 97});
  const RunLengthStream s = rle_encode(row);
  CHECK(s.elements() == std::vector<std::uint8_t>{109, 99, 97});
  CHECK(s.lengths() == std::vector<std::uint32_t>{2, 5, 3});
  CHECK(rle_decode(s) == row);
  CHECK(serialize(s).size() == 32);
}

TEST_CASE("edge-case encodings") {
  CHECK(rle_encode(GrayImage(256, 256, 0)).runs == std::vector<Run>{{0, 65536}});
  CHECK(rle_decode({256, 256, {{0, 65536}}}) == GrayImage(256, 256, 0));

  const GrayImage alt(4, 1, std::vector<std::uint8_t>{1, 0, 1, 0});
  CHECK(rle_encode(alt).runs == std::vector<Run>{{1, 1}, {0, 1}, {1, 1}, {0, 1}});

  CHECK(kind_of([] { rle_decode({2, 2, {{5, 3}}}); }) == ErrorKind::LengthMismatch);
  CHECK(kind_of([] { rle_decode({2, 2, {{5, 5}}}); }) == ErrorKind::LengthMismatch);

  // Non-canonical input decodes all the same.
  CHECK(rle_decode({3, 1, {{4, 1}, {4, 2}}}) == GrayImage(3, 1, 4));
}

TEST_CASE("all 512 binary 3x3 images round trip and stay canonical") {
  for (unsigned mask = 0; mask < 512; ++mask) {
    GrayImage g(3, 3);
    for (unsigned b = 0; b < 9; ++b) g.pixels()[b] = (mask >> b) & 1u;
    const RunLengthStream s = rle_encode(g);
    std::vector<std::pair<std::uint8_t, std::uint32_t>> pairs;
    for (const Run& r : s.runs) pairs.emplace_back(r.value, r.length);
    REQUIRE(oracle::expand(pairs) ==
            std::vector<std::uint8_t>(g.pixels().begin(), g.pixels().end()));
    for (std::size_t k = 1; k < s.runs.size(); ++k) {
      REQUIRE(s.runs[k - 1].value != s.runs[k].value);
    }
    REQUIRE(rle_decode(s) == g);
  }
}

TEST_CASE("serialize layout") {
  const std::vector<std::uint8_t> expected = {
      0x53, 0x52, 0x4C, 0x45, 0x01, 0x00, 0x01, 0x00, 0x00, 0x00, 0x01,
      0x00, 0x00, 0x01, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x01, 0x00};
  const auto bytes = serialize(rle_encode(GrayImage(256, 256, 0)));
  CHECK(bytes == expected);
  auto parsed = oracle::parse_srle(bytes);
  REQUIRE(parsed);
  CHECK(parsed->w == 256);
  CHECK(parsed->h == 256);
  CHECK(parsed->runs == std::vector<std::pair<std::uint8_t, std::uint32_t>>{{0, 65536}});
}

TEST_CASE("deserialize errors") {
  const auto good = serialize(rle_encode(GrayImage(10, 1, std::vector<std::uint8_t>{
                                             109, 109, 99, 99, 99, 99, 99, 97, 97, 97})));
  CHECK(deserialize(good) == rle_encode(read_pgm(write_pgm(rle_decode(deserialize(good))))));

  auto bad_magic = good;
  bad_magic[0] = 'X';
  CHECK(kind_of([&] { deserialize(bad_magic); }) == ErrorKind::BadMagic);
  CHECK(kind_of([] { deserialize(std::vector<std::uint8_t>{'S', 'Q'}); }) == ErrorKind::BadMagic);

  auto version = good;
  version[4] = 2;
  CHECK(kind_of([&] { deserialize(version); }) == ErrorKind::UnsupportedVersion);

  auto trailing = good;
  trailing.push_back(0);
  CHECK(kind_of([&] { deserialize(trailing); }) == ErrorKind::TrailingGarbage);

  for (std::size_t cut : {0ul, 3ul, 4ul, 16ul, 17ul, 31ul}) {
    std::vector<std::uint8_t> shortened(good.begin(), good.begin() + static_cast<long>(cut));
    CAPTURE(cut);
    CHECK(kind_of([&] { deserialize(shortened); }) == ErrorKind::Truncated);
  }

  auto wrong_total = good;
  wrong_total[17 + 1] = 3;  // first run length 2 -> 3
  CHECK(kind_of([&] { deserialize(wrong_total); }) == ErrorKind::LengthMismatch);

  auto zero_run = good;
  zero_run[17 + 1] = 0;
  CHECK(kind_of([&] { deserialize(zero_run); }) == ErrorKind::ZeroLengthRun);

  auto zero_dims = good;
  zero_dims[5] = 0;
  CHECK(kind_of([&] { deserialize(zero_dims); }) == ErrorKind::InvalidDimensions);

  // Huge run count must not allocate before the size check.
  auto huge = good;
  huge[13] = huge[14] = huge[15] = huge[16] = 0xFF;
  CHECK(kind_of([&] { deserialize(huge); }) == ErrorKind::Truncated);
}

TEST_CASE("random round trips") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<std::size_t> dim(1, 64);
  std::uniform_int_distribution<int> levels(1, 256);
  for (int i = 0; i < 500; ++i) {
    const GrayImage g = random_image(rng, dim(rng), dim(rng), levels(rng));
    const RunLengthStream s = rle_encode(g);
    REQUIRE(s.runs.size() <= g.size());
    const auto bytes = serialize(s);
    REQUIRE(bytes.size() == kSrleHeaderSize + kSrleRunSize * s.runs.size());
    REQUIRE(deserialize(bytes) == s);
    REQUIRE(serialize(deserialize(bytes)) == bytes);
    auto parsed = oracle::parse_srle(bytes);
    REQUIRE(parsed);
    REQUIRE(oracle::expand(parsed->runs) ==
            std::vector<std::uint8_t>(g.pixels().begin(), g.pixels().end()));
    REQUIRE(rle_decode(s) == g);
  }
}

TEST_CASE("mostly-background images compress well") {
  // >= 90% constant background with a compact, piecewise-flat foreground
  // block (noise-textured foregrounds expand under RLE regardless).
  GrayImage g(256, 256, 0);
  for (std::size_t y = 100; y < 180; ++y)
    for (std::size_t x = 100; x < 180; ++x) g.set(x, y, static_cast<std::uint8_t>(1 + (x / 8 + y) % 200));
  std::size_t background = 0;
  for (auto p : g.pixels()) background += p == 0;
  REQUIRE(background * 10 >= g.size() * 9);
  const auto bytes = serialize(rle_encode(g));
  CHECK(bytes.size() * 4 < g.size());
}

}  // TEST_SUITE
