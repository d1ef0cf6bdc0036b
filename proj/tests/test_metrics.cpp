#include <doctest.h>

#include <cmath>
#include <random>

#include "stegrle/error.hpp"
#include "stegrle/metrics.hpp"

using namespace stegrle;

TEST_SUITE("metrics") {

TEST_CASE("mse") {
  GrayImage a(4, 3, 17);
  CHECK(mse(a, a) == 0.0);
  CHECK(mse(GrayImage(1, 1, 0), GrayImage(1, 1, 255)) == 65025.0);

  const std::uint8_t bytes[] = {71, 82, 73, 32, 112, 105, 100, 58, 48, 48, 55};
  std::uint64_t brute = 0;
  for (std::uint8_t b : bytes) brute += std::uint64_t{b} * b;
  REQUIRE(brute == 62684);

  GrayImage carrier(256, 256, 0);
  GrayImage stego = carrier;
  for (std::size_t i = 0; i < std::size(bytes); ++i) stego.set(2 * i + 1, 1, bytes[i]);
  CHECK(squared_error_sum(carrier, stego) == brute);
  CHECK(mse(carrier, stego) == 62684.0 / 65536.0);
  CHECK(std::abs(mse(carrier, stego) - 0.9565) <= 1e-4);
  CHECK(format_mse(mse(carrier, stego)) == "0.9565");

  const Psnr p = psnr(carrier, stego);
  REQUIRE_FALSE(p.is_infinite());
  CHECK(std::abs(p.db() - 48.3240) <= 0.001);
  CHECK(format_psnr(p) == "48.3240");
}

TEST_CASE("psnr special values") {
  GrayImage a(3, 3, 1);
  CHECK(psnr(a, a).is_infinite());
  CHECK(format_psnr(psnr(a, a)) == "Infinity");
  CHECK(format_mse(0.0) == "0");
  CHECK(psnr_from_mse(65025.0).db() == 0.0);
}

TEST_CASE("dimension mismatch") {
  CHECK_THROWS_AS(mse(GrayImage(2, 2), GrayImage(2, 3)), Error);
  try {
    psnr(GrayImage(2, 2), GrayImage(3, 2));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("symmetry and agreement of the three psnr forms") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<std::size_t> dim(1, 24);
  std::uniform_int_distribution<int> v(0, 255);
  int finite = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t w = dim(rng), h = dim(rng);
    GrayImage a(w, h), b(w, h);
    for (auto& p : a.pixels()) p = static_cast<std::uint8_t>(v(rng));
    for (auto& p : b.pixels()) p = static_cast<std::uint8_t>(v(rng));
    const double m = mse(a, b);
    REQUIRE(m == mse(b, a));
    REQUIRE(psnr(a, b) == psnr(b, a));
    if (m == 0.0) continue;
    ++finite;
    const double p1 = psnr_from_mse(m).db();
    REQUIRE(std::abs(p1 - psnr_sqrt_form(m)) <= 1e-9);
    REQUIRE(std::abs(p1 - psnr_log_diff_form(m)) <= 1e-9);
    REQUIRE(std::abs(psnr_sqrt_form(m) - psnr_log_diff_form(m)) <= 1e-9);
  }
  CHECK(finite > 990);
}

}  // TEST_SUITE
