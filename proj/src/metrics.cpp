#include "stegrle/metrics.hpp"

#include <cmath>
#include <cstdio>

#include "stegrle/error.hpp"

namespace stegrle {

std::uint64_t squared_error_sum(const GrayImage& a, const GrayImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(a.width()) + "x" + std::to_string(a.height()) +
                    " vs " + std::to_string(b.width()) + "x" +
                    std::to_string(b.height()));
  }
  std::uint64_t sum = 0;
  auto pa = a.pixels();
  auto pb = b.pixels();
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const int d = int{pa[i]} - int{pb[i]};
    sum += static_cast<std::uint64_t>(d * d);
  }
  return sum;
}

double mse(const GrayImage& a, const GrayImage& b) {
  const std::uint64_t sum = squared_error_sum(a, b);
  return static_cast<double>(sum) / static_cast<double>(a.size());
}

Psnr psnr_from_mse(double mse) {
  if (mse == 0.0) return Psnr::infinite();
  return Psnr::finite(10.0 * std::log10(kMaxIntensity * kMaxIntensity / mse));
}

double psnr_sqrt_form(double mse) {
  return 20.0 * std::log10(kMaxIntensity / std::sqrt(mse));
}

double psnr_log_diff_form(double mse) {
  return 20.0 * std::log10(kMaxIntensity) - 10.0 * std::log10(mse);
}

Psnr psnr(const GrayImage& a, const GrayImage& b) {
  return psnr_from_mse(mse(a, b));
}

QualityReport quality(const GrayImage& a, const GrayImage& b) {
  const double m = mse(a, b);
  return {m, psnr_from_mse(m)};
}

std::string format_mse(double mse) {
  if (mse == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", mse);
  return buf;
}

std::string format_psnr(const Psnr& p) {
  if (p.is_infinite()) return "Infinity";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", p.db());
  return buf;
}

}  // namespace stegrle
