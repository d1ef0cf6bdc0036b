#pragma once

#include <cstdint>
#include <string>

#include "stegrle/image.hpp"

namespace stegrle {

/// Peak value for 8-bit samples.
inline constexpr double kMaxIntensity = 255.0;

/// Peak signal-to-noise ratio in dB. Identical images have no finite PSNR;
/// that case is a value of its own rather than an error.
class Psnr {
 public:
  static Psnr infinite() { return Psnr(true, 0.0); }
  static Psnr finite(double db) { return Psnr(false, db); }

  bool is_infinite() const noexcept { return infinite_; }
  /// Only meaningful when !is_infinite().
  double db() const noexcept { return db_; }

  bool operator==(const Psnr&) const = default;

 private:
  Psnr(bool inf, double db) : infinite_(inf), db_(db) {}
  bool infinite_;
  double db_;
};

struct QualityReport {
  double mse = 0.0;
  Psnr psnr = Psnr::infinite();
};

/// Sum of squared pixel differences. Throws Error(DimensionMismatch).
std::uint64_t squared_error_sum(const GrayImage& a, const GrayImage& b);
double mse(const GrayImage& a, const GrayImage& b);
Psnr psnr(const GrayImage& a, const GrayImage& b);
QualityReport quality(const GrayImage& a, const GrayImage& b);

/// PSNR from an MSE value, 10*log10(MAX^2 / mse). mse == 0 gives infinite.
Psnr psnr_from_mse(double mse);

// The two algebraically equivalent forms, kept for cross-checking.
double psnr_sqrt_form(double mse);      // 20*log10(MAX / sqrt(mse))
double psnr_log_diff_form(double mse);  // 20*log10(MAX) - 10*log10(mse)

/// "0" for an exact zero, otherwise fixed-point with 4 decimals.
std::string format_mse(double mse);
/// "Infinity" or fixed-point with 4 decimals.
std::string format_psnr(const Psnr& p);

}  // namespace stegrle
