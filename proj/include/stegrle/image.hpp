#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace stegrle {

/// 8-bit grayscale raster stored row-major. Width and height are both at
/// least 1 and the pixel buffer always holds exactly width * height values.
class GrayImage {
 public:
  GrayImage(std::size_t width, std::size_t height, std::uint8_t fill = 0);
  GrayImage(std::size_t width, std::size_t height,
            std::vector<std::uint8_t> pixels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  std::uint8_t at(std::size_t x, std::size_t y) const noexcept {
    return pixels_[y * width_ + x];
  }
  void set(std::size_t x, std::size_t y, std::uint8_t value) noexcept {
    pixels_[y * width_ + x] = value;
  }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint8_t> pixels() noexcept { return pixels_; }

  bool operator==(const GrayImage&) const = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> pixels_;
};

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  bool operator==(const Rgb&) const = default;
};

class RgbImage {
 public:
  RgbImage(std::size_t width, std::size_t height, std::vector<Rgb> pixels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::span<const Rgb> pixels() const noexcept { return pixels_; }

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<Rgb> pixels_;
};

/// Inclusive, 0-indexed rectangle: (x0,y0) is the top-left corner and
/// (x1,y1) the bottom-right one.
struct Rect {
  std::size_t x0 = 0;
  std::size_t y0 = 0;
  std::size_t x1 = 0;
  std::size_t y1 = 0;

  static Rect full(const GrayImage& img) {
    return {0, 0, img.width() - 1, img.height() - 1};
  }

  bool operator==(const Rect&) const = default;
};

/// Throws Error(RectOutOfBounds) naming the first offending coordinate.
void check_rect(const GrayImage& img, const Rect& roi);

/// BT.601 luma, rounded half up.
std::uint8_t luma(Rgb px) noexcept;
GrayImage to_grayscale(const RgbImage& img);

/// Accepts binary (P5) and ASCII (P2) PGM with maxval <= 255. Sample values
/// are taken as stored, never rescaled.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

/// Canonical P5: "P5\n<w> <h>\n255\n" followed by the raw pixels.
std::vector<std::uint8_t> write_pgm(const GrayImage& img);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path,
                std::span<const std::uint8_t> bytes);

}  // namespace stegrle
