#include "stegrle/image.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <string>

#include "stegrle/error.hpp"

namespace stegrle {

namespace {

void require_dims(std::size_t width, std::size_t height) {
  if (width == 0 || height == 0) {
    throw Error(ErrorKind::InvalidDimensions,
                "image dimensions must be at least 1x1, got " +
                    std::to_string(width) + "x" + std::to_string(height));
  }
}

bool is_pnm_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

// Cursor over a PNM byte stream. Comments ('#' to end of line) are treated
// as whitespace wherever whitespace is allowed.
class PnmCursor {
 public:
  explicit PnmCursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (is_pnm_space(bytes_[pos_])) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  // Next unsigned decimal token, or nullopt if there is none or it is not a
  // number.
  std::optional<std::size_t> number() {
    skip_space_and_comments();
    const std::size_t start = pos_;
    while (pos_ < bytes_.size() && !is_pnm_space(bytes_[pos_]) &&
           bytes_[pos_] != '#') {
      ++pos_;
    }
    if (start == pos_) return std::nullopt;
    const char* first = reinterpret_cast<const char*>(bytes_.data()) + start;
    const char* last = reinterpret_cast<const char*>(bytes_.data()) + pos_;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return value;
  }

  bool at_end() const { return pos_ >= bytes_.size(); }
  std::size_t pos() const { return pos_; }
  std::uint8_t peek() const { return bytes_[pos_]; }
  void advance() { ++pos_; }
  std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

std::size_t header_field(PnmCursor& cur, const char* name) {
  auto v = cur.number();
  if (!v) {
    throw Error(ErrorKind::MalformedHeader,
                std::string("missing or invalid ") + name);
  }
  return *v;
}

}  // namespace

GrayImage::GrayImage(std::size_t width, std::size_t height, std::uint8_t fill)
    : width_(width), height_(height) {
  require_dims(width, height);
  pixels_.assign(width * height, fill);
}

GrayImage::GrayImage(std::size_t width, std::size_t height,
                     std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  require_dims(width, height);
  if (pixels_.size() != width * height) {
    throw Error(ErrorKind::InvalidDimensions,
                "pixel buffer holds " + std::to_string(pixels_.size()) +
                    " values, expected " + std::to_string(width * height));
  }
}

RgbImage::RgbImage(std::size_t width, std::size_t height,
                   std::vector<Rgb> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  require_dims(width, height);
  if (pixels_.size() != width * height) {
    throw Error(ErrorKind::InvalidDimensions,
                "pixel buffer holds " + std::to_string(pixels_.size()) +
                    " values, expected " + std::to_string(width * height));
  }
}

void check_rect(const GrayImage& img, const Rect& roi) {
  auto fail = [](const char* what, std::size_t value, const std::string& why) {
    throw Error(ErrorKind::RectOutOfBounds,
                std::string(what) + "=" + std::to_string(value) + " " + why);
  };
  if (roi.x1 >= img.width()) {
    fail("x1", roi.x1, "is not below width " + std::to_string(img.width()));
  }
  if (roi.y1 >= img.height()) {
    fail("y1", roi.y1, "is not below height " + std::to_string(img.height()));
  }
  if (roi.x0 > roi.x1) fail("x0", roi.x0, "exceeds x1");
  if (roi.y0 > roi.y1) fail("y0", roi.y0, "exceeds y1");
}

std::uint8_t luma(Rgb px) noexcept {
  // Weights scaled by 1000 so rounding half up is exact integer arithmetic.
  const unsigned weighted = 299u * px.r + 587u * px.g + 114u * px.b;
  return static_cast<std::uint8_t>((weighted + 500u) / 1000u);
}

GrayImage to_grayscale(const RgbImage& img) {
  std::vector<std::uint8_t> out;
  out.reserve(img.pixels().size());
  for (const Rgb& px : img.pixels()) out.push_back(luma(px));
  return GrayImage(img.width(), img.height(), std::move(out));
}

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '2')) {
    throw Error(ErrorKind::MalformedHeader, "expected magic P5 or P2");
  }
  const bool binary = bytes[1] == '5';
  PnmCursor cur(bytes.subspan(2));
  if (!cur.at_end() && !is_pnm_space(cur.peek()) && cur.peek() != '#') {
    throw Error(ErrorKind::MalformedHeader, "expected whitespace after magic");
  }

  const std::size_t width = header_field(cur, "width");
  const std::size_t height = header_field(cur, "height");
  const std::size_t maxval = header_field(cur, "maxval");
  if (width == 0 || height == 0) {
    throw Error(ErrorKind::MalformedHeader, "zero width or height");
  }
  if (maxval == 0) throw Error(ErrorKind::MalformedHeader, "maxval is zero");
  if (maxval > 255) {
    throw Error(ErrorKind::UnsupportedMaxval,
                "maxval " + std::to_string(maxval) + " exceeds 255");
  }

  if (width > std::numeric_limits<std::uint32_t>::max() / height) {
    throw Error(ErrorKind::MalformedHeader, "image dimensions too large");
  }
  const std::size_t count = width * height;
  std::vector<std::uint8_t> pixels;

  if (binary) {
    // Exactly one whitespace byte separates maxval from the raster.
    if (cur.at_end() || !is_pnm_space(cur.peek())) {
      throw Error(ErrorKind::TruncatedData, "raster missing after header");
    }
    cur.advance();
    auto raster = cur.rest();
    if (raster.size() < count) {
      throw Error(ErrorKind::TruncatedData,
                  "expected " + std::to_string(count) + " pixel bytes, found " +
                      std::to_string(raster.size()));
    }
    pixels.assign(raster.begin(), raster.begin() + static_cast<std::ptrdiff_t>(count));
    for (std::size_t i = 0; i < count; ++i) {
      if (pixels[i] > maxval) {
        throw Error(ErrorKind::MalformedData,
                    "sample " + std::to_string(pixels[i]) + " exceeds maxval");
      }
    }
  } else {
    pixels.reserve(std::min(count, bytes.size()));
    for (std::size_t i = 0; i < count; ++i) {
      cur.skip_space_and_comments();
      if (cur.at_end()) {
        throw Error(ErrorKind::TruncatedData,
                    "expected " + std::to_string(count) + " samples, found " +
                        std::to_string(i));
      }
      auto v = cur.number();
      if (!v || *v > maxval) {
        throw Error(ErrorKind::MalformedData,
                    "invalid sample at index " + std::to_string(i));
      }
      pixels.push_back(static_cast<std::uint8_t>(*v));
    }
  }
  return GrayImage(width, height, std::move(pixels));
}

std::vector<std::uint8_t> write_pgm(const GrayImage& img) {
  const std::string header = "P5\n" + std::to_string(img.width()) + " " +
                             std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.pixels().begin(), img.pixels().end());
  return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorKind::IoError, "read failed: " + path.string());
  return bytes;
}

void write_file(const std::filesystem::path& path,
                std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::IoError, "write failed: " + path.string());
}

}  // namespace stegrle
