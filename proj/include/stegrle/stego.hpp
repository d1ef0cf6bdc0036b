#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stegrle/image.hpp"

namespace stegrle {

/// Hidden payload. Bytes are in 1..=255; a zero byte would be
/// indistinguishable from an untouched carrier pixel.
class Message {
 public:
  Message() = default;
  /// Throws Error(NulCharacter) if any byte is zero.
  explicit Message(std::vector<std::uint8_t> bytes);

  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }
  std::size_t size() const noexcept { return bytes_.size(); }
  bool empty() const noexcept { return bytes_.empty(); }

  bool operator==(const Message&) const = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

/// Text is UTF-8 and each code point becomes one byte, so only U+0001..U+00FF
/// are representable.
Message text_to_bytes(std::string_view utf8);
/// Inverse of text_to_bytes; bytes >= 0x80 are emitted as two-byte UTF-8.
std::string bytes_to_text(const Message& msg);

struct Site {
  std::size_t x = 0;
  std::size_t y = 0;

  // Row-major ordering: y first, then x.
  friend auto operator<=>(const Site& a, const Site& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
  friend bool operator==(const Site&, const Site&) = default;
};

struct EmbedReport {
  std::vector<Site> sites;
  std::size_t bytes_hidden = 0;
  /// How many bytes the ROI can hold under sequential row-major embedding.
  std::size_t capacity = 0;
};

struct EmbedResult {
  GrayImage stego;
  EmbedReport report;
};

struct ExtractResult {
  Message message;
  GrayImage restored;
};

/// Zero, off the border, with all four N/S/E/W neighbours zero.
bool is_candidate(const GrayImage& img, std::size_t x, std::size_t y) noexcept;
/// Nonzero, off the border, with all four N/S/E/W neighbours zero. This is the
/// pattern the extractor reads as a hidden byte.
bool is_hidden_byte(const GrayImage& img, std::size_t x,
                    std::size_t y) noexcept;

/// Candidate sites inside roi in row-major order. Neighbours may fall
/// outside roi but must lie inside the image.
std::vector<Site> scan_candidates(const GrayImage& img, const Rect& roi);

/// Sites anywhere in img that the extractor would already read as hidden
/// bytes. An empty result means img is safe to embed into.
std::vector<Site> validate_carrier(const GrayImage& img);

/// Writes each message byte, in order, into the next row-major candidate of
/// the working image. Candidates are re-evaluated after every write, so
/// sites 4-adjacent to a written byte are skipped.
EmbedResult embed(const GrayImage& img, const Rect& roi, const Message& msg);

/// Scans the whole image, collects every hidden-byte pixel in row-major order
/// and zeroes it.
ExtractResult extract(const GrayImage& stego);

}  // namespace stegrle
