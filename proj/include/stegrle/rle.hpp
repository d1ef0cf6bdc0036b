#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stegrle/image.hpp"

namespace stegrle {

struct Run {
  std::uint8_t value = 0;
  std::uint32_t length = 0;

  bool operator==(const Run&) const = default;
};

/// Row-major run-length form of a GrayImage. Run lengths sum to
/// width * height; the encoder emits canonical streams (no two adjacent runs
/// share a value) while the decoder also accepts non-canonical ones.
struct RunLengthStream {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<Run> runs;

  /// The "element" vector: one pixel value per run.
  std::vector<std::uint8_t> elements() const;
  /// The "run length" vector, parallel to elements().
  std::vector<std::uint32_t> lengths() const;

  bool operator==(const RunLengthStream&) const = default;
};

/// Maximal runs over a flat sample sequence.
std::vector<Run> encode_runs(std::span<const std::uint8_t> samples);
std::vector<std::uint8_t> decode_runs(std::span<const Run> runs);

RunLengthStream rle_encode(const GrayImage& img);
/// Throws Error(LengthMismatch) when the runs do not cover width * height.
GrayImage rle_decode(const RunLengthStream& stream);

// SRLE container, all integers little-endian:
//   "SRLE" | version u8 | width u32 | height u32 | run count u32
//   then per run: value u8 | length u32
inline constexpr std::array<std::uint8_t, 4> kSrleMagic = {'S', 'R', 'L', 'E'};
inline constexpr std::uint8_t kSrleVersion = 0x01;
inline constexpr std::size_t kSrleHeaderSize = 17;
inline constexpr std::size_t kSrleRunSize = 5;

std::vector<std::uint8_t> serialize(const RunLengthStream& stream);
/// Validates magic, version, size, zero-length runs and total run length.
RunLengthStream deserialize(std::span<const std::uint8_t> bytes);

}  // namespace stegrle
