#include "stegrle/rle.hpp"

#include <limits>
#include <string>

#include "stegrle/error.hpp"

namespace stegrle {

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 24));
}

std::uint32_t get_u32(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint32_t>(b[at]) |
         static_cast<std::uint32_t>(b[at + 1]) << 8 |
         static_cast<std::uint32_t>(b[at + 2]) << 16 |
         static_cast<std::uint32_t>(b[at + 3]) << 24;
}

std::uint64_t total_length(std::span<const Run> runs) {
  std::uint64_t total = 0;
  for (const Run& r : runs) total += r.length;
  return total;
}

}  // namespace

std::vector<std::uint8_t> RunLengthStream::elements() const {
  std::vector<std::uint8_t> out;
  out.reserve(runs.size());
  for (const Run& r : runs) out.push_back(r.value);
  return out;
}

std::vector<std::uint32_t> RunLengthStream::lengths() const {
  std::vector<std::uint32_t> out;
  out.reserve(runs.size());
  for (const Run& r : runs) out.push_back(r.length);
  return out;
}

std::vector<Run> encode_runs(std::span<const std::uint8_t> samples) {
  std::vector<Run> runs;
  for (std::uint8_t v : samples) {
    if (!runs.empty() && runs.back().value == v &&
        runs.back().length < std::numeric_limits<std::uint32_t>::max()) {
      ++runs.back().length;
    } else {
      runs.push_back({v, 1});
    }
  }
  return runs;
}

std::vector<std::uint8_t> decode_runs(std::span<const Run> runs) {
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(total_length(runs)));
  for (const Run& r : runs) out.insert(out.end(), r.length, r.value);
  return out;
}

RunLengthStream rle_encode(const GrayImage& img) {
  constexpr auto limit = std::numeric_limits<std::uint32_t>::max();
  if (img.size() > limit) {
    throw Error(ErrorKind::InvalidDimensions,
                "image has more than 2^32-1 pixels");
  }
  return {static_cast<std::uint32_t>(img.width()),
          static_cast<std::uint32_t>(img.height()), encode_runs(img.pixels())};
}

GrayImage rle_decode(const RunLengthStream& stream) {
  const std::uint64_t expected =
      static_cast<std::uint64_t>(stream.width) * stream.height;
  const std::uint64_t actual = total_length(stream.runs);
  if (actual != expected) {
    throw Error(ErrorKind::LengthMismatch,
                "runs cover " + std::to_string(actual) + " pixels, image has " +
                    std::to_string(expected));
  }
  return GrayImage(stream.width, stream.height, decode_runs(stream.runs));
}

std::vector<std::uint8_t> serialize(const RunLengthStream& stream) {
  std::vector<std::uint8_t> out;
  out.reserve(kSrleHeaderSize + kSrleRunSize * stream.runs.size());
  for (std::uint8_t b : kSrleMagic) out.push_back(b);
  out.push_back(kSrleVersion);
  put_u32(out, stream.width);
  put_u32(out, stream.height);
  put_u32(out, static_cast<std::uint32_t>(stream.runs.size()));
  for (const Run& r : stream.runs) {
    out.push_back(r.value);
    put_u32(out, r.length);
  }
  return out;
}

RunLengthStream deserialize(std::span<const std::uint8_t> bytes) {
  for (std::size_t i = 0; i < kSrleMagic.size() && i < bytes.size(); ++i) {
    if (bytes[i] != kSrleMagic[i]) {
      throw Error(ErrorKind::BadMagic, "container does not start with SRLE");
    }
  }
  if (bytes.size() < kSrleHeaderSize) {
    throw Error(ErrorKind::Truncated,
                "header needs " + std::to_string(kSrleHeaderSize) +
                    " bytes, got " + std::to_string(bytes.size()));
  }
  if (bytes[4] != kSrleVersion) {
    throw Error(ErrorKind::UnsupportedVersion,
                "version " + std::to_string(bytes[4]));
  }

  RunLengthStream stream;
  stream.width = get_u32(bytes, 5);
  stream.height = get_u32(bytes, 9);
  const std::uint32_t count = get_u32(bytes, 13);
  if (stream.width == 0 || stream.height == 0) {
    throw Error(ErrorKind::InvalidDimensions, "zero width or height");
  }

  const std::uint64_t needed =
      kSrleHeaderSize + static_cast<std::uint64_t>(count) * kSrleRunSize;
  if (bytes.size() < needed) {
    throw Error(ErrorKind::Truncated,
                std::to_string(count) + " runs need " + std::to_string(needed) +
                    " bytes, got " + std::to_string(bytes.size()));
  }
  if (bytes.size() > needed) {
    throw Error(ErrorKind::TrailingGarbage,
                std::to_string(bytes.size() - needed) +
                    " byte(s) after last run");
  }

  stream.runs.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::size_t at = kSrleHeaderSize + std::size_t{i} * kSrleRunSize;
    Run r{bytes[at], get_u32(bytes, at + 1)};
    if (r.length == 0) {
      throw Error(ErrorKind::ZeroLengthRun,
                  "run " + std::to_string(i) + " has length 0");
    }
    stream.runs.push_back(r);
  }

  const std::uint64_t expected =
      static_cast<std::uint64_t>(stream.width) * stream.height;
  const std::uint64_t actual = total_length(stream.runs);
  if (actual != expected) {
    throw Error(ErrorKind::LengthMismatch,
                "runs cover " + std::to_string(actual) + " pixels, header says " +
                    std::to_string(expected));
  }
  return stream;
}

}  // namespace stegrle
