#include "stegrle/stego.hpp"

#include <algorithm>
#include <cstdio>

#include "stegrle/error.hpp"

namespace stegrle {

namespace {

bool interior(const GrayImage& img, std::size_t x, std::size_t y) noexcept {
  return x >= 1 && y >= 1 && x + 1 < img.width() && y + 1 < img.height();
}

bool neighbours_zero(const GrayImage& img, std::size_t x,
                     std::size_t y) noexcept {
  return img.at(x - 1, y) == 0 && img.at(x + 1, y) == 0 &&
         img.at(x, y - 1) == 0 && img.at(x, y + 1) == 0;
}

}  // namespace

Message::Message(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {
  auto it = std::find(bytes_.begin(), bytes_.end(), std::uint8_t{0});
  if (it != bytes_.end()) {
    throw Error(ErrorKind::NulCharacter,
                "zero byte at index " + std::to_string(it - bytes_.begin()));
  }
}

Message text_to_bytes(std::string_view utf8) {
  std::vector<std::uint8_t> out;
  out.reserve(utf8.size());
  std::size_t i = 0;
  while (i < utf8.size()) {
    const auto lead = static_cast<std::uint8_t>(utf8[i]);
    const std::size_t at = out.size();
    std::uint32_t cp = 0;
    std::size_t len = 0;
    if (lead < 0x80) {
      cp = lead;
      len = 1;
    } else if ((lead & 0xE0) == 0xC0) {
      cp = lead & 0x1F;
      len = 2;
    } else if ((lead & 0xF0) == 0xE0) {
      cp = lead & 0x0F;
      len = 3;
    } else if ((lead & 0xF8) == 0xF0) {
      cp = lead & 0x07;
      len = 4;
    } else {
      throw Error(ErrorKind::InvalidUtf8,
                  "bad lead byte at offset " + std::to_string(i));
    }
    if (i + len > utf8.size()) {
      throw Error(ErrorKind::InvalidUtf8,
                  "truncated sequence at offset " + std::to_string(i));
    }
    for (std::size_t k = 1; k < len; ++k) {
      const auto cont = static_cast<std::uint8_t>(utf8[i + k]);
      if ((cont & 0xC0) != 0x80) {
        throw Error(ErrorKind::InvalidUtf8,
                    "bad continuation byte at offset " + std::to_string(i + k));
      }
      cp = (cp << 6) | (cont & 0x3F);
    }
    static constexpr std::uint32_t min_for_len[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < min_for_len[len] || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw Error(ErrorKind::InvalidUtf8,
                  "invalid code point at offset " + std::to_string(i));
    }
    if (cp == 0) {
      throw Error(ErrorKind::NulCharacter,
                  "NUL character at index " + std::to_string(at));
    }
    if (cp > 0xFF) {
      char hex[16];
      std::snprintf(hex, sizeof hex, "U+%04X", static_cast<unsigned>(cp));
      throw Error(ErrorKind::NonLatinCharacter,
                  std::string(hex) + " at index " + std::to_string(at) +
                      " is outside Latin-1");
    }
    out.push_back(static_cast<std::uint8_t>(cp));
    i += len;
  }
  return Message(std::move(out));
}

std::string bytes_to_text(const Message& msg) {
  std::string out;
  out.reserve(msg.size());
  for (std::uint8_t b : msg.bytes()) {
    if (b < 0x80) {
      out.push_back(static_cast<char>(b));
    } else {
      out.push_back(static_cast<char>(0xC0 | (b >> 6)));
      out.push_back(static_cast<char>(0x80 | (b & 0x3F)));
    }
  }
  return out;
}

bool is_candidate(const GrayImage& img, std::size_t x,
                  std::size_t y) noexcept {
  return interior(img, x, y) && img.at(x, y) == 0 && neighbours_zero(img, x, y);
}

bool is_hidden_byte(const GrayImage& img, std::size_t x,
                    std::size_t y) noexcept {
  return interior(img, x, y) && img.at(x, y) != 0 &&
         neighbours_zero(img, x, y);
}

std::vector<Site> scan_candidates(const GrayImage& img, const Rect& roi) {
  check_rect(img, roi);
  std::vector<Site> sites;
  for (std::size_t y = roi.y0; y <= roi.y1; ++y) {
    for (std::size_t x = roi.x0; x <= roi.x1; ++x) {
      if (is_candidate(img, x, y)) sites.push_back({x, y});
    }
  }
  return sites;
}

std::vector<Site> validate_carrier(const GrayImage& img) {
  std::vector<Site> ambiguous;
  for (std::size_t y = 0; y < img.height(); ++y) {
    for (std::size_t x = 0; x < img.width(); ++x) {
      if (is_hidden_byte(img, x, y)) ambiguous.push_back({x, y});
    }
  }
  return ambiguous;
}

EmbedResult embed(const GrayImage& img, const Rect& roi, const Message& msg) {
  check_rect(img, roi);
  if (auto ambiguous = validate_carrier(img); !ambiguous.empty()) {
    const Site& s = ambiguous.front();
    throw Error(ErrorKind::AmbiguousCarrier,
                std::to_string(ambiguous.size()) +
                    " pre-existing isolated nonzero pixel(s), first at (" +
                    std::to_string(s.x) + "," + std::to_string(s.y) + ")");
  }

  // A write only ever turns a zero into a nonzero, so it can disqualify later
  // candidates but never create one at an earlier row-major position. A
  // single forward pass therefore matches re-scanning after every write. The
  // pass runs to the end of the ROI (marking leftover sites with a
  // placeholder) so the report carries the full capacity.
  GrayImage working = img;
  GrayImage stego = img;
  EmbedReport report;
  const auto bytes = msg.bytes();
  std::size_t capacity = 0;
  for (std::size_t y = roi.y0; y <= roi.y1; ++y) {
    for (std::size_t x = roi.x0; x <= roi.x1; ++x) {
      if (!is_candidate(working, x, y)) continue;
      if (capacity < bytes.size()) {
        working.set(x, y, bytes[capacity]);
        stego.set(x, y, bytes[capacity]);
        report.sites.push_back({x, y});
      } else {
        working.set(x, y, 1);
      }
      ++capacity;
    }
  }
  report.capacity = capacity;
  if (capacity < bytes.size()) {
    throw Error(ErrorKind::CapacityExceeded,
                "message needs " + std::to_string(bytes.size()) +
                    " sites but the region holds " + std::to_string(capacity));
  }
  report.bytes_hidden = bytes.size();
  return {std::move(stego), std::move(report)};
}

ExtractResult extract(const GrayImage& stego) {
  std::vector<std::uint8_t> bytes;
  GrayImage restored = stego;
  for (std::size_t y = 0; y < stego.height(); ++y) {
    for (std::size_t x = 0; x < stego.width(); ++x) {
      if (is_hidden_byte(stego, x, y)) {
        bytes.push_back(stego.at(x, y));
        restored.set(x, y, 0);
      }
    }
  }
  return {Message(std::move(bytes)), std::move(restored)};
}

}  // namespace stegrle
