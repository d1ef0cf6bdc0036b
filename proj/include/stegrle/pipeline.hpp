#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stegrle/image.hpp"
#include "stegrle/metrics.hpp"
#include "stegrle/stego.hpp"

namespace stegrle {

inline constexpr std::array<std::string_view, 4> kPhaseNames = {
    "data-hiding", "rle-encode", "rle-decode", "data-retrieval"};

struct PhaseTiming {
  std::string_view name;
  double seconds = 0.0;
};

/// Wall-clock seconds per phase, in kPhaseNames order.
struct TimingReport {
  std::array<PhaseTiming, 4> phases;

  double total() const noexcept;
  /// Index into phases of the slowest phase.
  std::size_t slowest() const noexcept;
};

struct PipelineResult {
  GrayImage stego;
  std::vector<std::uint8_t> container;
  GrayImage decoded;  // stego image as rebuilt from the container
  GrayImage restored;
  Message recovered;
  EmbedReport embed_report;
  TimingReport timing;
  QualityReport stego_quality;     // carrier vs stego
  QualityReport restored_quality;  // carrier vs restored

  bool message_ok = false;
  bool image_ok = false;
  bool container_ok = false;
  bool verified() const noexcept {
    return message_ok && image_ok && container_ok;
  }
};

/// Runs embed -> encode+serialize -> deserialize+decode -> extract, timing
/// each phase with a monotonic clock. With repeat > 1 every phase reports the
/// minimum over all repetitions. A failing phase is rethrown with the phase
/// name prefixed to the detail.
PipelineResult run_pipeline(const GrayImage& carrier, const Rect& roi,
                            const Message& msg, unsigned repeat = 1);

/// Zero background with a smooth nonzero elliptical blob in the middle.
/// Always passes validate_carrier.
GrayImage synthetic_carrier(std::size_t width, std::size_t height);

std::string format_timing_table(const TimingReport& timing);
std::string format_quality_table(const QualityReport& stego,
                                 const QualityReport& restored);

/// RFC 4180 field quoting: fields containing a comma, quote, CR or LF are
/// wrapped in double quotes with embedded quotes doubled.
std::string csv_escape(std::string_view field);
/// Header "section,item,value" followed by one row per phase, the total, and
/// the four quality figures.
std::string pipeline_csv(const PipelineResult& result);

}  // namespace stegrle
