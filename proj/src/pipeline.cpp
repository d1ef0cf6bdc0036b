#include "stegrle/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>

#include "stegrle/error.hpp"
#include "stegrle/rle.hpp"

namespace stegrle {

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
auto timed(std::string_view phase, double& best, F&& fn) {
  try {
    const auto start = Clock::now();
    auto out = fn();
    const std::chrono::duration<double> elapsed = Clock::now() - start;
    best = std::min(best, elapsed.count());
    return out;
  } catch (const Error& e) {
    throw Error(e.kind(), "phase " + std::string(phase) + ": " + e.detail());
  }
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

double TimingReport::total() const noexcept {
  double sum = 0.0;
  for (const auto& p : phases) sum += p.seconds;
  return sum;
}

std::size_t TimingReport::slowest() const noexcept {
  std::size_t idx = 0;
  for (std::size_t i = 1; i < phases.size(); ++i) {
    if (phases[i].seconds > phases[idx].seconds) idx = i;
  }
  return idx;
}

PipelineResult run_pipeline(const GrayImage& carrier, const Rect& roi,
                            const Message& msg, unsigned repeat) {
  repeat = std::max(repeat, 1u);
  std::array<double, 4> best;
  best.fill(std::numeric_limits<double>::infinity());

  std::optional<EmbedResult> embedded;
  std::vector<std::uint8_t> container;
  std::optional<GrayImage> decoded;
  std::optional<ExtractResult> extracted;

  for (unsigned rep = 0; rep < repeat; ++rep) {
    embedded = timed(kPhaseNames[0], best[0],
                     [&] { return embed(carrier, roi, msg); });
    container = timed(kPhaseNames[1], best[1], [&] {
      return serialize(rle_encode(embedded->stego));
    });
    decoded = timed(kPhaseNames[2], best[2],
                    [&] { return rle_decode(deserialize(container)); });
    extracted = timed(kPhaseNames[3], best[3], [&] { return extract(*decoded); });
  }

  PipelineResult result{
      .stego = std::move(embedded->stego),
      .container = std::move(container),
      .decoded = std::move(*decoded),
      .restored = std::move(extracted->restored),
      .recovered = std::move(extracted->message),
      .embed_report = std::move(embedded->report),
      .timing = {},
      .stego_quality = {},
      .restored_quality = {},
  };
  for (std::size_t i = 0; i < kPhaseNames.size(); ++i) {
    result.timing.phases[i] = {kPhaseNames[i], best[i]};
  }
  result.stego_quality = quality(carrier, result.stego);
  result.restored_quality = quality(carrier, result.restored);
  result.message_ok = result.recovered == msg;
  result.image_ok = result.restored == carrier;
  result.container_ok = result.decoded == result.stego;
  return result;
}

GrayImage synthetic_carrier(std::size_t width, std::size_t height) {
  GrayImage img(width, height, 0);
  const double cx = (static_cast<double>(width) - 1.0) / 2.0;
  const double cy = (static_cast<double>(height) - 1.0) / 2.0;
  const double ax = std::max(0.35 * static_cast<double>(width), 1.0);
  const double ay = std::max(0.40 * static_cast<double>(height), 1.0);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const double dx = (static_cast<double>(x) - cx) / ax;
      const double dy = (static_cast<double>(y) - cy) / ay;
      const double r2 = dx * dx + dy * dy;
      if (r2 > 1.0) continue;
      // Flat concentric bands, brighter towards the core.
      const int band = std::min(static_cast<int>((1.0 - r2) * 8.0), 7);
      img.set(x, y, static_cast<std::uint8_t>(60 + 22 * band));
    }
  }
  // Tiny sizes can leave a lone blob pixel; drop it so the carrier is valid.
  for (const Site& s : validate_carrier(img)) img.set(s.x, s.y, 0);
  return img;
}

std::string format_timing_table(const TimingReport& timing) {
  std::ostringstream os;
  char line[128];
  std::snprintf(line, sizeof line, "%-16s %14s\n", "Process", "Elapsed (s)");
  os << line;
  for (const auto& p : timing.phases) {
    std::snprintf(line, sizeof line, "%-16s %14.6f\n",
                  std::string(p.name).c_str(), p.seconds);
    os << line;
  }
  std::snprintf(line, sizeof line, "%-16s %14.6f\n", "total", timing.total());
  os << line;
  return os.str();
}

std::string format_quality_table(const QualityReport& stego,
                                 const QualityReport& restored) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-28s %12s %12s\n", "Compared images",
                "MSE", "PSNR");
  os << line;
  std::snprintf(line, sizeof line, "%-28s %12s %12s\n", "original vs stego",
                format_mse(stego.mse).c_str(), format_psnr(stego.psnr).c_str());
  os << line;
  std::snprintf(line, sizeof line, "%-28s %12s %12s\n",
                "original vs reconstructed", format_mse(restored.mse).c_str(),
                format_psnr(restored.psnr).c_str());
  os << line;
  return os.str();
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string pipeline_csv(const PipelineResult& result) {
  std::ostringstream os;
  auto row = [&](std::string_view section, std::string_view item,
                 const std::string& value) {
    os << csv_escape(section) << ',' << csv_escape(item) << ','
       << csv_escape(value) << '\n';
  };
  os << "section,item,value\n";
  for (const auto& p : result.timing.phases) {
    row("timing", p.name, fixed(p.seconds, 6));
  }
  row("timing", "total", fixed(result.timing.total(), 6));
  row("quality", "stego mse", format_mse(result.stego_quality.mse));
  row("quality", "stego psnr", format_psnr(result.stego_quality.psnr));
  row("quality", "reconstructed mse", format_mse(result.restored_quality.mse));
  row("quality", "reconstructed psnr",
      format_psnr(result.restored_quality.psnr));
  return os.str();
}

}  // namespace stegrle
