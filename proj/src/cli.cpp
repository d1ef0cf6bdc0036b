#include "stegrle/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>

#include "stegrle/metrics.hpp"
#include "stegrle/pipeline.hpp"
#include "stegrle/rle.hpp"
#include "stegrle/stego.hpp"

namespace stegrle::cli {

namespace {

struct Options {
  std::string in;
  std::string out;
  std::string roi;
  std::optional<std::string> message;
  std::string message_file;
  bool allow_empty = false;
  unsigned repeat = 1;
  std::string csv;
  std::string verify;
  std::string stego_out;
  std::string container_out;
  std::string restored_out;
  std::vector<std::string> metric_paths;
  std::size_t width = 256;
  std::size_t height = 256;
};

GrayImage load_pgm(const std::string& path) {
  return read_pgm(read_file(path));
}

void save_pgm(const std::string& path, const GrayImage& img) {
  write_file(path, write_pgm(img));
}

Rect resolve_roi(const Options& opt, const GrayImage& img) {
  Rect roi = opt.roi.empty() ? Rect::full(img) : parse_rect(opt.roi);
  check_rect(img, roi);
  return roi;
}

Message load_message(const Options& opt) {
  std::string text;
  if (opt.message) {
    text = *opt.message;
  } else if (!opt.message_file.empty()) {
    auto bytes = read_file(opt.message_file);
    text.assign(bytes.begin(), bytes.end());
  }
  Message msg = text_to_bytes(text);
  if (msg.empty() && !opt.allow_empty) {
    throw Error(ErrorKind::EmptyMessage,
                "message is empty; pass --allow-empty to embed nothing");
  }
  return msg;
}

std::string format_ratio(double ratio) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f:1", ratio);
  return buf;
}

int cmd_embed(const Options& opt, std::ostream& out) {
  const GrayImage carrier = load_pgm(opt.in);
  const Rect roi = resolve_roi(opt, carrier);
  const Message msg = load_message(opt);
  auto [stego, report] = embed(carrier, roi, msg);
  save_pgm(opt.out, stego);
  out << "capacity: " << report.capacity << '\n'
      << "bytes hidden: " << report.bytes_hidden << '\n'
      << "sites:";
  for (const Site& s : report.sites) out << " (" << s.x << ',' << s.y << ')';
  out << '\n';
  return kExitOk;
}

int cmd_compress(const Options& opt, std::ostream& out) {
  const auto raw = read_file(opt.in);
  const GrayImage img = read_pgm(raw);
  const RunLengthStream stream = rle_encode(img);
  const auto container = serialize(stream);
  write_file(opt.out, container);
  out << "raw bytes: " << raw.size() << '\n'
      << "compressed bytes: " << container.size() << '\n'
      << "runs: " << stream.runs.size() << '\n'
      << "ratio: "
      << format_ratio(static_cast<double>(raw.size()) /
                      static_cast<double>(container.size()))
      << '\n';
  return kExitOk;
}

int cmd_decompress(const Options& opt, std::ostream& out) {
  const auto container = read_file(opt.in);
  const GrayImage img = rle_decode(deserialize(container));
  save_pgm(opt.out, img);
  out << "decoded " << img.width() << 'x' << img.height() << " image\n";
  return kExitOk;
}

int cmd_extract(const Options& opt, std::ostream& out) {
  const GrayImage stego = load_pgm(opt.in);
  auto [msg, restored] = extract(stego);
  if (!opt.out.empty()) save_pgm(opt.out, restored);
  out << "bytes recovered: " << msg.size() << '\n'
      << "message: " << bytes_to_text(msg) << '\n';
  if (!opt.verify.empty()) {
    const QualityReport q = quality(load_pgm(opt.verify), restored);
    out << "MSE / PSNR: " << format_mse(q.mse) << " / " << format_psnr(q.psnr)
        << '\n';
    if (q.mse != 0.0) {
      throw Error(ErrorKind::VerificationFailed,
                  "restored image differs from " + opt.verify);
    }
  }
  return kExitOk;
}

int cmd_pipeline(const Options& opt, std::ostream& out) {
  const GrayImage carrier = load_pgm(opt.in);
  const Rect roi = resolve_roi(opt, carrier);
  const Message msg = load_message(opt);
  const PipelineResult result = run_pipeline(carrier, roi, msg, opt.repeat);

  if (!opt.stego_out.empty()) save_pgm(opt.stego_out, result.stego);
  if (!opt.container_out.empty()) write_file(opt.container_out, result.container);
  if (!opt.restored_out.empty()) save_pgm(opt.restored_out, result.restored);

  if (!result.verified()) {
    std::string what;
    if (!result.container_ok) what += " container";
    if (!result.image_ok) what += " image";
    if (!result.message_ok) what += " message";
    throw Error(ErrorKind::VerificationFailed, "mismatch in" + what);
  }

  out << "bytes hidden: " << result.embed_report.bytes_hidden << " of "
      << result.embed_report.capacity << '\n'
      << "container bytes: " << result.container.size() << '\n'
      << "recovered message: " << bytes_to_text(result.recovered) << '\n'
      << "verification: lossless\n\n"
      << format_timing_table(result.timing) << '\n'
      << format_quality_table(result.stego_quality, result.restored_quality);
  if (!opt.csv.empty()) {
    const std::string csv = pipeline_csv(result);
    write_file(opt.csv, std::span(reinterpret_cast<const std::uint8_t*>(csv.data()),
                                  csv.size()));
  }
  return kExitOk;
}

int cmd_metrics(const Options& opt, std::ostream& out) {
  const QualityReport q =
      quality(load_pgm(opt.metric_paths.at(0)), load_pgm(opt.metric_paths.at(1)));
  out << "MSE / PSNR: " << format_mse(q.mse) << " / " << format_psnr(q.psnr)
      << '\n';
  return kExitOk;
}

int cmd_gen_carrier(const Options& opt, std::ostream& out) {
  const GrayImage img = synthetic_carrier(opt.width, opt.height);
  save_pgm(opt.out, img);
  out << "wrote " << img.width() << 'x' << img.height() << " carrier\n";
  return kExitOk;
}

}  // namespace

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::IoError: return 3;
    case ErrorKind::InvalidDimensions: return 9;
    case ErrorKind::MalformedHeader: return 10;
    case ErrorKind::MalformedData: return 11;
    case ErrorKind::TruncatedData: return 12;
    case ErrorKind::UnsupportedMaxval: return 13;
    case ErrorKind::RectOutOfBounds: return 14;
    case ErrorKind::InvalidUtf8: return 20;
    case ErrorKind::NonLatinCharacter: return 21;
    case ErrorKind::NulCharacter: return 22;
    case ErrorKind::CapacityExceeded: return 23;
    case ErrorKind::AmbiguousCarrier: return 24;
    case ErrorKind::EmptyMessage: return 25;
    case ErrorKind::BadMagic: return 30;
    case ErrorKind::UnsupportedVersion: return 31;
    case ErrorKind::Truncated: return 32;
    case ErrorKind::LengthMismatch: return 33;
    case ErrorKind::ZeroLengthRun: return 34;
    case ErrorKind::TrailingGarbage: return 35;
    case ErrorKind::DimensionMismatch: return 40;
    case ErrorKind::VerificationFailed: return 50;
  }
  return kExitInternal;
}

Rect parse_rect(const std::string& text) {
  std::array<std::size_t, 4> v{};
  const char* p = text.data();
  const char* end = text.data() + text.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto [next, ec] = std::from_chars(p, end, v[i]);
    if (ec != std::errc{}) {
      throw std::invalid_argument("roi must be x0,y0,x1,y1: " + text);
    }
    p = next;
    if (i + 1 < v.size()) {
      if (p == end || *p != ',') {
        throw std::invalid_argument("roi must be x0,y0,x1,y1: " + text);
      }
      ++p;
    }
  }
  if (p != end) throw std::invalid_argument("roi must be x0,y0,x1,y1: " + text);
  return {v[0], v[1], v[2], v[3]};
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Lossless text hiding and run-length compression for grayscale images",
               "stegrle"};
  app.require_subcommand(1);
  Options opt;

  auto roi_check = [](const std::string& s) -> std::string {
    try {
      parse_rect(s);
      return {};
    } catch (const std::invalid_argument& e) {
      return e.what();
    }
  };
  auto add_message = [&](CLI::App* sub) {
    auto* m = sub->add_option("--message", opt.message, "Text to hide");
    auto* f = sub->add_option("--message-file", opt.message_file,
                              "File whose UTF-8 contents are the text to hide");
    m->excludes(f);
    sub->add_flag("--allow-empty", opt.allow_empty, "Accept an empty message");
  };

  auto* embed_cmd = app.add_subcommand("embed", "Hide a message in a PGM image");
  embed_cmd->add_option("--in", opt.in, "Carrier PGM")->required();
  embed_cmd->add_option("--out", opt.out, "Stego PGM to write")->required();
  embed_cmd->add_option("--roi", opt.roi, "Embedding region x0,y0,x1,y1 (inclusive)")
      ->check(roi_check);
  add_message(embed_cmd);

  auto* compress_cmd = app.add_subcommand("compress", "Run-length encode a PGM into SRLE");
  compress_cmd->add_option("--in", opt.in, "PGM to compress")->required();
  compress_cmd->add_option("--out", opt.out, "SRLE container to write")->required();

  auto* decompress_cmd = app.add_subcommand("decompress", "Decode an SRLE container to PGM");
  decompress_cmd->add_option("--in", opt.in, "SRLE container")->required();
  decompress_cmd->add_option("--out", opt.out, "PGM to write")->required();

  auto* extract_cmd = app.add_subcommand("extract", "Recover the message and original image");
  extract_cmd->add_option("--in", opt.in, "Stego PGM")->required();
  extract_cmd->add_option("--out", opt.out, "Restored PGM to write");
  extract_cmd->add_option("--verify", opt.verify, "Original PGM to compare against");

  auto* pipeline_cmd = app.add_subcommand("pipeline", "Run and time all four phases");
  pipeline_cmd->add_option("--in", opt.in, "Carrier PGM")->required();
  pipeline_cmd->add_option("--roi", opt.roi, "Embedding region x0,y0,x1,y1 (inclusive)")
      ->check(roi_check);
  add_message(pipeline_cmd);
  pipeline_cmd->add_option("--repeat", opt.repeat, "Report the best of N runs")
      ->check(CLI::PositiveNumber);
  pipeline_cmd->add_option("--csv", opt.csv, "Also write the report as CSV");
  pipeline_cmd->add_option("--stego", opt.stego_out, "Write the stego PGM");
  pipeline_cmd->add_option("--container", opt.container_out, "Write the SRLE container");
  pipeline_cmd->add_option("--restored", opt.restored_out, "Write the restored PGM");

  auto* metrics_cmd = app.add_subcommand("metrics", "MSE and PSNR between two PGMs");
  metrics_cmd->add_option("images", opt.metric_paths, "Two PGM files")
      ->required()
      ->expected(2);

  auto* gen_cmd = app.add_subcommand("gen-carrier", "Write a synthetic carrier PGM");
  gen_cmd->add_option("--out", opt.out, "PGM to write")->required();
  gen_cmd->add_option("--width", opt.width, "Width in pixels")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--height", opt.height, "Height in pixels")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*embed_cmd) return cmd_embed(opt, out);
    if (*compress_cmd) return cmd_compress(opt, out);
    if (*decompress_cmd) return cmd_decompress(opt, out);
    if (*extract_cmd) return cmd_extract(opt, out);
    if (*pipeline_cmd) return cmd_pipeline(opt, out);
    if (*metrics_cmd) return cmd_metrics(opt, out);
    if (*gen_cmd) return cmd_gen_carrier(opt, out);
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.detail() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "Internal: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace stegrle::cli
