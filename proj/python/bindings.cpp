#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>
#include <string>

#include "stegrle/error.hpp"
#include "stegrle/image.hpp"
#include "stegrle/metrics.hpp"
#include "stegrle/pipeline.hpp"
#include "stegrle/rle.hpp"
#include "stegrle/stego.hpp"

namespace py = pybind11;
using namespace stegrle;

namespace {

py::bytes to_bytes(std::span<const std::uint8_t> data) {
  return py::bytes(reinterpret_cast<const char*>(data.data()), data.size());
}

std::vector<std::uint8_t> from_bytes(const py::bytes& b) {
  const std::string s = b;
  return {s.begin(), s.end()};
}

py::list sites_to_list(const std::vector<Site>& sites) {
  py::list out;
  for (const Site& s : sites) out.append(py::make_tuple(s.x, s.y));
  return out;
}

double psnr_value(const Psnr& p) {
  return p.is_infinite() ? std::numeric_limits<double>::infinity() : p.db();
}

}  // namespace

PYBIND11_MODULE(_stegrle, m) {
  m.doc() = "Lossless text hiding and run-length compression for grayscale images";

  static py::exception<Error> error_type(m, "StegrleError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type, e.what());
    }
  });

  py::class_<GrayImage>(m, "GrayImage")
      .def(py::init<std::size_t, std::size_t, std::uint8_t>(), py::arg("width"),
           py::arg("height"), py::arg("fill") = 0)
      .def(py::init([](std::size_t w, std::size_t h, const py::bytes& pixels) {
             return GrayImage(w, h, from_bytes(pixels));
           }),
           py::arg("width"), py::arg("height"), py::arg("pixels"))
      .def_property_readonly("width", &GrayImage::width)
      .def_property_readonly("height", &GrayImage::height)
      .def_property_readonly("pixels",
                             [](const GrayImage& g) { return to_bytes(g.pixels()); })
      .def("at", [](const GrayImage& g, std::size_t x, std::size_t y) {
        if (x >= g.width() || y >= g.height()) throw py::index_error();
        return g.at(x, y);
      })
      .def("set", [](GrayImage& g, std::size_t x, std::size_t y, std::uint8_t v) {
        if (x >= g.width() || y >= g.height()) throw py::index_error();
        g.set(x, y, v);
      })
      .def(py::self == py::self)
      .def("__repr__", [](const GrayImage& g) {
        return "GrayImage(" + std::to_string(g.width()) + "x" +
               std::to_string(g.height()) + ")";
      });

  py::class_<Rect>(m, "Rect")
      .def(py::init<std::size_t, std::size_t, std::size_t, std::size_t>(),
           py::arg("x0"), py::arg("y0"), py::arg("x1"), py::arg("y1"))
      .def_static("full", &Rect::full)
      .def_readwrite("x0", &Rect::x0)
      .def_readwrite("y0", &Rect::y0)
      .def_readwrite("x1", &Rect::x1)
      .def_readwrite("y1", &Rect::y1);

  py::class_<EmbedReport>(m, "EmbedReport")
      .def_property_readonly("sites",
                             [](const EmbedReport& r) { return sites_to_list(r.sites); })
      .def_readonly("bytes_hidden", &EmbedReport::bytes_hidden)
      .def_readonly("capacity", &EmbedReport::capacity);

  py::class_<RunLengthStream>(m, "RunLengthStream")
      .def(py::init([](std::uint32_t w, std::uint32_t h,
                       const std::vector<std::pair<std::uint8_t, std::uint32_t>>& runs) {
             RunLengthStream s{w, h, {}};
             for (auto [v, n] : runs) s.runs.push_back({v, n});
             return s;
           }),
           py::arg("width"), py::arg("height"), py::arg("runs"))
      .def_readonly("width", &RunLengthStream::width)
      .def_readonly("height", &RunLengthStream::height)
      .def_property_readonly("runs",
                             [](const RunLengthStream& s) {
                               py::list out;
                               for (const Run& r : s.runs) out.append(py::make_tuple(r.value, r.length));
                               return out;
                             })
      .def_property_readonly("elements", &RunLengthStream::elements)
      .def_property_readonly("lengths", &RunLengthStream::lengths)
      .def(py::self == py::self);

  m.def("read_pgm", [](const py::bytes& b) { return read_pgm(from_bytes(b)); });
  m.def("write_pgm", [](const GrayImage& g) { return to_bytes(write_pgm(g)); });
  m.def("check_rect", &check_rect);
  m.def("to_grayscale",
        [](std::size_t w, std::size_t h,
           const std::vector<std::tuple<std::uint8_t, std::uint8_t, std::uint8_t>>& px) {
          std::vector<Rgb> rgb;
          rgb.reserve(px.size());
          for (auto [r, g, b] : px) rgb.push_back({r, g, b});
          return to_grayscale(RgbImage(w, h, std::move(rgb)));
        },
        py::arg("width"), py::arg("height"), py::arg("pixels"));

  m.def("text_to_bytes",
        [](const std::string& text) { return to_bytes(text_to_bytes(text).bytes()); });
  m.def("bytes_to_text", [](const py::bytes& b) {
    return bytes_to_text(Message(from_bytes(b)));
  });
  m.def("scan_candidates", [](const GrayImage& g, const Rect& roi) {
    return sites_to_list(scan_candidates(g, roi));
  });
  m.def("validate_carrier",
        [](const GrayImage& g) { return sites_to_list(validate_carrier(g)); });
  m.def("embed", [](const GrayImage& g, const Rect& roi, const py::bytes& msg) {
    auto r = embed(g, roi, Message(from_bytes(msg)));
    return py::make_tuple(std::move(r.stego), std::move(r.report));
  });
  m.def("extract", [](const GrayImage& g) {
    auto r = extract(g);
    return py::make_tuple(to_bytes(r.message.bytes()), std::move(r.restored));
  });

  m.def("rle_encode", &rle_encode);
  m.def("rle_decode", &rle_decode);
  m.def("serialize", [](const RunLengthStream& s) { return to_bytes(serialize(s)); });
  m.def("deserialize", [](const py::bytes& b) { return deserialize(from_bytes(b)); });

  m.def("mse", &mse);
  m.def("psnr", [](const GrayImage& a, const GrayImage& b) {
    return psnr_value(psnr(a, b));
  }, "PSNR in dB; float('inf') for identical images");

  m.def("synthetic_carrier", &synthetic_carrier, py::arg("width") = 256,
        py::arg("height") = 256);
  m.def(
      "run_pipeline",
      [](const GrayImage& carrier, const Rect& roi, const py::bytes& msg,
         unsigned repeat) {
        PipelineResult r = run_pipeline(carrier, roi, Message(from_bytes(msg)), repeat);
        py::dict timing;
        for (const auto& p : r.timing.phases) timing[py::str(std::string(p.name))] = p.seconds;
        timing["total"] = r.timing.total();
        py::dict out;
        out["stego"] = r.stego;
        out["container"] = to_bytes(r.container);
        out["restored"] = r.restored;
        out["message"] = to_bytes(r.recovered.bytes());
        out["timing"] = timing;
        out["stego_mse"] = r.stego_quality.mse;
        out["stego_psnr"] = psnr_value(r.stego_quality.psnr);
        out["restored_mse"] = r.restored_quality.mse;
        out["restored_psnr"] = psnr_value(r.restored_quality.psnr);
        out["verified"] = r.verified();
        return out;
      },
      py::arg("carrier"), py::arg("roi"), py::arg("message"), py::arg("repeat") = 1);
}
