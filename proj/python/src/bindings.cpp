#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bitalign/dc.hpp"
#include "bitalign/errors.hpp"
#include "bitalign/io.hpp"
#include "bitalign/oracle.hpp"
#include "bitalign/sim.hpp"
#include "bitalign/window.hpp"

namespace py = pybind11;
using namespace bitalign;

namespace {

WindowConfig make_config(std::size_t w, std::size_t o, std::optional<std::size_t> k,
                         const std::string& mode, const std::string& priority) {
  WindowConfig cfg;
  cfg.window = w;
  cfg.overlap = o;
  cfg.k = k;
  if (mode == "improved") {
    cfg.mode = EngineMode::kImproved;
  } else if (mode == "baseline") {
    cfg.mode = EngineMode::kBaseline;
  } else {
    throw InvalidArgument("mode must be 'improved' or 'baseline'");
  }
  cfg.priority = EdgePriority::parse(priority);
  cfg.validate();
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bit-parallel windowed edit-distance alignment";

  // Translators registered later are tried first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<WindowFailed>(m, "WindowFailed", PyExc_RuntimeError);

  py::class_<AlignmentResult>(m, "AlignmentResult")
      .def_property_readonly("cigar",
                             [](const AlignmentResult& r) { return io::format_cigar(r.cigar); })
      .def_readonly("cost", &AlignmentResult::cost)
      .def_readonly("text_consumed", &AlignmentResult::text_consumed)
      .def_readonly("window_distances", &AlignmentResult::window_distances)
      .def_readonly("rows_computed", &AlignmentResult::rows_computed)
      .def_property_readonly("entry_reads",
                             [](const AlignmentResult& r) { return r.counters.entry_reads; })
      .def_property_readonly("entry_writes",
                             [](const AlignmentResult& r) { return r.counters.entry_writes; })
      .def_property_readonly("words_allocated",
                             [](const AlignmentResult& r) { return r.counters.words_allocated; })
      .def("__repr__", [](const AlignmentResult& r) {
        return "AlignmentResult(cost=" + std::to_string(r.cost) +
               ", text_consumed=" + std::to_string(r.text_consumed) +
               ", cigar='" + io::format_cigar(r.cigar) + "')";
      });

  m.def(
      "align",
      [](const std::string& pattern, const std::string& text, std::size_t w,
         std::size_t o, std::optional<std::size_t> k, const std::string& mode,
         const std::string& priority) {
        const WindowConfig cfg = make_config(w, o, k, mode, priority);
        py::gil_scoped_release release;
        return align(pattern, text, cfg);
      },
      py::arg("pattern"), py::arg("text"), py::arg("w") = 64, py::arg("o") = 24,
      py::arg("k") = py::none(), py::arg("mode") = "improved",
      py::arg("priority") = "MSID",
      "Windowed alignment of pattern against a prefix of text.");

  m.def(
      "align_batch",
      [](const std::vector<std::pair<std::string, std::string>>& pairs, std::size_t w,
         std::size_t o, std::optional<std::size_t> k, const std::string& mode,
         const std::string& priority, std::size_t threads) {
        const WindowConfig cfg = make_config(w, o, k, mode, priority);
        std::vector<SequencePair> views;
        views.reserve(pairs.size());
        for (const auto& [p, t] : pairs) views.push_back({p, t});
        std::vector<BatchEntry> entries;
        {
          py::gil_scoped_release release;
          entries = align_batch(views, cfg, threads);
        }
        // Failed slots come back as their error message.
        py::list out;
        for (BatchEntry& e : entries) {
          if (e.ok()) {
            out.append(py::cast(std::move(*e.result)));
          } else {
            out.append(py::str(e.message));
          }
        }
        return out;
      },
      py::arg("pairs"), py::arg("w") = 64, py::arg("o") = 24, py::arg("k") = py::none(),
      py::arg("mode") = "improved", py::arg("priority") = "MSID", py::arg("threads") = 1);

  m.def(
      "dc_distance",
      [](const std::string& pattern, const std::string& text,
         std::size_t k) -> std::optional<std::size_t> {
        try {
          return dc_improved(pattern, text, k, pattern.size()).outcome.d_min;
        } catch (const NotFound&) {
          return std::nullopt;
        }
      },
      py::arg("pattern"), py::arg("text"), py::arg("k"),
      "Minimal edits aligning pattern to a text suffix, or None above k.");

  m.def("semiglobal_distance", &oracle::semiglobal_distance, py::arg("pattern"),
        py::arg("text"));
  m.def("global_distance", &oracle::global_distance, py::arg("pattern"), py::arg("text"));

  m.def(
      "format_cigar",
      [](const std::string& ops) { return io::format_cigar(ops_from_string(ops)); },
      py::arg("ops"), "Run-length encode a one-char-per-op script such as '==X='.");
  m.def(
      "parse_cigar",
      [](const std::string& cigar) { return ops_to_string(io::parse_cigar(cigar)); },
      py::arg("cigar"));

  m.def("make_reference", &sim::make_reference, py::arg("length"), py::arg("seed"));
  m.def(
      "simulate_read",
      [](const std::string& reference, std::size_t pos, std::size_t length, double sub,
         double ins, double del, std::uint64_t seed) {
        const sim::SimRecord rec =
            sim::simulate_read(reference, pos, length, {sub, ins, del, seed});
        return py::make_tuple(rec.read, io::format_cigar(rec.truth_cigar), rec.truth_cost);
      },
      py::arg("reference"), py::arg("pos"), py::arg("length"), py::arg("sub") = 0.0,
      py::arg("ins") = 0.0, py::arg("del_") = 0.0, py::arg("seed") = 0,
      "Returns (read, truth_cigar, truth_cost).");
}
