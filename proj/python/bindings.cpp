// Python face of the library: thin declarative bindings, no logic of its own.
// pybind11 already maps invalid_argument/domain_error to ValueError and
// overflow_error to OverflowError, which is exactly the contract we document.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>
#include <string>

#include "strangeroots/alist.hpp"
#include "strangeroots/correspondence.hpp"
#include "strangeroots/fagan.hpp"
#include "strangeroots/root_search.hpp"
#include "strangeroots/tchoukaillon.hpp"
#include "strangeroots/verify.hpp"

namespace py = pybind11;
using namespace strangeroots;

namespace {

std::string board_repr(const Board& b) {
  std::string s = "Board((";
  const auto& c = b.counts();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "))";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "strange roots, Fagan chains, and Tchoukaillon solitaire";

  py::class_<AlistPair>(m, "AlistPair")
      .def(py::init([](Int index, Int value) { return AlistPair{index, value}; }),
           py::arg("index"), py::arg("value"))
      .def_readwrite("index", &AlistPair::index)
      .def_readwrite("value", &AlistPair::value)
      .def("__eq__", [](const AlistPair& a, const AlistPair& b) { return a == b; })
      .def("__repr__", [](const AlistPair& p) {
        return "<" + std::to_string(p.index) + "," + std::to_string(p.value) + ">";
      });

  py::class_<AlistSequence>(m, "AlistSequence")
      .def_readwrite("seed", &AlistSequence::seed)
      .def_readwrite("pairs", &AlistSequence::pairs)
      .def_property_readonly("root", &AlistSequence::root)
      .def("__eq__", [](const AlistSequence& a, const AlistSequence& b) { return a == b; })
      .def("__repr__", [](const AlistSequence& a) {
        return "AlistSequence(seed=" + std::to_string(a.seed) + ", root=" +
               std::to_string(a.root()) + ")";
      });

  py::class_<FaganPair>(m, "FaganPair")
      .def(py::init([](Int index, Int value) { return FaganPair{index, value}; }),
           py::arg("index"), py::arg("value"))
      .def_readwrite("index", &FaganPair::index)
      .def_readwrite("value", &FaganPair::value)
      .def("__eq__", [](const FaganPair& a, const FaganPair& b) { return a == b; })
      .def("__repr__", [](const FaganPair& p) {
        return "(" + std::to_string(p.index) + "," + std::to_string(p.value) + ")";
      });

  py::class_<FaganSequence>(m, "FaganSequence")
      .def_readwrite("seed", &FaganSequence::seed)
      .def_readwrite("pairs", &FaganSequence::pairs)
      .def_property_readonly("cf", &FaganSequence::cf)
      .def("__repr__", [](const FaganSequence& f) {
        return "FaganSequence(seed=" + std::to_string(f.seed) + ", cf=" + std::to_string(f.cf()) +
               ")";
      });

  py::class_<Board>(m, "Board")
      .def(py::init<>())
      .def(py::init<std::vector<Int>>(), py::arg("counts"))
      .def_property_readonly("length", &Board::length)
      .def("counts", &Board::counts)
      .def("stones", &Board::stones, py::arg("hole"))
      .def("total", &Board::total)
      .def("winning_shape", &Board::winning_shape)
      .def("empty", &Board::empty)
      .def("__eq__", [](const Board& a, const Board& b) { return a == b; })
      .def("__len__", [](const Board& b) { return b.length(); })
      .def("__repr__", &board_repr);

  py::class_<PlayTrace>(m, "PlayTrace")
      .def_readwrite("selections", &PlayTrace::selections)
      .def_readwrite("states", &PlayTrace::states);

  py::class_<TchoukBuilder>(m, "TchoukBuilder")
      .def(py::init<>())
      .def("advance", &TchoukBuilder::advance)
      .def_property_readonly("n", &TchoukBuilder::n)
      .def("board", &TchoukBuilder::board);

  py::class_<PreimageInterval>(m, "PreimageInterval")
      .def_readwrite("lo", &PreimageInterval::lo)
      .def_readwrite("hi", &PreimageInterval::hi)
      .def_property_readonly("count", &PreimageInterval::count)
      .def("__repr__", [](const PreimageInterval& iv) {
        return "PreimageInterval(lo=" + std::to_string(iv.lo) + ", hi=" + std::to_string(iv.hi) +
               ")";
      });

  py::class_<XSequence>(m, "XSequence")
      .def_readwrite("root", &XSequence::root)
      .def_readwrite("values", &XSequence::values)
      .def_readwrite("divisible_at", &XSequence::divisible_at)
      .def_property_readonly("x1", &XSequence::x1)
      .def_property_readonly("unique", &XSequence::unique);

  py::class_<RootRecord>(m, "RootRecord")
      .def_readwrite("root", &RootRecord::root)
      .def_readwrite("preimage_lo", &RootRecord::preimage_lo)
      .def_readwrite("preimage_hi", &RootRecord::preimage_hi)
      .def_readwrite("preimages", &RootRecord::preimages)
      .def_property_readonly("count", &RootRecord::count)
      .def("__eq__", [](const RootRecord& a, const RootRecord& b) { return a == b; })
      .def("__repr__", [](const RootRecord& r) {
        return "RootRecord(root=" + std::to_string(r.root) + ", lo=" +
               std::to_string(r.preimage_lo) + ", hi=" + std::to_string(r.preimage_hi) + ")";
      });

  m.def("alist_step", &alist_step, py::arg("i"), py::arg("y"),
        "least successor value at index i+1");
  m.def("alist", &alist, py::arg("n"), "full chain from <1, n> to its terminal pair");
  m.def("strange_root", &strange_root, py::arg("n"), "terminal value of the chain for n");
  m.def("w_sequence", &w_sequence, py::arg("n"), "successive differences + 1 along the chain");

  m.def("fagan_sequence", &fagan_sequence, py::arg("m"), "parity-corrected chain from (2, 2m)");
  m.def("cf", &cf, py::arg("m"), "terminal value of the chain from (2, 2m)");
  m.def("to_fagan", &to_fagan, py::arg("pair"), "<x,y> to (x, 2y-x)");
  m.def("from_fagan", &from_fagan, py::arg("pair"), "(x,y) back to <x, (x+y)/2>");

  m.def("play_move", &play_move, py::arg("board"), py::arg("hole"),
        "sow one hole leftward; None when the move overshoots the pit");
  m.def("tchouk", &tchouk, py::arg("n"), "winning configuration of n stones, modular form");
  m.def("tchouk_recursive", &tchouk_recursive, py::arg("n"),
        "winning configuration grown one stone at a time");
  m.def("solve", &solve, py::arg("board"), py::arg("record_states") = true,
        "play by the index rule; None for losing boards");
  m.def("move_vector", &move_vector, py::arg("n"), "per-hole play counts by the ceiling recurrence");
  m.def("move_vector_from_board", &move_vector_from_board, py::arg("board"),
        "per-hole play counts recovered from the board alone");
  m.def("t", &t, py::arg("k"), "least stone count reaching hole k, by backward rounding");
  m.def("t_by_scan", &t_by_scan, py::arg("k"), "same quantity by first appearance");
  m.def("fagan_property", &fagan_property, py::arg("board"),
        "b_1 = 1, terminal hole full, interior holes strictly under their index");

  m.def("alist_to_board", &alist_to_board, py::arg("chain"),
        "board whose move counts reproduce the chain's differences");
  m.def("board_to_alist", py::overload_cast<const Board&, Int>(&board_to_alist), py::arg("board"),
        py::arg("n"), "chain recovered from suffix sums");
  m.def("board_to_alist", py::overload_cast<const Board&>(&board_to_alist), py::arg("board"),
        "chain recovered from suffix sums, seed inferred from the stone count");
  m.def("preimage_count", &preimage_count, py::arg("k"), "how many seeds have strange root k");
  m.def("preimage_interval", &preimage_interval, py::arg("k"),
        "the contiguous seed interval with strange root k");

  m.def("inverse_step", &inverse_step, py::arg("i"), py::arg("v"),
        "all u with a step from <i, u> to <i+1, v>");
  m.def("x_sequence", &x_sequence, py::arg("r"),
        "largest-preimage chain built backward from <r, r>");
  m.def("is_unique_root", &is_unique_root, py::arg("r"),
        "True when at most two seeds share the root r");
  m.def(
      "scan_unique_roots",
      [](Int r_max, int jobs, Int preimage_cap) {
        ScanOptions opts;
        opts.jobs = jobs;
        opts.preimage_cap = preimage_cap;
        return scan_unique_roots(r_max, opts);
      },
      py::arg("r_max"), py::arg("jobs") = 0, py::arg("preimage_cap") = 64,
      py::call_guard<py::gil_scoped_release>(),
      "every root up to r_max with at most two preimages");

  m.def(
      "run_verify",
      [](const std::string& level) {
        if (level != "quick" && level != "full")
          throw std::invalid_argument("run_verify: level must be 'quick' or 'full'");
        std::ostringstream report;
        const bool ok = run_verify(level == "quick" ? VerifyLevel::quick : VerifyLevel::full, report);
        return py::make_tuple(ok, report.str());
      },
      py::arg("level") = "quick", "run the cross-check suites; returns (ok, report)");
}
