#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "magicsq/analysis.hpp"
#include "magicsq/double_even.hpp"
#include "magicsq/enumeration.hpp"
#include "magicsq/io.hpp"
#include "magicsq/single_even.hpp"

namespace py = pybind11;

namespace {

std::vector<std::vector<int>> rows_of(const magicsq::Square& square) {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= square.order(); ++i) {
    std::vector<int> row;
    for (int j = 1; j <= square.order(); ++j) row.push_back(square.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Even-order primitive magic squares";

  py::register_exception<magicsq::Error>(m, "MagicSquareError");

  py::class_<magicsq::Cell>(m, "Cell")
      .def(py::init<int, int>(), py::arg("row"), py::arg("col"))
      .def_readonly("row", &magicsq::Cell::row)
      .def_readonly("col", &magicsq::Cell::col)
      .def(py::self == py::self)
      .def("__repr__", [](const magicsq::Cell& cell) {
        return "Cell(row=" + std::to_string(cell.row) +
               ", col=" + std::to_string(cell.col) + ")";
      });

  py::class_<magicsq::Square>(m, "Square")
      .def(py::init<int, std::vector<int>>(), py::arg("order"),
           py::arg("values"))
      .def_property_readonly("order", &magicsq::Square::order)
      .def("at", &magicsq::Square::at, py::arg("row"), py::arg("col"))
      .def_property_readonly("cells", &magicsq::Square::cells)
      .def_property_readonly("rows", &rows_of)
      .def(py::self == py::self)
      .def("__repr__", [](const magicsq::Square& square) {
        return "Square(order=" + std::to_string(square.order()) + ")";
      })
      .def("__str__", &magicsq::to_text);

  py::enum_<magicsq::LineKind>(m, "LineKind")
      .value("ROW", magicsq::LineKind::Row)
      .value("COLUMN", magicsq::LineKind::Column)
      .value("MAIN_DIAGONAL", magicsq::LineKind::MainDiagonal)
      .value("ANTI_DIAGONAL", magicsq::LineKind::AntiDiagonal);

  py::class_<magicsq::LineRef>(m, "LineRef")
      .def_readonly("kind", &magicsq::LineRef::kind)
      .def_readonly("index", &magicsq::LineRef::index)
      .def_readonly("sum", &magicsq::LineRef::sum)
      .def("__repr__", [](const magicsq::LineRef& line) {
        return "LineRef(" + magicsq::line_name(line) +
               ", sum=" + std::to_string(line.sum) + ")";
      });

  py::class_<magicsq::MagicReport>(m, "MagicReport")
      .def_readonly("magic_constant", &magicsq::MagicReport::magic_constant)
      .def_readonly("row_sums", &magicsq::MagicReport::row_sums)
      .def_readonly("col_sums", &magicsq::MagicReport::col_sums)
      .def_readonly("main_diag_sum", &magicsq::MagicReport::main_diag_sum)
      .def_readonly("anti_diag_sum", &magicsq::MagicReport::anti_diag_sum)
      .def_readonly("is_magic", &magicsq::MagicReport::is_magic)
      .def_readonly("first_violation", &magicsq::MagicReport::first_violation)
      .def("__str__", &magicsq::format_report);

  py::enum_<magicsq::MagicClass>(m, "MagicClass")
      .value("ASSOCIATED", magicsq::MagicClass::Associated)
      .value("PARALLEL", magicsq::MagicClass::Parallel)
      .value("MIXED", magicsq::MagicClass::Mixed);

  py::class_<magicsq::DoubleEvenTrace>(m, "DoubleEvenTrace")
      .def_readonly("stage_columns", &magicsq::DoubleEvenTrace::stage_columns)
      .def_readonly("stage_reversed",
                    &magicsq::DoubleEvenTrace::stage_reversed)
      .def_readonly("final", &magicsq::DoubleEvenTrace::final)
      .def_readonly("reversed_rows", &magicsq::DoubleEvenTrace::reversed_rows)
      .def_readonly("swapped_cells", &magicsq::DoubleEvenTrace::swapped_cells);

  py::class_<magicsq::GappedSquare>(m, "GappedSquare")
      .def_readonly("order", &magicsq::GappedSquare::order)
      .def_readonly("cells", &magicsq::GappedSquare::cells)
      .def("at", &magicsq::GappedSquare::at, py::arg("row"), py::arg("col"));

  py::class_<magicsq::CenterRows>(m, "CenterRows")
      .def_readonly("upper", &magicsq::CenterRows::upper)
      .def_readonly("lower", &magicsq::CenterRows::lower);

  py::class_<magicsq::SingleEvenTrace>(m, "SingleEvenTrace")
      .def_readonly("stage_outer", &magicsq::SingleEvenTrace::stage_outer)
      .def_readonly("stage_center_base",
                    &magicsq::SingleEvenTrace::stage_center_base)
      .def_readonly("stage_center_final",
                    &magicsq::SingleEvenTrace::stage_center_final)
      .def_readonly("pre_fix", &magicsq::SingleEvenTrace::pre_fix)
      .def_readonly("final", &magicsq::SingleEvenTrace::final)
      .def_readonly("fix_cells", &magicsq::SingleEvenTrace::fix_cells);

  py::class_<magicsq::EnumerationResult>(m, "EnumerationResult")
      .def_readonly("order", &magicsq::EnumerationResult::order)
      .def_readonly("raw_count", &magicsq::EnumerationResult::raw_count)
      .def_readonly("distinct_count",
                    &magicsq::EnumerationResult::distinct_count)
      .def_readonly("elapsed_seconds",
                    &magicsq::EnumerationResult::elapsed_seconds)
      .def_readonly("squares", &magicsq::EnumerationResult::squares);

  m.def("magic_constant", &magicsq::magic_constant, py::arg("order"));
  m.def("complement", &magicsq::complement, py::arg("value"), py::arg("order"));
  m.def("line_sums", &magicsq::line_sums, py::arg("square"));
  m.def("construct_double_even", &magicsq::construct_double_even,
        py::arg("order"));
  m.def("construct_single_even", &magicsq::construct_single_even,
        py::arg("order"));
  m.def("construct_consecutive", &magicsq::construct_consecutive,
        py::arg("order"));
  m.def("classify", &magicsq::classify, py::arg("square"));
  m.def("is_associated", &magicsq::is_associated, py::arg("square"));
  m.def("is_parallel", &magicsq::is_parallel, py::arg("square"));
  m.def("canonical_form", &magicsq::canonical_form, py::arg("square"));
  m.def("dihedral_images", &magicsq::dihedral_images, py::arg("square"));
  m.def("count_magic", &magicsq::count_magic, py::arg("order"),
        py::arg("emit") = false,
        py::arg("emit_sink") = std::function<void(const magicsq::Square&)>());
  m.def("to_text", &magicsq::to_text, py::arg("square"));
  m.def("to_json", &magicsq::to_json, py::arg("square"));
  m.def("to_csv", &magicsq::to_csv, py::arg("square"));
  m.def("parse_text",
        [](const std::string& text) { return magicsq::parse_text(text); },
        py::arg("text"));
  m.def("parse_json",
        [](const std::string& text) { return magicsq::parse_json(text); },
        py::arg("text"));
  m.def("parse_csv",
        [](const std::string& text) { return magicsq::parse_csv(text); },
        py::arg("text"));
  m.def("parse_square",
        [](const std::string& text) { return magicsq::parse_square(text); },
        py::arg("text"));
  m.def("classify_name", [](const magicsq::Square& square) {
    return std::string(magicsq::to_string(magicsq::classify(square)));
  });
}
