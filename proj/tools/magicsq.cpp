#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "magicsq/analysis.hpp"
#include "magicsq/double_even.hpp"
#include "magicsq/enumeration.hpp"
#include "magicsq/io.hpp"
#include "magicsq/single_even.hpp"

namespace {

// One labeled block of --trace output. Full grids render as the text format
// (order line first); partial stages render as bare aligned rows.
struct Stage {
  std::string label;
  std::vector<std::vector<int>> rows;
  bool full_grid = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw magicsq::Error("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::vector<std::vector<int>> rows_of(const magicsq::Square& square) {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= square.order(); ++i) {
    std::vector<int> row;
    for (int j = 1; j <= square.order(); ++j) row.push_back(square.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<int>> rows_of(const magicsq::GappedSquare& grid) {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= grid.order; ++i) {
    std::vector<int> row;
    for (int j = 1; j <= grid.order; ++j) row.push_back(grid.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

int digits(int value) {
  int width = 1;
  while (value >= 10) {
    value /= 10;
    ++width;
  }
  return width;
}

void print_aligned(std::ostream& out, const std::vector<std::vector<int>>& rows,
                   int order) {
  const int width = digits(order * order);
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out << ' ';
      const std::string value = std::to_string(row[j]);
      for (int pad = width - static_cast<int>(value.size()); pad > 0; --pad) {
        out << ' ';
      }
      out << value;
    }
    out << '\n';
  }
}

void print_trace(const std::vector<Stage>& stages, int order,
                 const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["order"] = order;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const Stage& stage : stages) {
      nlohmann::ordered_json entry;
      entry["label"] = stage.label;
      entry["rows"] = stage.rows;
      list.push_back(std::move(entry));
    }
    doc["stages"] = std::move(list);
    std::cout << doc.dump(2) << '\n';
    return;
  }
  for (std::size_t k = 0; k < stages.size(); ++k) {
    if (k > 0) std::cout << '\n';
    std::cout << "# " << stages[k].label << '\n';
    if (stages[k].full_grid) std::cout << order << '\n';
    print_aligned(std::cout, stages[k].rows, order);
  }
}

int cmd_generate(int order, const std::string& method,
                 const std::string& format, bool trace) {
  if (trace && format == "csv") {
    std::cerr << "error: --trace is not available with csv output\n";
    return 2;
  }

  std::string resolved = method;
  if (resolved == "auto") {
    if (order >= 1 && order % 2 != 0) {
      std::cerr << "error: odd orders not supported (got " << order << ")\n";
      return 2;
    }
    resolved = order % 4 == 0 ? "double-even" : "single-even";
  }

  std::vector<Stage> stages;
  std::optional<magicsq::Square> result;
  if (resolved == "double-even") {
    magicsq::DoubleEvenTrace built = magicsq::construct_double_even(order);
    stages = {
        {"columns/Fig2a", rows_of(built.stage_columns), true},
        {"reversed/Fig2b-pre-swap", rows_of(built.stage_reversed), true},
        {"final", rows_of(built.final), true},
    };
    result = std::move(built.final);
  } else if (resolved == "single-even") {
    magicsq::SingleEvenTrace built = magicsq::construct_single_even(order);
    stages = {
        {"outer/Fig5b", rows_of(built.stage_outer), false},
        {"center-base/Fig6a",
         {built.stage_center_base.upper, built.stage_center_base.lower},
         false},
        {"center-final/Fig6b",
         {built.stage_center_final.upper, built.stage_center_final.lower},
         false},
        {"pre-fix", rows_of(built.pre_fix), true},
        {"final", rows_of(built.final), true},
    };
    result = std::move(built.final);
  } else {
    result = magicsq::construct_consecutive(order);
    stages = {{"final", rows_of(*result), true}};
  }

  if (trace) {
    print_trace(stages, order, format);
    return 0;
  }
  if (format == "json") {
    std::cout << magicsq::to_json(*result);
  } else if (format == "csv") {
    std::cout << magicsq::to_csv(*result);
  } else {
    std::cout << magicsq::to_text(*result);
  }
  return 0;
}

int cmd_verify(const std::string& path) {
  const magicsq::Square square = magicsq::parse_square(read_input(path));
  const magicsq::MagicReport report = magicsq::line_sums(square);
  std::cout << magicsq::format_report(report);
  return report.is_magic ? 0 : 1;
}

int cmd_classify(const std::string& path) {
  const magicsq::Square square = magicsq::parse_square(read_input(path));
  try {
    std::cout << magicsq::to_string(magicsq::classify(square)) << '\n';
  } catch (const magicsq::NotMagicError& e) {
    std::cout << magicsq::format_report(e.report());
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int cmd_count(int order, bool emit) {
  const auto sink = [](const magicsq::Square& square) {
    std::cout << magicsq::to_text(square) << '\n';
  };
  const magicsq::EnumerationResult result =
      magicsq::count_magic(order, emit, sink);
  std::cout << "order: " << result.order << '\n';
  std::cout << "raw: " << result.raw_count << '\n';
  std::cout << "distinct: " << result.distinct_count << '\n';
  std::cerr << "elapsed: " << result.elapsed_seconds << " s\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Even-order primitive magic squares: build, verify, classify, count."};
  app.require_subcommand(1);

  int gen_order = 0;
  std::string gen_method = "auto";
  std::string gen_format = "text";
  bool gen_trace = false;
  CLI::App* generate = app.add_subcommand("generate", "Construct a magic square");
  generate->add_option("-n,--order", gen_order, "Order of the square")
      ->required();
  generate->add_option("--method", gen_method, "Construction to use")
      ->check(CLI::IsMember({"auto", "double-even", "single-even", "consecutive"}))
      ->capture_default_str();
  generate->add_option("--format", gen_format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  generate->add_flag("--trace", gen_trace, "Print every pipeline stage");

  std::string verify_path = "-";
  CLI::App* verify = app.add_subcommand("verify", "Check all line sums");
  verify->add_option("input", verify_path, "Input file, or - for stdin");

  std::string classify_path = "-";
  CLI::App* classify = app.add_subcommand("classify", "Name the magic class");
  classify->add_option("input", classify_path, "Input file, or - for stdin");

  int count_order = 0;
  bool count_emit = false;
  CLI::App* count = app.add_subcommand("count", "Enumerate small orders");
  count->add_option("-n,--order", count_order, "Order to enumerate")
      ->required();
  count->add_flag("--emit", count_emit, "Stream the distinct squares");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*generate) {
      return cmd_generate(gen_order, gen_method, gen_format, gen_trace);
    }
    if (*verify) return cmd_verify(verify_path);
    if (*classify) return cmd_classify(classify_path);
    if (*count) return cmd_count(count_order, count_emit);
  } catch (const magicsq::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
