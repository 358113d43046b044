#include "magicsq/io.hpp"

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace magicsq {

namespace {

int digits(int value) {
  int width = 1;
  while (value >= 10) {
    value /= 10;
    ++width;
  }
  return width;
}

struct Token {
  int value = 0;
  int line = 0;    // 1-based
  int column = 0;  // 1-based
};

int parse_int(std::string_view text, int line, int column) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("not an integer: '" + std::string(text) + "'", line,
                     column);
  }
  return value;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<Token> scan_numbers(std::string_view text) {
  std::vector<Token> tokens;
  const std::vector<std::string_view> lines = split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string_view line = lines[li];
    std::size_t pos = 0;
    while (pos < line.size()) {
      if (is_space(line[pos])) {
        ++pos;
        continue;
      }
      std::size_t end = pos;
      while (end < line.size() && !is_space(line[end])) ++end;
      const int line_no = static_cast<int>(li) + 1;
      const int col_no = static_cast<int>(pos) + 1;
      tokens.push_back(Token{
          parse_int(line.substr(pos, end - pos), line_no, col_no), line_no,
          col_no});
      pos = end;
    }
  }
  return tokens;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  return text;
}

bool blank(std::string_view line) { return trim(line).empty(); }

}  // namespace

std::string to_text(const Square& square) {
  const int n = square.order();
  const int width = digits(n * n);
  std::ostringstream out;
  out << n << '\n';
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j > 1) out << ' ';
      const std::string value = std::to_string(square.at(i, j));
      for (int pad = width - static_cast<int>(value.size()); pad > 0; --pad) {
        out << ' ';
      }
      out << value;
    }
    out << '\n';
  }
  return out.str();
}

std::string to_json(const Square& square) {
  const int n = square.order();
  nlohmann::ordered_json doc;
  doc["order"] = n;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 1; i <= n; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 1; j <= n; ++j) row.push_back(square.at(i, j));
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string to_csv(const Square& square) {
  const int n = square.order();
  std::ostringstream out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j > 1) out << ',';
      out << square.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

Square parse_text(std::string_view text) {
  const std::vector<Token> tokens = scan_numbers(text);
  if (tokens.empty()) {
    throw ParseError("empty input");
  }
  const long long order = tokens.front().value;
  if (order < 1) {
    throw ParseError("order must be positive, got " + std::to_string(order),
                     tokens.front().line, tokens.front().column);
  }
  const long long expected = order * order;
  const long long got = static_cast<long long>(tokens.size()) - 1;
  if (got < expected) {
    throw ParseError("order " + std::to_string(order) + " needs " +
                     std::to_string(expected) + " values, got " +
                     std::to_string(got));
  }
  if (got > expected) {
    const Token& extra = tokens[static_cast<std::size_t>(expected) + 1];
    throw ParseError("unexpected extra value after " +
                         std::to_string(expected) + " cells",
                     extra.line, extra.column);
  }
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(expected));
  for (std::size_t k = 1; k < tokens.size(); ++k) {
    values.push_back(tokens[k].value);
  }
  return Square(static_cast<int>(order), std::move(values));
}

Square parse_csv(std::string_view text) {
  std::vector<int> values;
  int order = 0;
  int rows = 0;
  const std::vector<std::string_view> lines = split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string_view line = lines[li];
    if (blank(line)) continue;
    ++rows;
    const int line_no = static_cast<int>(li) + 1;
    int fields = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t end = line.find(',', start);
      const std::string_view raw =
          line.substr(start, end == std::string_view::npos ? end : end - start);
      const std::string_view field = trim(raw);
      const int col_no = static_cast<int>(start) + 1;
      if (field.empty()) {
        throw ParseError("empty field", line_no, col_no);
      }
      values.push_back(parse_int(
          field, line_no,
          col_no + static_cast<int>(field.data() - raw.data())));
      ++fields;
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
    if (order == 0) {
      order = fields;
    } else if (fields != order) {
      throw ParseError("row has " + std::to_string(fields) +
                           " fields, expected " + std::to_string(order),
                       line_no, 1);
    }
  }
  if (order == 0) {
    throw ParseError("empty input");
  }
  if (rows != order) {
    throw ParseError("got " + std::to_string(rows) + " rows of " +
                     std::to_string(order) + " fields; a square needs " +
                     std::to_string(order));
  }
  return Square(order, std::move(values));
}

Square parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("top level must be an object");
  }
  if (!doc.contains("order") || !doc["order"].is_number_integer()) {
    throw ParseError("missing integer field 'order'");
  }
  if (!doc.contains("rows") || !doc["rows"].is_array()) {
    throw ParseError("missing array field 'rows'");
  }
  const long long order = doc["order"].get<long long>();
  if (order < 1) {
    throw ParseError("order must be positive, got " + std::to_string(order));
  }
  const auto& rows = doc["rows"];
  if (static_cast<long long>(rows.size()) != order) {
    throw ParseError("'rows' has " + std::to_string(rows.size()) +
                     " rows, expected " + std::to_string(order));
  }
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(order * order));
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<long long>(row.size()) != order) {
      throw ParseError("every row must be an array of " +
                       std::to_string(order) + " integers");
    }
    for (const auto& cell : row) {
      if (!cell.is_number_integer()) {
        throw ParseError("cell values must be integers, got " + cell.dump());
      }
      values.push_back(cell.get<int>());
    }
  }
  return Square(static_cast<int>(order), std::move(values));
}

Square parse_square(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() &&
         (is_space(text[pos]) || text[pos] == '\n')) {
    ++pos;
  }
  if (pos == text.size()) {
    throw ParseError("empty input");
  }
  if (text[pos] == '{') {
    return parse_json(text);
  }
  const std::size_t line_end = text.find('\n', pos);
  const std::string_view first_line =
      text.substr(pos, line_end == std::string_view::npos ? line_end
                                                          : line_end - pos);
  if (first_line.find(',') != std::string_view::npos) {
    return parse_csv(text);
  }
  // A lone "1" is the only valid single-cell csv; read as plain text it
  // would be an order line with a missing body, so take the reading that
  // denotes a square.
  std::size_t tail = pos + 1;
  while (tail < text.size() && (is_space(text[tail]) || text[tail] == '\n')) {
    ++tail;
  }
  if (text[pos] == '1' && tail == text.size()) {
    return parse_csv(text);
  }
  return parse_text(text);
}

std::string format_report(const MagicReport& report) {
  std::ostringstream out;
  out << "order: " << report.row_sums.size() << '\n';
  out << "magic constant: " << report.magic_constant << '\n';
  out << "row sums:";
  for (long long sum : report.row_sums) out << ' ' << sum;
  out << '\n';
  out << "column sums:";
  for (long long sum : report.col_sums) out << ' ' << sum;
  out << '\n';
  out << "main diagonal: " << report.main_diag_sum << '\n';
  out << "anti-diagonal: " << report.anti_diag_sum << '\n';
  out << "verdict: " << (report.is_magic ? "magic" : "not magic") << '\n';
  if (report.first_violation) {
    out << "first violation: " << line_name(*report.first_violation)
        << " (sum " << report.first_violation->sum << ", expected "
        << report.magic_constant << ")\n";
  }
  return out.str();
}

}  // namespace magicsq
