#include "qk/qnd_format.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>

namespace qk {
namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::kParse, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

std::size_t parse_count(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(line, "expected a nonnegative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

CayleyTable parse_table(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t order = 0;
  bool have_header = false;
  std::vector<Element> entries;
  std::size_t rows = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (!have_header) {
      if (tokens.size() != 1) fail(line_no, "header must be a single integer n");
      order = parse_count(tokens[0], line_no);
      have_header = true;
      entries.reserve(order * order);
      continue;
    }
    if (rows == order) fail(line_no, "more than " + std::to_string(order) + " rows");
    if (tokens.size() != order) {
      fail(line_no, "row " + std::to_string(rows) + " has " + std::to_string(tokens.size()) +
                        " entries, expected " + std::to_string(order));
    }
    for (auto tok : tokens) {
      std::size_t v = parse_count(tok, line_no);
      if (v >= order) {
        fail(line_no, "entry " + std::to_string(v) + " out of range [0," +
                          std::to_string(order) + ")");
      }
      entries.push_back(static_cast<Element>(v));
    }
    ++rows;
  }
  if (!have_header) fail(line_no, "missing header");
  if (rows != order) {
    fail(line_no, "wrong row count: expected " + std::to_string(order) + " rows, got " +
                      std::to_string(rows));
  }
  return CayleyTable(order, std::move(entries));
}

CayleyTable read_table(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_table(text);
}

std::string serialize_table(const CayleyTable& table) {
  std::ostringstream out;
  out << table.order() << '\n';
  for (std::size_t i = 0; i < table.order(); ++i) {
    auto row = table.row(static_cast<Element>(i));
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      out << row[j];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace qk
