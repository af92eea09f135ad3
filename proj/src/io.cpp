#include "bckcode/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace bck {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorKind::kParse,
            (line == 0 ? std::string("end of input")
                       : "line " + std::to_string(line) +
                             (column == 0 ? std::string() : ", column " + std::to_string(column))) +
                ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

// Splits into non-blank lines of whitespace-separated tokens, stripping
// '#' comments.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      const std::size_t begin = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > begin) line.tokens.push_back({raw.substr(begin, i - begin), begin + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::size_t to_number(const Line& line, const Token& token, std::string_view what) {
  std::size_t value = 0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line.number, token.column,
                     "expected a non-negative integer for " + std::string(what) + ", got '" +
                         std::string(token.text) + "'");
  }
  return value;
}

void expect_count(const Line& line, std::size_t expected, std::string_view what) {
  if (line.tokens.size() != expected) {
    throw ParseError(line.number, 0,
                     "expected " + std::to_string(expected) + " " + std::string(what) + ", got " +
                         std::to_string(line.tokens.size()));
  }
}

bool is_default(const std::vector<std::string>& labels) { return labels == default_labels(labels.size()); }

std::size_t display_width(std::string_view s) {
  // Count code points, not bytes, so θ aligns.
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string pad(std::string_view s, std::size_t width) {
  std::string out(s);
  out.append(width > display_width(s) ? width - display_width(s) : 0, ' ');
  return out;
}

}  // namespace

BlockCode parse_code_file(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, 0, "missing header 'n q m'");
  const Line& header = lines.front();
  expect_count(header, 3, "header fields (n q m)");
  const std::size_t n = to_number(header, header.tokens[0], "n");
  const std::size_t q = to_number(header, header.tokens[1], "q");
  const std::size_t m = to_number(header, header.tokens[2], "m");
  if (n < 2) throw ParseError(header.number, header.tokens[0].column, "alphabet size n must be at least 2");
  if (q < 1) throw ParseError(header.number, header.tokens[1].column, "word length q must be at least 1");

  std::vector<Codeword> words;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (words.size() == m) {
      throw ParseError(line.number, 0, "header declares m=" + std::to_string(m) + " words, found more");
    }
    expect_count(line, q, "symbols");
    std::vector<Symbol> symbols;
    for (const Token& token : line.tokens) {
      const std::size_t s = to_number(line, token, "symbol");
      if (s >= n) {
        throw ParseError(line.number, token.column,
                         "symbol " + std::to_string(s) + " outside alphabet 0.." + std::to_string(n - 1));
      }
      symbols.push_back(static_cast<Symbol>(s));
    }
    words.emplace_back(std::move(symbols));
  }
  if (words.size() != m) {
    throw ParseError(0, 0, "header declares m=" + std::to_string(m) + " words, found " +
                               std::to_string(words.size()));
  }
  return BlockCode(Alphabet(n), q, std::move(words));
}

std::string serialize_code_file(const BlockCode& code) {
  std::ostringstream out;
  out << code.alphabet().size() << ' ' << code.length() << ' ' << code.size() << '\n';
  for (const Codeword& w : code.words()) {
    for (std::size_t j = 0; j < w.length(); ++j) out << (j ? " " : "") << w.symbols()[j];
    out << '\n';
  }
  return out.str();
}

TableFile parse_table_file(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, 0, "missing header 'r'");
  const Line& header = lines.front();
  expect_count(header, 1, "header field (r)");
  const std::size_t r = to_number(header, header.tokens[0], "r");
  if (r < 1) throw ParseError(header.number, header.tokens[0].column, "table size r must be at least 1");
  if (lines.size() < r + 1) {
    throw ParseError(0, 0, "header declares r=" + std::to_string(r) + " rows, found " +
                               std::to_string(lines.size() - 1));
  }

  std::vector<Element> entries;
  entries.reserve(r * r);
  for (std::size_t i = 1; i <= r; ++i) {
    const Line& line = lines[i];
    if (line.tokens.front().text == "labels") {
      throw ParseError(line.number, 0, "labels line before all " + std::to_string(r) + " rows");
    }
    expect_count(line, r, "entries");
    for (const Token& token : line.tokens) {
      const std::size_t e = to_number(line, token, "entry");
      if (e >= r) {
        throw ParseError(line.number, token.column,
                         "entry " + std::to_string(e) + " is not an element index below " + std::to_string(r));
      }
      entries.push_back(static_cast<Element>(e));
    }
  }

  std::vector<std::string> labels = default_labels(r);
  if (lines.size() > r + 1) {
    const Line& line = lines[r + 1];
    if (line.tokens.front().text != "labels") {
      throw ParseError(line.number, 0, "header declares r=" + std::to_string(r) + " rows, found more");
    }
    expect_count(line, r + 1, "tokens on the labels line ('labels' and one name per element)");
    for (std::size_t i = 0; i < r; ++i) labels[i] = std::string(line.tokens[i + 1].text);
    if (lines.size() > r + 2) throw ParseError(lines[r + 2].number, 0, "unexpected content after labels");
  }
  return {CayleyTable(r, std::move(entries)), std::move(labels)};
}

std::string serialize_table_file(const TableFile& file) {
  std::string out = serialize_table_file(file.table);
  if (!is_default(file.labels)) {
    out += "labels";
    for (const std::string& l : file.labels) out += ' ' + l;
    out += '\n';
  }
  return out;
}

std::string serialize_table_file(const CayleyTable& table) {
  std::ostringstream out;
  out << table.size() << '\n';
  for (Element x = 0; x < table.size(); ++x) {
    for (Element y = 0; y < table.size(); ++y) out << (y ? " " : "") << table(x, y);
    out << '\n';
  }
  return out.str();
}

std::vector<std::string> default_labels(std::size_t size) {
  std::vector<std::string> labels;
  labels.reserve(size);
  for (std::size_t i = 0; i < size; ++i) labels.push_back(i == 0 ? "θ" : "a_" + std::to_string(i));
  return labels;
}

std::string render_labeled_table(const CayleyTable& table, const std::vector<std::string>& labels) {
  std::size_t width = 1;
  for (const std::string& l : labels) width = std::max(width, display_width(l));
  std::ostringstream out;
  out << pad("*", width) << " |";
  for (Element y = 0; y < table.size(); ++y) out << ' ' << pad(labels[y], width);
  out << '\n' << std::string(width + 1, '-') << '+' << std::string((width + 1) * table.size(), '-') << '\n';
  for (Element x = 0; x < table.size(); ++x) {
    out << pad(labels[x], width) << " |";
    for (Element y = 0; y < table.size(); ++y) out << ' ' << pad(labels[table(x, y)], width);
    out << '\n';
  }
  return out.str();
}

std::string render_matrix(const CayleyTable& table) {
  const std::size_t width = std::to_string(table.size() - 1).size();
  std::ostringstream out;
  for (Element x = 0; x < table.size(); ++x) {
    for (Element y = 0; y < table.size(); ++y) {
      const std::string v = std::to_string(table(x, y));
      out << (y ? " " : "") << std::string(width - v.size(), ' ') << v;
    }
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace bck
