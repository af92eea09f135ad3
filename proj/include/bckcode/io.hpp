#ifndef BCKCODE_IO_HPP
#define BCKCODE_IO_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bckcode/code.hpp"
#include "bckcode/error.hpp"
#include "bckcode/table.hpp"

namespace bck {

/// Parse failure with a 1-based source location (column 0 when the whole
/// line is at fault, line 0 for end-of-input problems).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Code file:
//   n q m
//   m lines of q space-separated decimal symbols
// Table file:
//   r
//   r lines of r space-separated element indices
//   optional: "labels" followed by r names
// '#' starts a comment; blank lines are ignored.

BlockCode parse_code_file(std::string_view text);
std::string serialize_code_file(const BlockCode& code);

struct TableFile {
  CayleyTable table;
  std::vector<std::string> labels;  // one per element
};

TableFile parse_table_file(std::string_view text);

/// Writes the labels line only when labels differ from default_labels.
std::string serialize_table_file(const TableFile& file);
std::string serialize_table_file(const CayleyTable& table);

/// θ, a_1, a_2, ...
std::vector<std::string> default_labels(std::size_t size);

/// Aligned multiplication table using element labels.
std::string render_labeled_table(const CayleyTable& table, const std::vector<std::string>& labels);

/// Aligned integer matrix.
std::string render_matrix(const CayleyTable& table);

std::string read_file(const std::string& path);

}  // namespace bck

#endif  // BCKCODE_IO_HPP
