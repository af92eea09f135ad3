#ifndef BCKCODE_CODE_HPP
#define BCKCODE_CODE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bck {

using Symbol = std::uint32_t;

/// Alphabet {0, 1, ..., n-1}, n ≥ 2.
class Alphabet {
 public:
  explicit Alphabet(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  bool contains(Symbol s) const noexcept { return s < n_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::size_t n_;
};

class Codeword {
 public:
  /// Throws on an empty symbol list.
  explicit Codeword(std::vector<Symbol> symbols);

  std::size_t length() const noexcept { return symbols_.size(); }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

  /// 1-based access, matching how positions are reported to users.
  Symbol at(std::size_t position) const { return symbols_.at(position - 1); }

  friend bool operator==(const Codeword&, const Codeword&) = default;

 private:
  std::vector<Symbol> symbols_;
};

/// Digit-string form ("3211") when every symbol is a single digit,
/// otherwise space-separated decimals.
std::string to_string(const Codeword& word);

/// Parses "3211" or "3 2 1 1".
Codeword parse_codeword(std::string_view text);

/// Ordered list of equal-length codewords over an alphabet.
///
/// Holds any well-typed code; ordering, duplicates and admissibility are
/// checked separately. An empty word list is representable so that
/// validation can report it.
class BlockCode {
 public:
  BlockCode(Alphabet alphabet, std::size_t length, std::vector<Codeword> words);

  /// Length is taken from the first word.
  BlockCode(Alphabet alphabet, const std::vector<Codeword>& words);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t length() const noexcept { return length_; }
  std::size_t size() const noexcept { return words_.size(); }
  const std::vector<Codeword>& words() const noexcept { return words_; }

  /// 1-based.
  const Codeword& word(std::size_t index) const { return words_.at(index - 1); }

  bool contains(const Codeword& w) const;

  friend bool operator==(const BlockCode&, const BlockCode&) = default;

 private:
  Alphabet alphabet_;
  std::size_t length_;
  std::vector<Codeword> words_;
};

/// Lexicographic order. Throws ErrorKind::kLengthMismatch on unequal lengths.
std::strong_ordering lex_compare(const Codeword& u, const Codeword& v);

/// Words ascending by lex_compare. Throws ErrorKind::kDuplicateCodeword.
BlockCode sort_ascending(const BlockCode& code);

enum class Rule {
  kNonEmpty,          // at least one word
  kSymbolRange,       // R1: symbols in 1..n-1
  kNonIncreasing,     // R2: symbols non-increasing left to right
  kSelfBound,         // R3: symbol at position w_k is ≤ k, k = 1..min(n-1, q)
  kTrailingOnes,      // R4: positions j ≥ n carry 1
  kAscendingDistinct, // R5: words strictly ascending
  kRowFit,            // R6: for q < n, words must fit below the diagonal (q ≤ n-2)
};

std::string_view rule_id(Rule rule);  // "R1".."R6", "R0" for kNonEmpty
std::string_view rule_description(Rule rule);

struct RuleFailure {
  Rule rule;
  std::optional<std::size_t> word;      // 1-based, absent for code-level rules
  std::optional<std::size_t> position;  // 1-based
  std::string detail;

  friend bool operator==(const RuleFailure&, const RuleFailure&) = default;
};

struct ValidationReport {
  bool admissible = true;
  std::vector<RuleFailure> failures;

  bool violates(Rule rule) const;
};

/// Checks every admissibility rule and lists every failure.
ValidationReport validate_admissible(const BlockCode& code);

/// Rules the matrix construction cannot do without: a non-empty, strictly
/// ascending code over 1..n-1 whose words fit their rows. Codes that only
/// fail R2-R4 still have a well-defined matrix.
ValidationReport validate_constructible(const BlockCode& code);

/// Position where a later word drops below the word before it.
struct DominanceGap {
  std::size_t word;      // 1-based index of the later word
  std::size_t position;  // 1-based
};

/// Places where consecutive words are not componentwise ordered
/// (w_i[j] > w_{i+1}[j]). Lexicographic ascent does not rule these out, and
/// when present the constructed table can fail BCI-1 even for an
/// admissible code.
std::vector<DominanceGap> dominance_gaps(const BlockCode& code);

}  // namespace bck

#endif  // BCKCODE_CODE_HPP
