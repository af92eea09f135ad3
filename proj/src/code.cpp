#include "bckcode/code.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "bckcode/error.hpp"

namespace bck {

Alphabet::Alphabet(std::size_t n) : n_(n) {
  if (n < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "alphabet needs at least 2 symbols, got " + std::to_string(n));
  }
}

Codeword::Codeword(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw Error(ErrorKind::kInvalidArgument, "codeword must not be empty");
}

std::string to_string(const Codeword& word) {
  const bool digits = std::all_of(word.symbols().begin(), word.symbols().end(),
                                  [](Symbol s) { return s < 10; });
  std::string out;
  for (std::size_t i = 0; i < word.length(); ++i) {
    if (!digits && i > 0) out += ' ';
    out += std::to_string(word.symbols()[i]);
  }
  return out;
}

Codeword parse_codeword(std::string_view text) {
  std::vector<Symbol> symbols;
  const bool spaced = text.find_first_of(" \t,") != std::string_view::npos;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == ',') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::kParse, "invalid character in codeword: '" + std::string(1, c) + "'");
    }
    if (!spaced) {
      symbols.push_back(static_cast<Symbol>(c - '0'));
      ++i;
      continue;
    }
    Symbol value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc()) throw Error(ErrorKind::kParse, "symbol out of range in codeword");
    i = static_cast<std::size_t>(ptr - text.data());
    symbols.push_back(value);
  }
  return Codeword(std::move(symbols));
}

BlockCode::BlockCode(Alphabet alphabet, std::size_t length, std::vector<Codeword> words)
    : alphabet_(alphabet), length_(length), words_(std::move(words)) {
  if (length_ == 0) throw Error(ErrorKind::kInvalidArgument, "code length must be positive");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Codeword& w = words_[i];
    if (w.length() != length_) {
      throw Error(ErrorKind::kLengthMismatch,
                  "word " + std::to_string(i + 1) + " has length " + std::to_string(w.length()) +
                      ", code length is " + std::to_string(length_));
    }
    for (std::size_t j = 0; j < w.length(); ++j) {
      if (!alphabet_.contains(w.symbols()[j])) {
        throw Error(ErrorKind::kOutOfRange,
                    "word " + std::to_string(i + 1) + " position " + std::to_string(j + 1) +
                        ": symbol " + std::to_string(w.symbols()[j]) +
                        " is outside the alphabet of size " + std::to_string(alphabet_.size()));
      }
    }
  }
}

BlockCode::BlockCode(Alphabet alphabet, const std::vector<Codeword>& words)
    : BlockCode(alphabet, words.empty() ? 0 : words.front().length(), words) {}

bool BlockCode::contains(const Codeword& w) const {
  return std::find(words_.begin(), words_.end(), w) != words_.end();
}

std::strong_ordering lex_compare(const Codeword& u, const Codeword& v) {
  if (u.length() != v.length()) {
    throw Error(ErrorKind::kLengthMismatch, "cannot compare codewords of lengths " +
                                                std::to_string(u.length()) + " and " +
                                                std::to_string(v.length()));
  }
  return u.symbols() <=> v.symbols();
}

BlockCode sort_ascending(const BlockCode& code) {
  std::vector<Codeword> words = code.words();
  std::sort(words.begin(), words.end(),
            [](const Codeword& a, const Codeword& b) { return lex_compare(a, b) < 0; });
  auto dup = std::adjacent_find(words.begin(), words.end());
  if (dup != words.end()) {
    throw Error(ErrorKind::kDuplicateCodeword, "duplicate codeword " + to_string(*dup));
  }
  return BlockCode(code.alphabet(), code.length(), std::move(words));
}

std::string_view rule_id(Rule rule) {
  switch (rule) {
    case Rule::kNonEmpty: return "R0";
    case Rule::kSymbolRange: return "R1";
    case Rule::kNonIncreasing: return "R2";
    case Rule::kSelfBound: return "R3";
    case Rule::kTrailingOnes: return "R4";
    case Rule::kAscendingDistinct: return "R5";
    case Rule::kRowFit: return "R6";
  }
  return "?";
}

std::string_view rule_description(Rule rule) {
  switch (rule) {
    case Rule::kNonEmpty: return "code has at least one word";
    case Rule::kSymbolRange: return "symbols lie in 1..n-1";
    case Rule::kNonIncreasing: return "symbols are non-increasing left to right";
    case Rule::kSelfBound: return "symbol at position w_k is at most k, for k = 1..min(n-1,q)";
    case Rule::kTrailingOnes: return "positions n, n+1, ... carry symbol 1";
    case Rule::kAscendingDistinct: return "words are distinct and lexicographically ascending";
    case Rule::kRowFit: return "when q < n, words fit below the diagonal (q <= n-2)";
  }
  return "?";
}

bool ValidationReport::violates(Rule rule) const {
  return std::any_of(failures.begin(), failures.end(),
                     [rule](const RuleFailure& f) { return f.rule == rule; });
}

namespace {

void fail(ValidationReport& report, Rule rule, std::optional<std::size_t> word,
          std::optional<std::size_t> position, std::string detail) {
  report.admissible = false;
  report.failures.push_back({rule, word, position, std::move(detail)});
}

void check_code_level(const BlockCode& code, ValidationReport& report) {
  const std::size_t n = code.alphabet().size();
  const std::size_t q = code.length();
  if (code.size() == 0) fail(report, Rule::kNonEmpty, std::nullopt, std::nullopt, "code is empty");
  if (q < n && q + 2 > n) {
    fail(report, Rule::kRowFit, std::nullopt, std::nullopt,
         "length " + std::to_string(q) + " with n=" + std::to_string(n) +
             ": the first codeword row would reach the diagonal");
  }
  for (std::size_t i = 1; i < code.size(); ++i) {
    const auto order = lex_compare(code.words()[i - 1], code.words()[i]);
    if (order >= 0) {
      fail(report, Rule::kAscendingDistinct, i + 1, std::nullopt,
           order == 0 ? "duplicate of word " + std::to_string(i)
                      : "not greater than word " + std::to_string(i));
    }
  }
}

void check_symbol_range(const BlockCode& code, ValidationReport& report) {
  for (std::size_t i = 1; i <= code.size(); ++i) {
    const Codeword& w = code.word(i);
    for (std::size_t j = 1; j <= w.length(); ++j) {
      if (w.at(j) == 0) fail(report, Rule::kSymbolRange, i, j, "symbol 0");
    }
  }
}

}  // namespace

ValidationReport validate_admissible(const BlockCode& code) {
  ValidationReport report;
  const std::size_t n = code.alphabet().size();
  const std::size_t q = code.length();
  check_code_level(code, report);
  check_symbol_range(code, report);

  for (std::size_t i = 1; i <= code.size(); ++i) {
    const Codeword& w = code.word(i);
    for (std::size_t j = 2; j <= q; ++j) {
      if (w.at(j - 1) < w.at(j)) {
        fail(report, Rule::kNonIncreasing, i, j,
             std::to_string(w.at(j - 1)) + " < " + std::to_string(w.at(j)));
      }
    }
    // Self-bound with 1-based k and w_k used as a 1-based position. A
    // position beyond the word length cannot satisfy the bound.
    for (std::size_t k = 1; k <= std::min(n - 1, q); ++k) {
      const Symbol target = w.at(k);
      if (target == 0) continue;  // reported under R1
      if (target > q) {
        fail(report, Rule::kSelfBound, i, k,
             "w_" + std::to_string(k) + " = " + std::to_string(target) +
                 " names a position beyond length " + std::to_string(q));
      } else if (w.at(target) > k) {
        fail(report, Rule::kSelfBound, i, k,
             "w_" + std::to_string(target) + " = " + std::to_string(w.at(target)) + " > " +
                 std::to_string(k));
      }
    }
    for (std::size_t j = n; j <= q; ++j) {
      if (w.at(j) != 1) {
        fail(report, Rule::kTrailingOnes, i, j, "symbol " + std::to_string(w.at(j)) + ", expected 1");
      }
    }
  }
  return report;
}

ValidationReport validate_constructible(const BlockCode& code) {
  ValidationReport report;
  check_code_level(code, report);
  check_symbol_range(code, report);
  return report;
}

std::vector<DominanceGap> dominance_gaps(const BlockCode& code) {
  std::vector<DominanceGap> gaps;
  for (std::size_t i = 2; i <= code.size(); ++i) {
    for (std::size_t j = 1; j <= code.length(); ++j) {
      if (code.word(i - 1).at(j) > code.word(i).at(j)) gaps.push_back({i, j});
    }
  }
  return gaps;
}

}  // namespace bck
