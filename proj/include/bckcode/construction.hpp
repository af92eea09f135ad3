#ifndef BCKCODE_CONSTRUCTION_HPP
#define BCKCODE_CONSTRUCTION_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "bckcode/axioms.hpp"
#include "bckcode/code.hpp"
#include "bckcode/error.hpp"
#include "bckcode/table.hpp"

namespace bck {

enum class ConstructionCase {
  kShortWords,  // q < n
  kLongWords,   // q >= n
};

std::string_view case_name(ConstructionCase c);  // "q<n" / "q>=n"

struct ConstructionParams {
  ConstructionCase construction_case;
  std::size_t size;         // r, order of the algebra
  std::size_t chain_block;  // c = r - m; rows 1..c-1 are chain rows
  std::size_t words;        // m

  /// Matrix row holding word i (1-based).
  std::size_t row_of_word(std::size_t i) const noexcept { return chain_block + i - 1; }

  friend bool operator==(const ConstructionParams&, const ConstructionParams&) = default;
};

/// Throws ErrorKind::kInadmissibleCode unless validate_constructible passes.
ConstructionParams dimension(const BlockCode& code);

/// The r×r matrix associated to a code, kept together with its source.
class AssociatedMatrix {
 public:
  const CayleyTable& table() const noexcept { return table_; }
  const ConstructionParams& params() const noexcept { return params_; }
  const BlockCode& source() const noexcept { return source_; }

  Element entry(Element s, Element t) const noexcept { return table_(s, t); }

 private:
  friend AssociatedMatrix build_matrix(const BlockCode& code);
  AssociatedMatrix(CayleyTable table, ConstructionParams params, BlockCode source)
      : table_(std::move(table)), params_(params), source_(std::move(source)) {}

  CayleyTable table_;
  ConstructionParams params_;
  BlockCode source_;
};

/// Row 0 is zero, column 0 is the row index, chain rows s < c carry 1 in
/// columns 1..s-1, and word w_i occupies row c+i-1 with its symbols in
/// columns 1..q followed by 1 up to the diagonal. Everything on or above the
/// diagonal is 0.
///
/// Requires validate_constructible; R2-R4 failures are tolerated so that
/// inadmissible codes can still be inspected.
AssociatedMatrix build_matrix(const BlockCode& code);

/// Raised by build_algebra when the matrix is not a BCK-algebra.
class ConstructionError : public Error {
 public:
  explicit ConstructionError(AxiomReport report);
  const AxiomReport& report() const noexcept { return report_; }

 private:
  AxiomReport report_;
};

/// build_matrix reinterpreted as a Cayley table, checked with check_bck.
/// Throws ConstructionError carrying the axiom report when the check fails.
CayleyTable build_algebra(const BlockCode& code);

/// Elements at which cut functions are sampled (the images f(x_1), ...).
class EvaluationMap {
 public:
  /// Throws on an empty point list.
  explicit EvaluationMap(std::vector<Element> points);

  /// Points 1..q.
  static EvaluationMap first_elements(std::size_t q);

  const std::vector<Element>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

 private:
  std::vector<Element> points_;
};

/// Codeword of element s: symbol t is the index of s∗p_t.
/// Throws ErrorKind::kOutOfRange if s or a point is not an element of t.
Codeword cut_codeword(const CayleyTable& t, Element s, const EvaluationMap& e);

/// Distinct cut codewords of all elements, ascending. The alphabet is the
/// element set (size max(r, 2), since an alphabet has at least two symbols).
BlockCode generate_code(const CayleyTable& t, const EvaluationMap& e);

struct RoundtripReport {
  ConstructionParams params;
  CayleyTable table;
  AxiomReport bck;
  BlockCode generated;
  std::vector<Codeword> missing;  // words of the input absent from the generated code

  bool contained() const noexcept { return missing.empty(); }
};

/// Builds the matrix, checks it, generates V_X at the given points (default
/// 1..q) and compares against the input.
RoundtripReport roundtrip_check(const BlockCode& code,
                                const std::optional<EvaluationMap>& points = std::nullopt);

}  // namespace bck

#endif  // BCKCODE_CONSTRUCTION_HPP
