#ifndef BCKCODE_IDEALS_HPP
#define BCKCODE_IDEALS_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "bckcode/table.hpp"

namespace bck {

/// Subset of the elements of a table of size `universe`.
class ElementSubset {
 public:
  /// Members may be given in any order; duplicates are merged. Throws
  /// ErrorKind::kOutOfRange for members ≥ universe.
  ElementSubset(std::size_t universe, const std::vector<Element>& members);

  std::size_t universe() const noexcept { return membership_.size(); }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Element x) const noexcept { return x < membership_.size() && membership_[x]; }

  /// Ascending.
  const std::vector<Element>& members() const noexcept { return members_; }

  friend bool operator==(const ElementSubset& a, const ElementSubset& b) {
    return a.members_ == b.members_ && a.universe() == b.universe();
  }

 private:
  std::vector<bool> membership_;
  std::vector<Element> members_;
};

enum class IdealClause {
  kContainsZero,  // 0 ∈ I
  kRightIdeal,    // x ∈ I, y ∈ X ⇒ x∗y ∈ I
  kSubalgebra,    // x, y ∈ I ⇒ x∗y ∈ I
};

std::string_view clause_id(IdealClause clause);

struct IdealWitness {
  IdealClause clause;
  Element x = 0;
  Element y = 0;
  Element product = 0;

  friend bool operator==(const IdealWitness&, const IdealWitness&) = default;
};

struct IdealReport {
  bool contains_zero = false;
  bool right_ideal = false;   // includes contains_zero
  bool subalgebra = false;    // includes contains_zero
  bool closed_ideal = false;  // all of the above
  std::vector<IdealWitness> witnesses;
};

/// Evaluates every clause exhaustively, collecting all failing products.
IdealReport check_subset(const CayleyTable& t, const ElementSubset& s);

struct EnumerationOptions {
  /// Only subsets with at most this many members.
  std::optional<std::size_t> max_size;
  /// Unbounded enumeration is allowed up to this table size. With max_size
  /// set, any search visiting no more candidates than that is allowed.
  std::size_t size_cap = 20;
};

/// All closed right ideals, by size and then lexicographically. Throws
/// ErrorKind::kSearchRefused when the candidate count exceeds the cap.
std::vector<ElementSubset> enumerate_closed_right_ideals(const CayleyTable& t,
                                                         const EnumerationOptions& options = {});

/// Literal index reading of the ideal candidate for a constructed algebra
/// with m codewords: {0, 1, r-m, ..., r-1}. Reported as the table decides;
/// nothing is presumed. Throws ErrorKind::kInvalidArgument when m ≥ r.
std::pair<ElementSubset, IdealReport> ideal_candidate(const CayleyTable& t, std::size_t m);

}  // namespace bck

#endif  // BCKCODE_IDEALS_HPP
