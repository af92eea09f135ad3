#ifndef BCKCODE_ISOMORPHISM_HPP
#define BCKCODE_ISOMORPHISM_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "bckcode/table.hpp"

namespace bck {

struct IsomorphismOptions {
  /// Largest table size the search accepts. Larger inputs raise
  /// ErrorKind::kSearchRefused instead of running an exponential search.
  std::size_t max_size = 10;
};

/// Searches for a bijection σ with σ(0) = 0 and σ(x∗y) = σ(x)∗′σ(y).
///
/// Returns σ as a vector indexed by elements of `a`, or nullopt when the
/// tables are not isomorphic (including when their sizes differ). Candidates
/// are pruned by relabeling-invariant row/column signatures before
/// backtracking.
std::optional<std::vector<Element>> are_isomorphic(const CayleyTable& a, const CayleyTable& b,
                                                   const IsomorphismOptions& options = {});

/// True iff `perm` is an isomorphism from `a` onto `b` fixing 0.
bool is_isomorphism(const CayleyTable& a, const CayleyTable& b, const std::vector<Element>& perm);

}  // namespace bck

#endif  // BCKCODE_ISOMORPHISM_HPP
