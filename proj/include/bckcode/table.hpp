#ifndef BCKCODE_TABLE_HPP
#define BCKCODE_TABLE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bck {

/// Index of an algebra element. 0 is the distinguished element θ.
using Element = std::uint32_t;

inline constexpr Element kZero = 0;

/// Full multiplication table of a finite magma with a distinguished zero.
///
/// entry(x, y) is the product x∗y. Entries are stored row-major; every entry
/// is guaranteed to be a valid element index.
class CayleyTable {
 public:
  /// Throws bck::Error when size is 0, the entry count is not size², or an
  /// entry is out of range.
  CayleyTable(std::size_t size, std::vector<Element> entries);

  static CayleyTable from_rows(const std::vector<std::vector<Element>>& rows);

  /// The one-element algebra {0}.
  static CayleyTable trivial() { return CayleyTable(1, {0}); }

  std::size_t size() const noexcept { return size_; }

  Element operator()(Element x, Element y) const noexcept {
    return entries_[static_cast<std::size_t>(x) * size_ + y];
  }

  std::span<const Element> row(Element x) const noexcept {
    return {entries_.data() + static_cast<std::size_t>(x) * size_, size_};
  }

  std::span<const Element> entries() const noexcept { return entries_; }

  bool contains(Element x) const noexcept { return x < size_; }

  /// Table of the same operation carried along the bijection `perm`:
  /// result(perm[x], perm[y]) = perm[x∗y]. `perm` must be a permutation of
  /// 0..size-1.
  CayleyTable relabeled(std::span<const Element> perm) const;

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

 private:
  std::size_t size_;
  std::vector<Element> entries_;
};

/// Throws bck::Error unless `perm` is a bijection on 0..size-1.
void require_permutation(std::span<const Element> perm, std::size_t size);

}  // namespace bck

#endif  // BCKCODE_TABLE_HPP
