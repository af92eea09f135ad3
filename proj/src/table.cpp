#include "bckcode/table.hpp"

#include <string>

#include "bckcode/error.hpp"

namespace bck {

CayleyTable::CayleyTable(std::size_t size, std::vector<Element> entries)
    : size_(size), entries_(std::move(entries)) {
  if (size_ == 0) {
    throw Error(ErrorKind::kInvalidArgument, "Cayley table must have at least one element");
  }
  if (entries_.size() != size_ * size_) {
    throw Error(ErrorKind::kInvalidArgument,
                "Cayley table of size " + std::to_string(size_) + " needs " +
                    std::to_string(size_ * size_) + " entries, got " +
                    std::to_string(entries_.size()));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] >= size_) {
      throw Error(ErrorKind::kOutOfRange,
                  "entry (" + std::to_string(i / size_) + "," + std::to_string(i % size_) +
                      ") = " + std::to_string(entries_[i]) + " is not an element of a size-" +
                      std::to_string(size_) + " table");
    }
  }
}

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<Element>>& rows) {
  std::vector<Element> flat;
  flat.reserve(rows.size() * rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                      " entries, table is not square");
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return CayleyTable(rows.size(), std::move(flat));
}

CayleyTable CayleyTable::relabeled(std::span<const Element> perm) const {
  require_permutation(perm, size_);
  std::vector<Element> out(entries_.size());
  for (Element x = 0; x < size_; ++x) {
    for (Element y = 0; y < size_; ++y) {
      out[static_cast<std::size_t>(perm[x]) * size_ + perm[y]] = perm[(*this)(x, y)];
    }
  }
  return CayleyTable(size_, std::move(out));
}

void require_permutation(std::span<const Element> perm, std::size_t size) {
  if (perm.size() != size) {
    throw Error(ErrorKind::kInvalidArgument, "permutation has " + std::to_string(perm.size()) +
                                                 " entries, expected " + std::to_string(size));
  }
  std::vector<bool> seen(size, false);
  for (Element p : perm) {
    if (p >= size || seen[p]) {
      throw Error(ErrorKind::kInvalidArgument, "not a permutation of 0.." + std::to_string(size - 1));
    }
    seen[p] = true;
  }
}

}  // namespace bck
