#include "bckcode/isomorphism.hpp"

#include <algorithm>
#include <string>

#include "bckcode/error.hpp"

namespace bck {

namespace {

constexpr Element kUnassigned = static_cast<Element>(-1);

// Relabeling-invariant fingerprint of one element. Raw row values are not
// invariant under σ, but their multiplicity profile is, and zero counts are
// because σ fixes 0.
struct Signature {
  std::size_t zeros_in_row = 0;
  std::size_t zeros_in_column = 0;
  bool idempotent = false;
  std::vector<std::size_t> row_profile;
  std::vector<std::size_t> column_profile;

  friend bool operator==(const Signature&, const Signature&) = default;
};

std::vector<std::size_t> profile(const std::vector<Element>& values, std::size_t size) {
  std::vector<std::size_t> counts(size, 0);
  for (Element v : values) ++counts[v];
  std::erase(counts, 0);
  std::sort(counts.begin(), counts.end());
  return counts;
}

std::vector<Signature> signatures(const CayleyTable& t) {
  const std::size_t r = t.size();
  std::vector<Signature> out(r);
  for (Element x = 0; x < r; ++x) {
    std::vector<Element> row(r), column(r);
    for (Element y = 0; y < r; ++y) {
      row[y] = t(x, y);
      column[y] = t(y, x);
    }
    Signature& s = out[x];
    s.zeros_in_row = static_cast<std::size_t>(std::count(row.begin(), row.end(), kZero));
    s.zeros_in_column = static_cast<std::size_t>(std::count(column.begin(), column.end(), kZero));
    s.idempotent = t(x, x) == x;
    s.row_profile = profile(row, r);
    s.column_profile = profile(column, r);
  }
  return out;
}

class Search {
 public:
  Search(const CayleyTable& a, const CayleyTable& b)
      : a_(a), b_(b), r_(a.size()), forward_(r_, kUnassigned), inverse_(r_, kUnassigned),
        sig_a_(signatures(a)), sig_b_(signatures(b)) {}

  std::optional<std::vector<Element>> run() {
    if (!(sig_a_[0] == sig_b_[0])) return std::nullopt;
    assign(0, 0);
    if (!consistent(0)) return std::nullopt;
    if (extend(1)) return forward_;
    return std::nullopt;
  }

 private:
  void assign(Element x, Element y) {
    forward_[x] = y;
    inverse_[y] = x;
  }

  void unassign(Element x) {
    inverse_[forward_[x]] = kUnassigned;
    forward_[x] = kUnassigned;
  }

  // All products among the assigned prefix 0..x. Pairs checked at an earlier
  // depth are rechecked because their product may have been assigned since.
  bool consistent(Element x) const {
    for (Element u = 0; u <= x; ++u)
      for (Element v = 0; v <= x; ++v)
        if (!pair_consistent(u, v)) return false;
    return true;
  }

  bool pair_consistent(Element u, Element v) const {
    const Element product = a_(u, v);
    const Element image = b_(forward_[u], forward_[v]);
    if (forward_[product] != kUnassigned && forward_[product] != image) return false;
    if (inverse_[image] != kUnassigned && inverse_[image] != product) return false;
    return true;
  }

  bool extend(Element x) {
    if (x == r_) return true;
    for (Element y = 1; y < r_; ++y) {
      if (inverse_[y] != kUnassigned || !(sig_a_[x] == sig_b_[y])) continue;
      assign(x, y);
      if (consistent(x) && extend(x + 1)) return true;
      unassign(x);
    }
    return false;
  }

  const CayleyTable& a_;
  const CayleyTable& b_;
  Element r_;
  std::vector<Element> forward_;
  std::vector<Element> inverse_;
  std::vector<Signature> sig_a_;
  std::vector<Signature> sig_b_;
};

}  // namespace

std::optional<std::vector<Element>> are_isomorphic(const CayleyTable& a, const CayleyTable& b,
                                                   const IsomorphismOptions& options) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.size() > options.max_size) {
    throw Error(ErrorKind::kSearchRefused,
                "isomorphism search refused: size " + std::to_string(a.size()) +
                    " exceeds cap " + std::to_string(options.max_size));
  }
  return Search(a, b).run();
}

bool is_isomorphism(const CayleyTable& a, const CayleyTable& b, const std::vector<Element>& perm) {
  if (a.size() != b.size() || perm.size() != a.size() || perm[0] != kZero) return false;
  std::vector<bool> seen(a.size(), false);
  for (Element p : perm) {
    if (p >= a.size() || seen[p]) return false;
    seen[p] = true;
  }
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (perm[a(x, y)] != b(perm[x], perm[y])) return false;
  return true;
}

}  // namespace bck
