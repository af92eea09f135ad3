#include "bckcode/ideals.hpp"

#include <string>

#include "bckcode/error.hpp"

namespace bck {

ElementSubset::ElementSubset(std::size_t universe, const std::vector<Element>& members)
    : membership_(universe, false) {
  for (Element x : members) {
    if (x >= universe) {
      throw Error(ErrorKind::kOutOfRange, "subset member " + std::to_string(x) +
                                              " is not an element of a size-" +
                                              std::to_string(universe) + " algebra");
    }
    membership_[x] = true;
  }
  for (Element x = 0; x < universe; ++x)
    if (membership_[x]) members_.push_back(x);
}

std::string_view clause_id(IdealClause clause) {
  switch (clause) {
    case IdealClause::kContainsZero: return "contains-zero";
    case IdealClause::kRightIdeal: return "right-ideal";
    case IdealClause::kSubalgebra: return "subalgebra";
  }
  return "?";
}

IdealReport check_subset(const CayleyTable& t, const ElementSubset& s) {
  if (s.universe() != t.size()) {
    throw Error(ErrorKind::kInvalidArgument, "subset universe does not match table size");
  }
  IdealReport report;
  report.contains_zero = s.contains(kZero);
  if (!report.contains_zero) report.witnesses.push_back({IdealClause::kContainsZero, 0, 0, 0});

  bool absorbs = true;
  bool closed = true;
  for (Element x : s.members()) {
    for (Element y = 0; y < t.size(); ++y) {
      const Element p = t(x, y);
      if (s.contains(p)) continue;
      absorbs = false;
      report.witnesses.push_back({IdealClause::kRightIdeal, x, y, p});
      if (s.contains(y)) {
        closed = false;
        report.witnesses.push_back({IdealClause::kSubalgebra, x, y, p});
      }
    }
  }
  report.right_ideal = report.contains_zero && absorbs;
  report.subalgebra = report.contains_zero && closed;
  report.closed_ideal = report.right_ideal && report.subalgebra;
  return report;
}

namespace {

// Closed-ideal test without witness collection, stopping at the first
// failure. Right-ideal absorption implies subalgebra closure.
bool is_closed_right_ideal(const CayleyTable& t, const std::vector<bool>& in,
                           const std::vector<Element>& members) {
  for (Element x : members)
    for (Element y = 0; y < t.size(); ++y)
      if (!in[t(x, y)]) return false;
  return true;
}

// Number of subsets of {1..r-1} with at most k members, saturating at limit+1.
std::size_t candidate_count(std::size_t r, std::size_t k, std::size_t limit) {
  std::size_t total = 0;
  std::size_t binom = 1;  // C(r-1, j)
  for (std::size_t j = 0; j <= k && j <= r - 1; ++j) {
    if (j > 0) {
      // binom = C(r-1, j-1) * (r-j) / j; bounded below by the saturating check
      binom = binom * (r - j) / j;
    }
    total += binom;
    if (total > limit) return limit + 1;
  }
  return total;
}

}  // namespace

std::vector<ElementSubset> enumerate_closed_right_ideals(const CayleyTable& t,
                                                         const EnumerationOptions& options) {
  const std::size_t r = t.size();
  // Subsets always contain 0, so the free part is a subset of {1..r-1}.
  const std::size_t max_extra = options.max_size ? (*options.max_size == 0 ? 0 : *options.max_size - 1)
                                                 : r - 1;
  const std::size_t budget = options.size_cap >= 64 ? ~std::size_t{0} >> 1
                                                    : std::size_t{1} << (options.size_cap - 1);
  const bool refused = options.max_size ? candidate_count(r, max_extra, budget) > budget
                                        : r > options.size_cap;
  if (refused) {
    throw Error(ErrorKind::kSearchRefused,
                "ideal enumeration refused: size " + std::to_string(r) + " exceeds cap " +
                    std::to_string(options.size_cap) + " (bound the search with a maximum subset size)");
  }

  std::vector<ElementSubset> out;
  if (options.max_size && *options.max_size == 0) return out;

  std::vector<bool> in(r, false);
  in[0] = true;
  std::vector<Element> members{0};
  // Ascending size; within a size, combinations come out in lex order.
  for (std::size_t extra = 0; extra <= max_extra && extra <= r - 1; ++extra) {
    std::vector<Element> pick(extra);
    for (std::size_t i = 0; i < extra; ++i) pick[i] = static_cast<Element>(i + 1);
    while (true) {
      members.assign(1, 0);
      members.insert(members.end(), pick.begin(), pick.end());
      for (Element x : pick) in[x] = true;
      if (is_closed_right_ideal(t, in, members)) out.emplace_back(r, members);
      for (Element x : pick) in[x] = false;

      // Next combination of `extra` values from 1..r-1.
      std::size_t i = extra;
      while (i > 0 && pick[i - 1] == r - extra + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < extra; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

std::pair<ElementSubset, IdealReport> ideal_candidate(const CayleyTable& t, std::size_t m) {
  const std::size_t r = t.size();
  if (m >= r) {
    throw Error(ErrorKind::kInvalidArgument, "candidate needs m < r (m=" + std::to_string(m) +
                                                 ", r=" + std::to_string(r) + ")");
  }
  std::vector<Element> members{0};
  if (r > 1) members.push_back(1);
  for (std::size_t x = r - m; x < r; ++x) members.push_back(static_cast<Element>(x));
  ElementSubset subset(r, members);
  IdealReport report = check_subset(t, subset);
  return {std::move(subset), std::move(report)};
}

}  // namespace bck
