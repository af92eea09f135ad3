#ifndef BCKCODE_AXIOMS_HPP
#define BCKCODE_AXIOMS_HPP

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "bckcode/table.hpp"

namespace bck {

/// Identities and conditions checked over a Cayley table.
///
/// The BCI/BCK family:
///   kBci1  ((x∗y)∗(x∗z))∗(z∗y) = 0
///   kBci2  (x∗(x∗y))∗y = 0
///   kBci3  x∗x = 0
///   kBci4  x∗y = 0 and y∗x = 0 imply x = y
///   kBck5  0∗x = 0
/// The alternative BCK axiomatization:
///   kAlt1  same identity as kBci1
///   kAlt2  x∗(0∗y) = x
///   kAlt3  same condition as kBci4
enum class Axiom { kBci1, kBci2, kBci3, kBci4, kBck5, kAlt1, kAlt2, kAlt3 };

std::string_view axiom_id(Axiom axiom);           // "BCI-1", "ALT-2", ...
std::string_view axiom_statement(Axiom axiom);    // human-readable identity

/// Number of variables an axiom quantifies over (1, 2 or 3).
std::size_t axiom_arity(Axiom axiom);

struct Violation {
  Axiom axiom;
  std::vector<Element> witness;  // (x), (x,y) or (x,y,z)

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct AxiomReport {
  bool verdict = true;
  std::vector<Violation> violations;  // exhaustive, grouped by axiom, lex order within
};

/// Axioms BCI-1..BCI-4.
AxiomReport check_bci(const CayleyTable& t);

/// Axioms BCI-1..BCI-4 and BCK-5.
AxiomReport check_bck(const CayleyTable& t);

/// ALT-1..ALT-3. Equivalent to check_bck as a verdict.
AxiomReport check_bck_alt(const CayleyTable& t);

/// True iff `v.witness` really violates `v.axiom` in `t`.
bool reproduces(const CayleyTable& t, const Violation& v);

using Pair = std::array<Element, 2>;
using Triple = std::array<Element, 3>;

// Property predicates. Each returns the lexicographically smallest failing
// tuple, or nullopt when the identity holds everywhere. Meaningful for BCK
// tables only.

/// x∗(x∗y) = y∗(y∗x)
std::optional<Pair> is_commutative(const CayleyTable& t);
/// x∗(y∗x) = x
std::optional<Pair> is_implicative(const CayleyTable& t);
/// (x∗y)∗z = (x∗z)∗(y∗z)
std::optional<Triple> is_positive_implicative(const CayleyTable& t);

// Pointwise versions, for checking a specific claimed counterexample.
bool commutative_fails_at(const CayleyTable& t, Element x, Element y);
bool implicative_fails_at(const CayleyTable& t, Element x, Element y);
bool positive_implicative_fails_at(const CayleyTable& t, Element x, Element y, Element z);

/// x ≤ y iff x∗y = 0.
class OrderRelation {
 public:
  explicit OrderRelation(const CayleyTable& t);

  std::size_t size() const noexcept { return size_; }
  bool leq(Element x, Element y) const noexcept { return leq_[x * size_ + y]; }

  bool reflexive() const noexcept { return reflexive_; }
  bool antisymmetric() const noexcept { return antisymmetric_; }
  bool transitive() const noexcept { return transitive_; }
  bool is_partial_order() const noexcept { return reflexive_ && antisymmetric_ && transitive_; }

 private:
  std::size_t size_;
  std::vector<bool> leq_;
  bool reflexive_ = true;
  bool antisymmetric_ = true;
  bool transitive_ = true;
};

inline OrderRelation partial_order(const CayleyTable& t) { return OrderRelation(t); }

}  // namespace bck

#endif  // BCKCODE_AXIOMS_HPP
