#include "bckcode/axioms.hpp"

namespace bck {

namespace {

bool bci1_fails(const CayleyTable& t, Element x, Element y, Element z) {
  return t(t(t(x, y), t(x, z)), t(z, y)) != kZero;
}

bool bci2_fails(const CayleyTable& t, Element x, Element y) {
  return t(t(x, t(x, y)), y) != kZero;
}

bool bci3_fails(const CayleyTable& t, Element x) { return t(x, x) != kZero; }

bool antisymmetry_fails(const CayleyTable& t, Element x, Element y) {
  return x != y && t(x, y) == kZero && t(y, x) == kZero;
}

bool bck5_fails(const CayleyTable& t, Element x) { return t(kZero, x) != kZero; }

bool alt2_fails(const CayleyTable& t, Element x, Element y) { return t(x, t(kZero, y)) != x; }

void record(AxiomReport& report, Axiom axiom, std::vector<Element> witness) {
  report.verdict = false;
  report.violations.push_back({axiom, std::move(witness)});
}

void scan_exchange(const CayleyTable& t, Axiom tag, AxiomReport& report) {
  const auto r = static_cast<Element>(t.size());
  for (Element x = 0; x < r; ++x)
    for (Element y = 0; y < r; ++y)
      for (Element z = 0; z < r; ++z)
        if (bci1_fails(t, x, y, z)) record(report, tag, {x, y, z});
}

void scan_antisymmetry(const CayleyTable& t, Axiom tag, AxiomReport& report) {
  const auto r = static_cast<Element>(t.size());
  // Each offending unordered pair is reported once, as (smaller, larger).
  for (Element x = 0; x < r; ++x)
    for (Element y = x + 1; y < r; ++y)
      if (antisymmetry_fails(t, x, y)) record(report, tag, {x, y});
}

}  // namespace

std::string_view axiom_id(Axiom axiom) {
  switch (axiom) {
    case Axiom::kBci1: return "BCI-1";
    case Axiom::kBci2: return "BCI-2";
    case Axiom::kBci3: return "BCI-3";
    case Axiom::kBci4: return "BCI-4";
    case Axiom::kBck5: return "BCK-5";
    case Axiom::kAlt1: return "ALT-1";
    case Axiom::kAlt2: return "ALT-2";
    case Axiom::kAlt3: return "ALT-3";
  }
  return "?";
}

std::string_view axiom_statement(Axiom axiom) {
  switch (axiom) {
    case Axiom::kBci1:
    case Axiom::kAlt1: return "((x*y)*(x*z))*(z*y) = 0";
    case Axiom::kBci2: return "(x*(x*y))*y = 0";
    case Axiom::kBci3: return "x*x = 0";
    case Axiom::kBci4:
    case Axiom::kAlt3: return "x*y = 0 and y*x = 0 imply x = y";
    case Axiom::kBck5: return "0*x = 0";
    case Axiom::kAlt2: return "x*(0*y) = x";
  }
  return "?";
}

std::size_t axiom_arity(Axiom axiom) {
  switch (axiom) {
    case Axiom::kBci1:
    case Axiom::kAlt1: return 3;
    case Axiom::kBci3:
    case Axiom::kBck5: return 1;
    default: return 2;
  }
}

AxiomReport check_bci(const CayleyTable& t) {
  AxiomReport report;
  const auto r = static_cast<Element>(t.size());
  scan_exchange(t, Axiom::kBci1, report);
  for (Element x = 0; x < r; ++x)
    for (Element y = 0; y < r; ++y)
      if (bci2_fails(t, x, y)) record(report, Axiom::kBci2, {x, y});
  for (Element x = 0; x < r; ++x)
    if (bci3_fails(t, x)) record(report, Axiom::kBci3, {x});
  scan_antisymmetry(t, Axiom::kBci4, report);
  return report;
}

AxiomReport check_bck(const CayleyTable& t) {
  AxiomReport report = check_bci(t);
  for (Element x = 0; x < t.size(); ++x)
    if (bck5_fails(t, x)) record(report, Axiom::kBck5, {x});
  return report;
}

AxiomReport check_bck_alt(const CayleyTable& t) {
  AxiomReport report;
  const auto r = static_cast<Element>(t.size());
  scan_exchange(t, Axiom::kAlt1, report);
  for (Element x = 0; x < r; ++x)
    for (Element y = 0; y < r; ++y)
      if (alt2_fails(t, x, y)) record(report, Axiom::kAlt2, {x, y});
  scan_antisymmetry(t, Axiom::kAlt3, report);
  return report;
}

bool reproduces(const CayleyTable& t, const Violation& v) {
  if (v.witness.size() != axiom_arity(v.axiom)) return false;
  for (Element e : v.witness)
    if (!t.contains(e)) return false;
  const auto& w = v.witness;
  switch (v.axiom) {
    case Axiom::kBci1:
    case Axiom::kAlt1: return bci1_fails(t, w[0], w[1], w[2]);
    case Axiom::kBci2: return bci2_fails(t, w[0], w[1]);
    case Axiom::kBci3: return bci3_fails(t, w[0]);
    case Axiom::kBci4:
    case Axiom::kAlt3: return antisymmetry_fails(t, w[0], w[1]);
    case Axiom::kBck5: return bck5_fails(t, w[0]);
    case Axiom::kAlt2: return alt2_fails(t, w[0], w[1]);
  }
  return false;
}

bool commutative_fails_at(const CayleyTable& t, Element x, Element y) {
  return t(x, t(x, y)) != t(y, t(y, x));
}

bool implicative_fails_at(const CayleyTable& t, Element x, Element y) { return t(x, t(y, x)) != x; }

bool positive_implicative_fails_at(const CayleyTable& t, Element x, Element y, Element z) {
  return t(t(x, y), z) != t(t(x, z), t(y, z));
}

std::optional<Pair> is_commutative(const CayleyTable& t) {
  const auto r = static_cast<Element>(t.size());
  for (Element x = 0; x < r; ++x)
    for (Element y = 0; y < r; ++y)
      if (commutative_fails_at(t, x, y)) return Pair{x, y};
  return std::nullopt;
}

std::optional<Pair> is_implicative(const CayleyTable& t) {
  const auto r = static_cast<Element>(t.size());
  for (Element x = 0; x < r; ++x)
    for (Element y = 0; y < r; ++y)
      if (implicative_fails_at(t, x, y)) return Pair{x, y};
  return std::nullopt;
}

std::optional<Triple> is_positive_implicative(const CayleyTable& t) {
  const auto r = static_cast<Element>(t.size());
  for (Element x = 0; x < r; ++x)
    for (Element y = 0; y < r; ++y)
      for (Element z = 0; z < r; ++z)
        if (positive_implicative_fails_at(t, x, y, z)) return Triple{x, y, z};
  return std::nullopt;
}

OrderRelation::OrderRelation(const CayleyTable& t) : size_(t.size()), leq_(t.size() * t.size()) {
  const auto r = static_cast<Element>(size_);
  for (Element x = 0; x < r; ++x)
    for (Element y = 0; y < r; ++y) leq_[x * size_ + y] = t(x, y) == kZero;

  for (Element x = 0; x < r; ++x) {
    if (!leq(x, x)) reflexive_ = false;
    for (Element y = 0; y < r; ++y) {
      if (x != y && leq(x, y) && leq(y, x)) antisymmetric_ = false;
      if (!leq(x, y)) continue;
      for (Element z = 0; z < r; ++z)
        if (leq(y, z) && !leq(x, z)) transitive_ = false;
    }
  }
}

}  // namespace bck
