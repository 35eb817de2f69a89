#pragma once

#include <optional>
#include <string>
#include <vector>

#include "platcalc/diagram.hpp"
#include "platcalc/laurent.hpp"
#include "platcalc/plat.hpp"

namespace platcalc {

// Crossing-count ceiling for the exponential direct state sum; callers that
// hit it fall back to component counts.
inline constexpr int kDefaultBracketBudget = 24;

// Kauffman bracket by direct state sum over all smoothings, counting loops
// as the smoothings are chosen. Normalized so one crossing-free loop has
// bracket 1. Returns nullopt when the crossing count exceeds the budget.
std::optional<LaurentPolynomial> kauffman_bracket(
    const LinkDiagram& d, int budget = kDefaultBracketBudget);

// Kauffman bracket of a plat closure by sweeping the word cap to cap,
// carrying one coefficient per crossingless cap pairing. Exact and
// polynomial-time in the word length for fixed bridge index.
LaurentPolynomial plat_bracket(const Plat& p);

// Link-type evidence value: component count plus the multiset of
// writhe-normalized brackets over all orientation classes (one orientation
// flag per component, first component fixed, both global signs identified).
struct OracleValue {
  int components = 0;
  std::vector<LaurentPolynomial> classes;

  bool operator==(const OracleValue& o) const {
    return components == o.components && classes == o.classes;
  }
  bool operator!=(const OracleValue& o) const { return !(*this == o); }
  std::string str() const;
};

std::optional<OracleValue> oracle_value(const Plat& p,
                                        int budget = kDefaultBracketBudget);

// True when the oracle value is that of the one-component unknot.
std::optional<bool> unknot_evidence(const Plat& p,
                                    int budget = kDefaultBracketBudget);

}  // namespace platcalc
