#ifndef GNC_VALID_HPP
#define GNC_VALID_HPP

#include <map>
#include <string>

#include "gnc/system.hpp"

namespace gnc {

struct ValidityResult {
  bool certified = false;
  // Falsifying assignment over the abstracted atoms, when one was found.
  std::map<std::string, bool> witness;
  std::string note;

  explicit operator bool() const { return certified; }
};

// Clause-3 oracle. Taut mode abstracts each maximal modal, predicate or
// quantified subformula as a fresh atom and decides by exhaustive truth
// table. TautFo additionally certifies a fixed first-order whitelist:
// existential generalization phi(x|t) -> exists x. phi, universal
// instantiation forall x. phi -> phi(x|t), and distribution of a shared
// universal-closure prefix over an implication.
ValidityResult is_valid(const FormulaPtr& f, ValidityMode mode);

// The number of distinct abstracted atoms (useful for table-size guards).
std::size_t abstraction_width(const FormulaPtr& f);

}  // namespace gnc

#endif
