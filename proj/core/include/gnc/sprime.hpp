#ifndef GNC_SPRIME_HPP
#define GNC_SPRIME_HPP

#include "gnc/system.hpp"

namespace gnc {

// The axiom-only counterpart of a system with necessitation rules:
//   (1) the base system's global axioms
//   (2) K[f] for every valid f                      (per declared operator)
//   (3) K[f -> g] -> K[f] -> K[g]                   (per declared operator)
//   (4) K[f] for f an instance of (1)-(3) or, recursively, (4)
//   (5) the base system's local axioms
// Line (4) membership is decided by stripping wrappers, never by
// materializing the closure; k_closure_depth only bounds how many levels
// model-checking pools materialize.
struct SPrimeSystem {
  System system;
  std::string base;
  unsigned k_closure_depth = 2;
};

SPrimeSystem sprime_of(const System& base);

// Names a line when g is an instance of the S' system, first match in
// declaration order; empty when it is not an axiom.
std::string sprime_line_of(const System& sprime, const FormulaPtr& g);

}  // namespace gnc

#endif
