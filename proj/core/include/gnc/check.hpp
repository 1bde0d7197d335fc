#ifndef GNC_CHECK_HPP
#define GNC_CHECK_HPP

#include "gnc/proof.hpp"
#include "gnc/system.hpp"
#include "gnc/valid.hpp"

namespace gnc {

enum class Verdict { Accepted, Rejected };

// Prefix is the literal side condition on necessitation: every step up to
// and including the premise must avoid local axioms. Dependency only
// requires the premise's derivation cone to be globally pure; the two agree
// up to reordering (see reorder_for_prefix).
enum class CheckMode { Prefix, Dependency };

struct Diagnostic {
  std::size_t step;  // 1-based
  std::string reason;
};

struct CheckReport {
  Verdict verdict = Verdict::Rejected;
  FormulaPtr conclusion;  // set when accepted
  std::vector<Diagnostic> diagnostics;
  std::vector<bool> gpure;

  bool accepted() const { return verdict == Verdict::Accepted; }
};

CheckReport check(const System& sys, const Proof& p,
                  CheckMode mode = CheckMode::Dependency);

// Flag i is true iff step i's justification chain is free of local axioms:
// global/valid steps, MP over two flagged steps, Nec over a flagged step.
std::vector<bool> gpure_flags(const Proof& p);

struct NotAccepted : ProofError {
  using ProofError::ProofError;
};

// Permute a Dependency-accepted proof so every globally-pure step precedes
// every local-tainted one; the result checks in Prefix mode with the same
// conclusion. Local-tainted steps outside the conclusion's cone are dropped
// when the conclusion itself is pure.
Proof reorder_for_prefix(const System& sys, const Proof& p);

}  // namespace gnc

#endif
