#ifndef GNC_PROOF_HPP
#define GNC_PROOF_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "gnc/ast.hpp"

namespace gnc {

struct ProofError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MalformedIndex : ProofError {
  using ProofError::ProofError;
};
struct UnknownAxiomName : ProofError {
  using ProofError::ProofError;
};

// Step indices are 1-based, as in the proof file format.
struct Justification {
  enum class Kind { LocalAx, GlobalAx, Valid, MP, Nec };
  Kind kind;
  std::string name;        // axiom name (LocalAx/GlobalAx) or operator (Nec)
  std::size_t i = 0;       // MP: step deriving the antecedent
  std::size_t j = 0;       // MP: step deriving the implication; Nec: premise

  static Justification local(std::string ax) { return {Kind::LocalAx, std::move(ax), 0, 0}; }
  static Justification global(std::string ax) { return {Kind::GlobalAx, std::move(ax), 0, 0}; }
  static Justification valid() { return {Kind::Valid, {}, 0, 0}; }
  static Justification mp(std::size_t i, std::size_t j) { return {Kind::MP, {}, i, j}; }
  static Justification nec(std::string op, std::size_t j) { return {Kind::Nec, std::move(op), 0, j}; }
};

struct Step {
  FormulaPtr formula;  // normalized
  Justification just;
};

struct Proof {
  std::string name;
  std::string system;
  std::vector<Step> steps;

  const FormulaPtr& conclusion() const { return steps.back().formula; }
};

// Text format:
//   proof <name> in <system>
//   1: <formula> ; global <axiom>
//   2: <formula> ; nec K 1
// with justifications local/global/valid/mp <i> <j>/nec <op> <i>.
// Formulas are normalized on load.
Proof parse_proof(const std::string& text);
Proof load_proof_file(const std::string& path);
std::string format_proof(const Proof& p);

}  // namespace gnc

#endif
