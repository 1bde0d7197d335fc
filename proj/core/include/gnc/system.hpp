#ifndef GNC_SYSTEM_HPP
#define GNC_SYSTEM_HPP

#include <map>
#include <string>
#include <vector>

#include "gnc/schema.hpp"

namespace gnc {

// Global axioms are fully trusted by the modeled agent and may sit under
// necessitation; local axioms are true but taint any derivation they touch.
enum class AxiomTag { Global, Local };

enum class OpKind { Operator, Predicate };

enum class ValidityMode { Taut, TautFo };

// Besides pattern schemas, a system may carry two computed axiom forms that
// the axiom-only S' systems need:
//   ValidWrapped   K[f] for every valid f
//   ClosureWrapped K[f] for f an instance of any global axiom (recursively)
enum class GuardKind { None, ValidWrapped, ClosureWrapped };

struct Axiom {
  std::string name;
  AxiomTag tag = AxiomTag::Global;
  Schema schema;
  GuardKind guard = GuardKind::None;
  std::string guard_op;
  OpKind guard_op_kind = OpKind::Operator;
};

struct System {
  std::string name;
  std::vector<Axiom> axioms;
  std::map<std::string, OpKind> nec_rules;
  ValidityMode validity_mode = ValidityMode::Taut;

  const Axiom* find_axiom(const std::string& axiom_name) const;
  bool has_local_axioms() const;
};

// K[f]: operator application, or the normalized quotation for predicates.
FormulaPtr op_wrap(const std::string& op, OpKind kind, const FormulaPtr& f);

// Inverse of op_wrap on normalized formulas; nullptr when g is not an
// application of op (predicate arguments are decoded).
FormulaPtr op_unwrap(const std::string& op, OpKind kind, const FormulaPtr& g);

// Instance test for one axiom, covering pattern schemas and both guard
// forms. `g` is expected in normal form.
bool axiom_instance(const System& sys, const Axiom& ax, const FormulaPtr& g);

// As above, but reports the matched axiom (first in declaration order).
const Axiom* matching_axiom(const System& sys, const FormulaPtr& g, AxiomTag tag);

}  // namespace gnc

#endif
