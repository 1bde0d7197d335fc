#include "gnc/system.hpp"

#include "gnc/godel.hpp"
#include "gnc/valid.hpp"

namespace gnc {

const Axiom* System::find_axiom(const std::string& axiom_name) const {
  for (const auto& ax : axioms)
    if (ax.name == axiom_name) return &ax;
  return nullptr;
}

bool System::has_local_axioms() const {
  for (const auto& ax : axioms)
    if (ax.tag == AxiomTag::Local) return true;
  return false;
}

FormulaPtr op_wrap(const std::string& op, OpKind kind, const FormulaPtr& f) {
  if (kind == OpKind::Operator) return mk_modapp(op, f);
  return normalize(mk_predapp(op, {mk_quote(f)}));
}

FormulaPtr op_unwrap(const std::string& op, OpKind kind, const FormulaPtr& g) {
  if (kind == OpKind::Operator) {
    if (g->tag == Formula::Tag::ModApp && g->name == op) return g->a;
    return nullptr;
  }
  if (g->tag != Formula::Tag::PredApp || g->name != op || g->args.size() != 1)
    return nullptr;
  const TermPtr& arg = g->args[0];
  if (arg->tag == Term::Tag::Quote) return arg->quoted;
  if (arg->tag == Term::Tag::Numeral) {
    auto dec = gn_decode(arg->num);
    if (dec) return *dec;
  }
  return nullptr;
}

namespace {

// ClosureWrapped membership: strip one wrapper of this guard's operator,
// then the content must instantiate some global axiom of the system; other
// closure lines keep the recursion going across operators.
bool closure_member(const System& sys, const Axiom& line, const FormulaPtr& g) {
  FormulaPtr inner = op_unwrap(line.guard_op, line.guard_op_kind, g);
  if (!inner) return false;
  for (const auto& ax : sys.axioms) {
    if (ax.tag != AxiomTag::Global) continue;
    switch (ax.guard) {
      case GuardKind::None:
        if (match(ax.schema, inner)) return true;
        break;
      case GuardKind::ValidWrapped:
        if (axiom_instance(sys, ax, inner)) return true;
        break;
      case GuardKind::ClosureWrapped:
        if (closure_member(sys, ax, inner)) return true;
        break;
    }
  }
  return false;
}

}  // namespace

bool axiom_instance(const System& sys, const Axiom& ax, const FormulaPtr& g) {
  switch (ax.guard) {
    case GuardKind::None:
      return match(ax.schema, g).has_value();
    case GuardKind::ValidWrapped: {
      FormulaPtr inner = op_unwrap(ax.guard_op, ax.guard_op_kind, g);
      return inner && is_valid(inner, sys.validity_mode).certified;
    }
    case GuardKind::ClosureWrapped:
      return closure_member(sys, ax, g);
  }
  return false;
}

const Axiom* matching_axiom(const System& sys, const FormulaPtr& g, AxiomTag tag) {
  for (const auto& ax : sys.axioms)
    if (ax.tag == tag && axiom_instance(sys, ax, g)) return &ax;
  return nullptr;
}

}  // namespace gnc
