#include "gnc/sprime.hpp"

namespace gnc {

namespace {

Schema curried_dist(const std::string& op, OpKind kind) {
  auto phi = mk_meta("phi");
  auto psi = mk_meta("psi");
  auto wrap = [&](const FormulaPtr& f) {
    return kind == OpKind::Operator ? mk_modapp(op, f)
                                    : mk_predapp(op, {mk_quote(f)});
  };
  Schema s;
  s.pattern = mk_imp(wrap(mk_imp(phi, psi)), mk_imp(wrap(phi), wrap(psi)));
  return s;
}

}  // namespace

SPrimeSystem sprime_of(const System& base) {
  SPrimeSystem sp;
  sp.base = base.name;
  System& out = sp.system;
  out.name = base.name + "_sprime";
  out.validity_mode = base.validity_mode;

  for (const auto& ax : base.axioms)
    if (ax.tag == AxiomTag::Global) out.axioms.push_back(ax);

  for (const auto& [op, kind] : base.nec_rules) {
    Axiom valid_line;
    valid_line.name = op + "_valid";
    valid_line.tag = AxiomTag::Global;
    valid_line.guard = GuardKind::ValidWrapped;
    valid_line.guard_op = op;
    valid_line.guard_op_kind = kind;
    out.axioms.push_back(std::move(valid_line));

    // Skip the distribution line when the base already carries the same
    // schema; the paper's S' listings fold the two together.
    Schema dist = curried_dist(op, kind);
    bool have = false;
    for (const auto& ax : base.axioms)
      if (ax.guard == GuardKind::None && ax.tag == AxiomTag::Global &&
          !ax.schema.closure && formula_eq(ax.schema.pattern, dist.pattern))
        have = true;
    if (!have) {
      Axiom dist_line;
      dist_line.name = op + "_dist";
      dist_line.tag = AxiomTag::Global;
      dist_line.schema = std::move(dist);
      dist_line.schema.name = dist_line.name;
      out.axioms.push_back(std::move(dist_line));
    }

    Axiom closure_line;
    closure_line.name = op + "_closure";
    closure_line.tag = AxiomTag::Global;
    closure_line.guard = GuardKind::ClosureWrapped;
    closure_line.guard_op = op;
    closure_line.guard_op_kind = kind;
    out.axioms.push_back(std::move(closure_line));
  }

  for (const auto& ax : base.axioms)
    if (ax.tag == AxiomTag::Local) out.axioms.push_back(ax);

  return sp;
}

std::string sprime_line_of(const System& sprime, const FormulaPtr& g) {
  for (const auto& ax : sprime.axioms)
    if (axiom_instance(sprime, ax, g)) return ax.name;
  return {};
}

}  // namespace gnc
