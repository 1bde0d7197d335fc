#include "gnc/check.hpp"

#include <sstream>

#include "gnc/print.hpp"

namespace gnc {

namespace {

void check_index(std::size_t ref, std::size_t cur, const char* what) {
  if (ref == 0 || ref >= cur)
    throw MalformedIndex("step " + std::to_string(cur) + ": " + what + " reference " +
                         std::to_string(ref) + " is not an earlier step");
}

std::string falsification(const ValidityResult& r) {
  std::ostringstream os;
  if (!r.note.empty()) return r.note;
  os << "falsified by {";
  bool first = true;
  for (const auto& [atom, value] : r.witness) {
    if (!first) os << ", ";
    first = false;
    os << atom << " = " << (value ? "true" : "false");
  }
  os << "}";
  return os.str();
}

}  // namespace

std::vector<bool> gpure_flags(const Proof& p) {
  std::vector<bool> pure(p.steps.size(), false);
  for (std::size_t idx = 0; idx < p.steps.size(); ++idx) {
    const Justification& j = p.steps[idx].just;
    const std::size_t cur = idx + 1;
    switch (j.kind) {
      case Justification::Kind::GlobalAx:
      case Justification::Kind::Valid:
        pure[idx] = true;
        break;
      case Justification::Kind::LocalAx:
        pure[idx] = false;
        break;
      case Justification::Kind::MP:
        check_index(j.i, cur, "mp");
        check_index(j.j, cur, "mp");
        pure[idx] = pure[j.i - 1] && pure[j.j - 1];
        break;
      case Justification::Kind::Nec:
        check_index(j.j, cur, "nec");
        pure[idx] = pure[j.j - 1];
        break;
    }
  }
  return pure;
}

CheckReport check(const System& sys, const Proof& p, CheckMode mode) {
  if (p.steps.empty()) throw ProofError("proof has no steps");
  CheckReport report;
  report.gpure = gpure_flags(p);

  auto complain = [&](std::size_t step, std::string reason) {
    report.diagnostics.push_back({step, std::move(reason)});
  };

  for (std::size_t idx = 0; idx < p.steps.size(); ++idx) {
    const std::size_t cur = idx + 1;
    const FormulaPtr& f = p.steps[idx].formula;
    const Justification& j = p.steps[idx].just;
    switch (j.kind) {
      case Justification::Kind::LocalAx:
      case Justification::Kind::GlobalAx: {
        const bool want_local = j.kind == Justification::Kind::LocalAx;
        const Axiom* ax = sys.find_axiom(j.name);
        if (!ax)
          throw UnknownAxiomName("step " + std::to_string(cur) + ": system " +
                                 sys.name + " has no axiom '" + j.name + "'");
        if ((ax->tag == AxiomTag::Local) != want_local) {
          complain(cur, "axiom '" + j.name + "' is " +
                            (ax->tag == AxiomTag::Local ? "local" : "global") +
                            ", cited as " + (want_local ? "local" : "global"));
          break;
        }
        if (!axiom_instance(sys, *ax, f))
          complain(cur, "not an instance of axiom '" + j.name + "'");
        break;
      }
      case Justification::Kind::Valid: {
        ValidityResult r = is_valid(f, sys.validity_mode);
        if (!r.certified)
          complain(cur, "not certified valid: " + falsification(r));
        break;
      }
      case Justification::Kind::MP: {
        check_index(j.i, cur, "mp");
        check_index(j.j, cur, "mp");
        const FormulaPtr& prem = p.steps[j.i - 1].formula;
        const FormulaPtr& imp = p.steps[j.j - 1].formula;
        if (imp->tag != Formula::Tag::Imp)
          complain(cur, "step " + std::to_string(j.j) + " is not an implication");
        else if (!formula_eq(imp->a, prem))
          complain(cur, "antecedent of step " + std::to_string(j.j) +
                            " differs from step " + std::to_string(j.i));
        else if (!formula_eq(imp->b, f))
          complain(cur, "conclusion differs from consequent of step " +
                            std::to_string(j.j));
        break;
      }
      case Justification::Kind::Nec: {
        check_index(j.j, cur, "nec");
        auto rule = sys.nec_rules.find(j.name);
        if (rule == sys.nec_rules.end()) {
          complain(cur, "system " + sys.name +
                            " declares no global necessitation rule for '" +
                            j.name + "'");
          break;
        }
        FormulaPtr expected =
            op_wrap(j.name, rule->second, p.steps[j.j - 1].formula);
        if (!formula_eq(f, expected)) {
          complain(cur, "necessitation of step " + std::to_string(j.j) +
                            " would yield " + print_formula(expected));
          break;
        }
        if (mode == CheckMode::Prefix) {
          for (std::size_t k = 0; k < j.j; ++k) {
            if (p.steps[k].just.kind == Justification::Kind::LocalAx) {
              complain(cur,
                       "necessitation over prefix containing local axiom (step " +
                           std::to_string(k + 1) + ")");
              break;
            }
          }
        } else if (!report.gpure[j.j - 1]) {
          // cite the earliest local axiom in the premise's cone
          std::vector<bool> in_cone(p.steps.size(), false);
          in_cone[j.j - 1] = true;
          for (std::size_t k = j.j; k-- > 0;) {
            if (!in_cone[k]) continue;
            const Justification& jk = p.steps[k].just;
            if (jk.kind == Justification::Kind::MP) {
              in_cone[jk.i - 1] = in_cone[jk.j - 1] = true;
            } else if (jk.kind == Justification::Kind::Nec) {
              in_cone[jk.j - 1] = true;
            }
          }
          std::size_t witness = 0;
          for (std::size_t k = 0; k < p.steps.size(); ++k) {
            if (in_cone[k] &&
                p.steps[k].just.kind == Justification::Kind::LocalAx) {
              witness = k + 1;
              break;
            }
          }
          complain(cur, "necessitation over derivation using local axiom (step " +
                            std::to_string(witness) + ")");
        }
        break;
      }
    }
  }

  if (report.diagnostics.empty()) {
    report.verdict = Verdict::Accepted;
    report.conclusion = p.conclusion();
  } else {
    report.verdict = Verdict::Rejected;
  }
  return report;
}

Proof reorder_for_prefix(const System& sys, const Proof& p) {
  CheckReport before = check(sys, p, CheckMode::Dependency);
  if (!before.accepted())
    throw NotAccepted("reorder_for_prefix requires a Dependency-accepted proof");

  const std::vector<bool>& pure = before.gpure;
  const bool conclusion_pure = pure.back();

  std::vector<std::size_t> order;  // old 0-based indices in new order
  for (std::size_t k = 0; k < p.steps.size(); ++k)
    if (pure[k]) order.push_back(k);
  std::size_t impure_count = p.steps.size() - order.size();
  for (std::size_t k = 0; k < p.steps.size(); ++k)
    if (!pure[k]) order.push_back(k);

  std::vector<std::size_t> new_index(p.steps.size(), 0);  // 1-based
  for (std::size_t pos = 0; pos < order.size(); ++pos)
    new_index[order[pos]] = pos + 1;

  Proof out;
  out.name = p.name + "_prefix";
  out.system = p.system;
  for (std::size_t old : order) {
    Step s = p.steps[old];
    if (s.just.kind == Justification::Kind::MP) {
      s.just.i = new_index[s.just.i - 1];
      s.just.j = new_index[s.just.j - 1];
    } else if (s.just.kind == Justification::Kind::Nec) {
      s.just.j = new_index[s.just.j - 1];
    }
    out.steps.push_back(std::move(s));
  }
  if (conclusion_pure && impure_count > 0) {
    // a pure conclusion now sits before the local-tainted tail; restate it
    const FormulaPtr concl = p.conclusion();
    std::size_t at = new_index[p.steps.size() - 1];
    out.steps.push_back({mk_imp(concl, concl), Justification::valid()});
    out.steps.push_back(
        {concl, Justification::mp(at, out.steps.size())});
  }
  return out;
}

}  // namespace gnc
