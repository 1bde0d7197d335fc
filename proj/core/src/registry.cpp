#include "gnc/registry.hpp"

#include <map>
#include <mutex>

namespace gnc {

namespace {

FormulaPtr phi() { return mk_meta("phi"); }
FormulaPtr psi() { return mk_meta("psi"); }

FormulaPtr wrap(const std::string& op, OpKind kind, const FormulaPtr& f) {
  return kind == OpKind::Operator ? mk_modapp(op, f)
                                  : mk_predapp(op, {mk_quote(f)});
}

Axiom pattern_axiom(std::string name, AxiomTag tag, FormulaPtr pattern,
                    std::vector<SideCondition> conds = {}, bool closure = false) {
  Axiom ax;
  ax.name = std::move(name);
  ax.tag = tag;
  ax.schema.name = ax.name;
  ax.schema.pattern = std::move(pattern);
  ax.schema.conditions = std::move(conds);
  ax.schema.closure = closure;
  return ax;
}

Axiom valid_guard(std::string name, const std::string& op, OpKind kind) {
  Axiom ax;
  ax.name = std::move(name);
  ax.tag = AxiomTag::Global;
  ax.guard = GuardKind::ValidWrapped;
  ax.guard_op = op;
  ax.guard_op_kind = kind;
  return ax;
}

FormulaPtr dist_curried(const std::string& op, OpKind kind) {
  return mk_imp(wrap(op, kind, mk_imp(phi(), psi())),
                mk_imp(wrap(op, kind, phi()), wrap(op, kind, psi())));
}

FormulaPtr dist_conj(const std::string& op) {
  return mk_imp(mk_and(mk_modapp(op, mk_imp(phi(), psi())), mk_modapp(op, phi())),
                mk_modapp(op, psi()));
}

FormulaPtr soundness(const std::string& op, OpKind kind) {
  return mk_imp(wrap(op, kind, phi()), phi());
}

FormulaPtr pos_introspection(const std::string& op, OpKind kind) {
  return mk_imp(wrap(op, kind, phi()), wrap(op, kind, wrap(op, kind, phi())));
}

FormulaPtr atom_p(unsigned i) { return mk_atom("p" + std::to_string(i)); }

// T_i = p1 | ... | pi, left-associated
FormulaPtr t_i(unsigned i) {
  FormulaPtr f = atom_p(1);
  for (unsigned k = 2; k <= i; ++k) f = mk_or(f, atom_p(k));
  return f;
}

FormulaPtr surprise_conj(unsigned n) {
  FormulaPtr f = mk_not(mk_modapp("K", atom_p(1)));
  for (unsigned i = 2; i <= n; ++i)
    f = mk_and(f, mk_not(mk_modapp("K", atom_p(i))));
  return f;
}

// (~T_i -> K(~T_i)) conjoined over i = 1..n
FormulaPtr observability(unsigned n) {
  auto leg = [](unsigned i) {
    return mk_imp(mk_not(t_i(i)), mk_modapp("K", mk_not(t_i(i))));
  };
  FormulaPtr f = leg(1);
  for (unsigned i = 2; i <= n; ++i) f = mk_and(f, leg(i));
  return f;
}

FormulaPtr strong_knowability() {
  return mk_dia("Box", mk_modapp("K", phi()));
}

System base_system(std::string name) {
  System s;
  s.name = std::move(name);
  return s;
}

System make_moore_flawed() {
  System s = base_system("moore_flawed");
  s.axioms.push_back(pattern_axiom("psi", AxiomTag::Global, mk_atom("Psi")));
  s.axioms.push_back(pattern_axiom(
      "not_k_psi", AxiomTag::Global,
      mk_not(mk_predapp("K", {mk_quote(mk_atom("Psi"))}))));
  s.nec_rules["K"] = OpKind::Predicate;
  return s;
}

System make_moore_pred() {
  System s = base_system("moore_pred");
  s.axioms.push_back(pattern_axiom("psi", AxiomTag::Local, mk_atom("Psi")));
  s.axioms.push_back(pattern_axiom(
      "not_k_psi", AxiomTag::Local,
      mk_not(mk_predapp("K", {mk_quote(mk_atom("Psi"))}))));
  s.nec_rules["K"] = OpKind::Predicate;
  return s;
}

System make_moore_op() {
  System s = base_system("moore_op");
  s.axioms.push_back(pattern_axiom("psi", AxiomTag::Local, mk_atom("Psi")));
  s.axioms.push_back(pattern_axiom("not_k_psi", AxiomTag::Global,
                                   mk_not(mk_modapp("K", mk_atom("Psi")))));
  s.nec_rules["K"] = OpKind::Operator;
  return s;
}

System make_pred_s4() {
  System s = base_system("pred_s4");
  s.axioms.push_back(pattern_axiom("dist", AxiomTag::Global,
                                   dist_curried("K", OpKind::Predicate)));
  s.axioms.push_back(pattern_axiom("pos_intro", AxiomTag::Global,
                                   pos_introspection("K", OpKind::Predicate)));
  s.axioms.push_back(pattern_axiom("sound", AxiomTag::Local,
                                   soundness("K", OpKind::Predicate)));
  s.nec_rules["K"] = OpKind::Predicate;
  return s;
}

System surprise_common(std::string name, unsigned n, bool weak_surprise) {
  System s = base_system(std::move(name));
  AxiomTag sound_tag = weak_surprise ? AxiomTag::Local : AxiomTag::Global;
  s.axioms.push_back(
      pattern_axiom("sound", sound_tag, soundness("K", OpKind::Operator)));
  s.axioms.push_back(pattern_axiom("dist", AxiomTag::Global,
                                   dist_curried("K", OpKind::Operator)));
  s.axioms.push_back(pattern_axiom("t_n", AxiomTag::Global, t_i(n)));
  FormulaPtr surprise = weak_surprise
                            ? mk_or(surprise_conj(n), mk_modapp("K", mk_bot()))
                            : surprise_conj(n);
  s.axioms.push_back(pattern_axiom("surprise", AxiomTag::Global, surprise));
  s.axioms.push_back(pattern_axiom("obs", AxiomTag::Global, observability(n)));
  s.nec_rules["K"] = OpKind::Operator;
  return s;
}

System make_fitch_original() {
  System s = base_system("fitch_original");
  s.axioms.push_back(pattern_axiom("box_dist", AxiomTag::Global,
                                   dist_curried("Box", OpKind::Operator)));
  s.axioms.push_back(pattern_axiom("k_dist", AxiomTag::Global, dist_conj("K")));
  s.axioms.push_back(pattern_axiom("sound", AxiomTag::Global,
                                   soundness("K", OpKind::Operator)));
  s.axioms.push_back(pattern_axiom(
      "know", AxiomTag::Global, mk_imp(phi(), mk_dia("Box", mk_modapp("K", phi())))));
  s.nec_rules["Box"] = OpKind::Operator;
  s.nec_rules["K"] = OpKind::Operator;
  return s;
}

System make_fitch_weak() {
  System s = base_system("fitch_weak");
  s.axioms.push_back(pattern_axiom("box_dist", AxiomTag::Global,
                                   dist_curried("Box", OpKind::Operator)));
  s.axioms.push_back(pattern_axiom("k_dist", AxiomTag::Global, dist_conj("K")));
  s.axioms.push_back(pattern_axiom("sound", AxiomTag::Local,
                                   soundness("K", OpKind::Operator)));
  s.axioms.push_back(
      pattern_axiom("strong_know", AxiomTag::Global, strong_knowability()));
  s.nec_rules["Box"] = OpKind::Operator;
  s.nec_rules["K"] = OpKind::Operator;
  return s;
}

System make_fitch_keqbox() {
  System s = base_system("fitch_keqbox");
  s.axioms.push_back(pattern_axiom("box_dist", AxiomTag::Global,
                                   dist_curried("Box", OpKind::Operator)));
  s.axioms.push_back(pattern_axiom("k_dist", AxiomTag::Global, dist_conj("K")));
  s.axioms.push_back(pattern_axiom(
      "keq_box", AxiomTag::Global, mk_iff(mk_modapp("K", phi()), mk_modapp("Box", phi()))));
  s.axioms.push_back(pattern_axiom("sound", AxiomTag::Local,
                                   soundness("K", OpKind::Operator)));
  s.axioms.push_back(
      pattern_axiom("strong_know", AxiomTag::Local, strong_knowability()));
  s.nec_rules["Box"] = OpKind::Operator;
  s.nec_rules["K"] = OpKind::Operator;
  return s;
}

System make_thomason() {
  System s = base_system("thomason");
  s.axioms.push_back(pattern_axiom("pos_intro", AxiomTag::Global,
                                   pos_introspection("K", OpKind::Predicate)));
  s.axioms.push_back(pattern_axiom(
      "belief_sound", AxiomTag::Global,
      wrap("K", OpKind::Predicate, soundness("K", OpKind::Predicate))));
  s.axioms.push_back(valid_guard("k_valid", "K", OpKind::Predicate));
  s.axioms.push_back(pattern_axiom("dist", AxiomTag::Global,
                                   dist_curried("K", OpKind::Predicate)));
  return s;
}

System make_gls_like() {
  System s = base_system("gls_like");
  s.axioms.push_back(pattern_axiom("dist", AxiomTag::Global,
                                   dist_curried("Box", OpKind::Operator)));
  s.axioms.push_back(pattern_axiom(
      "loeb", AxiomTag::Global,
      mk_imp(mk_modapp("Box", mk_imp(mk_modapp("Box", phi()), phi())),
             mk_modapp("Box", phi()))));
  s.axioms.push_back(pattern_axiom("t", AxiomTag::Local,
                                   soundness("Box", OpKind::Operator)));
  s.nec_rules["Box"] = OpKind::Operator;
  return s;
}

Schema lob_schema() {
  Schema s;
  s.name = "lob";
  s.pattern = mk_imp(mk_modapp("K", mk_imp(mk_modapp("K", phi()), phi())),
                     mk_modapp("K", phi()));
  return s;
}

Schema ect_schema() {
  // (forall x. (phi -> K(phi))) -> exists e. forall x. (phi <-> InW(x, e))
  Schema s;
  s.name = "ect";
  s.pattern = mk_imp(
      mk_forall("x", mk_imp(phi(), mk_modapp("K", phi()))),
      mk_exists("e", mk_forall("x", mk_iff(phi(), mk_predapp("InW", {mk_var("x"), mk_var("e")})))));
  s.conditions.push_back({SideCondition::Kind::LoneFree, "phi", "x"});
  return s;
}

struct RegistryData {
  std::map<std::string, System> systems;
  std::map<std::string, unsigned> sprime_depths;
  std::map<std::string, Schema> probes;
};

const RegistryData& data() {
  static RegistryData reg = [] {
    RegistryData r;
    auto add = [&](System s) { r.systems.emplace(s.name, std::move(s)); };
    add(make_moore_flawed());
    add(make_moore_pred());
    add(make_moore_op());
    add(make_pred_s4());
    add(make_surprise_original(2));
    add(make_surprise_weak(2));
    {
      // exam on day k = 2 of n = 3: the footnote adds ~T_{k-1} globally
      System s = surprise_common("surprise_weak_k2n3", 3, true);
      s.axioms.push_back(
          pattern_axiom("not_t1", AxiomTag::Global, mk_not(t_i(1))));
      add(std::move(s));
    }
    add(make_fitch_original());
    add(make_fitch_weak());
    add(make_fitch_keqbox());
    add(make_selfcode(0));
    add(make_thomason());
    add(make_fused(2));
    add(make_gls_like());

    // axiom-only counterparts
    std::vector<System> sprimes;
    for (const auto& [name, sys] : r.systems) {
      if (sys.nec_rules.empty()) continue;
      SPrimeSystem sp = sprime_of(sys);
      if (name == "selfcode_n") sp.system.name = "selfcode_sprime_n";
      r.sprime_depths[sp.system.name] = sp.k_closure_depth;
      sprimes.push_back(std::move(sp.system));
    }
    for (auto& s : sprimes) r.systems.emplace(s.name, std::move(s));

    r.probes.emplace("lob", lob_schema());
    r.probes.emplace("ect", ect_schema());
    return r;
  }();
  return reg;
}

}  // namespace

System make_surprise_original(unsigned days) {
  return surprise_common("surprise_original", days, false);
}

System make_surprise_weak(unsigned days) {
  return surprise_common("surprise_weak", days, true);
}

System make_fused(unsigned days) {
  System s = base_system("fused");
  s.axioms.push_back(pattern_axiom("k_dist", AxiomTag::Global,
                                   dist_curried("K", OpKind::Operator)));
  s.axioms.push_back(pattern_axiom("t_n", AxiomTag::Global, t_i(days)));
  s.axioms.push_back(pattern_axiom("obs", AxiomTag::Global, observability(days)));
  s.axioms.push_back(pattern_axiom(
      "surprise", AxiomTag::Global,
      mk_or(surprise_conj(days), mk_modapp("K", mk_bot()))));
  s.axioms.push_back(pattern_axiom("box_dist", AxiomTag::Global,
                                   dist_curried("Box", OpKind::Operator)));
  s.axioms.push_back(
      pattern_axiom("strong_know", AxiomTag::Local, strong_knowability()));
  s.axioms.push_back(pattern_axiom("sound", AxiomTag::Local,
                                   soundness("K", OpKind::Operator)));
  s.nec_rules["K"] = OpKind::Operator;
  s.nec_rules["Box"] = OpKind::Operator;
  return s;
}

System make_selfcode(const Nat& machine_index) {
  TermPtr index_term =
      machine_index == 0 ? mk_zero() : mk_numeral(machine_index);
  System s = base_system("selfcode_n");
  s.validity_mode = ValidityMode::TautFo;
  s.axioms.push_back(pattern_axiom("dist", AxiomTag::Global,
                                   dist_curried("K", OpKind::Operator), {},
                                   /*closure=*/true));
  s.axioms.push_back(pattern_axiom("sound", AxiomTag::Local,
                                   soundness("K", OpKind::Operator), {},
                                   /*closure=*/true));
  s.axioms.push_back(pattern_axiom("pos_intro", AxiomTag::Global,
                                   pos_introspection("K", OpKind::Operator), {},
                                   /*closure=*/true));
  s.axioms.push_back(pattern_axiom(
      "having_code", AxiomTag::Global,
      mk_forall("x", mk_iff(mk_modapp("K", phi()),
                            mk_predapp("InW", {mk_pair_term(mk_var("x"),
                                                            mk_quote(phi())),
                                               index_term}))),
      {{SideCondition::Kind::LoneFree, "phi", "x"}}));
  s.nec_rules["K"] = OpKind::Operator;
  return s;
}

const System& registry(const std::string& name) {
  const auto& r = data();
  auto it = r.systems.find(name);
  if (it == r.systems.end()) throw UnknownSystem(name);
  return it->second;
}

bool is_registered(const std::string& name) {
  return data().systems.count(name) > 0;
}

std::vector<std::string> registry_names() {
  std::vector<std::string> out;
  for (const auto& [name, sys] : data().systems) out.push_back(name);
  return out;
}

unsigned sprime_depth(const std::string& name) {
  auto it = data().sprime_depths.find(name);
  return it == data().sprime_depths.end() ? 2u : it->second;
}

const Schema& probe_schema_registry(const std::string& name) {
  const auto& r = data();
  auto it = r.probes.find(name);
  if (it == r.probes.end()) throw UnknownSystem("probe schema " + name);
  return it->second;
}

std::vector<std::string> probe_schema_names() {
  std::vector<std::string> out;
  for (const auto& [name, s] : data().probes) out.push_back(name);
  return out;
}

}  // namespace gnc
