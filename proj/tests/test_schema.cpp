#include "doctest.h"

#include "gnc/godel.hpp"
#include "gnc/parse.hpp"
#include "gnc/print.hpp"
#include "gnc/registry.hpp"
#include "gnc/sysio.hpp"

#include "gen.hpp"

using namespace gnc;

namespace {

const Schema& axiom_schema(const std::string& system, const std::string& axiom) {
  const Axiom* ax = registry(system).find_axiom(axiom);
  REQUIRE(ax != nullptr);
  return ax->schema;
}

}  // namespace

TEST_CASE("instantiate: distribution and soundness") {
  Binding b{{"phi", mk_atom("p1")}, {"psi", mk_atom("p2")}};
  FormulaPtr inst = instantiate(axiom_schema("surprise_weak", "dist"), b);
  CHECK(print_formula(inst) == "K(p1 -> p2) -> K(p1) -> K(p2)");

  Binding b2{{"phi", mk_modapp("K", mk_atom("p1"))}};
  CHECK(print_formula(instantiate(axiom_schema("surprise_weak", "sound"), b2)) ==
        "K(K(p1)) -> K(p1)");
}

TEST_CASE("instantiate: having-code side condition") {
  const Schema& hc = axiom_schema("selfcode_n", "having_code");
  Binding good{{"phi", parse_formula("InW(x, 3)")}};
  FormulaPtr inst = instantiate(hc, good);
  CHECK(free_vars(inst).empty());

  Binding two_free{{"phi", parse_formula("InW(x, y)")}};
  CHECK_THROWS_AS(instantiate(hc, two_free), SchemaError);
  Binding closed{{"phi", parse_formula("p1")}};
  CHECK_THROWS_AS(instantiate(hc, closed), SchemaError);
}

TEST_CASE("match: inverse of instantiation") {
  const Schema& dist = axiom_schema("surprise_weak", "dist");
  auto b = match(dist, parse_formula("K(p1 -> p2) -> K(p1) -> K(p2)"));
  REQUIRE(b.has_value());
  CHECK(formula_eq(b->at("phi"), mk_atom("p1")));
  CHECK(formula_eq(b->at("psi"), mk_atom("p2")));

  CHECK_FALSE(match(dist, parse_formula("p1 -> p1")).has_value());

  auto bs = match(axiom_schema("surprise_weak", "sound"),
                  parse_formula("K(Bot) -> Bot"));
  REQUIRE(bs.has_value());
  CHECK(formula_eq(bs->at("phi"), mk_bot()));
}

TEST_CASE("match handles quoted patterns against numerals") {
  const Schema& dist = axiom_schema("pred_s4", "dist");
  Binding b{{"phi", mk_atom("p1")}, {"psi", mk_atom("p2")}};
  FormulaPtr inst = normalize(instantiate(dist, b));
  auto back = match(dist, inst);
  REQUIRE(back.has_value());
  CHECK(formula_eq(back->at("phi"), mk_atom("p1")));
  CHECK(formula_eq(back->at("psi"), mk_atom("p2")));
}

TEST_CASE("match . instantiate = identity over random bindings") {
  testgen::Gen g(101);
  int checked = 0;
  for (const auto& name : registry_names()) {
    const System& sys = registry(name);
    for (const auto& ax : sys.axioms) {
      if (ax.guard != GuardKind::None) continue;
      auto mvs = schema_metavars(ax.schema);
      if (mvs.empty()) continue;
      if (!ax.schema.conditions.empty()) continue;  // exercised separately
      for (int rep = 0; rep < 40; ++rep) {
        Binding b;
        for (const auto& mv : mvs) b[mv] = g.prop_formula(2);
        FormulaPtr inst = normalize(instantiate(ax.schema, b));
        auto back = match(ax.schema, inst);
        REQUIRE(back.has_value());
        // the recovered binding must re-instantiate to the same formula
        CHECK(formula_eq(normalize(instantiate(ax.schema, *back)), inst));
        ++checked;
      }
    }
  }
  CHECK(checked >= 1000);
}

TEST_CASE("closure schemas wrap free variables and match strips them") {
  const Schema& dist = axiom_schema("selfcode_n", "dist");
  REQUIRE(dist.closure);
  Binding b{{"phi", parse_formula("InW(x, 1)")}, {"psi", parse_formula("InW(x, 2)")}};
  FormulaPtr inst = instantiate(dist, b);
  CHECK(inst->tag == Formula::Tag::Forall);
  CHECK(free_vars(inst).empty());
  auto back = match(dist, inst);
  REQUIRE(back.has_value());
  CHECK(formula_eq(back->at("phi"), parse_formula("InW(x, 1)")));

  // sentence instances need no wrapper
  Binding closed{{"phi", mk_atom("p1")}, {"psi", mk_atom("p2")}};
  FormulaPtr flat = instantiate(dist, closed);
  CHECK(flat->tag == Formula::Tag::Imp);
  CHECK(match(dist, flat).has_value());
}

TEST_CASE("registry: expected entries are present") {
  for (const char* name :
       {"moore_flawed", "moore_pred", "moore_op", "pred_s4", "surprise_original",
        "surprise_weak", "surprise_weak_k2n3", "fitch_original", "fitch_weak",
        "fitch_keqbox", "selfcode_n", "selfcode_sprime_n", "thomason", "fused",
        "gls_like", "surprise_weak_sprime", "fitch_weak_sprime"}) {
    CHECK(is_registered(name));
  }
  CHECK_THROWS_AS(registry("no_such_system"), UnknownSystem);
  CHECK_THROWS_AS(probe_schema_registry("no_such_probe"), UnknownSystem);
  probe_schema_registry("lob");
  probe_schema_registry("ect");
}

TEST_CASE("registry: moore_flawed has no local axioms") {
  const System& s = registry("moore_flawed");
  CHECK_FALSE(s.has_local_axioms());
  // moore_pred localizes both sentences; moore_op keeps ~K(Psi) global
  CHECK(registry("moore_pred").has_local_axioms());
  const Axiom* nk = registry("moore_op").find_axiom("not_k_psi");
  REQUIRE(nk != nullptr);
  CHECK(nk->tag == AxiomTag::Global);
}

TEST_CASE("every registry system round-trips through the file format") {
  for (const auto& name : registry_names()) {
    const System& sys = registry(name);
    System back = parse_system(format_system(sys));
    CHECK(back.name == sys.name);
    CHECK(back.validity_mode == sys.validity_mode);
    CHECK(back.nec_rules == sys.nec_rules);
    REQUIRE(back.axioms.size() == sys.axioms.size());
    for (std::size_t i = 0; i < sys.axioms.size(); ++i) {
      const Axiom& a = sys.axioms[i];
      const Axiom& b = back.axioms[i];
      CHECK(a.name == b.name);
      CHECK(a.tag == b.tag);
      CHECK(a.guard == b.guard);
      if (a.guard == GuardKind::None) {
        CHECK(formula_eq(a.schema.pattern, b.schema.pattern));
        CHECK(a.schema.closure == b.schema.closure);
        CHECK(a.schema.conditions.size() == b.schema.conditions.size());
      } else {
        CHECK(a.guard_op == b.guard_op);
        CHECK(a.guard_op_kind == b.guard_op_kind);
      }
    }
  }
}

TEST_CASE("valid guard: thomason's K{f} for valid f") {
  const System& s = registry("thomason");
  const Axiom* kv = s.find_axiom("k_valid");
  REQUIRE(kv != nullptr);
  CHECK(axiom_instance(s, *kv, normalize(parse_formula("K{p1 -> p1}"))));
  CHECK_FALSE(axiom_instance(s, *kv, normalize(parse_formula("K{p1}"))));
  CHECK_FALSE(axiom_instance(s, *kv, parse_formula("p1 -> p1")));
}

TEST_CASE("sprime_of surprise_weak reproduces the seven lines") {
  SPrimeSystem sp = sprime_of(registry("surprise_weak"));
  std::vector<std::string> names;
  for (const auto& ax : sp.system.axioms) names.push_back(ax.name);
  // base dist doubles as the distribution line, so no K_dist is added
  CHECK(names == std::vector<std::string>{"dist", "t_n", "surprise", "obs",
                                          "K_valid", "K_closure", "sound"});
  CHECK(sp.system.nec_rules.empty());
  const System& s = sp.system;

  const Axiom* closure = s.find_axiom("K_closure");
  REQUIRE(closure != nullptr);
  FormulaPtr tn = parse_formula("p1 | p2");
  CHECK(axiom_instance(s, *closure, mk_modapp("K", tn)));
  CHECK(axiom_instance(s, *closure, mk_modapp("K", mk_modapp("K", tn))));
  // a local axiom instance is never closure material
  FormulaPtr sound_inst = parse_formula("K(p1) -> p1");
  CHECK_FALSE(axiom_instance(s, *closure, mk_modapp("K", sound_inst)));
  CHECK(sprime_line_of(s, mk_modapp("K", tn)) == "K_closure");
  CHECK(sprime_line_of(s, sound_inst) == "sound");
  CHECK(sprime_line_of(s, parse_formula("p1 & p2")).empty());
}

TEST_CASE("sprime closure lines recurse across operators") {
  SPrimeSystem sp = sprime_of(registry("fitch_weak"));
  const System& s = sp.system;
  // K(Box(valid)) sits in the K-closure via the Box-valid line
  FormulaPtr valid = parse_formula("q -> q");
  FormulaPtr nested = mk_modapp("K", mk_modapp("Box", valid));
  const Axiom* kc = s.find_axiom("K_closure");
  REQUIRE(kc != nullptr);
  CHECK(axiom_instance(s, *kc, nested));
}
