#include "gnc/schema.hpp"

#include <functional>

#include "gnc/godel.hpp"
#include "gnc/print.hpp"

namespace gnc {

namespace {

void metavars_of(const FormulaPtr& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->tag == Formula::Tag::Meta) {
    out.insert(f->name);
    return;
  }
  metavars_of(f->a, out);
  metavars_of(f->b, out);
  for (const auto& t : f->args) {
    std::function<void(const TermPtr&)> walk = [&](const TermPtr& tm) {
      if (!tm) return;
      if (tm->quoted) metavars_of(tm->quoted, out);
      walk(tm->a);
      walk(tm->b);
    };
    walk(t);
  }
}

TermPtr subst_meta_term(const TermPtr& t, const Binding& b);

FormulaPtr subst_meta(const FormulaPtr& f, const Binding& b) {
  switch (f->tag) {
    case Formula::Tag::Meta: {
      auto it = b.find(f->name);
      if (it == b.end())
        throw SchemaError("no binding for metavariable ?" + f->name);
      return it->second;
    }
    case Formula::Tag::Atom:
    case Formula::Tag::Bot:
      return f;
    case Formula::Tag::Not:
      return mk_not(subst_meta(f->a, b));
    case Formula::Tag::And:
      return mk_and(subst_meta(f->a, b), subst_meta(f->b, b));
    case Formula::Tag::Or:
      return mk_or(subst_meta(f->a, b), subst_meta(f->b, b));
    case Formula::Tag::Imp:
      return mk_imp(subst_meta(f->a, b), subst_meta(f->b, b));
    case Formula::Tag::Iff:
      return mk_iff(subst_meta(f->a, b), subst_meta(f->b, b));
    case Formula::Tag::ModApp:
      return mk_modapp(f->name, subst_meta(f->a, b));
    case Formula::Tag::PredApp: {
      std::vector<TermPtr> args;
      args.reserve(f->args.size());
      for (const auto& t : f->args) args.push_back(subst_meta_term(t, b));
      return mk_predapp(f->name, std::move(args));
    }
    case Formula::Tag::Forall:
      return mk_forall(f->name, subst_meta(f->a, b));
    case Formula::Tag::Exists:
      return mk_exists(f->name, subst_meta(f->a, b));
  }
  throw std::logic_error("subst_meta: bad tag");
}

TermPtr subst_meta_term(const TermPtr& t, const Binding& b) {
  if (!t) return t;
  switch (t->tag) {
    case Term::Tag::Quote:
      return mk_quote(subst_meta(t->quoted, b));
    case Term::Tag::Succ:
      return mk_succ(subst_meta_term(t->a, b));
    case Term::Tag::Plus:
      return mk_plus(subst_meta_term(t->a, b), subst_meta_term(t->b, b));
    case Term::Tag::Times:
      return mk_times(subst_meta_term(t->a, b), subst_meta_term(t->b, b));
    case Term::Tag::Pair:
      return mk_pair_term(subst_meta_term(t->a, b), subst_meta_term(t->b, b));
    default:
      return t;
  }
}

void check_conditions(const Schema& s, const Binding& b) {
  for (const auto& c : s.conditions) {
    auto it = b.find(c.metavar);
    if (it == b.end())
      throw SchemaError("side condition refers to unbound ?" + c.metavar);
    switch (c.kind) {
      case SideCondition::Kind::LoneFree: {
        auto fv = free_vars(it->second);
        if (fv.size() != 1 || *fv.begin() != c.var)
          throw SchemaError("lonefree(?" + c.metavar + ", " + c.var +
                            ") violated by " + print_formula(it->second));
        break;
      }
    }
  }
}

bool conditions_hold(const Schema& s, const Binding& b) {
  try {
    check_conditions(s, b);
    return true;
  } catch (const SchemaError&) {
    return false;
  }
}

bool match_term(const TermPtr& pat, const TermPtr& g, Binding& b);

bool match_formula(const FormulaPtr& pat, const FormulaPtr& g, Binding& b) {
  if (!pat || !g) return pat == g;
  if (pat->tag == Formula::Tag::Meta) {
    auto [it, inserted] = b.emplace(pat->name, g);
    return inserted || formula_eq(it->second, g);
  }
  if (pat->tag != g->tag || pat->name != g->name) return false;
  if (pat->args.size() != g->args.size()) return false;
  for (std::size_t i = 0; i < pat->args.size(); ++i)
    if (!match_term(pat->args[i], g->args[i], b)) return false;
  if (pat->a && !match_formula(pat->a, g->a, b)) return false;
  if (!pat->a && g->a) return false;
  if (pat->b && !match_formula(pat->b, g->b, b)) return false;
  if (!pat->b && g->b) return false;
  return true;
}

bool match_term(const TermPtr& pat, const TermPtr& g, Binding& b) {
  if (!pat || !g) return pat == g;
  if (pat->tag == Term::Tag::Quote) {
    // Quoted patterns match either an unnormalized quote or the numeral a
    // normalization produced; the numeral is decoded back into syntax.
    if (g->tag == Term::Tag::Quote)
      return match_formula(pat->quoted, g->quoted, b);
    if (g->tag == Term::Tag::Numeral) {
      auto dec = gn_decode(g->num);
      return dec && match_formula(pat->quoted, *dec, b);
    }
    return false;
  }
  if (pat->tag != g->tag || pat->name != g->name) return false;
  if (pat->tag == Term::Tag::Numeral && pat->num != g->num) return false;
  if (pat->a && !match_term(pat->a, g->a, b)) return false;
  if (!pat->a && g->a) return false;
  if (pat->b && !match_term(pat->b, g->b, b)) return false;
  if (!pat->b && g->b) return false;
  return true;
}

}  // namespace

std::set<std::string> schema_metavars(const Schema& s) {
  std::set<std::string> out;
  metavars_of(s.pattern, out);
  return out;
}

FormulaPtr universal_closure(const FormulaPtr& f) {
  auto fv = free_vars(f);
  FormulaPtr out = f;
  for (auto it = fv.rbegin(); it != fv.rend(); ++it) out = mk_forall(*it, out);
  return out;
}

FormulaPtr instantiate(const Schema& s, const Binding& binding) {
  check_conditions(s, binding);
  FormulaPtr inst = subst_meta(s.pattern, binding);
  if (s.closure) inst = universal_closure(inst);
  return inst;
}

std::optional<Binding> match(const Schema& s, const FormulaPtr& ground) {
  // A closure schema instance is ∀x1..xn(body) where {x1..xn} are exactly
  // the free variables of the instantiated body; try each prefix strip.
  std::vector<std::pair<FormulaPtr, std::vector<std::string>>> candidates;
  if (!s.closure) {
    candidates.push_back({ground, {}});
  } else {
    FormulaPtr cur = ground;
    std::vector<std::string> stripped;
    candidates.push_back({cur, stripped});
    while (cur->tag == Formula::Tag::Forall) {
      stripped.push_back(cur->name);
      cur = cur->a;
      candidates.push_back({cur, stripped});
    }
  }
  for (const auto& [body, stripped] : candidates) {
    Binding b;
    if (!match_formula(s.pattern, body, b)) continue;
    if (!conditions_hold(s, b)) continue;
    if (s.closure) {
      std::set<std::string> names(stripped.begin(), stripped.end());
      if (names.size() != stripped.size()) continue;  // duplicate binder
      if (names != free_vars(body)) continue;
      // the fixed closure order must reproduce the ground formula
      if (!formula_eq(universal_closure(body), ground)) continue;
    }
    return b;
  }
  return std::nullopt;
}

}  // namespace gnc
