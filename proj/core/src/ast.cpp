#include "gnc/ast.hpp"

#include <functional>

namespace gnc {

namespace {

// FNV-1a, fixed offsets; std::hash is implementation-defined and we want
// identical behavior everywhere.
constexpr std::size_t kFnvOffset = 1469598103934665603ull;
constexpr std::size_t kFnvPrime = 1099511628211ull;

std::size_t fnv_bytes(std::size_t h, const void* data, std::size_t len) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
  return h;
}

std::size_t fnv_string(std::size_t h, const std::string& s) {
  return fnv_bytes(h, s.data(), s.size());
}

std::size_t fnv_size(std::size_t h, std::size_t v) {
  return fnv_bytes(h, &v, sizeof(v));
}

std::size_t hash_term(const Term& t) {
  std::size_t h = fnv_size(kFnvOffset, static_cast<std::size_t>(t.tag));
  h = fnv_string(h, t.name);
  if (t.a) h = fnv_size(h, t.a->hash);
  if (t.b) h = fnv_size(h, t.b->hash);
  if (t.tag == Term::Tag::Numeral) {
    // hash low limbs; equality falls back to full comparison anyway
    h = fnv_size(h, static_cast<std::size_t>(t.num % 0x7fffffff));
  }
  if (t.quoted) h = fnv_size(h, t.quoted->hash);
  return h;
}

std::size_t hash_formula(const Formula& f) {
  std::size_t h = fnv_size(kFnvOffset, static_cast<std::size_t>(f.tag) + 64);
  h = fnv_string(h, f.name);
  if (f.a) h = fnv_size(h, f.a->hash);
  if (f.b) h = fnv_size(h, f.b->hash);
  for (const auto& t : f.args) h = fnv_size(h, t->hash);
  return h;
}

TermPtr finish(Term t) {
  t.hash = hash_term(t);
  return std::make_shared<const Term>(std::move(t));
}

FormulaPtr finish(Formula f) {
  f.hash = hash_formula(f);
  return std::make_shared<const Formula>(std::move(f));
}

}  // namespace

TermPtr mk_var(std::string name) {
  Term t;
  t.tag = Term::Tag::Var;
  t.name = std::move(name);
  return finish(std::move(t));
}

TermPtr mk_zero() {
  Term t;
  t.tag = Term::Tag::Zero;
  return finish(std::move(t));
}

TermPtr mk_succ(TermPtr x) {
  Term t;
  t.tag = Term::Tag::Succ;
  t.a = std::move(x);
  return finish(std::move(t));
}

TermPtr mk_plus(TermPtr a, TermPtr b) {
  Term t;
  t.tag = Term::Tag::Plus;
  t.a = std::move(a);
  t.b = std::move(b);
  return finish(std::move(t));
}

TermPtr mk_times(TermPtr a, TermPtr b) {
  Term t;
  t.tag = Term::Tag::Times;
  t.a = std::move(a);
  t.b = std::move(b);
  return finish(std::move(t));
}

TermPtr mk_numeral(Nat n) {
  Term t;
  t.tag = Term::Tag::Numeral;
  t.num = std::move(n);
  return finish(std::move(t));
}

TermPtr mk_pair_term(TermPtr a, TermPtr b) {
  Term t;
  t.tag = Term::Tag::Pair;
  t.a = std::move(a);
  t.b = std::move(b);
  return finish(std::move(t));
}

TermPtr mk_quote(FormulaPtr f) {
  Term t;
  t.tag = Term::Tag::Quote;
  t.quoted = std::move(f);
  return finish(std::move(t));
}

FormulaPtr mk_atom(std::string name) {
  Formula f;
  f.tag = Formula::Tag::Atom;
  f.name = std::move(name);
  return finish(std::move(f));
}

FormulaPtr mk_bot() {
  Formula f;
  f.tag = Formula::Tag::Bot;
  return finish(std::move(f));
}

FormulaPtr mk_not(FormulaPtr x) {
  Formula f;
  f.tag = Formula::Tag::Not;
  f.a = std::move(x);
  return finish(std::move(f));
}

namespace {
FormulaPtr mk_bin(Formula::Tag tag, FormulaPtr a, FormulaPtr b) {
  Formula f;
  f.tag = tag;
  f.a = std::move(a);
  f.b = std::move(b);
  return finish(std::move(f));
}
}  // namespace

FormulaPtr mk_and(FormulaPtr a, FormulaPtr b) { return mk_bin(Formula::Tag::And, std::move(a), std::move(b)); }
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b) { return mk_bin(Formula::Tag::Or, std::move(a), std::move(b)); }
FormulaPtr mk_imp(FormulaPtr a, FormulaPtr b) { return mk_bin(Formula::Tag::Imp, std::move(a), std::move(b)); }
FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b) { return mk_bin(Formula::Tag::Iff, std::move(a), std::move(b)); }

FormulaPtr mk_modapp(std::string op, FormulaPtr x) {
  Formula f;
  f.tag = Formula::Tag::ModApp;
  f.name = std::move(op);
  f.a = std::move(x);
  return finish(std::move(f));
}

FormulaPtr mk_predapp(std::string pred, std::vector<TermPtr> args) {
  Formula f;
  f.tag = Formula::Tag::PredApp;
  f.name = std::move(pred);
  f.args = std::move(args);
  return finish(std::move(f));
}

FormulaPtr mk_forall(std::string var, FormulaPtr body) {
  Formula f;
  f.tag = Formula::Tag::Forall;
  f.name = std::move(var);
  f.a = std::move(body);
  return finish(std::move(f));
}

FormulaPtr mk_exists(std::string var, FormulaPtr body) {
  Formula f;
  f.tag = Formula::Tag::Exists;
  f.name = std::move(var);
  f.a = std::move(body);
  return finish(std::move(f));
}

FormulaPtr mk_meta(std::string name) {
  Formula f;
  f.tag = Formula::Tag::Meta;
  f.name = std::move(name);
  return finish(std::move(f));
}

FormulaPtr mk_dia(const std::string& box_op, FormulaPtr f) {
  return mk_not(mk_modapp(box_op, mk_not(std::move(f))));
}

int term_cmp(const TermPtr& x, const TermPtr& y) {
  if (x == y) return 0;
  if (!x) return -1;
  if (!y) return 1;
  if (x->tag != y->tag) return x->tag < y->tag ? -1 : 1;
  if (int c = x->name.compare(y->name)) return c < 0 ? -1 : 1;
  if (x->tag == Term::Tag::Numeral) {
    if (x->num != y->num) return x->num < y->num ? -1 : 1;
  }
  if (int c = term_cmp(x->a, y->a)) return c;
  if (int c = term_cmp(x->b, y->b)) return c;
  return formula_cmp(x->quoted, y->quoted);
}

int formula_cmp(const FormulaPtr& x, const FormulaPtr& y) {
  if (x == y) return 0;
  if (!x) return -1;
  if (!y) return 1;
  if (x->tag != y->tag) return x->tag < y->tag ? -1 : 1;
  if (int c = x->name.compare(y->name)) return c < 0 ? -1 : 1;
  if (x->args.size() != y->args.size())
    return x->args.size() < y->args.size() ? -1 : 1;
  for (std::size_t i = 0; i < x->args.size(); ++i)
    if (int c = term_cmp(x->args[i], y->args[i])) return c;
  if (int c = formula_cmp(x->a, y->a)) return c;
  return formula_cmp(x->b, y->b);
}

bool term_eq(const TermPtr& x, const TermPtr& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->hash != y->hash) return false;
  return term_cmp(x, y) == 0;
}

bool formula_eq(const FormulaPtr& x, const FormulaPtr& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->hash != y->hash) return false;
  return formula_cmp(x, y) == 0;
}

namespace {

void fv_term(const TermPtr& t, const std::set<std::string>& bound,
             std::set<std::string>& out) {
  if (!t) return;
  switch (t->tag) {
    case Term::Tag::Var:
      if (!bound.count(t->name)) out.insert(t->name);
      break;
    case Term::Tag::Quote:
      // quoted formulas are closed syntax objects; their variables are not
      // free variables of the host formula
      break;
    default:
      fv_term(t->a, bound, out);
      fv_term(t->b, bound, out);
      break;
  }
}

void fv_formula(const FormulaPtr& f, std::set<std::string> bound,
                std::set<std::string>& out) {
  if (!f) return;
  switch (f->tag) {
    case Formula::Tag::Forall:
    case Formula::Tag::Exists:
      bound.insert(f->name);
      fv_formula(f->a, bound, out);
      break;
    case Formula::Tag::PredApp:
      for (const auto& t : f->args) fv_term(t, bound, out);
      break;
    default:
      fv_formula(f->a, bound, out);
      fv_formula(f->b, bound, out);
      break;
  }
}

}  // namespace

std::set<std::string> free_vars(const FormulaPtr& f) {
  std::set<std::string> out;
  fv_formula(f, {}, out);
  return out;
}

std::set<std::string> free_vars_term(const TermPtr& t) {
  std::set<std::string> out;
  fv_term(t, {}, out);
  return out;
}

bool contains_meta(const FormulaPtr& f) {
  if (!f) return false;
  if (f->tag == Formula::Tag::Meta) return true;
  for (const auto& t : f->args) {
    const Term* cur = t.get();
    // metas live only in formula positions, reachable through quotes
    std::function<bool(const Term*)> walk = [&](const Term* tm) -> bool {
      if (!tm) return false;
      if (tm->quoted && contains_meta(tm->quoted)) return true;
      return walk(tm->a.get()) || walk(tm->b.get());
    };
    if (walk(cur)) return true;
  }
  return contains_meta(f->a) || contains_meta(f->b);
}

bool contains_quote(const FormulaPtr& f) {
  if (!f) return false;
  std::function<bool(const TermPtr&)> walk_t = [&](const TermPtr& t) -> bool {
    if (!t) return false;
    if (t->tag == Term::Tag::Quote) return true;
    return walk_t(t->a) || walk_t(t->b);
  };
  for (const auto& t : f->args)
    if (walk_t(t)) return true;
  return contains_quote(f->a) || contains_quote(f->b);
}

void collect_ops(const FormulaPtr& f, std::set<std::string>& operators,
                 std::set<std::string>& predicates) {
  if (!f) return;
  if (f->tag == Formula::Tag::ModApp) operators.insert(f->name);
  if (f->tag == Formula::Tag::PredApp) predicates.insert(f->name);
  for (const auto& t : f->args) {
    std::function<void(const TermPtr&)> walk = [&](const TermPtr& tm) {
      if (!tm) return;
      if (tm->quoted) collect_ops(tm->quoted, operators, predicates);
      walk(tm->a);
      walk(tm->b);
    };
    walk(t);
  }
  collect_ops(f->a, operators, predicates);
  collect_ops(f->b, operators, predicates);
}

TermPtr subst_var_term(const TermPtr& in, const std::string& x, const TermPtr& t) {
  if (!in) return in;
  switch (in->tag) {
    case Term::Tag::Var:
      return in->name == x ? t : in;
    case Term::Tag::Succ:
      return mk_succ(subst_var_term(in->a, x, t));
    case Term::Tag::Plus:
      return mk_plus(subst_var_term(in->a, x, t), subst_var_term(in->b, x, t));
    case Term::Tag::Times:
      return mk_times(subst_var_term(in->a, x, t), subst_var_term(in->b, x, t));
    case Term::Tag::Pair:
      return mk_pair_term(subst_var_term(in->a, x, t), subst_var_term(in->b, x, t));
    default:
      return in;  // Zero, Numeral, Quote untouched
  }
}

FormulaPtr subst_var(const FormulaPtr& f, const std::string& x, const TermPtr& t) {
  if (!f) return f;
  switch (f->tag) {
    case Formula::Tag::Atom:
    case Formula::Tag::Bot:
    case Formula::Tag::Meta:
      return f;
    case Formula::Tag::Not: {
      auto a = subst_var(f->a, x, t);
      return a ? mk_not(a) : nullptr;
    }
    case Formula::Tag::And:
    case Formula::Tag::Or:
    case Formula::Tag::Imp:
    case Formula::Tag::Iff: {
      auto a = subst_var(f->a, x, t);
      auto b = subst_var(f->b, x, t);
      if (!a || !b) return nullptr;
      switch (f->tag) {
        case Formula::Tag::And: return mk_and(a, b);
        case Formula::Tag::Or: return mk_or(a, b);
        case Formula::Tag::Imp: return mk_imp(a, b);
        default: return mk_iff(a, b);
      }
    }
    case Formula::Tag::ModApp: {
      auto a = subst_var(f->a, x, t);
      return a ? mk_modapp(f->name, a) : nullptr;
    }
    case Formula::Tag::PredApp: {
      std::vector<TermPtr> args;
      args.reserve(f->args.size());
      for (const auto& arg : f->args) args.push_back(subst_var_term(arg, x, t));
      return mk_predapp(f->name, std::move(args));
    }
    case Formula::Tag::Forall:
    case Formula::Tag::Exists: {
      if (f->name == x) return f;  // x rebound, nothing free below
      // capture check: the binder must not capture a variable of t
      if (free_vars_term(t).count(f->name)) {
        auto fv = free_vars(f->a);
        if (fv.count(x)) return nullptr;
        return f;
      }
      auto a = subst_var(f->a, x, t);
      if (!a) return nullptr;
      return f->tag == Formula::Tag::Forall ? mk_forall(f->name, a)
                                            : mk_exists(f->name, a);
    }
  }
  return nullptr;
}

void subformulas(const FormulaPtr& f, FormulaSet& out) {
  if (!f || f->tag == Formula::Tag::Meta) return;
  if (!out.insert(f).second) return;
  subformulas(f->a, out);
  subformulas(f->b, out);
  for (const auto& t : f->args) {
    std::function<void(const TermPtr&)> walk = [&](const TermPtr& tm) {
      if (!tm) return;
      if (tm->quoted) subformulas(tm->quoted, out);
      walk(tm->a);
      walk(tm->b);
    };
    walk(t);
  }
}

std::size_t formula_size(const FormulaPtr& f) {
  if (!f) return 0;
  std::size_t n = 1 + formula_size(f->a) + formula_size(f->b);
  for (const auto& t : f->args) {
    std::function<std::size_t(const TermPtr&)> walk = [&](const TermPtr& tm) -> std::size_t {
      if (!tm) return 0;
      std::size_t k = 1 + walk(tm->a) + walk(tm->b);
      if (tm->quoted) k += formula_size(tm->quoted);
      return k;
    };
    n += walk(t);
  }
  return n;
}

}  // namespace gnc
