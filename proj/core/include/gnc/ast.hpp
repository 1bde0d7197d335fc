#ifndef GNC_AST_HPP
#define GNC_AST_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gnc/nat.hpp"

namespace gnc {

struct Term;
struct Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

// Terms of the arithmetic fragment. Numerals are kept as a single node
// rather than Succ chains; normalization collapses S(...S(0)...) into them.
struct Term {
  enum class Tag { Var, Zero, Succ, Plus, Times, Numeral, Pair, Quote };

  Tag tag;
  std::string name;   // Var
  TermPtr a, b;       // Succ(a), Plus/Times/Pair(a,b)
  Nat num;            // Numeral
  FormulaPtr quoted;  // Quote
  std::size_t hash = 0;
};

// Formulas. Meta nodes only ever appear inside schema patterns; ground
// formulas (proof steps, model targets) never contain them.
struct Formula {
  enum class Tag {
    Atom, Bot, Not, And, Or, Imp, Iff,
    ModApp,   // operator application K(f)
    PredApp,  // predicate application K(t1,...,tn)
    Forall, Exists,
    Meta,
  };

  Tag tag;
  std::string name;          // Atom/Meta name, ModApp/PredApp symbol, quantified variable
  FormulaPtr a, b;           // children; quantifier body in a
  std::vector<TermPtr> args;  // PredApp
  std::size_t hash = 0;
};

// Constructors (hash precomputed, nodes immutable).
TermPtr mk_var(std::string name);
TermPtr mk_zero();
TermPtr mk_succ(TermPtr t);
TermPtr mk_plus(TermPtr a, TermPtr b);
TermPtr mk_times(TermPtr a, TermPtr b);
TermPtr mk_numeral(Nat n);
TermPtr mk_pair_term(TermPtr a, TermPtr b);
TermPtr mk_quote(FormulaPtr f);

FormulaPtr mk_atom(std::string name);
FormulaPtr mk_bot();
FormulaPtr mk_not(FormulaPtr f);
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_imp(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_modapp(std::string op, FormulaPtr f);
FormulaPtr mk_predapp(std::string pred, std::vector<TermPtr> args);
FormulaPtr mk_forall(std::string var, FormulaPtr body);
FormulaPtr mk_exists(std::string var, FormulaPtr body);
FormulaPtr mk_meta(std::string name);

// Diamond is sugar: Dia(f) = ~Box(~f).
FormulaPtr mk_dia(const std::string& box_op, FormulaPtr f);

bool term_eq(const TermPtr& x, const TermPtr& y);
bool formula_eq(const FormulaPtr& x, const FormulaPtr& y);

// Total structural order, stable across platforms (no pointer identity).
int term_cmp(const TermPtr& x, const TermPtr& y);
int formula_cmp(const FormulaPtr& x, const FormulaPtr& y);

struct FormulaLess {
  bool operator()(const FormulaPtr& x, const FormulaPtr& y) const {
    return formula_cmp(x, y) < 0;
  }
};
using FormulaSet = std::set<FormulaPtr, FormulaLess>;

struct FormulaHash {
  std::size_t operator()(const FormulaPtr& f) const { return f ? f->hash : 0; }
};
struct FormulaEqual {
  bool operator()(const FormulaPtr& x, const FormulaPtr& y) const {
    return formula_eq(x, y);
  }
};

// Free variables (term positions only; quantifiers bind).
std::set<std::string> free_vars(const FormulaPtr& f);
std::set<std::string> free_vars_term(const TermPtr& t);

bool contains_meta(const FormulaPtr& f);
bool contains_quote(const FormulaPtr& f);

// Modal/predicate operator names occurring in f, with whether each
// occurrence was a predicate application.
void collect_ops(const FormulaPtr& f, std::set<std::string>& operators,
                 std::set<std::string>& predicates);

// Substitute term t for free occurrences of variable x. Rejects capturing
// substitutions by returning nullptr.
FormulaPtr subst_var(const FormulaPtr& f, const std::string& x, const TermPtr& t);
TermPtr subst_var_term(const TermPtr& in, const std::string& x, const TermPtr& t);

// All subformulas of f, including f itself (quoted formulas included).
void subformulas(const FormulaPtr& f, FormulaSet& out);

std::size_t formula_size(const FormulaPtr& f);

}  // namespace gnc

#endif
