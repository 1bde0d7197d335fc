#include "gnc/print.hpp"

#include <sstream>

namespace gnc {

namespace {

// precedence: <-> 1, -> 2, | 3, & 4, ~ 5, applications 6; quantifiers 0
// (their body extends as far right as possible)
void pr_formula(std::ostringstream& os, const FormulaPtr& f, int min_prec);

void pr_term(std::ostringstream& os, const TermPtr& t, int min_prec) {
  switch (t->tag) {
    case Term::Tag::Var:
      os << t->name;
      return;
    case Term::Tag::Zero:
      os << "0";
      return;
    case Term::Tag::Numeral:
      os << t->num.str();
      return;
    case Term::Tag::Succ:
      os << "S(";
      pr_term(os, t->a, 0);
      os << ")";
      return;
    case Term::Tag::Pair:
      os << "pair(";
      pr_term(os, t->a, 0);
      os << ", ";
      pr_term(os, t->b, 0);
      os << ")";
      return;
    case Term::Tag::Quote:
      os << "quote{";
      pr_formula(os, t->quoted, 0);
      os << "}";
      return;
    case Term::Tag::Plus: {
      bool paren = min_prec > 1;
      if (paren) os << "(";
      pr_term(os, t->a, 1);
      os << " + ";
      pr_term(os, t->b, 2);
      if (paren) os << ")";
      return;
    }
    case Term::Tag::Times: {
      bool paren = min_prec > 2;
      if (paren) os << "(";
      pr_term(os, t->a, 2);
      os << " * ";
      pr_term(os, t->b, 3);
      if (paren) os << ")";
      return;
    }
  }
}

bool is_dia(const FormulaPtr& f, FormulaPtr& inner) {
  if (f->tag != Formula::Tag::Not) return false;
  const FormulaPtr& box = f->a;
  if (!box || box->tag != Formula::Tag::ModApp || box->name != "Box") return false;
  if (!box->a || box->a->tag != Formula::Tag::Not) return false;
  inner = box->a->a;
  return true;
}

void pr_binary(std::ostringstream& os, const FormulaPtr& f, int min_prec,
               int prec, const char* sym, bool right_assoc) {
  bool paren = min_prec > prec;
  if (paren) os << "(";
  pr_formula(os, f->a, right_assoc ? prec + 1 : prec);
  os << " " << sym << " ";
  pr_formula(os, f->b, right_assoc ? prec : prec + 1);
  if (paren) os << ")";
}

void pr_formula(std::ostringstream& os, const FormulaPtr& f, int min_prec) {
  switch (f->tag) {
    case Formula::Tag::Atom:
      os << f->name;
      return;
    case Formula::Tag::Meta:
      os << "?" << f->name;
      return;
    case Formula::Tag::Bot:
      os << "Bot";
      return;
    case Formula::Tag::Not: {
      FormulaPtr inner;
      if (is_dia(f, inner)) {
        os << "Dia(";
        pr_formula(os, inner, 0);
        os << ")";
        return;
      }
      bool paren = min_prec > 5;
      if (paren) os << "(";
      os << "~";
      pr_formula(os, f->a, 5);
      if (paren) os << ")";
      return;
    }
    case Formula::Tag::And:
      pr_binary(os, f, min_prec, 4, "&", false);
      return;
    case Formula::Tag::Or:
      pr_binary(os, f, min_prec, 3, "|", false);
      return;
    case Formula::Tag::Imp:
      pr_binary(os, f, min_prec, 2, "->", true);
      return;
    case Formula::Tag::Iff:
      pr_binary(os, f, min_prec, 1, "<->", true);
      return;
    case Formula::Tag::ModApp:
      os << f->name << "(";
      pr_formula(os, f->a, 0);
      os << ")";
      return;
    case Formula::Tag::PredApp:
      if (f->args.size() == 1 && f->args[0]->tag == Term::Tag::Quote) {
        os << f->name << "{";
        pr_formula(os, f->args[0]->quoted, 0);
        os << "}";
        return;
      }
      os << f->name << "(";
      for (std::size_t i = 0; i < f->args.size(); ++i) {
        if (i) os << ", ";
        pr_term(os, f->args[i], 0);
      }
      os << ")";
      return;
    case Formula::Tag::Forall:
    case Formula::Tag::Exists: {
      bool paren = min_prec > 0;
      if (paren) os << "(";
      os << (f->tag == Formula::Tag::Forall ? "forall " : "exists ") << f->name
         << ". ";
      pr_formula(os, f->a, 0);
      if (paren) os << ")";
      return;
    }
  }
}

}  // namespace

std::string print_formula(const FormulaPtr& f) {
  std::ostringstream os;
  pr_formula(os, f, 0);
  return os.str();
}

std::string print_term(const TermPtr& t) {
  std::ostringstream os;
  pr_term(os, t, 0);
  return os.str();
}

}  // namespace gnc
