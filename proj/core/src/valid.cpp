#include "gnc/valid.hpp"

#include <unordered_map>
#include <vector>

#include "gnc/print.hpp"

namespace gnc {

namespace {

constexpr std::size_t kMaxTableAtoms = 24;

bool is_prop_leaf(const Formula& f) {
  switch (f.tag) {
    case Formula::Tag::Atom:
    case Formula::Tag::ModApp:
    case Formula::Tag::PredApp:
    case Formula::Tag::Forall:
    case Formula::Tag::Exists:
    case Formula::Tag::Meta:
      return true;
    default:
      return false;
  }
}

using AtomMap = std::unordered_map<FormulaPtr, std::size_t, FormulaHash, FormulaEqual>;

void collect_atoms(const FormulaPtr& f, AtomMap& ids, std::vector<FormulaPtr>& order) {
  if (!f) return;
  if (is_prop_leaf(*f)) {
    if (ids.emplace(f, order.size()).second) order.push_back(f);
    return;
  }
  collect_atoms(f->a, ids, order);
  collect_atoms(f->b, ids, order);
}

bool eval_mask(const FormulaPtr& f, const AtomMap& ids, std::uint32_t mask) {
  if (is_prop_leaf(*f)) return (mask >> ids.at(f)) & 1u;
  switch (f->tag) {
    case Formula::Tag::Bot: return false;
    case Formula::Tag::Not: return !eval_mask(f->a, ids, mask);
    case Formula::Tag::And: return eval_mask(f->a, ids, mask) && eval_mask(f->b, ids, mask);
    case Formula::Tag::Or: return eval_mask(f->a, ids, mask) || eval_mask(f->b, ids, mask);
    case Formula::Tag::Imp: return !eval_mask(f->a, ids, mask) || eval_mask(f->b, ids, mask);
    case Formula::Tag::Iff: return eval_mask(f->a, ids, mask) == eval_mask(f->b, ids, mask);
    default:
      throw std::logic_error("eval_mask: unexpected node");
  }
}

ValidityResult taut_check(const FormulaPtr& f) {
  AtomMap ids;
  std::vector<FormulaPtr> order;
  collect_atoms(f, ids, order);
  ValidityResult r;
  if (order.size() > kMaxTableAtoms) {
    r.note = "abstraction exceeds " + std::to_string(kMaxTableAtoms) +
             " atoms; not certified";
    return r;
  }
  const std::uint32_t n = static_cast<std::uint32_t>(order.size());
  const std::uint64_t total = 1ull << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (!eval_mask(f, ids, static_cast<std::uint32_t>(mask))) {
      for (std::size_t i = 0; i < order.size(); ++i)
        r.witness[print_formula(order[i])] = (mask >> i) & 1u;
      return r;
    }
  }
  r.certified = true;
  return r;
}

// --- first-order whitelist ---

void candidate_terms(const FormulaPtr& pat, const FormulaPtr& g,
                     const std::string& x, bool x_bound,
                     std::vector<TermPtr>& out);

void candidate_terms_tm(const TermPtr& pat, const TermPtr& g,
                        const std::string& x, bool x_bound,
                        std::vector<TermPtr>& out) {
  if (!pat || !g) return;
  if (!x_bound && pat->tag == Term::Tag::Var && pat->name == x) {
    out.push_back(g);
    return;
  }
  candidate_terms_tm(pat->a, g->a, x, x_bound, out);
  candidate_terms_tm(pat->b, g->b, x, x_bound, out);
  if (pat->quoted && g->quoted) candidate_terms(pat->quoted, g->quoted, x, x_bound, out);
}

void candidate_terms(const FormulaPtr& pat, const FormulaPtr& g,
                     const std::string& x, bool x_bound,
                     std::vector<TermPtr>& out) {
  if (!pat || !g || pat->tag != g->tag) return;
  bool bound = x_bound;
  if ((pat->tag == Formula::Tag::Forall || pat->tag == Formula::Tag::Exists) &&
      pat->name == x)
    bound = true;
  for (std::size_t i = 0; i < pat->args.size() && i < g->args.size(); ++i)
    candidate_terms_tm(pat->args[i], g->args[i], x, bound, out);
  candidate_terms(pat->a, g->a, x, bound, out);
  candidate_terms(pat->b, g->b, x, bound, out);
}

// Is g the result of substituting some term for x in body?
bool matches_instance(const FormulaPtr& body, const std::string& x,
                      const FormulaPtr& g) {
  std::vector<TermPtr> cands;
  candidate_terms(body, g, x, false, cands);
  if (cands.empty()) cands.push_back(mk_zero());  // x not free: any term works
  for (const auto& t : cands) {
    FormulaPtr inst = subst_var(body, x, t);
    if (inst && formula_eq(inst, g)) return true;
  }
  return false;
}

// exists-introduction: phi(x|t) -> exists x. phi
bool eg_shape(const FormulaPtr& f) {
  if (f->tag != Formula::Tag::Imp) return false;
  const FormulaPtr& ex = f->b;
  if (ex->tag != Formula::Tag::Exists) return false;
  return matches_instance(ex->a, ex->name, f->a);
}

// forall-elimination: forall x. phi -> phi(x|t)
bool ui_shape(const FormulaPtr& f) {
  if (f->tag != Formula::Tag::Imp) return false;
  const FormulaPtr& all = f->a;
  if (all->tag != Formula::Tag::Forall) return false;
  return matches_instance(all->a, all->name, f->b);
}

// forall x1..xk (a -> b)  ->  forall x1..xk a  ->  forall x1..xk b
bool closure_dist_shape(const FormulaPtr& f) {
  if (f->tag != Formula::Tag::Imp || f->b->tag != Formula::Tag::Imp) return false;
  FormulaPtr p = f->a, qa = f->b->a, qb = f->b->b;
  std::vector<std::string> prefix;
  while (p->tag == Formula::Tag::Forall) {
    prefix.push_back(p->name);
    p = p->a;
  }
  if (p->tag != Formula::Tag::Imp) return false;
  for (const auto& v : prefix) {
    if (qa->tag != Formula::Tag::Forall || qa->name != v) return false;
    if (qb->tag != Formula::Tag::Forall || qb->name != v) return false;
    qa = qa->a;
    qb = qb->a;
  }
  return formula_eq(p->a, qa) && formula_eq(p->b, qb);
}

// Hilbert axiom shapes, certified structurally so that width never matters:
//   a -> (b -> a)
//   (a -> (b -> c)) -> ((a -> b) -> (a -> c))
//   a -> a
bool hilbert_shape(const FormulaPtr& f) {
  if (f->tag != Formula::Tag::Imp) return false;
  const FormulaPtr &lhs = f->a, &rhs = f->b;
  if (formula_eq(lhs, rhs)) return true;
  if (rhs->tag == Formula::Tag::Imp && formula_eq(lhs, rhs->b)) return true;
  if (lhs->tag == Formula::Tag::Imp && lhs->b->tag == Formula::Tag::Imp &&
      rhs->tag == Formula::Tag::Imp && rhs->a->tag == Formula::Tag::Imp &&
      rhs->b->tag == Formula::Tag::Imp) {
    const FormulaPtr &a = lhs->a, &b = lhs->b->a, &c = lhs->b->b;
    return formula_eq(rhs->a->a, a) && formula_eq(rhs->a->b, b) &&
           formula_eq(rhs->b->a, a) && formula_eq(rhs->b->b, c);
  }
  return false;
}

}  // namespace

std::size_t abstraction_width(const FormulaPtr& f) {
  AtomMap ids;
  std::vector<FormulaPtr> order;
  collect_atoms(f, ids, order);
  return order.size();
}

ValidityResult is_valid(const FormulaPtr& f, ValidityMode mode) {
  if (hilbert_shape(f)) {
    ValidityResult ok;
    ok.certified = true;
    return ok;
  }
  ValidityResult r = taut_check(f);
  if (r.certified || mode == ValidityMode::Taut) return r;
  if (eg_shape(f) || ui_shape(f) || closure_dist_shape(f)) {
    ValidityResult ok;
    ok.certified = true;
    return ok;
  }
  return r;
}

}  // namespace gnc
