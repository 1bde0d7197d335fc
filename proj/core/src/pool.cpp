#include "gnc/pool.hpp"

#include "gnc/godel.hpp"

namespace gnc {

namespace {

// Predicate symbols applied to one quoted/numeral argument behave like
// modal operators for pooling purposes.
bool is_knowledge_predapp(const Formula& f) {
  if (f.tag != Formula::Tag::PredApp || f.args.size() != 1) return false;
  auto tag = f.args[0]->tag;
  return tag == Term::Tag::Quote || tag == Term::Tag::Numeral;
}

void collect_wrappers(const FormulaPtr& f, std::set<std::string>& operators,
                      std::set<std::string>& knowledge_preds) {
  if (!f) return;
  if (f->tag == Formula::Tag::ModApp) operators.insert(f->name);
  if (is_knowledge_predapp(*f)) knowledge_preds.insert(f->name);
  collect_wrappers(f->a, operators, knowledge_preds);
  collect_wrappers(f->b, operators, knowledge_preds);
  for (const auto& t : f->args)
    if (t->tag == Term::Tag::Quote)
      collect_wrappers(t->quoted, operators, knowledge_preds);
}

}  // namespace

std::vector<FormulaPtr> subformula_pool(const std::vector<FormulaPtr>& seeds,
                                        unsigned depth) {
  FormulaSet pool;
  std::set<std::string> operators, knowledge_preds;
  for (const auto& s : seeds) {
    subformulas(s, pool);
    collect_wrappers(s, operators, knowledge_preds);
  }
  for (unsigned d = 0; d < depth; ++d) {
    FormulaSet grown = pool;
    for (const auto& f : pool) {
      grown.insert(mk_not(f));
      for (const auto& op : operators) grown.insert(mk_modapp(op, f));
      for (const auto& p : knowledge_preds)
        grown.insert(normalize(mk_predapp(p, {mk_quote(f)})));
    }
    pool.swap(grown);
  }
  return {pool.begin(), pool.end()};
}

FormulaPtr nnf(const FormulaPtr& f) {
  if (f->tag == Formula::Tag::Not) {
    const FormulaPtr& g = f->a;
    switch (g->tag) {
      case Formula::Tag::Not:
        return nnf(g->a);
      case Formula::Tag::And:
        return mk_or(nnf(mk_not(g->a)), nnf(mk_not(g->b)));
      case Formula::Tag::Or:
        return mk_and(nnf(mk_not(g->a)), nnf(mk_not(g->b)));
      case Formula::Tag::Imp:
        return mk_and(nnf(g->a), nnf(mk_not(g->b)));
      case Formula::Tag::Iff:
        return mk_or(mk_and(nnf(g->a), nnf(mk_not(g->b))),
                     mk_and(nnf(mk_not(g->a)), nnf(g->b)));
      default:
        return f;
    }
  }
  switch (f->tag) {
    case Formula::Tag::And:
      return mk_and(nnf(f->a), nnf(f->b));
    case Formula::Tag::Or:
      return mk_or(nnf(f->a), nnf(f->b));
    case Formula::Tag::Imp:
      return mk_or(nnf(mk_not(f->a)), nnf(f->b));
    case Formula::Tag::Iff:
      return mk_and(mk_or(nnf(mk_not(f->a)), nnf(f->b)),
                    mk_or(nnf(mk_not(f->b)), nnf(f->a)));
    default:
      return f;
  }
}

}  // namespace gnc
