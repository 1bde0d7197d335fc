#ifndef GNC_POOL_HPP
#define GNC_POOL_HPP

#include <vector>

#include "gnc/ast.hpp"

namespace gnc {

// Instantiation pool: the subformula closure of the seeds, then `depth`
// rounds of negation and modal wrapping. Modal wrapping uses the operator
// names seen in the seeds; a predicate symbol counts as wrappable when the
// seeds apply it to a single quoted/numeral argument (a knowledge predicate
// rather than an arithmetic relation). Output is sorted structurally, so
// the enumeration order is stable across runs and platforms.
std::vector<FormulaPtr> subformula_pool(const std::vector<FormulaPtr>& seeds,
                                        unsigned depth);

// Negation normal form over the propositional skeleton; modal and predicate
// applications are treated as opaque. Used to seed goal-directed pools.
FormulaPtr nnf(const FormulaPtr& f);

}  // namespace gnc

#endif
