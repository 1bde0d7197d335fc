#ifndef GNC_GODEL_HPP
#define GNC_GODEL_HPP

#include <optional>

#include "gnc/ast.hpp"

namespace gnc {

// Godel numbering: every constructor gets a fixed tag, children are encoded
// recursively, and the pieces are folded with Cantor pairing. Injective by
// construction and invertible, which is what lets predicate-symbol axioms
// inspect quoted arguments.
Nat gn(const FormulaPtr& f);
Nat gn_term(const TermPtr& t);

// Inverse of gn; nullopt when n encodes nothing well-formed.
std::optional<FormulaPtr> gn_decode(const Nat& n);

// Normal form: Succ-chains over Zero collapse into numerals, Numeral(0)
// collapses to Zero, and every Quote(g) becomes the numeral gn(normalize(g)).
// Idempotent; the result carries no Quote node.
FormulaPtr normalize(const FormulaPtr& f);
TermPtr normalize_term(const TermPtr& t);

}  // namespace gnc

#endif
