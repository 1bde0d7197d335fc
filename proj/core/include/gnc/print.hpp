#ifndef GNC_PRINT_HPP
#define GNC_PRINT_HPP

#include <string>

#include "gnc/ast.hpp"

namespace gnc {

// Minimal-parenthesis printing; parse(print(f)) == f. Diamond sugar is
// restored for ~Box(~f), quotation arguments print as K{f}.
std::string print_formula(const FormulaPtr& f);
std::string print_term(const TermPtr& t);

}  // namespace gnc

#endif
