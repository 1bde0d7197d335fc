#ifndef GNC_PARSE_HPP
#define GNC_PARSE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "gnc/ast.hpp"

namespace gnc {

struct ParseError : std::runtime_error {
  int line;
  int column;
  std::vector<std::string> expected;

  ParseError(std::string msg, int line_, int col_, std::vector<std::string> exp = {})
      : std::runtime_error(std::move(msg)), line(line_), column(col_),
        expected(std::move(exp)) {}
};

// Formula grammar:
//   atoms        [a-z][a-zA-Z0-9_]*     (forall/exists/pair/quote reserved)
//   connectives  ~  &  |  ->  <->       precedence ~ > & > | > -> > <->,
//                                       -> and <-> right-associative
//   Bot          falsum
//   K(f)         modal operator application ([A-Z] names; S, Bot, Dia, T<n> reserved)
//   Dia(f)       sugar for ~Box(~f)
//   K{f}         predicate applied to the quotation of f
//   K(t1,..,tn)  predicate applied to terms (single args parse as a formula
//                when they can; bare-variable arguments need no client yet)
//   Tn           sugar for p1 | ... | pn, left-associated
//   forall x. f / exists x. f
// Terms: 0, S(t), t+t, t*t, decimal numerals, pair(t,t), quote{f}, variables.
FormulaPtr parse_formula(const std::string& text);

// Term entry point, used by the CLI and tests.
TermPtr parse_term_text(const std::string& text);

}  // namespace gnc

#endif
