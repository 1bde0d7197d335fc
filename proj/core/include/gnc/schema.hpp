#ifndef GNC_SCHEMA_HPP
#define GNC_SCHEMA_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gnc/ast.hpp"

namespace gnc {

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Decidable syntactic side condition on a binding.
struct SideCondition {
  enum class Kind {
    LoneFree,  // lonefree(?m, x): the bound formula's free variables are exactly {x}
  };
  Kind kind;
  std::string metavar;
  std::string var;
};

// An axiom schema: a pattern with metavariables (?phi, ?psi, ...) plus side
// conditions. With `closure` set, the schema's instances are the universal
// closures of the pattern's instances.
struct Schema {
  std::string name;
  FormulaPtr pattern;
  std::vector<SideCondition> conditions;
  bool closure = false;
};

using Binding = std::map<std::string, FormulaPtr>;

std::set<std::string> schema_metavars(const Schema& s);

// Substitution plus side-condition check. Throws SchemaError on a missing
// binding or a violated condition. Closure schemas wrap the result in
// universal quantifiers over its free variables (sorted).
FormulaPtr instantiate(const Schema& s, const Binding& binding);

// First-order matching of a ground (meta-free) formula against the pattern.
// Quoted pattern positions match numeral arguments by decoding them.
std::optional<Binding> match(const Schema& s, const FormulaPtr& ground);

FormulaPtr universal_closure(const FormulaPtr& f);

}  // namespace gnc

#endif
