#ifndef GNC_TESTS_GEN_HPP
#define GNC_TESTS_GEN_HPP

#include <random>
#include <string>
#include <vector>

#include "gnc/ast.hpp"

namespace gnc::testgen {

// Deterministic formula generator for round-trip and property tests.
// Avoids the one printable ambiguity (a predicate applied to a single bare
// variable) and raw Numeral(0), which normalizes away.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  unsigned pick(unsigned n) {
    return std::uniform_int_distribution<unsigned>(0, n - 1)(rng_);
  }

  TermPtr term(unsigned depth) {
    switch (depth == 0 ? pick(3) : pick(8)) {
      case 0: return mk_var(vars_[pick(vars_.size())]);
      case 1: return mk_zero();
      case 2: return mk_numeral(Nat(1 + pick(200)));
      case 3: return mk_succ(term(depth - 1));
      case 4: return mk_plus(term(depth - 1), term(depth - 1));
      case 5: return mk_times(term(depth - 1), term(depth - 1));
      case 6: return mk_pair_term(term(depth - 1), term(depth - 1));
      default: return mk_quote(formula(depth - 1));
    }
  }

  FormulaPtr formula(unsigned depth) {
    if (depth == 0) {
      switch (pick(3)) {
        case 0: return mk_bot();
        default: return mk_atom(atoms_[pick(atoms_.size())]);
      }
    }
    switch (pick(12)) {
      case 0: return mk_atom(atoms_[pick(atoms_.size())]);
      case 1: return mk_bot();
      case 2: return mk_not(formula(depth - 1));
      case 3: return mk_and(formula(depth - 1), formula(depth - 1));
      case 4: return mk_or(formula(depth - 1), formula(depth - 1));
      case 5: return mk_imp(formula(depth - 1), formula(depth - 1));
      case 6: return mk_iff(formula(depth - 1), formula(depth - 1));
      case 7: return mk_modapp(ops_[pick(ops_.size())], formula(depth - 1));
      case 8: return mk_predapp("K", {mk_quote(formula(depth - 1))});
      case 9: return mk_predapp("InW", {term(depth - 1), term(depth - 1)});
      case 10: return mk_forall(vars_[pick(vars_.size())], formula(depth - 1));
      default: return mk_exists(vars_[pick(vars_.size())], formula(depth - 1));
    }
  }

  // Propositional-with-modalities fragment (no quantifiers or predicates);
  // what the truth-table oracle and the model layer speak.
  FormulaPtr prop_formula(unsigned depth) {
    if (depth == 0) {
      switch (pick(4)) {
        case 0: return mk_bot();
        default: return mk_atom(atoms_[pick(atoms_.size())]);
      }
    }
    switch (pick(8)) {
      case 0: return mk_atom(atoms_[pick(atoms_.size())]);
      case 1: return mk_not(prop_formula(depth - 1));
      case 2: return mk_and(prop_formula(depth - 1), prop_formula(depth - 1));
      case 3: return mk_or(prop_formula(depth - 1), prop_formula(depth - 1));
      case 4: return mk_imp(prop_formula(depth - 1), prop_formula(depth - 1));
      case 5: return mk_iff(prop_formula(depth - 1), prop_formula(depth - 1));
      default: return mk_modapp(ops_[pick(ops_.size())], prop_formula(depth - 1));
    }
  }

 private:
  std::mt19937_64 rng_;
  std::vector<std::string> atoms_ = {"p1", "p2", "q", "r", "Psi"};
  std::vector<std::string> ops_ = {"K", "Box"};
  std::vector<std::string> vars_ = {"x", "y"};
};

}  // namespace gnc::testgen

#endif
