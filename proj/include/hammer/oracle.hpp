// Independent reference procedures used by tests and `hammer self-check`:
// finite-model evaluation for classical FOL and an exhaustive decision
// procedure for intuitionistic propositional logic.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hammer/fol.hpp"

namespace hammer {

struct FiniteModel {
  int size = 1;  // domain {0, ..., size-1}
  // (name, arity) -> table in mixed-radix argument order.
  std::map<std::pair<std::string, int>, std::vector<int>> funcs;
  std::map<std::pair<std::string, int>, std::vector<char>> preds;
};

// Tarskian evaluation of a closed formula; quantifiers enumerate the domain.
// Throws MissingTable when a symbol has no table.
bool eval_finite_model(const FolFormula& f, const FiniteModel& m);

// Intuitionistic validity of a propositional formula (atoms are nullary
// predicates; Top/Bottom allowed; Not and Iff are expanded). Exhaustive
// backtracking over a contraction-free sequent calculus, memoized; engine is
// deliberately independent of prove_seq. Throws NotPropositional.
bool ipc_decide(const FolFormula& f);

// Classical propositional truth in all Boolean valuations.
bool cpc_valid(const FolFormula& f);

// Exhaustive, duplicate-free enumeration over {->, and, or, not, bottom} of
// all formulas with at most max_connectives connective nodes, over the first
// `atoms` atoms A, B, C. Ordered by connective count, then construction
// order.
std::vector<FolFormula> enumerate_formulas(int atoms, int max_connectives);

}  // namespace hammer
