// Intuitionistic proof reconstruction: sequents, congruence closure,
// heuristic rewriting, and depth-bounded goal-directed search with the
// first-order left implication rules.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hammer/fol.hpp"
#include "hammer/term.hpp"
#include "hammer/translate.hpp"

namespace hammer {

struct Hints {
  std::vector<std::string> lemmas;
  std::vector<std::string> unfolds;
};

struct Sequent {
  std::vector<FolFormula> hyps;  // multiset, stable order
  std::vector<std::pair<FolTerm, FolTerm>> equations;  // initial extraction
  FolFormula goal;
};

// Ground congruence closure over the equations; decides the query pair.
bool congruence_close(const std::vector<std::pair<FolTerm, FolTerm>>& equations,
                      const FolTerm& lhs, const FolTerm& rhs);
bool congruence_close_atoms(
    const std::vector<std::pair<FolTerm, FolTerm>>& equations,
    const FolFormula& a, const FolFormula& b);

// Incremental interface used by the search.
class CongruenceClosure {
 public:
  void add(const FolTerm& l, const FolTerm& r);
  bool equal(const FolTerm& l, const FolTerm& r);

 private:
  int node(const FolTerm& t);
  int find(int i);
  void merge(int a, int b);
  void rebuild();

  struct NodeData {
    std::string name;
    std::vector<int> args;
  };
  std::vector<NodeData> nodes_;
  std::vector<int> parent_;
  std::vector<std::pair<int, int>> pending_;
};

// One bounded rewriting sweep: equational hypotheses oriented by symbol count
// (strictly larger side rewrites to the smaller; ties unoriented), applied
// outside-in to goal and hypotheses, at most bound replacements. Universal
// equations rewrite by matching; their guard atoms must be discharged by the
// current hypotheses (up to ground congruence).
Sequent rewrite_pass(const Sequent& s, int bound);

struct TraceNode {
  std::string rule;
  std::string principal;  // printed principal formula, "" when implicit
  std::string inst;       // instantiation / eigenvariable, "" when none
  int hyp_index = -1;
  std::vector<TraceNode> children;
};

enum class FailReason { DepthExhausted, TimeOut, NoRule };

struct ProveResult {
  bool success = false;
  TraceNode trace;
  FailReason reason = FailReason::NoRule;
  long steps = 0;
};

struct SearchBudget {
  int max_depth = 10;
  double seconds = 0.0;   // 0 = no wall clock bound
  long max_steps = 0;     // 0 = no step ceiling
  bool iterative = true;  // deepen from 1 to max_depth
};

std::string fail_reason_name(FailReason r);

// Iterative-deepening search. Rule priority: closure (up to congruence),
// invertible right rules, invertible left rules including the four
// implication-left rules, then backtracking choices (disjunction right,
// implication-implication left, quantifier instantiation, equation
// instantiation). Deterministic for depth-bounded budgets.
ProveResult prove_seq(const Sequent& s, const SearchBudget& budget = {});

// Turns a statement plus hints into a sequent: unfolds exactly hints.unfolds,
// encodes the statement as the goal and every hint lemma as a hypothesis.
// Throws NotAProp / UnknownLemma.
Sequent flatten_goal(const Environment& env, const TermPtr& stmt,
                     const Hints& hints, EncodeOptions opts = {});

// Independent replay checker: validates every trace step against the rule
// table. Never accepts a classical step.
bool replay_trace(const Sequent& root, const TraceNode& trace);

std::string print_trace(const TraceNode& t);
TraceNode parse_trace(const std::string& text);

}  // namespace hammer
