// Built-in refutation prover (clausification + given-clause saturation) and
// the external SZS prover driver.
#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "hammer/fol.hpp"
#include "hammer/tptp.hpp"

namespace hammer {

struct Literal {
  bool positive = true;
  FolFormula atom;  // FomKind::Atom or FomKind::Eq

  bool operator==(const Literal&) const = default;
};

struct Clause {
  std::vector<Literal> literals;
  std::string origin_label;  // problem axiom label, or "#eq" for equality theory

  bool operator==(const Clause&) const = default;
};

// CNF for a single formula taken positively. Variables are standardized
// apart across clauses; Skolem symbols are sk1, sk2, ... per call sequence.
class Clausifier {
 public:
  std::vector<Clause> clausify_formula(const FolFormula& f,
                                       const std::string& label);
  int skolem_counter = 0;
  int var_counter = 0;
};

// Clausifies the whole problem: axioms positive, conjecture negated, plus
// equality axioms (reflexivity/symmetry/transitivity and per-symbol
// congruence) whenever equality occurs.
std::vector<Clause> clausify(const Problem& p);

struct SaturateLimits {
  long max_clauses = 200000;
  double max_seconds = 30.0;
};

enum class SaturateOutcome { Proof, Saturated, ResourceOut };

struct SaturateResult {
  SaturateOutcome outcome = SaturateOutcome::ResourceOut;
  std::vector<std::string> used_labels;  // origin labels on a refutation
  long generated = 0;
};

// Given-clause loop: binary resolution + factoring, subsumption deletion,
// age/weight clause selection (ratio 1:4), deterministic tie-breaking.
SaturateResult saturate(const std::vector<Clause>& input,
                        const SaturateLimits& limits = {});

// Convenience: clausify + saturate + map to an AtpResult.
AtpResult prove_builtin(const Problem& p, const SaturateLimits& limits = {});

// Writes the problem to a temporary file and runs an external prover command
// template; {file} and {t} are substituted. Wall-clock bounded; a missing
// executable yields status Error with detail "spawn-failed".
AtpResult run_external(const Problem& p, const std::string& prover_cmd,
                       std::chrono::seconds timeout, bool keep_files = false);

}  // namespace hammer
