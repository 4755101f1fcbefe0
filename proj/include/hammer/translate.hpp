// Declaration-level translation and problem assembly.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "hammer/encode.hpp"
#include "hammer/fol.hpp"
#include "hammer/term.hpp"

namespace hammer {

class Translator {
 public:
  explicit Translator(const Environment& env, EncodeOptions opts = {})
      : env_(env), encoder_(env, opts) {}

  // Each returns the declaration's axioms followed by any side axioms lifted
  // while encoding it.
  std::vector<LabeledAxiom> translate_declaration(const Declaration& d);
  std::vector<LabeledAxiom> translate_definition(const Definition& d);
  std::vector<LabeledAxiom> translate_typing(const TypingDecl& d);
  std::vector<LabeledAxiom> translate_inductive(const InductiveDecl& d);

  // The formula a hint label stands for: a declaration name resolves to its
  // statement/guard axiom; derived labels (c#g, c#inj, a#disc#b, I#inv) are
  // regenerated. Throws UnknownLemma. Side axioms lifted during encoding are
  // appended to extra.
  FolFormula hint_formula(const std::string& label,
                          std::vector<LabeledAxiom>& extra);

  Encoder& encoder() { return encoder_; }
  const std::vector<std::string>& diagnostics() const {
    return encoder_.diagnostics();
  }

 private:
  std::vector<LabeledAxiom> with_lifted(std::vector<LabeledAxiom> axioms);
  FolFormula statement_axiom(const std::string& name, const TermPtr& type);
  std::vector<LabeledAxiom> ctor_structure_axioms(const InductiveDecl& d);
  LabeledAxiom injectivity_axiom(const InductiveDecl& ind, const CtorDecl& c);
  LabeledAxiom discrimination_axiom(const InductiveDecl& ind, const CtorDecl& a,
                                    const CtorDecl& b);
  LabeledAxiom inversion_axiom(const InductiveDecl& ind);

  const Environment& env_;
  Encoder encoder_;
};

// Depth-bounded dependency closure: level 0 adds the constants of the roots'
// types and bodies; each further level adds constants from the types and
// non-proof definition bodies of the frontier. Roots are included. Throws
// UnknownName for unresolved roots.
std::set<std::string> extended_deps(const Environment& env,
                                    const std::set<std::string>& roots,
                                    int depth);

struct ProblemSpec {
  std::string conjecture;
  std::vector<std::string> premises;  // ignored when all_premises is set
  bool all_premises = false;
  int depth = 2;
};

// Translates the conjecture's statement as the TPTP conjecture and every
// declaration in the premise closure, in environment order, including lifted
// side axioms. Throws UnknownName / NotAProp.
Problem build_problem(const Environment& env, const ProblemSpec& spec,
                      EncodeOptions opts = {});

}  // namespace hammer
