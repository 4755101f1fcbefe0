// Encoding of core-calculus terms into first-order logic: propositions as
// formulas, types as inhabitation guards, terms as FOL terms. Pi, lambda and
// case subterms in term position are lifted to fresh constants with defining
// axioms collected on the side.
#pragma once

#include <string>
#include <vector>

#include "hammer/fol.hpp"
#include "hammer/kernel.hpp"
#include "hammer/term.hpp"

namespace hammer {

struct EncodeOptions {
  ReduceLimits reduce;
};

class Encoder {
 public:
  explicit Encoder(const Environment& env, EncodeOptions opts = {})
      : env_(env), opts_(opts) {}

  // Propositions to formulas. Total: falls back to #p(encode_term(t)) and
  // records a diagnostic when t is not actually Prop-sorted.
  FolFormula encode_prop(const Context& ctx, const TermPtr& t);

  // Types to guards: the formula stating that subject inhabits ty.
  FolFormula encode_guard(const Context& ctx, const TermPtr& ty,
                          const FolTerm& subject);

  // Terms to FOL terms. Proof arguments are dropped; Pi/lambda/case subterms
  // are replaced by fresh constants with collected side axioms.
  FolTerm encode_term(const Context& ctx, const TermPtr& t);

  // Lifted side axioms, in creation order. drain empties the list.
  const std::vector<LabeledAxiom>& collected() const { return collected_; }
  std::vector<LabeledAxiom> drain_collected();

  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

  const Environment& env() const { return env_; }

  bool prop_sorted(const Context& ctx, const TermPtr& t) const;
  bool proof_term(const Context& ctx, const TermPtr& t) const;

 private:
  friend class Translator;

  FolTerm lift_pi(const Context& ctx, const TermPtr& t);
  FolTerm lift_lambda(const Context& ctx, const TermPtr& t);
  FolTerm lift_case(const Context& ctx, const TermPtr& t);
  FolTerm opaque_fallback(const Context& ctx, const TermPtr& t,
                          const std::string& why);

  // Free variables of t that live in ctx and are not proofs, paired with
  // their types, in first-occurrence order.
  std::vector<std::pair<std::string, TermPtr>> lift_vars(const Context& ctx,
                                                         const TermPtr& t);

  std::string fresh_name(const char* kind, int& counter);

  const Environment& env_;
  EncodeOptions opts_;
  std::vector<LabeledAxiom> collected_;
  std::vector<std::string> diagnostics_;
  int pi_counter_ = 0;
  int lambda_counter_ = 0;
  int case_counter_ = 0;
  int opaque_counter_ = 0;
};

// Optional output pass: constants always applied to n >= 1 arguments become
// direct n-ary symbols; mixed-arity constants keep the curried form plus a
// bridging axiom; constants only ever appearing fully applied under #p become
// predicates. Classically equisatisfiable.
Problem arity_optimize(const Problem& p);

}  // namespace hammer
