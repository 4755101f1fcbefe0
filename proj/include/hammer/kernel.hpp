// Kernel operations: substitution, head reduction, approximate type and sort
// inference, free variables and the free-variable context.
#pragma once

#include "hammer/errors.hpp"
#include "hammer/term.hpp"

namespace hammer {

struct ReduceLimits {
  int max_head_steps = 10000;
};

// Free variables in first-occurrence order (binder types before bodies).
std::vector<std::string> free_vars(const TermPtr& t);
bool occurs_free(const TermPtr& t, const std::string& x);

// Capture-avoiding substitution of u for x in t.
TermPtr subst(const TermPtr& t, const std::string& x, const TermPtr& u);

// Weak head normal form: beta at the head plus delta for defined constants.
// Throws BudgetExceeded when the step budget runs out.
TermPtr whnf(const Environment& env, TermPtr t, const ReduceLimits& lim = {});

// Approximate CIC-style type inference with collapsed universes and no
// positivity/termination checks. Throws Untypeable on structural failure.
TermPtr infer_type(const Environment& env, const Context& ctx, const TermPtr& t);

enum class SortResult { Prop, Set, Type, NotAType };

// Sort of the type of t, after head reduction; NotAType when the type does
// not reduce to a sort or when t is untypeable.
SortResult sort_of_type_of(const Environment& env, const Context& ctx,
                           const TermPtr& t);

// t is a proposition: its type is the sort Prop.
bool is_prop(const Environment& env, const Context& ctx, const TermPtr& t);

// t is a proof: its type is a proposition.
bool is_proof(const Environment& env, const Context& ctx, const TermPtr& t);

// The free-variable context of t in ctx: the sub-context of entries t depends
// on, transitively through the types of needed entries.
Context free_context(const Context& ctx, const TermPtr& t);

// Unfolds exactly the named definitions and beta-reduces, everywhere in the
// term, with a step budget shared by the whole traversal.
TermPtr unfold_normalize(const Environment& env, TermPtr t,
                         const std::vector<std::string>& names,
                         const ReduceLimits& lim = {});

}  // namespace hammer
