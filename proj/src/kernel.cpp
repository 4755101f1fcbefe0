#include "hammer/kernel.hpp"

#include <algorithm>
#include <set>

namespace hammer {

namespace {

void free_vars_rec(const TermPtr& t, std::vector<std::string>& bound,
                   std::vector<std::string>& out,
                   std::set<std::string>& seen) {
  switch (t->tag) {
    case TermTag::Sort:
    case TermTag::Const:
      return;
    case TermTag::Var: {
      if (std::find(bound.rbegin(), bound.rend(), t->name) != bound.rend())
        return;
      if (seen.insert(t->name).second) out.push_back(t->name);
      return;
    }
    case TermTag::App:
      free_vars_rec(t->a, bound, out, seen);
      free_vars_rec(t->b, bound, out, seen);
      return;
    case TermTag::Lambda:
    case TermTag::Pi:
      free_vars_rec(t->a, bound, out, seen);
      bound.push_back(t->name);
      free_vars_rec(t->b, bound, out, seen);
      bound.pop_back();
      return;
    case TermTag::Case:
      free_vars_rec(t->a, bound, out, seen);
      free_vars_rec(t->b, bound, out, seen);
      for (const auto& br : t->branches) free_vars_rec(br, bound, out, seen);
      return;
  }
}

}  // namespace

std::vector<std::string> free_vars(const TermPtr& t) {
  std::vector<std::string> bound, out;
  std::set<std::string> seen;
  free_vars_rec(t, bound, out, seen);
  return out;
}

bool occurs_free(const TermPtr& t, const std::string& x) {
  switch (t->tag) {
    case TermTag::Sort:
    case TermTag::Const:
      return false;
    case TermTag::Var:
      return t->name == x;
    case TermTag::App:
      return occurs_free(t->a, x) || occurs_free(t->b, x);
    case TermTag::Lambda:
    case TermTag::Pi:
      if (occurs_free(t->a, x)) return true;
      if (t->name == x) return false;
      return occurs_free(t->b, x);
    case TermTag::Case:
      if (occurs_free(t->a, x) || occurs_free(t->b, x)) return true;
      for (const auto& br : t->branches)
        if (occurs_free(br, x)) return true;
      return false;
  }
  return false;
}

namespace {

std::string fresh_against(const std::string& base,
                          const std::vector<std::string>& avoid) {
  std::string name = base;
  while (std::find(avoid.begin(), avoid.end(), name) != avoid.end())
    name += "'";
  return name;
}

}  // namespace

TermPtr subst(const TermPtr& t, const std::string& x, const TermPtr& u) {
  switch (t->tag) {
    case TermTag::Sort:
    case TermTag::Const:
      return t;
    case TermTag::Var:
      return t->name == x ? u : t;
    case TermTag::App:
      return mk_app(subst(t->a, x, u), subst(t->b, x, u));
    case TermTag::Lambda:
    case TermTag::Pi: {
      TermPtr type = subst(t->a, x, u);
      if (t->name == x) {  // shadowed
        if (type == t->a) return t;
        return t->tag == TermTag::Lambda ? mk_lambda(t->name, type, t->b)
                                         : mk_pi(t->name, type, t->b);
      }
      std::string binder = t->name;
      TermPtr body = t->b;
      if (occurs_free(body, x) && occurs_free(u, binder)) {
        // Capture: rename the binder away from FV(u) and FV(body).
        std::vector<std::string> avoid = free_vars(u);
        auto bfv = free_vars(body);
        avoid.insert(avoid.end(), bfv.begin(), bfv.end());
        avoid.push_back(x);
        binder = fresh_against(binder, avoid);
        body = subst(body, t->name, mk_var(binder));
      }
      body = subst(body, x, u);
      return t->tag == TermTag::Lambda ? mk_lambda(binder, type, body)
                                       : mk_pi(binder, type, body);
    }
    case TermTag::Case: {
      std::vector<TermPtr> branches;
      branches.reserve(t->branches.size());
      for (const auto& br : t->branches) branches.push_back(subst(br, x, u));
      return mk_case(t->name, t->nparams, subst(t->a, x, u), subst(t->b, x, u),
                     std::move(branches));
    }
  }
  return t;
}

TermPtr whnf(const Environment& env, TermPtr t, const ReduceLimits& lim) {
  int steps = 0;
  std::vector<TermPtr> spine;  // arguments, innermost last
  for (;;) {
    while (t->tag == TermTag::App) {
      spine.push_back(t->b);
      t = t->a;
    }
    if (t->tag == TermTag::Lambda && !spine.empty()) {
      if (++steps > lim.max_head_steps)
        throw BudgetExceeded("head reduction budget exceeded");
      t = subst(t->b, t->name, spine.back());
      spine.pop_back();
      continue;
    }
    if (t->tag == TermTag::Const) {
      if (TermPtr body = env.definition_body(t->name)) {
        if (++steps > lim.max_head_steps)
          throw BudgetExceeded("head reduction budget exceeded");
        t = body;
        continue;
      }
    }
    break;
  }
  while (!spine.empty()) {
    t = mk_app(t, spine.back());
    spine.pop_back();
  }
  return t;
}

TermPtr infer_type(const Environment& env, const Context& ctx,
                   const TermPtr& t) {
  switch (t->tag) {
    case TermTag::Sort:
      // Universe levels are collapsed: every sort lives in Type.
      return mk_sort(SortKind::Type);
    case TermTag::Var: {
      if (const TermPtr* ty = ctx.lookup(t->name)) return *ty;
      throw Untypeable("unbound variable: " + t->name);
    }
    case TermTag::Const: {
      if (TermPtr ty = env.type_of_global(t->name)) return ty;
      throw Untypeable("unknown constant: " + t->name);
    }
    case TermTag::App: {
      TermPtr fn_ty = whnf(env, infer_type(env, ctx, t->a));
      if (fn_ty->tag != TermTag::Pi)
        throw Untypeable("application head has no product type");
      return subst(fn_ty->b, fn_ty->name, t->b);
    }
    case TermTag::Lambda: {
      std::string binder = ctx.fresh(t->name);
      TermPtr body =
          binder == t->name ? t->b : subst(t->b, t->name, mk_var(binder));
      TermPtr body_ty =
          infer_type(env, ctx.extended(binder, t->a), body);
      return mk_pi(binder, t->a, body_ty);
    }
    case TermTag::Pi: {
      TermPtr dom_sort = whnf(env, infer_type(env, ctx, t->a));
      if (dom_sort->tag != TermTag::Sort)
        throw Untypeable("product domain is not a type");
      std::string binder = ctx.fresh(t->name);
      TermPtr body =
          binder == t->name ? t->b : subst(t->b, t->name, mk_var(binder));
      TermPtr cod_sort =
          whnf(env, infer_type(env, ctx.extended(binder, t->a), body));
      if (cod_sort->tag != TermTag::Sort)
        throw Untypeable("product codomain is not a type");
      if (cod_sort->sort == SortKind::Prop) return mk_sort(SortKind::Prop);
      // Collapsed max of the two sorts, Prop < Set < Type.
      SortKind s = dom_sort->sort;
      SortKind c = cod_sort->sort;
      SortKind mx = (s == SortKind::Type || c == SortKind::Type)
                        ? SortKind::Type
                        : SortKind::Set;
      return mk_sort(mx);
    }
    case TermTag::Case: {
      const InductiveDecl* ind = env.find_inductive(t->name);
      if (!ind) throw Untypeable("case on unknown inductive: " + t->name);
      if (ind->ctors.size() != t->branches.size())
        throw Untypeable("case branch count mismatch for " + t->name);
      TermPtr scrut_ty = whnf(env, infer_type(env, ctx, t->a));
      std::vector<TermPtr> args;
      TermPtr head = app_spine(scrut_ty, args);
      if (head->tag != TermTag::Const || head->name != t->name)
        throw Untypeable("case scrutinee type does not match " + t->name);
      if (static_cast<int>(args.size()) < t->nparams)
        throw Untypeable("case scrutinee type has too few parameters");
      // Return predicate applied to the indices, then the scrutinee.
      TermPtr r = t->b;
      for (size_t i = t->nparams; i < args.size(); ++i) r = mk_app(r, args[i]);
      return mk_app(r, t->a);
    }
  }
  throw Untypeable("unhandled term");
}

SortResult sort_of_type_of(const Environment& env, const Context& ctx,
                           const TermPtr& t) {
  TermPtr ty;
  try {
    ty = infer_type(env, ctx, t);
  } catch (const Untypeable&) {
    return SortResult::NotAType;
  }
  TermPtr h = whnf(env, ty);
  if (h->tag != TermTag::Sort) return SortResult::NotAType;
  switch (h->sort) {
    case SortKind::Prop: return SortResult::Prop;
    case SortKind::Set: return SortResult::Set;
    case SortKind::Type: return SortResult::Type;
  }
  return SortResult::NotAType;
}

bool is_prop(const Environment& env, const Context& ctx, const TermPtr& t) {
  return sort_of_type_of(env, ctx, t) == SortResult::Prop;
}

bool is_proof(const Environment& env, const Context& ctx, const TermPtr& t) {
  TermPtr ty;
  try {
    ty = infer_type(env, ctx, t);
  } catch (const Untypeable&) {
    return false;
  }
  return is_prop(env, ctx, ty);
}

Context free_context(const Context& ctx, const TermPtr& t) {
  // FC(empty; t) = empty
  // FC(G,x:ty; t) = FC(G; \x:ty.t), x:ty   when x free in t
  // FC(G,x:ty; t) = FC(G; t)               otherwise
  const auto& entries = ctx.entries();
  if (entries.empty()) return Context{};
  Context prefix;
  for (size_t i = 0; i + 1 < entries.size(); ++i)
    prefix.push(entries[i].name, entries[i].type);
  const auto& last = entries.back();
  if (occurs_free(t, last.name)) {
    Context result =
        free_context(prefix, mk_lambda(last.name, last.type, t));
    result.push(last.name, last.type);
    return result;
  }
  return free_context(prefix, t);
}

namespace {

TermPtr unfold_rec(const Environment& env, const TermPtr& t,
                   const std::vector<std::string>& names, int& budget) {
  if (budget <= 0) throw BudgetExceeded("unfold budget exceeded");
  switch (t->tag) {
    case TermTag::Sort:
    case TermTag::Var:
      return t;
    case TermTag::Const: {
      if (std::find(names.begin(), names.end(), t->name) != names.end()) {
        if (TermPtr body = env.definition_body(t->name)) {
          --budget;
          return unfold_rec(env, body, names, budget);
        }
      }
      return t;
    }
    case TermTag::App: {
      TermPtr fn = unfold_rec(env, t->a, names, budget);
      TermPtr arg = unfold_rec(env, t->b, names, budget);
      if (fn->tag == TermTag::Lambda) {
        --budget;
        return unfold_rec(env, subst(fn->b, fn->name, arg), names, budget);
      }
      return mk_app(fn, arg);
    }
    case TermTag::Lambda:
    case TermTag::Pi: {
      TermPtr type = unfold_rec(env, t->a, names, budget);
      TermPtr body = unfold_rec(env, t->b, names, budget);
      return t->tag == TermTag::Lambda ? mk_lambda(t->name, type, body)
                                       : mk_pi(t->name, type, body);
    }
    case TermTag::Case: {
      std::vector<TermPtr> branches;
      branches.reserve(t->branches.size());
      for (const auto& br : t->branches)
        branches.push_back(unfold_rec(env, br, names, budget));
      return mk_case(t->name, t->nparams, unfold_rec(env, t->a, names, budget),
                     unfold_rec(env, t->b, names, budget), std::move(branches));
    }
  }
  return t;
}

}  // namespace

TermPtr unfold_normalize(const Environment& env, TermPtr t,
                         const std::vector<std::string>& names,
                         const ReduceLimits& lim) {
  int budget = lim.max_head_steps;
  return unfold_rec(env, t, names, budget);
}

}  // namespace hammer
