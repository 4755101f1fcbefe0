// Core-calculus terms, declarations and environments.
//
// Terms are immutable once built; TermPtr values may be shared freely,
// including across threads. Binders use explicit names; the operations in
// kernel.hpp rename on the fly to stay capture-avoiding, so object identity
// of names is only meaningful up to alpha-equivalence.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace hammer {

enum class SortKind { Prop, Set, Type };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

enum class TermTag { Sort, Var, Const, App, Lambda, Pi, Case };

struct Term {
  TermTag tag;
  SortKind sort = SortKind::Prop;  // Sort
  std::string name;  // Var/Const: identifier; Lambda/Pi: binder; Case: inductive
  TermPtr a;         // App: function; Lambda/Pi: binder type; Case: scrutinee
  TermPtr b;         // App: argument; Lambda/Pi: body; Case: return predicate
  int nparams = 0;   // Case
  std::vector<TermPtr> branches;  // Case: one branch per constructor
};

TermPtr mk_sort(SortKind s);
TermPtr mk_var(std::string name);
TermPtr mk_const(std::string name);
TermPtr mk_app(TermPtr fn, TermPtr arg);
TermPtr mk_app_spine(TermPtr fn, const std::vector<TermPtr>& args);
TermPtr mk_lambda(std::string binder, TermPtr type, TermPtr body);
TermPtr mk_pi(std::string binder, TermPtr type, TermPtr body);
// Non-dependent function type.
TermPtr mk_arrow(TermPtr domain, TermPtr codomain);
TermPtr mk_case(std::string ind, int nparams, TermPtr scrutinee, TermPtr ret,
                std::vector<TermPtr> branches);

bool alpha_eq(const TermPtr& a, const TermPtr& b);

// Splits nested applications: returns the head and pushes arguments
// left-to-right into args.
TermPtr app_spine(const TermPtr& t, std::vector<TermPtr>& args);

std::string sort_name(SortKind s);

// Prints in the textual export format; parse(print(t)) is alpha-equal to t.
std::string print_term(const TermPtr& t);

// Ordered (name, type) pairs. Names are pairwise distinct; later entries may
// mention earlier names only.
class Context {
 public:
  struct Entry {
    std::string name;
    TermPtr type;
  };

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }

  bool has(const std::string& name) const;
  const TermPtr* lookup(const std::string& name) const;

  Context extended(const std::string& name, TermPtr type) const;
  void push(const std::string& name, TermPtr type);

  // A name not bound here, derived from base by appending primes.
  std::string fresh(const std::string& base) const;

 private:
  std::vector<Entry> entries_;
};

struct Definition {
  std::string name;
  TermPtr body;
  TermPtr type;
};

struct TypingDecl {
  std::string name;
  TermPtr type;
};

struct CtorDecl {
  std::string name;
  TermPtr type;
};

struct InductiveDecl {
  std::string name;
  TermPtr arity;
  int nparams = 0;
  std::vector<CtorDecl> ctors;
};

using Declaration = std::variant<Definition, TypingDecl, InductiveDecl>;

const std::string& decl_name(const Declaration& d);
std::string print_decl(const Declaration& d);

// Ordered global environment. Constructor names share the namespace with
// declaration names.
class Environment {
 public:
  struct CtorRef {
    const InductiveDecl* ind;
    int index;
  };

  // Throws HammerError on duplicate names.
  void add(Declaration d);

  const std::vector<Declaration>& decls() const { return decls_; }
  const Declaration* find(const std::string& name) const;
  const InductiveDecl* find_inductive(const std::string& name) const;
  std::optional<CtorRef> find_ctor(const std::string& name) const;

  // True for declaration names and constructor names alike.
  bool has_name(const std::string& name) const;

  // Type of any global: definition/typing type, inductive arity, constructor
  // type. Null when the name is unknown.
  TermPtr type_of_global(const std::string& name) const;

  // Body of a Definition, null otherwise.
  TermPtr definition_body(const std::string& name) const;

 private:
  std::vector<Declaration> decls_;
  std::unordered_map<std::string, size_t> index_;
  std::unordered_map<std::string, std::pair<size_t, int>> ctor_index_;
};

}  // namespace hammer
