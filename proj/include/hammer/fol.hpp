// Untyped first-order logic with equality: terms, formulas, labeled problems.
//
// Names beginning with '#' are internal symbols that cannot collide with
// export-format identifiers: #p (provability predicate), #t (inhabitation
// predicate), #ap (explicit application), #eq-* (prover-internal), fresh
// lifted constants (pi#N, lam#N, case#N) and derived axiom labels (c#g,
// c#inj, c1#disc#c2, I#inv).
#pragma once

#include <string>
#include <vector>

#include "hammer/errors.hpp"

namespace hammer {

enum class FolTag { Var, Fun };

struct FolTerm {
  FolTag tag = FolTag::Fun;
  std::string name;
  std::vector<FolTerm> args;  // empty for Var and for constants

  bool operator==(const FolTerm&) const = default;
};

inline const std::string kApSym = "#ap";  // binary application, emitted as "ap"
inline const std::string kPropPred = "#p";  // unary, emitted as "p"
inline const std::string kTypePred = "#t";  // binary, emitted as "t"

// Sort marker constants (types of types collapse to these).
inline const std::string kSortProp = "#sort_prop";
inline const std::string kSortSet = "#sort_set";
inline const std::string kSortType = "#sort_type";

FolTerm fvar(std::string name);
FolTerm ffun(std::string name, std::vector<FolTerm> args = {});
FolTerm fconst(std::string name);
FolTerm ap(FolTerm fn, FolTerm arg);
FolTerm ap_chain(FolTerm head, const std::vector<FolTerm>& args);

enum class FomKind {
  Atom,
  Eq,
  Top,
  Bottom,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Forall,
  Exists
};

struct FolFormula {
  FomKind kind = FomKind::Top;
  std::string name;            // Atom: predicate; Forall/Exists: bound variable
  std::vector<FolTerm> args;   // Atom arguments; Eq: exactly two
  std::vector<FolFormula> sub; // connective children; quantifiers: exactly one

  bool operator==(const FolFormula&) const = default;
};

FolFormula atom(std::string pred, std::vector<FolTerm> args);
FolFormula provable(FolTerm t);              // #p(t)
FolFormula has_type(FolTerm t, FolTerm ty);  // #t(t, ty)
FolFormula eq(FolTerm l, FolTerm r);
FolFormula top();
FolFormula bottom();
FolFormula neg(FolFormula f);
FolFormula conj(FolFormula a, FolFormula b);
FolFormula disj(FolFormula a, FolFormula b);
FolFormula implies(FolFormula a, FolFormula b);
FolFormula iff(FolFormula a, FolFormula b);
FolFormula forall(std::string var, FolFormula body);
FolFormula exists(std::string var, FolFormula body);

// Free variables of terms/formulas in first-occurrence order.
void term_vars(const FolTerm& t, std::vector<std::string>& out);
std::vector<std::string> formula_free_vars(const FolFormula& f);
bool formula_closed(const FolFormula& f);

// Simultaneous substitution of terms for variables.
FolTerm subst_term(const FolTerm& t,
                   const std::vector<std::pair<std::string, FolTerm>>& sub);
FolFormula subst_formula(const FolFormula& f,
                         const std::vector<std::pair<std::string, FolTerm>>& sub);

std::string print_fol_term(const FolTerm& t);
std::string print_fol(const FolFormula& f);

enum class AxiomRole { Axiom, DefinitionAxiom, LiftedAxiom, Conjecture };

struct LabeledAxiom {
  std::string label;
  AxiomRole role = AxiomRole::Axiom;
  FolFormula formula;

  bool operator==(const LabeledAxiom&) const = default;
};

inline const std::string kConjectureLabel = "goal";

struct Problem {
  std::vector<LabeledAxiom> axioms;
  LabeledAxiom conjecture;

  bool operator==(const Problem&) const = default;
};

// Logically equivalent cleanup (also intuitionistically): unit Top/Bottom
// removal and vacuous quantifier dropping. No double-negation collapse.
FolFormula simplify(const FolFormula& f);

// Function and predicate signatures with arity checking.
struct Signature {
  // name -> arity
  std::vector<std::pair<std::string, int>> funcs;
  std::vector<std::pair<std::string, int>> preds;
};

// Collects the signature of a problem; throws ArityClash when a symbol is
// used at two arities or as both function and predicate.
Signature collect_signature(const Problem& p);
void collect_formula_signature(const FolFormula& f, Signature& sig);

}  // namespace hammer
