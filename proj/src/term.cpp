#include "hammer/term.hpp"

#include <sstream>

#include "hammer/errors.hpp"

namespace hammer {

namespace {

std::shared_ptr<Term> node(TermTag tag) {
  auto t = std::make_shared<Term>();
  t->tag = tag;
  return t;
}

}  // namespace

TermPtr mk_sort(SortKind s) {
  auto t = node(TermTag::Sort);
  t->sort = s;
  return t;
}

TermPtr mk_var(std::string name) {
  auto t = node(TermTag::Var);
  t->name = std::move(name);
  return t;
}

TermPtr mk_const(std::string name) {
  auto t = node(TermTag::Const);
  t->name = std::move(name);
  return t;
}

TermPtr mk_app(TermPtr fn, TermPtr arg) {
  auto t = node(TermTag::App);
  t->a = std::move(fn);
  t->b = std::move(arg);
  return t;
}

TermPtr mk_app_spine(TermPtr fn, const std::vector<TermPtr>& args) {
  TermPtr t = std::move(fn);
  for (const auto& a : args) t = mk_app(t, a);
  return t;
}

TermPtr mk_lambda(std::string binder, TermPtr type, TermPtr body) {
  auto t = node(TermTag::Lambda);
  t->name = std::move(binder);
  t->a = std::move(type);
  t->b = std::move(body);
  return t;
}

TermPtr mk_pi(std::string binder, TermPtr type, TermPtr body) {
  auto t = node(TermTag::Pi);
  t->name = std::move(binder);
  t->a = std::move(type);
  t->b = std::move(body);
  return t;
}

TermPtr mk_arrow(TermPtr domain, TermPtr codomain) {
  return mk_pi("_", std::move(domain), std::move(codomain));
}

TermPtr mk_case(std::string ind, int nparams, TermPtr scrutinee, TermPtr ret,
                std::vector<TermPtr> branches) {
  auto t = node(TermTag::Case);
  t->name = std::move(ind);
  t->nparams = nparams;
  t->a = std::move(scrutinee);
  t->b = std::move(ret);
  t->branches = std::move(branches);
  return t;
}

TermPtr app_spine(const TermPtr& t, std::vector<TermPtr>& args) {
  if (t->tag != TermTag::App) return t;
  TermPtr head = app_spine(t->a, args);
  args.push_back(t->b);
  return head;
}

std::string sort_name(SortKind s) {
  switch (s) {
    case SortKind::Prop: return "prop";
    case SortKind::Set: return "set";
    case SortKind::Type: return "type";
  }
  return "?";
}

namespace {

// Alpha-equivalence with parallel binder maps: bound names are compared by
// binding depth, free names literally.
bool alpha_eq_rec(const TermPtr& a, const TermPtr& b,
                  std::vector<std::pair<std::string, std::string>>& binders) {
  if (a->tag != b->tag) return false;
  switch (a->tag) {
    case TermTag::Sort:
      return a->sort == b->sort;
    case TermTag::Var: {
      for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
        bool la = it->first == a->name;
        bool lb = it->second == b->name;
        if (la || lb) return la && lb;
      }
      return a->name == b->name;
    }
    case TermTag::Const:
      return a->name == b->name;
    case TermTag::App:
      return alpha_eq_rec(a->a, b->a, binders) &&
             alpha_eq_rec(a->b, b->b, binders);
    case TermTag::Lambda:
    case TermTag::Pi: {
      if (!alpha_eq_rec(a->a, b->a, binders)) return false;
      binders.emplace_back(a->name, b->name);
      bool ok = alpha_eq_rec(a->b, b->b, binders);
      binders.pop_back();
      return ok;
    }
    case TermTag::Case: {
      if (a->name != b->name || a->nparams != b->nparams) return false;
      if (a->branches.size() != b->branches.size()) return false;
      if (!alpha_eq_rec(a->a, b->a, binders)) return false;
      if (!alpha_eq_rec(a->b, b->b, binders)) return false;
      for (size_t i = 0; i < a->branches.size(); ++i)
        if (!alpha_eq_rec(a->branches[i], b->branches[i], binders)) return false;
      return true;
    }
  }
  return false;
}

}  // namespace

bool alpha_eq(const TermPtr& a, const TermPtr& b) {
  std::vector<std::pair<std::string, std::string>> binders;
  return alpha_eq_rec(a, b, binders);
}

namespace {

void print_rec(const TermPtr& t, std::ostringstream& out) {
  switch (t->tag) {
    case TermTag::Sort:
      out << "(sort " << sort_name(t->sort) << ")";
      return;
    case TermTag::Var:
      out << "(var " << t->name << ")";
      return;
    case TermTag::Const:
      out << "(const " << t->name << ")";
      return;
    case TermTag::App:
      out << "(app ";
      print_rec(t->a, out);
      out << " ";
      print_rec(t->b, out);
      out << ")";
      return;
    case TermTag::Lambda:
    case TermTag::Pi:
      out << (t->tag == TermTag::Lambda ? "(lambda (" : "(pi (") << t->name
          << " ";
      print_rec(t->a, out);
      out << ") ";
      print_rec(t->b, out);
      out << ")";
      return;
    case TermTag::Case:
      out << "(case " << t->name << " " << t->nparams << " ";
      print_rec(t->a, out);
      out << " ";
      print_rec(t->b, out);
      out << " (";
      for (size_t i = 0; i < t->branches.size(); ++i) {
        if (i) out << " ";
        print_rec(t->branches[i], out);
      }
      out << "))";
      return;
  }
}

}  // namespace

std::string print_term(const TermPtr& t) {
  std::ostringstream out;
  print_rec(t, out);
  return out.str();
}

bool Context::has(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return true;
  return false;
}

const TermPtr* Context::lookup(const std::string& name) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    if (it->name == name) return &it->type;
  return nullptr;
}

Context Context::extended(const std::string& name, TermPtr type) const {
  Context c = *this;
  c.push(name, std::move(type));
  return c;
}

void Context::push(const std::string& name, TermPtr type) {
  entries_.push_back(Entry{name, std::move(type)});
}

std::string Context::fresh(const std::string& base) const {
  std::string name = base;
  while (has(name)) name += "'";
  return name;
}

const std::string& decl_name(const Declaration& d) {
  return std::visit([](const auto& x) -> const std::string& { return x.name; },
                    d);
}

std::string print_decl(const Declaration& d) {
  std::ostringstream out;
  if (const auto* def = std::get_if<Definition>(&d)) {
    out << "(definition " << def->name << " " << print_term(def->body) << " "
        << print_term(def->type) << ")";
  } else if (const auto* ty = std::get_if<TypingDecl>(&d)) {
    out << "(typing " << ty->name << " " << print_term(ty->type) << ")";
  } else {
    const auto& ind = std::get<InductiveDecl>(d);
    out << "(inductive " << ind.name << " " << print_term(ind.arity) << " "
        << ind.nparams << " (";
    for (size_t i = 0; i < ind.ctors.size(); ++i) {
      if (i) out << " ";
      out << "(" << ind.ctors[i].name << " " << print_term(ind.ctors[i].type)
          << ")";
    }
    out << "))";
  }
  return out.str();
}

void Environment::add(Declaration d) {
  const std::string& name = decl_name(d);
  if (has_name(name)) throw HammerError("duplicate declaration name: " + name);
  if (const auto* ind = std::get_if<InductiveDecl>(&d)) {
    for (const auto& c : ind->ctors) {
      if (c.name == ind->name || has_name(c.name))
        throw HammerError("duplicate constructor name: " + c.name);
    }
    // Constructor names must also be unique within the block.
    for (size_t i = 0; i < ind->ctors.size(); ++i)
      for (size_t j = i + 1; j < ind->ctors.size(); ++j)
        if (ind->ctors[i].name == ind->ctors[j].name)
          throw HammerError("duplicate constructor name: " + ind->ctors[i].name);
  }
  size_t pos = decls_.size();
  index_[name] = pos;
  if (const auto* ind = std::get_if<InductiveDecl>(&d)) {
    for (size_t i = 0; i < ind->ctors.size(); ++i)
      ctor_index_[ind->ctors[i].name] = {pos, static_cast<int>(i)};
  }
  decls_.push_back(std::move(d));
}

const Declaration* Environment::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return nullptr;
  return &decls_[it->second];
}

const InductiveDecl* Environment::find_inductive(const std::string& name) const {
  const Declaration* d = find(name);
  if (!d) return nullptr;
  return std::get_if<InductiveDecl>(d);
}

std::optional<Environment::CtorRef> Environment::find_ctor(
    const std::string& name) const {
  auto it = ctor_index_.find(name);
  if (it == ctor_index_.end()) return std::nullopt;
  const auto& ind = std::get<InductiveDecl>(decls_[it->second.first]);
  return CtorRef{&ind, it->second.second};
}

bool Environment::has_name(const std::string& name) const {
  return index_.count(name) > 0 || ctor_index_.count(name) > 0;
}

TermPtr Environment::type_of_global(const std::string& name) const {
  if (const Declaration* d = find(name)) {
    if (const auto* def = std::get_if<Definition>(d)) return def->type;
    if (const auto* ty = std::get_if<TypingDecl>(d)) return ty->type;
    return std::get<InductiveDecl>(*d).arity;
  }
  if (auto c = find_ctor(name)) return c->ind->ctors[c->index].type;
  return nullptr;
}

TermPtr Environment::definition_body(const std::string& name) const {
  const Declaration* d = find(name);
  if (!d) return nullptr;
  if (const auto* def = std::get_if<Definition>(d)) return def->body;
  return nullptr;
}

}  // namespace hammer
