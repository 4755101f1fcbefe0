#include "hammer/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace hammer {

namespace {

struct Token {
  enum Kind { LParen, RParen, Name, Number, End } kind;
  std::string text;
  long number = 0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= src_.size()) {
      t.kind = Token::End;
      return t;
    }
    char c = src_[pos_];
    if (c == '(') {
      advance();
      t.kind = Token::LParen;
      return t;
    }
    if (c == ')') {
      advance();
      t.kind = Token::RParen;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        num += src_[pos_];
        advance();
      }
      t.kind = Token::Number;
      t.number = std::stol(num);
      t.text = num;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < src_.size() && ident_char(src_[pos_])) {
        name += src_[pos_];
        advance();
      }
      t.kind = Token::Name;
      t.text = name;
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_,
                     col_);
  }

 private:
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '.' || c == '\'';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    for (;;) {
      while (pos_ < src_.size() &&
             std::isspace(static_cast<unsigned char>(src_[pos_])))
        advance();
      if (pos_ < src_.size() && src_[pos_] == ';') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
        continue;
      }
      return;
    }
  }

  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) { cur_ = lex_.next(); }

  std::vector<Declaration> parse_all() {
    std::vector<Declaration> out;
    while (cur_.kind != Token::End) out.push_back(parse_decl());
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, cur_.line, cur_.col);
  }

  void expect(Token::Kind kind, const char* what) {
    if (cur_.kind != kind) fail(std::string("expected ") + what);
    cur_ = lex_.next();
  }

  std::string expect_name() {
    if (cur_.kind != Token::Name) fail("expected identifier");
    std::string s = cur_.text;
    cur_ = lex_.next();
    return s;
  }

  long expect_number() {
    if (cur_.kind != Token::Number) fail("expected number");
    long n = cur_.number;
    cur_ = lex_.next();
    return n;
  }

  bool global_known(const std::string& name) const {
    return env_.has_name(name) || name == pending_inductive_;
  }

  Declaration parse_decl() {
    int line = cur_.line, col = cur_.col;
    expect(Token::LParen, "'('");
    std::string kw = expect_name();
    Declaration d;
    if (kw == "definition") {
      std::string name = expect_name();
      std::vector<std::string> scope;
      TermPtr body = parse_term(scope);
      TermPtr type = parse_term(scope);
      d = Definition{name, body, type};
    } else if (kw == "typing") {
      std::string name = expect_name();
      std::vector<std::string> scope;
      TermPtr type = parse_term(scope);
      d = TypingDecl{name, type};
    } else if (kw == "inductive") {
      std::string name = expect_name();
      std::vector<std::string> scope;
      TermPtr arity = parse_term(scope);
      long nparams = expect_number();
      // The inductive's own name is in scope inside constructor types.
      pending_inductive_ = name;
      std::vector<CtorDecl> ctors;
      expect(Token::LParen, "'('");
      while (cur_.kind != Token::RParen) {
        expect(Token::LParen, "'('");
        std::string cname = expect_name();
        TermPtr ctype = parse_term(scope);
        expect(Token::RParen, "')'");
        ctors.push_back(CtorDecl{cname, ctype});
      }
      expect(Token::RParen, "')'");
      pending_inductive_.clear();
      d = InductiveDecl{name, arity, static_cast<int>(nparams), ctors};
    } else {
      throw ParseError("unknown declaration kind: " + kw, line, col);
    }
    expect(Token::RParen, "')'");
    try {
      env_.add(d);
    } catch (const HammerError& e) {
      throw ParseError(e.what(), line, col);
    }
    return d;
  }

  TermPtr parse_term(std::vector<std::string>& scope) {
    expect(Token::LParen, "'('");
    int line = cur_.line, col = cur_.col;
    std::string kw = expect_name();
    TermPtr t;
    if (kw == "sort") {
      std::string s = expect_name();
      if (s == "prop")
        t = mk_sort(SortKind::Prop);
      else if (s == "set")
        t = mk_sort(SortKind::Set);
      else if (s == "type")
        t = mk_sort(SortKind::Type);
      else
        throw ParseError("unknown sort: " + s, line, col);
    } else if (kw == "var") {
      std::string name = expect_name();
      if (std::find(scope.begin(), scope.end(), name) == scope.end())
        throw ParseError("unbound variable: " + name, line, col);
      t = mk_var(name);
    } else if (kw == "const") {
      std::string name = expect_name();
      if (!global_known(name))
        throw ParseError("unbound identifier: " + name, line, col);
      t = mk_const(name);
    } else if (kw == "app") {
      TermPtr fn = parse_term(scope);
      TermPtr arg = parse_term(scope);
      t = mk_app(fn, arg);
    } else if (kw == "lambda" || kw == "pi") {
      expect(Token::LParen, "'('");
      std::string binder = expect_name();
      TermPtr type = parse_term(scope);
      expect(Token::RParen, "')'");
      scope.push_back(binder);
      TermPtr body = parse_term(scope);
      scope.pop_back();
      t = kw == "lambda" ? mk_lambda(binder, type, body)
                         : mk_pi(binder, type, body);
    } else if (kw == "case") {
      std::string ind = expect_name();
      const InductiveDecl* decl = env_.find_inductive(ind);
      if (!decl)
        throw ParseError("case on undeclared inductive: " + ind, line, col);
      long nparams = expect_number();
      if (nparams != decl->nparams)
        throw ParseError("case parameter count disagrees with " + ind, line,
                         col);
      TermPtr scrut = parse_term(scope);
      TermPtr ret = parse_term(scope);
      std::vector<TermPtr> branches;
      expect(Token::LParen, "'('");
      while (cur_.kind != Token::RParen) branches.push_back(parse_term(scope));
      expect(Token::RParen, "')'");
      if (branches.size() != decl->ctors.size())
        throw ParseError("case branch count disagrees with " + ind, line, col);
      t = mk_case(ind, static_cast<int>(nparams), scrut, ret,
                  std::move(branches));
    } else {
      throw ParseError("unknown term head: " + kw, line, col);
    }
    expect(Token::RParen, "')'");
    return t;
  }

  Lexer lex_;
  Token cur_;
  Environment env_;
  std::string pending_inductive_;
};

}  // namespace

std::vector<Declaration> parse_decls(const std::string& source) {
  Parser p(source);
  return p.parse_all();
}

Environment load_environment(const std::string& source) {
  Environment env;
  for (auto& d : parse_decls(source)) env.add(std::move(d));
  return env;
}

Environment load_environment_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw HammerError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_environment(buf.str());
}

}  // namespace hammer
