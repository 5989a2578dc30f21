#include "ezd/presentation/script.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace ezd::presentation {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

const std::vector<std::string>& module_constructors() {
  static const std::vector<std::string> names = {
      "free", "quot", "hom", "tensor", "dualk", "ann", "modx", "omega", "residue", "sum", "basechange"};
  return names;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "dim", "iso", "ezd", "semidualizing", "dualizing", "in_G", "in_A", "in_B", "pd", "id",
      "pc_pd", "ic_id", "betti",
      "fact_a", "fact_b", "fact_c", "prop_A", "prop_B", "prop_C", "cor_dualizing",
      "cor_K_i", "cor_K_ii", "cor_K_iii", "prop_D_i", "prop_D_ii", "prop_D_iii",
      "prop_J_i", "prop_J_ii", "prop_J_iii", "prop_E", "prop_F",
      "lemma_H_i", "lemma_H_ii", "lemma_H_iii", "prop_G_i", "prop_G_ii", "prop_G_iii", "free_extension"};
  return names;
}

namespace {

struct Token {
  enum class Kind { Ident, Int, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  long long value = 0;
  SourcePos pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t;
      t.pos = {line_, col_};
      if (i_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      char c = text_[i_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Token::Kind::Ident;
        while (i_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_')) {
          t.text += advance();
        }
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Token::Kind::Int;
        while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
          t.text += advance();
        }
        if (t.text.size() > 15) throw ParseError(t.pos.line, t.pos.column, "integer literal too large");
        t.value = std::stoll(t.text);
      } else if (std::string_view("=[](),;/+-*^").find(c) != std::string_view::npos) {
        t.kind = Token::Kind::Punct;
        t.text = std::string(1, advance());
      } else {
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
      }
      out.push_back(t);
    }
  }

 private:
  char advance() {
    char c = text_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (c == '#') {
        while (i_ < text_.size() && text_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Script run() {
    Script script;
    while (peek().kind != Token::Kind::End) {
      const Token& t = peek();
      if (is_ident("ring")) {
        script.statements.push_back(ring_decl());
      } else if (is_ident("module")) {
        script.statements.push_back(module_decl());
      } else if (is_ident("element")) {
        script.statements.push_back(element_decl());
      } else if (is_ident("check")) {
        script.statements.push_back(check_stmt());
      } else {
        fail(t, "expected 'ring', 'module', 'element' or 'check'");
      }
    }
    return script;
  }

 private:
  const Token& peek() const { return toks_[k_]; }
  const Token& next() { return toks_[k_ < toks_.size() - 1 ? k_++ : k_]; }
  bool is_punct(char c) const {
    return peek().kind == Token::Kind::Punct && peek().text[0] == c;
  }
  bool is_ident(const char* s) const {
    return peek().kind == Token::Kind::Ident && peek().text == s;
  }
  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    throw ParseError(t.pos.line, t.pos.column, what);
  }
  void expect_punct(char c) {
    if (!is_punct(c)) {
      fail(peek(), std::string("expected '") + c + "'" +
                       (peek().kind == Token::Kind::End ? " before end of input"
                                                        : ", found '" + peek().text + "'"));
    }
    next();
  }
  std::string expect_ident(const char* what) {
    if (peek().kind != Token::Kind::Ident) fail(peek(), std::string("expected ") + what);
    return next().text;
  }
  long long expect_int() {
    if (peek().kind != Token::Kind::Int) fail(peek(), "expected an integer");
    return next().value;
  }
  void declare(const Token& at, const std::string& name) {
    if (names_.count(name)) fail(at, "name '" + name + "' already declared");
    names_.insert(name);
  }

  RingDecl ring_decl() {
    RingDecl d;
    d.pos = next().pos;
    const Token& name_tok = peek();
    d.name = expect_ident("ring name");
    expect_punct('=');
    const Token& field_tok = peek();
    std::string field = expect_ident("field (GF(p) or QQ)");
    if (field == "QQ") {
      d.field = linalg::Field::rationals();
    } else if (field == "GF") {
      expect_punct('(');
      const Token& p_tok = peek();
      long long p = expect_int();
      expect_punct(')');
      try {
        d.field = linalg::Field::prime(static_cast<std::uint64_t>(p));
      } catch (const Error& e) {
        fail(p_tok, e.what());
      }
    } else {
      fail(field_tok, "unknown field '" + field + "'");
    }
    expect_punct('[');
    while (true) {
      const Token& v = peek();
      std::string var = expect_ident("variable name");
      if (contains(d.variables, var)) fail(v, "duplicate variable '" + var + "'");
      d.variables.push_back(var);
      if (is_punct(',')) {
        next();
        continue;
      }
      break;
    }
    expect_punct(']');
    expect_punct('/');
    expect_punct('(');
    scope_vars_ = d.variables;
    ring_scope_ = true;
    if (!is_punct(')')) {
      d.generators.push_back(expr());
      while (is_punct(',')) {
        next();
        d.generators.push_back(expr());
      }
    }
    ring_scope_ = false;
    expect_punct(')');
    if (is_ident("lex")) {
      next();
      d.order = MonomialOrder::Lex;
    } else if (is_ident("degrevlex")) {
      next();
    }
    expect_punct(';');
    declare(name_tok, d.name);
    for (const auto& v : d.variables) variables_.insert(v);
    return d;
  }

  ModuleDecl module_decl() {
    ModuleDecl d;
    d.pos = next().pos;
    const Token& name_tok = peek();
    d.name = expect_ident("module name");
    expect_punct('=');
    d.expr = expr();
    expect_punct(';');
    declare(name_tok, d.name);
    return d;
  }

  ElementDecl element_decl() {
    ElementDecl d;
    d.pos = next().pos;
    const Token& name_tok = peek();
    d.name = expect_ident("element name");
    expect_punct('=');
    d.expr = expr();
    if (!is_ident("in")) fail(peek(), "expected 'in'");
    next();
    const Token& ring_tok = peek();
    d.ring = expect_ident("ring name");
    if (!names_.count(d.ring)) throw UndefinedNameError(ring_tok.pos.line, ring_tok.pos.column,
                                                        "undefined ring '" + d.ring + "'");
    expect_punct(';');
    declare(name_tok, d.name);
    return d;
  }

  CheckStmt check_stmt() {
    CheckStmt c;
    c.pos = next().pos;
    if (is_ident("not")) {
      next();
      c.negated = true;
    }
    const Token& name_tok = peek();
    c.check = expect_ident("check name");
    if (!contains(check_names(), c.check)) {
      throw UndefinedNameError(name_tok.pos.line, name_tok.pos.column,
                               "unknown check '" + c.check + "'");
    }
    expect_punct('(');
    if (!is_punct(')')) {
      c.args.push_back(expr());
      while (is_punct(',')) {
        next();
        c.args.push_back(expr());
      }
    }
    expect_punct(')');
    if (is_ident("bound")) {
      next();
      c.bound = static_cast<int>(expect_int());
    }
    expect_punct(';');
    return c;
  }

  Expr expr() {
    Expr left = term();
    while (is_punct('+') || is_punct('-')) {
      Expr node;
      node.pos = peek().pos;
      node.kind = next().text[0] == '+' ? Expr::Kind::Add : Expr::Kind::Sub;
      node.children.push_back(std::move(left));
      node.children.push_back(term());
      left = std::move(node);
    }
    return left;
  }

  Expr term() {
    Expr left = unary();
    while (is_punct('*')) {
      Expr node;
      node.pos = next().pos;
      node.kind = Expr::Kind::Mul;
      node.children.push_back(std::move(left));
      node.children.push_back(unary());
      left = std::move(node);
    }
    return left;
  }

  Expr unary() {
    if (is_punct('-')) {
      Expr node;
      node.pos = next().pos;
      node.kind = Expr::Kind::Neg;
      node.children.push_back(unary());
      return node;
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (is_punct('^')) {
      Expr node;
      node.pos = next().pos;
      node.kind = Expr::Kind::Pow;
      node.number = expect_int();
      node.children.push_back(std::move(base));
      return node;
    }
    return base;
  }

  Expr primary() {
    const Token& t = peek();
    Expr e;
    e.pos = t.pos;
    if (t.kind == Token::Kind::Int) {
      e.kind = Expr::Kind::Number;
      e.number = next().value;
      return e;
    }
    if (is_punct('(')) {
      next();
      Expr inner = expr();
      expect_punct(')');
      return inner;
    }
    if (is_punct('[')) {
      next();
      e.kind = Expr::Kind::Tuple;
      if (!is_punct(']')) {
        e.children.push_back(expr());
        while (is_punct(',')) {
          next();
          e.children.push_back(expr());
        }
      }
      expect_punct(']');
      return e;
    }
    if (t.kind != Token::Kind::Ident) fail(t, "expected an expression");
    e.name = next().text;
    if (is_punct('(')) {
      if (ring_scope_) fail(t, "function calls are not allowed in ideal generators");
      if (!contains(module_constructors(), e.name)) {
        throw UndefinedNameError(t.pos.line, t.pos.column, "unknown constructor '" + e.name + "'");
      }
      next();
      e.kind = Expr::Kind::Call;
      if (!is_punct(')')) {
        e.children.push_back(expr());
        while (is_punct(',')) {
          next();
          e.children.push_back(expr());
        }
      }
      expect_punct(')');
      return e;
    }
    e.kind = Expr::Kind::Ident;
    bool known = ring_scope_ ? contains(scope_vars_, e.name)
                             : (names_.count(e.name) || variables_.count(e.name) || e.name == "inf");
    if (!known) {
      throw UndefinedNameError(t.pos.line, t.pos.column, "undefined name '" + e.name + "'");
    }
    return e;
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
  std::set<std::string> names_;
  std::set<std::string> variables_;
  std::vector<std::string> scope_vars_;
  bool ring_scope_ = false;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

void print_expr(std::ostream& os, const Expr& e);

void print_child(std::ostream& os, const Expr& child, bool parens) {
  if (parens) os << "(";
  print_expr(os, child);
  if (parens) os << ")";
}

void print_list(std::ostream& os, const std::vector<Expr>& items) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) os << ", ";
    print_expr(os, items[i]);
  }
}

void print_expr(std::ostream& os, const Expr& e) {
  const int p = precedence(e);
  switch (e.kind) {
    case Expr::Kind::Number:
      os << e.number;
      break;
    case Expr::Kind::Ident:
      os << e.name;
      break;
    case Expr::Kind::Call:
      os << e.name << "(";
      print_list(os, e.children);
      os << ")";
      break;
    case Expr::Kind::Tuple:
      os << "[";
      print_list(os, e.children);
      os << "]";
      break;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul:
      // left-associative: a right child of equal precedence needs parentheses
      print_child(os, e.children[0], precedence(e.children[0]) < p);
      os << (e.kind == Expr::Kind::Add ? " + " : e.kind == Expr::Kind::Sub ? " - " : "*");
      print_child(os, e.children[1], precedence(e.children[1]) <= p);
      break;
    case Expr::Kind::Neg:
      os << "-";
      print_child(os, e.children[0], precedence(e.children[0]) < p);
      break;
    case Expr::Kind::Pow:
      print_child(os, e.children[0], precedence(e.children[0]) <= p);
      os << "^" << e.number;
      break;
  }
}

}  // namespace

Script parse_script(std::string_view text) {
  Lexer lexer(text);
  Parser parser(lexer.run());
  return parser.run();
}

std::string pretty_print(const Expr& expr) {
  std::ostringstream os;
  print_expr(os, expr);
  return os.str();
}

std::string pretty_print(const Script& script) {
  std::ostringstream os;
  for (const auto& st : script.statements) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, RingDecl>) {
            os << "ring " << s.name << " = " << s.field.name() << "[";
            for (std::size_t i = 0; i < s.variables.size(); ++i) os << (i ? "," : "") << s.variables[i];
            os << "] / (";
            print_list(os, s.generators);
            os << ")";
            if (s.order == MonomialOrder::Lex) os << " lex";
            os << ";\n";
          } else if constexpr (std::is_same_v<T, ModuleDecl>) {
            os << "module " << s.name << " = ";
            print_expr(os, s.expr);
            os << ";\n";
          } else if constexpr (std::is_same_v<T, ElementDecl>) {
            os << "element " << s.name << " = ";
            print_expr(os, s.expr);
            os << " in " << s.ring << ";\n";
          } else {
            os << "check " << (s.negated ? "not " : "") << s.check << "(";
            print_list(os, s.args);
            os << ")";
            if (s.bound) os << " bound " << *s.bound;
            os << ";\n";
          }
        },
        st);
  }
  return os.str();
}

Polynomial evaluate_polynomial(const Expr& expr, const linalg::Field& field,
                               const std::vector<std::string>& variables, MonomialOrder order) {
  const std::size_t n = variables.size();
  switch (expr.kind) {
    case Expr::Kind::Number:
      return Polynomial::constant(field, n, order, Scalar(field, expr.number));
    case Expr::Kind::Ident: {
      auto it = std::find(variables.begin(), variables.end(), expr.name);
      if (it == variables.end()) {
        throw UndefinedNameError(expr.pos.line, expr.pos.column,
                                 "'" + expr.name + "' is not a ring variable");
      }
      return Polynomial::variable(field, n, order, static_cast<std::size_t>(it - variables.begin()));
    }
    case Expr::Kind::Add:
      return evaluate_polynomial(expr.children[0], field, variables, order) +
             evaluate_polynomial(expr.children[1], field, variables, order);
    case Expr::Kind::Sub:
      return evaluate_polynomial(expr.children[0], field, variables, order) -
             evaluate_polynomial(expr.children[1], field, variables, order);
    case Expr::Kind::Mul:
      return evaluate_polynomial(expr.children[0], field, variables, order) *
             evaluate_polynomial(expr.children[1], field, variables, order);
    case Expr::Kind::Neg:
      return -evaluate_polynomial(expr.children[0], field, variables, order);
    case Expr::Kind::Pow:
      return evaluate_polynomial(expr.children[0], field, variables, order)
          .pow(static_cast<std::uint32_t>(expr.number));
    default:
      throw ParseError(expr.pos.line, expr.pos.column, "not a polynomial expression");
  }
}

}  // namespace ezd::presentation
