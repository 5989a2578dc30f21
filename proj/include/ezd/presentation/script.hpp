#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ezd/linalg/field.hpp"
#include "ezd/presentation/polynomial.hpp"

namespace ezd::presentation {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A name that was never declared (or an unknown constructor / check).
class UndefinedNameError : public ParseError {
 public:
  using ParseError::ParseError;
};

struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;
};

/// Expression tree shared by polynomials and module expressions.
struct Expr {
  enum class Kind { Number, Ident, Call, Add, Sub, Mul, Neg, Pow, Tuple };
  Kind kind = Kind::Number;
  long long number = 0;  // Number literal, or the exponent of Pow
  std::string name;      // Ident and Call
  std::vector<Expr> children;
  SourcePos pos;  // not part of equality

  friend bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.number == b.number && a.name == b.name && a.children == b.children;
  }
};

struct RingDecl {
  std::string name;
  linalg::Field field = linalg::kDefaultField;
  std::vector<std::string> variables;
  std::vector<Expr> generators;
  MonomialOrder order = MonomialOrder::DegRevLex;
  SourcePos pos;
  friend bool operator==(const RingDecl& a, const RingDecl& b) {
    return a.name == b.name && a.field == b.field && a.variables == b.variables &&
           a.generators == b.generators && a.order == b.order;
  }
};

struct ModuleDecl {
  std::string name;
  Expr expr;
  SourcePos pos;
  friend bool operator==(const ModuleDecl& a, const ModuleDecl& b) {
    return a.name == b.name && a.expr == b.expr;
  }
};

struct ElementDecl {
  std::string name;
  Expr expr;
  std::string ring;
  SourcePos pos;
  friend bool operator==(const ElementDecl& a, const ElementDecl& b) {
    return a.name == b.name && a.expr == b.expr && a.ring == b.ring;
  }
};

struct CheckStmt {
  bool negated = false;
  std::string check;
  std::vector<Expr> args;
  std::optional<int> bound;
  SourcePos pos;
  friend bool operator==(const CheckStmt& a, const CheckStmt& b) {
    return a.negated == b.negated && a.check == b.check && a.args == b.args && a.bound == b.bound;
  }
};

using Statement = std::variant<RingDecl, ModuleDecl, ElementDecl, CheckStmt>;

struct Script {
  std::vector<Statement> statements;
  friend bool operator==(const Script&, const Script&) = default;
};

/// Module constructors accepted inside `module` declarations and check arguments.
const std::vector<std::string>& module_constructors();
/// Check names accepted by `check` statements.
const std::vector<std::string>& check_names();

/// Throws ParseError / UndefinedNameError with 1-based line and column.
Script parse_script(std::string_view text);
std::string pretty_print(const Script& script);
std::string pretty_print(const Expr& expr);

/// Evaluates a polynomial expression over the given variables; identifiers
/// must be variables. Throws ezd::Error otherwise.
Polynomial evaluate_polynomial(const Expr& expr, const linalg::Field& field,
                               const std::vector<std::string>& variables, MonomialOrder order);

}  // namespace ezd::presentation
