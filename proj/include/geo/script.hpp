#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geo/constructions.hpp"
#include "geo/point.hpp"
#include "geo/relations.hpp"

namespace geo::script {

// Construction-script front end: declare points, apply constructions,
// assert relations. One statement per line, "#" comments, ".geo" files.

struct Diagnostic {
  enum class Severity { Error, Warning };
  enum class Kind { Syntax, UnknownIdentifier, ArityMismatch };
  Severity severity = Severity::Error;
  Kind kind = Kind::Syntax;
  int line = 1, column = 1;
  std::string message;
  std::string related;  // offending identifier when applicable
};

// numeric literal: signed rationals with sqrt and +,-,*,/ combinations
struct NumExpr {
  enum class Op { Const, Add, Sub, Mul, Div, Neg, Sqrt };
  Op op = Op::Const;
  mpz_class value;  // Const only
  std::vector<NumExpr> kids;
};

struct Statement {
  enum class Kind { PointDecl, Let, Assert, Query };
  Kind kind = Kind::PointDecl;
  int line = 1, column = 1;
  std::string text;              // trimmed source line
  std::string ident;             // PointDecl / Let target
  std::vector<NumExpr> coords;   // PointDecl, 2 or 3 entries (z defaults 0)
  std::string callee;            // FUNC or REL name
  std::vector<std::string> args;
  bool expected = true;          // Assert polarity
};

struct Script {
  std::vector<Statement> statements;
};

struct ParseResult {
  std::optional<Script> script;  // present iff no error diagnostics
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return script.has_value(); }
};

ParseResult parse(std::string_view source);
// Canonical source form; reparsing yields a structurally identical AST.
std::string render(const Script& s);

enum class Verdict { Pass, Fail, Error };

struct ReportEntry {
  int index = 0;
  Statement::Kind kind = Statement::Kind::PointDecl;
  Verdict verdict = Verdict::Pass;
  std::string text;
  bool has_value = false;  // set for assert/query relation evaluations
  bool value = false;
  std::string error;
  std::vector<std::pair<std::string, Point>> witness;
};

struct RunReport {
  std::vector<ReportEntry> entries;
  int passes() const;
  int fails() const;
  int errors() const;
};

// Executes statements in order. Assertion failures record a witness and
// continue; construction errors abort only the offending statement.
RunReport evaluate(const Script& s,
                   std::map<std::string, Point>* env_out = nullptr);

enum class ReportFormat { Text, Json };
std::string format_report(const RunReport& r, ReportFormat f);

}  // namespace geo::script
