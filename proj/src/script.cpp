#include <cctype>
#include <set>

#include "geo/script.hpp"

namespace geo::script {

namespace {

struct Token {
  enum class Type { Ident, Int, Sym, End };
  Type type = Type::End;
  std::string text;
  int column = 1;
};

class LineLexer {
 public:
  LineLexer(std::string_view line, int lineno, std::vector<Diagnostic>& diags)
      : s_(line), line_(lineno), diags_(diags) {
    next();
  }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    next();
    return t;
  }

  bool accept_sym(const char* sym) {
    if (tok_.type == Token::Type::Sym && tok_.text == sym) {
      next();
      return true;
    }
    return false;
  }

  bool expect_sym(const char* sym) {
    if (accept_sym(sym)) return true;
    error(std::string("expected '") + sym + "'");
    return false;
  }

  void error(const std::string& msg,
             Diagnostic::Kind kind = Diagnostic::Kind::Syntax,
             const std::string& related = "") {
    diags_.push_back({Diagnostic::Severity::Error, kind, line_, tok_.column,
                      msg, related});
  }

  int line() const { return line_; }

 private:
  void next() {
    while (pos_ < s_.size() &&
           (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r'))
      ++pos_;
    tok_.column = static_cast<int>(pos_) + 1;
    if (pos_ >= s_.size() || s_[pos_] == '#') {
      tok_.type = Token::Type::End;
      tok_.text.clear();
      return;
    }
    char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_'))
        ++pos_;
      tok_.type = Token::Type::Ident;
      tok_.text = std::string(s_.substr(start, pos_ - start));
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      tok_.type = Token::Type::Int;
      tok_.text = std::string(s_.substr(start, pos_ - start));
      return;
    }
    if (c == '=' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '=') {
      tok_.type = Token::Type::Sym;
      tok_.text = "==";
      pos_ += 2;
      return;
    }
    if (std::string("=(),+-*/").find(c) != std::string::npos) {
      tok_.type = Token::Type::Sym;
      tok_.text = std::string(1, c);
      ++pos_;
      return;
    }
    tok_.type = Token::Type::Sym;
    tok_.text = std::string(1, c);
    ++pos_;
  }

  std::string_view s_;
  size_t pos_ = 0;
  Token tok_;
  int line_;
  std::vector<Diagnostic>& diags_;
};

constexpr int kMaxNesting = 200;

// expr := term (('+'|'-') term)* ; term := factor (('*'|'/') factor)*
// factor := '-' factor | INT | sqrt '(' expr ')' | '(' expr ')'
bool parse_num(LineLexer& lx, NumExpr& out, int depth);

bool parse_factor(LineLexer& lx, NumExpr& out, int depth) {
  if (depth > kMaxNesting) {
    lx.error("expression nested too deeply");
    return false;
  }
  if (lx.accept_sym("-")) {
    NumExpr inner;
    if (!parse_factor(lx, inner, depth + 1)) return false;
    out.op = NumExpr::Op::Neg;
    out.kids = {std::move(inner)};
    return true;
  }
  Token t = lx.peek();
  if (t.type == Token::Type::Int) {
    lx.take();
    out.op = NumExpr::Op::Const;
    out.value = mpz_class(t.text);
    return true;
  }
  if (t.type == Token::Type::Ident && t.text == "sqrt") {
    lx.take();
    if (!lx.expect_sym("(")) return false;
    NumExpr inner;
    if (!parse_num(lx, inner, depth + 1)) return false;
    if (!lx.expect_sym(")")) return false;
    out.op = NumExpr::Op::Sqrt;
    out.kids = {std::move(inner)};
    return true;
  }
  if (lx.accept_sym("(")) {
    if (!parse_num(lx, out, depth + 1)) return false;
    return lx.expect_sym(")");
  }
  lx.error("expected number");
  return false;
}

bool parse_term(LineLexer& lx, NumExpr& out, int depth) {
  if (!parse_factor(lx, out, depth)) return false;
  for (;;) {
    NumExpr::Op op;
    if (lx.peek().type == Token::Type::Sym && lx.peek().text == "*")
      op = NumExpr::Op::Mul;
    else if (lx.peek().type == Token::Type::Sym && lx.peek().text == "/")
      op = NumExpr::Op::Div;
    else
      return true;
    lx.take();
    NumExpr rhs;
    if (!parse_factor(lx, rhs, depth)) return false;
    NumExpr combined;
    combined.op = op;
    combined.kids = {std::move(out), std::move(rhs)};
    out = std::move(combined);
  }
}

bool parse_num(LineLexer& lx, NumExpr& out, int depth) {
  if (depth > kMaxNesting) {
    lx.error("expression nested too deeply");
    return false;
  }
  if (!parse_term(lx, out, depth)) return false;
  for (;;) {
    NumExpr::Op op;
    if (lx.peek().type == Token::Type::Sym && lx.peek().text == "+")
      op = NumExpr::Op::Add;
    else if (lx.peek().type == Token::Type::Sym && lx.peek().text == "-")
      op = NumExpr::Op::Sub;
    else
      return true;
    lx.take();
    NumExpr rhs;
    if (!parse_term(lx, rhs, depth)) return false;
    NumExpr combined;
    combined.op = op;
    combined.kids = {std::move(out), std::move(rhs)};
    out = std::move(combined);
  }
}

bool parse_ident(LineLexer& lx, std::string& out, const char* what) {
  Token t = lx.peek();
  if (t.type != Token::Type::Ident) {
    lx.error(std::string("expected ") + what);
    return false;
  }
  lx.take();
  out = t.text;
  return true;
}

bool parse_args(LineLexer& lx, std::vector<std::string>& out,
                const std::set<std::string>& bound) {
  if (!lx.expect_sym("(")) return false;
  for (;;) {
    std::string name;
    if (!parse_ident(lx, name, "point identifier")) return false;
    if (!bound.count(name)) {
      lx.error("unknown identifier '" + name + "'",
               Diagnostic::Kind::UnknownIdentifier, name);
      return false;
    }
    out.push_back(name);
    if (lx.accept_sym(")")) return true;
    if (!lx.expect_sym(",")) return false;
  }
}

bool at_end(LineLexer& lx) {
  if (lx.peek().type == Token::Type::End) return true;
  lx.error("unexpected trailing input");
  return false;
}

std::string trimmed(std::string_view line) {
  size_t b = line.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  size_t e = line.find_last_not_of(" \t\r");
  return std::string(line.substr(b, e - b + 1));
}

}  // namespace

ParseResult parse(std::string_view source) {
  ParseResult result;
  Script script;
  std::set<std::string> bound;
  int lineno = 0;
  size_t pos = 0;
  while (pos <= source.size()) {
    size_t nl = source.find('\n', pos);
    std::string_view line = source.substr(
        pos, nl == std::string_view::npos ? source.size() - pos : nl - pos);
    ++lineno;
    pos = nl == std::string_view::npos ? source.size() + 1 : nl + 1;

    LineLexer lx(line, lineno, result.diagnostics);
    if (lx.peek().type == Token::Type::End) continue;
    size_t diags_before = result.diagnostics.size();

    Statement st;
    st.line = lineno;
    st.column = lx.peek().column;
    st.text = trimmed(line);

    std::string head;
    if (!parse_ident(lx, head, "statement keyword")) continue;
    bool ok = false;
    if (head == "point") {
      st.kind = Statement::Kind::PointDecl;
      ok = parse_ident(lx, st.ident, "identifier") && lx.expect_sym("=") &&
           lx.expect_sym("(");
      if (ok) {
        NumExpr e;
        ok = parse_num(lx, e, 0);
        if (ok) st.coords.push_back(std::move(e));
      }
      while (ok && lx.accept_sym(",")) {
        NumExpr e;
        ok = parse_num(lx, e, 0);
        if (ok) st.coords.push_back(std::move(e));
      }
      ok = ok && lx.expect_sym(")") && at_end(lx);
      if (ok && (st.coords.size() < 2 || st.coords.size() > 3)) {
        lx.error("point literals take 2 or 3 coordinates");
        ok = false;
      }
      if (ok && bound.count(st.ident)) {
        lx.error("identifier '" + st.ident + "' already defined",
                 Diagnostic::Kind::Syntax, st.ident);
        ok = false;
      }
      if (ok) bound.insert(st.ident);
    } else if (head == "let") {
      st.kind = Statement::Kind::Let;
      ok = parse_ident(lx, st.ident, "identifier") && lx.expect_sym("=") &&
           parse_ident(lx, st.callee, "construction name");
      if (ok) {
        const FuncInfo* fi = construction_by_name(st.callee);
        if (!fi) {
          lx.error("unknown construction '" + st.callee + "'",
                   Diagnostic::Kind::UnknownIdentifier, st.callee);
          ok = false;
        } else {
          ok = parse_args(lx, st.args, bound) && at_end(lx);
          if (ok && static_cast<int>(st.args.size()) != fi->arity) {
            lx.error(st.callee + " takes " + std::to_string(fi->arity) +
                         " points, got " + std::to_string(st.args.size()),
                     Diagnostic::Kind::ArityMismatch, st.callee);
            ok = false;
          }
        }
      }
      if (ok && bound.count(st.ident)) {
        lx.error("identifier '" + st.ident + "' already defined",
                 Diagnostic::Kind::Syntax, st.ident);
        ok = false;
      }
      if (ok) bound.insert(st.ident);
    } else if (head == "assert" || head == "query") {
      st.kind = head == "assert" ? Statement::Kind::Assert
                                 : Statement::Kind::Query;
      ok = parse_ident(lx, st.callee, "relation name");
      if (ok) {
        const RelInfo* ri = relation_by_name(st.callee);
        if (ri && !ri->in_script) ri = nullptr;
        if (!ri) {
          lx.error("unknown relation '" + st.callee + "'",
                   Diagnostic::Kind::UnknownIdentifier, st.callee);
          ok = false;
        } else {
          ok = parse_args(lx, st.args, bound);
          if (ok && static_cast<int>(st.args.size()) != ri->arity) {
            lx.error(st.callee + " takes " + std::to_string(ri->arity) +
                         " points, got " + std::to_string(st.args.size()),
                     Diagnostic::Kind::ArityMismatch, st.callee);
            ok = false;
          }
          if (ok && st.kind == Statement::Kind::Assert && lx.accept_sym("==")) {
            Token t = lx.peek();
            if (t.type == Token::Type::Ident &&
                (t.text == "true" || t.text == "false")) {
              lx.take();
              st.expected = t.text == "true";
            } else {
              lx.error("expected 'true' or 'false' after '=='");
              ok = false;
            }
          }
          ok = ok && at_end(lx);
        }
      }
    } else {
      lx.error("unknown statement '" + head + "'");
    }

    if (ok && result.diagnostics.size() == diags_before)
      script.statements.push_back(std::move(st));
  }

  bool any_error = false;
  for (const auto& d : result.diagnostics)
    if (d.severity == Diagnostic::Severity::Error) any_error = true;
  if (!any_error) result.script = std::move(script);
  return result;
}

namespace {

void render_num(const NumExpr& e, std::string& out) {
  switch (e.op) {
    case NumExpr::Op::Const: out += e.value.get_str(); break;
    case NumExpr::Op::Add:
      out += "(";
      render_num(e.kids[0], out);
      out += " + ";
      render_num(e.kids[1], out);
      out += ")";
      break;
    case NumExpr::Op::Sub:
      out += "(";
      render_num(e.kids[0], out);
      out += " - ";
      render_num(e.kids[1], out);
      out += ")";
      break;
    case NumExpr::Op::Mul:
      out += "(";
      render_num(e.kids[0], out);
      out += " * ";
      render_num(e.kids[1], out);
      out += ")";
      break;
    case NumExpr::Op::Div:
      out += "(";
      render_num(e.kids[0], out);
      out += " / ";
      render_num(e.kids[1], out);
      out += ")";
      break;
    case NumExpr::Op::Neg:
      out += "-";
      render_num(e.kids[0], out);
      break;
    case NumExpr::Op::Sqrt:
      out += "sqrt(";
      render_num(e.kids[0], out);
      out += ")";
      break;
  }
}

}  // namespace

std::string render(const Script& s) {
  std::string out;
  for (const auto& st : s.statements) {
    switch (st.kind) {
      case Statement::Kind::PointDecl: {
        out += "point " + st.ident + " = (";
        for (size_t i = 0; i < st.coords.size(); ++i) {
          if (i) out += ", ";
          render_num(st.coords[i], out);
        }
        out += ")";
        break;
      }
      case Statement::Kind::Let: {
        out += "let " + st.ident + " = " + st.callee + "(";
        for (size_t i = 0; i < st.args.size(); ++i) {
          if (i) out += ", ";
          out += st.args[i];
        }
        out += ")";
        break;
      }
      case Statement::Kind::Assert:
      case Statement::Kind::Query: {
        out += st.kind == Statement::Kind::Assert ? "assert " : "query ";
        out += st.callee + "(";
        for (size_t i = 0; i < st.args.size(); ++i) {
          if (i) out += ", ";
          out += st.args[i];
        }
        out += ")";
        if (st.kind == Statement::Kind::Assert && !st.expected)
          out += " == false";
        break;
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace geo::script
