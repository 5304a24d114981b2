#include <set>
#include <sstream>

#include "geo/script.hpp"
#include "json.hpp"

namespace geo::script {

namespace {

Real eval_num(const NumExpr& e) {
  switch (e.op) {
    case NumExpr::Op::Const: return Real(e.value);
    case NumExpr::Op::Add: return eval_num(e.kids[0]) + eval_num(e.kids[1]);
    case NumExpr::Op::Sub: return eval_num(e.kids[0]) - eval_num(e.kids[1]);
    case NumExpr::Op::Mul: return eval_num(e.kids[0]) * eval_num(e.kids[1]);
    case NumExpr::Op::Div: return eval_num(e.kids[0]) / eval_num(e.kids[1]);
    case NumExpr::Op::Neg: return -eval_num(e.kids[0]);
    case NumExpr::Op::Sqrt: return eval_num(e.kids[0]).sqrt();
  }
  return Real(0);
}

const char* kind_name(Statement::Kind k) {
  switch (k) {
    case Statement::Kind::PointDecl: return "point";
    case Statement::Kind::Let: return "let";
    case Statement::Kind::Assert: return "assert";
    case Statement::Kind::Query: return "query";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Error: return "error";
  }
  return "?";
}

}  // namespace

int RunReport::passes() const {
  int n = 0;
  for (const auto& e : entries) n += e.verdict == Verdict::Pass;
  return n;
}
int RunReport::fails() const {
  int n = 0;
  for (const auto& e : entries) n += e.verdict == Verdict::Fail;
  return n;
}
int RunReport::errors() const {
  int n = 0;
  for (const auto& e : entries) n += e.verdict == Verdict::Error;
  return n;
}

RunReport evaluate(const Script& s, std::map<std::string, Point>* env_out) {
  RunReport report;
  std::map<std::string, Point> env;
  std::set<std::string> poisoned;

  int index = 0;
  for (const auto& st : s.statements) {
    ReportEntry entry;
    entry.index = index++;
    entry.kind = st.kind;
    entry.text = st.text;

    // a statement whose inputs never materialized cannot run
    bool blocked = false;
    for (const auto& arg : st.args)
      if (poisoned.count(arg)) blocked = true;
    if (blocked) {
      entry.verdict = Verdict::Error;
      entry.error = "depends on a failed construction";
      if (!st.ident.empty()) poisoned.insert(st.ident);
      report.entries.push_back(std::move(entry));
      continue;
    }

    try {
      switch (st.kind) {
        case Statement::Kind::PointDecl: {
          Real x = eval_num(st.coords[0]);
          Real y = eval_num(st.coords[1]);
          Real z = st.coords.size() > 2 ? eval_num(st.coords[2]) : Real(0);
          env.emplace(st.ident, Point{x, y, z});
          entry.verdict = Verdict::Pass;
          break;
        }
        case Statement::Kind::Let: {
          std::vector<Point> pts;
          for (const auto& a : st.args) pts.push_back(env.at(a));
          env.emplace(st.ident, apply_construction(st.callee, pts));
          entry.verdict = Verdict::Pass;
          break;
        }
        case Statement::Kind::Assert:
        case Statement::Kind::Query: {
          std::vector<Point> pts;
          for (const auto& a : st.args) pts.push_back(env.at(a));
          bool value = eval_relation(relation_by_name(st.callee)->kind, pts);
          entry.has_value = true;
          entry.value = value;
          if (st.kind == Statement::Kind::Assert && value != st.expected) {
            entry.verdict = Verdict::Fail;
            for (size_t i = 0; i < st.args.size(); ++i)
              entry.witness.emplace_back(st.args[i], pts[i]);
          } else {
            entry.verdict = Verdict::Pass;
          }
          break;
        }
      }
    } catch (const ConstructionError& ce) {
      entry.verdict = Verdict::Error;
      entry.error = ce.what();
      for (const auto& a : st.args)
        if (env.count(a)) entry.witness.emplace_back(a, env.at(a));
      if (!st.ident.empty()) poisoned.insert(st.ident);
    } catch (const DegenerateAngle& de) {
      entry.verdict = Verdict::Error;
      entry.error = de.what();
      for (const auto& a : st.args)
        if (env.count(a)) entry.witness.emplace_back(a, env.at(a));
    } catch (const std::domain_error& de) {
      // DivisionByZero / NegativeRadicand in point literals
      entry.verdict = Verdict::Error;
      entry.error = de.what();
      if (!st.ident.empty()) poisoned.insert(st.ident);
    } catch (const std::runtime_error& re) {
      entry.verdict = Verdict::Error;
      entry.error = re.what();
      if (!st.ident.empty()) poisoned.insert(st.ident);
    }
    report.entries.push_back(std::move(entry));
  }
  if (env_out) *env_out = std::move(env);
  return report;
}

std::string format_report(const RunReport& r, ReportFormat f) {
  if (f == ReportFormat::Text) {
    std::ostringstream out;
    for (const auto& e : r.entries) {
      const char* v = e.verdict == Verdict::Pass
                          ? "PASS "
                          : (e.verdict == Verdict::Fail ? "FAIL " : "ERROR");
      out << v << "  " << e.text;
      if (e.kind == Statement::Kind::Query && e.has_value)
        out << "  -> " << (e.value ? "true" : "false");
      if (!e.error.empty()) out << "  [" << e.error << "]";
      if (!e.witness.empty()) {
        out << "  [witness";
        for (const auto& [name, pt] : e.witness)
          out << " " << name << "=" << point_string(pt);
        out << "]";
      }
      out << "\n";
    }
    out << "summary pass=" << r.passes() << " fail=" << r.fails()
        << " error=" << r.errors() << "\n";
    return out.str();
  }

  nlohmann::json j;
  j["statements"] = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json je;
    je["index"] = e.index;
    je["kind"] = kind_name(e.kind);
    je["verdict"] = verdict_name(e.verdict);
    if (e.has_value) je["value"] = e.value;
    if (!e.error.empty()) je["error"] = e.error;
    if (!e.witness.empty()) {
      nlohmann::json w = nlohmann::json::object();
      for (const auto& [name, pt] : e.witness)
        w[name] = {pt.x.expr_string(), pt.y.expr_string(),
                   pt.z.expr_string()};
      je["witness"] = w;
    }
    j["statements"].push_back(std::move(je));
  }
  j["summary"] = {{"pass", r.passes()},
                  {"fail", r.fails()},
                  {"error", r.errors()}};
  return j.dump(2) + "\n";
}

}  // namespace geo::script
