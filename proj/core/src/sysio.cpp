#include "gnc/sysio.hpp"

#include <fstream>
#include <sstream>

#include "gnc/parse.hpp"
#include "gnc/print.hpp"

namespace gnc {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad(int lineno, const std::string& why) {
  throw SystemIoError("line " + std::to_string(lineno) + ": " + why);
}

// @valid(K) / @valid(K, pred) / @closure(K, pred)
bool parse_guard(const std::string& body, Axiom& ax, int lineno) {
  if (body.empty() || body[0] != '@') return false;
  auto open = body.find('(');
  auto close = body.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    bad(lineno, "malformed guard, expected @valid(Op) or @closure(Op)");
  std::string kind = body.substr(1, open - 1);
  std::string inner = trim(body.substr(open + 1, close - open - 1));
  std::string op = inner, mod;
  if (auto comma = inner.find(','); comma != std::string::npos) {
    op = trim(inner.substr(0, comma));
    mod = trim(inner.substr(comma + 1));
  }
  if (kind == "valid")
    ax.guard = GuardKind::ValidWrapped;
  else if (kind == "closure")
    ax.guard = GuardKind::ClosureWrapped;
  else
    bad(lineno, "unknown guard '@" + kind + "'");
  if (op.empty()) bad(lineno, "guard needs an operator name");
  if (!mod.empty() && mod != "pred") bad(lineno, "guard modifier must be 'pred'");
  ax.guard_op = op;
  ax.guard_op_kind = mod == "pred" ? OpKind::Predicate : OpKind::Operator;
  return true;
}

SideCondition parse_condition(const std::string& text, int lineno) {
  // lonefree(?phi, x)
  auto open = text.find('(');
  auto close = text.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    bad(lineno, "malformed side condition");
  std::string kind = trim(text.substr(0, open));
  std::string inner = text.substr(open + 1, close - open - 1);
  auto comma = inner.find(',');
  if (kind != "lonefree" || comma == std::string::npos)
    bad(lineno, "unsupported side condition '" + kind + "'");
  std::string mv = trim(inner.substr(0, comma));
  std::string var = trim(inner.substr(comma + 1));
  if (mv.size() < 2 || mv[0] != '?') bad(lineno, "side condition needs a ?metavariable");
  return {SideCondition::Kind::LoneFree, mv.substr(1), var};
}

Axiom parse_axiom(AxiomTag tag, const std::string& decl, int lineno) {
  auto colon = decl.find(':');
  if (colon == std::string::npos) bad(lineno, "expected '<name>: <schema>'");
  Axiom ax;
  ax.tag = tag;
  ax.name = trim(decl.substr(0, colon));
  if (ax.name.empty()) bad(lineno, "axiom needs a name");
  std::string body = trim(decl.substr(colon + 1));
  if (parse_guard(body, ax, lineno)) return ax;

  if (body.rfind("closure ", 0) == 0) {
    ax.schema.closure = true;
    body = trim(body.substr(8));
  }
  if (auto where = body.find(" where "); where != std::string::npos) {
    ax.schema.conditions.push_back(
        parse_condition(trim(body.substr(where + 7)), lineno));
    body = trim(body.substr(0, where));
  }
  try {
    ax.schema.pattern = parse_formula(body);
  } catch (const ParseError& e) {
    bad(lineno, std::string("schema: ") + e.what());
  }
  ax.schema.name = ax.name;
  return ax;
}

}  // namespace

System parse_system(const std::string& text) {
  System s;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    std::string rest = trim(line.substr(kw.size()));
    if (!header_seen) {
      if (kw != "system" || rest.empty()) bad(lineno, "expected 'system <name>'");
      s.name = rest;
      header_seen = true;
      continue;
    }
    if (kw == "global") {
      s.axioms.push_back(parse_axiom(AxiomTag::Global, rest, lineno));
    } else if (kw == "local") {
      s.axioms.push_back(parse_axiom(AxiomTag::Local, rest, lineno));
    } else if (kw == "nec") {
      std::istringstream rs(rest);
      std::string op, mod;
      rs >> op >> mod;
      if (op.empty()) bad(lineno, "nec needs an operator name");
      if (!mod.empty() && mod != "pred") bad(lineno, "nec modifier must be 'pred'");
      s.nec_rules[op] = mod == "pred" ? OpKind::Predicate : OpKind::Operator;
    } else if (kw == "validity") {
      if (rest == "taut")
        s.validity_mode = ValidityMode::Taut;
      else if (rest == "taut+fo")
        s.validity_mode = ValidityMode::TautFo;
      else
        bad(lineno, "validity mode must be 'taut' or 'taut+fo'");
    } else {
      bad(lineno, "unknown declaration '" + kw + "'");
    }
  }
  if (!header_seen) throw SystemIoError("missing system header");
  for (std::size_t i = 0; i < s.axioms.size(); ++i)
    for (std::size_t j = i + 1; j < s.axioms.size(); ++j)
      if (s.axioms[i].name == s.axioms[j].name)
        throw SystemIoError("duplicate axiom name '" + s.axioms[i].name + "'");
  return s;
}

System load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SystemIoError("cannot open system file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

std::string format_system(const System& s) {
  std::ostringstream os;
  os << "system " << s.name << "\n";
  if (s.validity_mode == ValidityMode::TautFo) os << "validity taut+fo\n";
  for (const auto& ax : s.axioms) {
    os << (ax.tag == AxiomTag::Global ? "global " : "local ") << ax.name << ": ";
    switch (ax.guard) {
      case GuardKind::ValidWrapped:
      case GuardKind::ClosureWrapped:
        os << (ax.guard == GuardKind::ValidWrapped ? "@valid(" : "@closure(")
           << ax.guard_op
           << (ax.guard_op_kind == OpKind::Predicate ? ", pred" : "") << ")";
        break;
      case GuardKind::None:
        if (ax.schema.closure) os << "closure ";
        os << print_formula(ax.schema.pattern);
        for (const auto& c : ax.schema.conditions)
          os << " where lonefree(?" << c.metavar << ", " << c.var << ")";
        break;
    }
    os << "\n";
  }
  for (const auto& [op, kind] : s.nec_rules)
    os << "nec " << op << (kind == OpKind::Predicate ? " pred" : "") << "\n";
  return os.str();
}

}  // namespace gnc
