#include "gnc/proof.hpp"

#include <fstream>
#include <sstream>

#include "gnc/godel.hpp"
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

Justification parse_just(const std::string& text, int lineno) {
  std::istringstream in(text);
  std::string kind;
  in >> kind;
  auto bad = [&](const std::string& why) -> ProofError {
    return ProofError("line " + std::to_string(lineno) + ": " + why);
  };
  if (kind == "local" || kind == "global") {
    std::string ax;
    in >> ax;
    if (ax.empty()) throw bad("missing axiom name");
    return kind == "local" ? Justification::local(ax) : Justification::global(ax);
  }
  if (kind == "valid") return Justification::valid();
  if (kind == "mp") {
    std::size_t i = 0, j = 0;
    in >> i >> j;
    if (i == 0 || j == 0) throw bad("mp needs two step numbers");
    return Justification::mp(i, j);
  }
  if (kind == "nec") {
    std::string op;
    std::size_t j = 0;
    in >> op >> j;
    if (op.empty() || j == 0) throw bad("nec needs an operator and a step number");
    return Justification::nec(op, j);
  }
  throw bad("unknown justification '" + kind + "'");
}

}  // namespace

Proof parse_proof(const std::string& text) {
  Proof p;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      std::istringstream hdr(line);
      std::string kw, name, in_kw, system;
      hdr >> kw >> name >> in_kw >> system;
      if (kw != "proof" || in_kw != "in" || name.empty() || system.empty())
        throw ProofError("line " + std::to_string(lineno) +
                         ": expected 'proof <name> in <system>'");
      p.name = name;
      p.system = system;
      header_seen = true;
      continue;
    }
    auto colon = line.find(':');
    auto semi = line.rfind(';');
    if (colon == std::string::npos || semi == std::string::npos || semi < colon)
      throw ProofError("line " + std::to_string(lineno) +
                       ": expected '<n>: <formula> ; <justification>'");
    std::size_t num = 0;
    try {
      num = std::stoul(trim(line.substr(0, colon)));
    } catch (const std::exception&) {
      throw ProofError("line " + std::to_string(lineno) + ": bad step number");
    }
    if (num != p.steps.size() + 1)
      throw ProofError("line " + std::to_string(lineno) + ": step numbers must be consecutive");
    FormulaPtr f;
    try {
      f = parse_formula(trim(line.substr(colon + 1, semi - colon - 1)));
    } catch (const ParseError& e) {
      throw ProofError("line " + std::to_string(lineno) + ": " + e.what());
    }
    p.steps.push_back({normalize(f), parse_just(trim(line.substr(semi + 1)), lineno)});
  }
  if (!header_seen) throw ProofError("missing proof header");
  if (p.steps.empty()) throw ProofError("proof has no steps");
  return p;
}

Proof load_proof_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProofError("cannot open proof file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_proof(buf.str());
}

std::string format_proof(const Proof& p) {
  std::ostringstream os;
  os << "proof " << p.name << " in " << p.system << "\n";
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const Step& s = p.steps[i];
    os << (i + 1) << ": " << print_formula(s.formula) << " ; ";
    switch (s.just.kind) {
      case Justification::Kind::LocalAx: os << "local " << s.just.name; break;
      case Justification::Kind::GlobalAx: os << "global " << s.just.name; break;
      case Justification::Kind::Valid: os << "valid"; break;
      case Justification::Kind::MP: os << "mp " << s.just.i << " " << s.just.j; break;
      case Justification::Kind::Nec: os << "nec " << s.just.name << " " << s.just.j; break;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace gnc
