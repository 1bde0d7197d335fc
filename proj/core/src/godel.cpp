#include "gnc/godel.hpp"

#include <cctype>
#include <stdexcept>

namespace gnc {

namespace {

// Term tags 1..8, formula tags 20..30. Gaps are deliberate headroom.
constexpr unsigned kVar = 1, kZero = 2, kSucc = 3, kPlus = 4, kTimes = 5,
                   kNumeral = 6, kPair = 7, kQuote = 8;
constexpr unsigned kAtom = 20, kBot = 21, kNot = 22, kAnd = 23, kOr = 24,
                   kImp = 25, kIff = 26, kModApp = 27, kPredApp = 28,
                   kForall = 29, kExists = 30;

Nat tag_pair(unsigned tag, const Nat& payload) {
  return cantor_pair(Nat(tag), payload);
}

Nat list_code(const std::vector<TermPtr>& args);

}  // namespace

Nat gn_term(const TermPtr& t) {
  switch (t->tag) {
    case Term::Tag::Var: return tag_pair(kVar, string_code(t->name));
    case Term::Tag::Zero: return tag_pair(kZero, 0);
    case Term::Tag::Succ: return tag_pair(kSucc, gn_term(t->a));
    case Term::Tag::Plus: return tag_pair(kPlus, cantor_pair(gn_term(t->a), gn_term(t->b)));
    case Term::Tag::Times: return tag_pair(kTimes, cantor_pair(gn_term(t->a), gn_term(t->b)));
    case Term::Tag::Numeral: return tag_pair(kNumeral, t->num);
    case Term::Tag::Pair: return tag_pair(kPair, cantor_pair(gn_term(t->a), gn_term(t->b)));
    case Term::Tag::Quote: return tag_pair(kQuote, gn(t->quoted));
  }
  throw std::logic_error("gn_term: bad tag");
}

namespace {
Nat list_code(const std::vector<TermPtr>& args) {
  Nat code = 0;
  for (auto it = args.rbegin(); it != args.rend(); ++it)
    code = 1 + cantor_pair(gn_term(*it), code);
  return code;
}
}  // namespace

Nat gn(const FormulaPtr& f) {
  switch (f->tag) {
    case Formula::Tag::Atom: return tag_pair(kAtom, string_code(f->name));
    case Formula::Tag::Bot: return tag_pair(kBot, 0);
    case Formula::Tag::Not: return tag_pair(kNot, gn(f->a));
    case Formula::Tag::And: return tag_pair(kAnd, cantor_pair(gn(f->a), gn(f->b)));
    case Formula::Tag::Or: return tag_pair(kOr, cantor_pair(gn(f->a), gn(f->b)));
    case Formula::Tag::Imp: return tag_pair(kImp, cantor_pair(gn(f->a), gn(f->b)));
    case Formula::Tag::Iff: return tag_pair(kIff, cantor_pair(gn(f->a), gn(f->b)));
    case Formula::Tag::ModApp:
      return tag_pair(kModApp, cantor_pair(string_code(f->name), gn(f->a)));
    case Formula::Tag::PredApp:
      return tag_pair(kPredApp, cantor_pair(string_code(f->name), list_code(f->args)));
    case Formula::Tag::Forall:
      return tag_pair(kForall, cantor_pair(string_code(f->name), gn(f->a)));
    case Formula::Tag::Exists:
      return tag_pair(kExists, cantor_pair(string_code(f->name), gn(f->a)));
    case Formula::Tag::Meta:
      throw std::invalid_argument("gn: metavariables have no Godel number");
  }
  throw std::logic_error("gn: bad tag");
}

namespace {

std::optional<TermPtr> decode_term(const Nat& n);
std::optional<FormulaPtr> decode_formula(const Nat& n);

std::optional<std::string> decode_name(const Nat& n) {
  auto s = string_decode(n);
  if (!s || s->empty()) return std::nullopt;
  for (char c : *s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      return std::nullopt;
  return s;
}

std::optional<std::vector<TermPtr>> decode_list(const Nat& n) {
  std::vector<TermPtr> out;
  Nat cur = n;
  while (cur != 0) {
    auto [h, t] = cantor_unpair(cur - 1);
    auto elem = decode_term(h);
    if (!elem) return std::nullopt;
    out.push_back(*elem);
    cur = t;
  }
  return out;
}

std::optional<TermPtr> decode_term(const Nat& n) {
  auto [tag, payload] = cantor_unpair(n);
  if (tag == kVar) {
    auto name = decode_name(payload);
    if (!name) return std::nullopt;
    return mk_var(*name);
  }
  if (tag == kZero) return payload == 0 ? std::optional(mk_zero()) : std::nullopt;
  if (tag == kSucc) {
    auto a = decode_term(payload);
    if (!a) return std::nullopt;
    return mk_succ(*a);
  }
  if (tag == kNumeral) return mk_numeral(payload);
  if (tag == kPlus || tag == kTimes || tag == kPair) {
    auto [l, r] = cantor_unpair(payload);
    auto a = decode_term(l), b = decode_term(r);
    if (!a || !b) return std::nullopt;
    if (tag == kPlus) return mk_plus(*a, *b);
    if (tag == kTimes) return mk_times(*a, *b);
    return mk_pair_term(*a, *b);
  }
  if (tag == kQuote) {
    auto f = decode_formula(payload);
    if (!f) return std::nullopt;
    return mk_quote(*f);
  }
  return std::nullopt;
}

std::optional<FormulaPtr> decode_formula(const Nat& n) {
  auto [tag, payload] = cantor_unpair(n);
  if (tag > kExists) return std::nullopt;
  switch (tag.convert_to<unsigned>()) {
    case kAtom: {
      auto name = decode_name(payload);
      if (!name) return std::nullopt;
      return mk_atom(*name);
    }
    case kBot:
      return payload == 0 ? std::optional(mk_bot()) : std::nullopt;
    case kNot: {
      auto a = decode_formula(payload);
      if (!a) return std::nullopt;
      return mk_not(*a);
    }
    case kAnd:
    case kOr:
    case kImp:
    case kIff: {
      auto [l, r] = cantor_unpair(payload);
      auto a = decode_formula(l), b = decode_formula(r);
      if (!a || !b) return std::nullopt;
      if (tag == kAnd) return mk_and(*a, *b);
      if (tag == kOr) return mk_or(*a, *b);
      if (tag == kImp) return mk_imp(*a, *b);
      return mk_iff(*a, *b);
    }
    case kModApp: {
      auto [nm, body] = cantor_unpair(payload);
      auto name = decode_name(nm);
      auto a = decode_formula(body);
      if (!name || !a) return std::nullopt;
      return mk_modapp(*name, *a);
    }
    case kPredApp: {
      auto [nm, lst] = cantor_unpair(payload);
      auto name = decode_name(nm);
      auto args = decode_list(lst);
      if (!name || !args) return std::nullopt;
      return mk_predapp(*name, std::move(*args));
    }
    case kForall:
    case kExists: {
      auto [nm, body] = cantor_unpair(payload);
      auto name = decode_name(nm);
      auto a = decode_formula(body);
      if (!name || !a) return std::nullopt;
      return tag == kForall ? std::optional(mk_forall(*name, *a))
                            : std::optional(mk_exists(*name, *a));
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

std::optional<FormulaPtr> gn_decode(const Nat& n) { return decode_formula(n); }

TermPtr normalize_term(const TermPtr& t) {
  switch (t->tag) {
    case Term::Tag::Var:
    case Term::Tag::Zero:
      return t;
    case Term::Tag::Numeral:
      return t->num == 0 ? mk_zero() : t;
    case Term::Tag::Succ: {
      TermPtr a = normalize_term(t->a);
      if (a->tag == Term::Tag::Zero) return mk_numeral(1);
      if (a->tag == Term::Tag::Numeral) return mk_numeral(a->num + 1);
      return mk_succ(a);
    }
    case Term::Tag::Plus:
      return mk_plus(normalize_term(t->a), normalize_term(t->b));
    case Term::Tag::Times:
      return mk_times(normalize_term(t->a), normalize_term(t->b));
    case Term::Tag::Pair:
      return mk_pair_term(normalize_term(t->a), normalize_term(t->b));
    case Term::Tag::Quote:
      return mk_numeral(gn(normalize(t->quoted)));
  }
  throw std::logic_error("normalize_term: bad tag");
}

FormulaPtr normalize(const FormulaPtr& f) {
  switch (f->tag) {
    case Formula::Tag::Atom:
    case Formula::Tag::Bot:
    case Formula::Tag::Meta:
      return f;
    case Formula::Tag::Not:
      return mk_not(normalize(f->a));
    case Formula::Tag::And:
      return mk_and(normalize(f->a), normalize(f->b));
    case Formula::Tag::Or:
      return mk_or(normalize(f->a), normalize(f->b));
    case Formula::Tag::Imp:
      return mk_imp(normalize(f->a), normalize(f->b));
    case Formula::Tag::Iff:
      return mk_iff(normalize(f->a), normalize(f->b));
    case Formula::Tag::ModApp:
      return mk_modapp(f->name, normalize(f->a));
    case Formula::Tag::PredApp: {
      std::vector<TermPtr> args;
      args.reserve(f->args.size());
      for (const auto& t : f->args) args.push_back(normalize_term(t));
      return mk_predapp(f->name, std::move(args));
    }
    case Formula::Tag::Forall:
      return mk_forall(f->name, normalize(f->a));
    case Formula::Tag::Exists:
      return mk_exists(f->name, normalize(f->a));
  }
  throw std::logic_error("normalize: bad tag");
}

}  // namespace gnc
