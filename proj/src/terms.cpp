#include "reslat/terms.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "reslat/errors.hpp"

namespace reslat {

struct Term::Node {
  TermKind kind;
  std::size_t var = 0;
  std::size_t arity = 0;
  std::size_t nodes = 1;
  bool has_zero = false;
  std::optional<Term> l, r;
};

Term Term::make(TermKind kind, std::size_t var, const Term* l, const Term* r) {
  Node n{kind, var, 0, 1, kind == TermKind::Zero, {}, {}};
  if (kind == TermKind::Var) n.arity = var + 1;
  if (l) {
    n.l = *l;
    n.r = *r;
    n.arity = std::max(l->arity(), r->arity());
    n.nodes = 1 + l->node_count() + r->node_count();
    n.has_zero = l->contains_zero() || r->contains_zero();
  }
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::var(std::size_t index) { return make(TermKind::Var, index, nullptr, nullptr); }
Term Term::one() { return make(TermKind::One, 0, nullptr, nullptr); }
Term Term::zero() { return make(TermKind::Zero, 0, nullptr, nullptr); }
Term Term::join(Term a, Term b) { return make(TermKind::Join, 0, &a, &b); }
Term Term::meet(Term a, Term b) { return make(TermKind::Meet, 0, &a, &b); }
Term Term::mult(Term a, Term b) { return make(TermKind::Mult, 0, &a, &b); }
Term Term::imp(Term a, Term b) { return make(TermKind::Imp, 0, &a, &b); }
Term Term::neg(Term t) { return imp(std::move(t), one()); }
Term Term::imp1(Term a, Term b) { return meet(imp(std::move(a), std::move(b)), one()); }

Term Term::power(Term t, std::size_t k) {
  if (k == 0) throw PreconditionError("power exponent must be positive");
  Term acc = t;
  for (std::size_t i = 1; i < k; ++i) acc = mult(acc, t);
  return acc;
}

TermKind Term::kind() const { return node_->kind; }
std::size_t Term::var_index() const { return node_->var; }
const Term& Term::left() const { return *node_->l; }
const Term& Term::right() const { return *node_->r; }
std::size_t Term::arity() const { return node_->arity; }
bool Term::contains_zero() const { return node_->has_zero; }
std::size_t Term::node_count() const { return node_->nodes; }

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case TermKind::Var: return var_index() == other.var_index();
    case TermKind::One:
    case TermKind::Zero: return true;
    default: return left() == other.left() && right() == other.right();
  }
}

namespace {

int precedence(TermKind k) {
  switch (k) {
    case TermKind::Imp: return 1;
    case TermKind::Join: return 2;
    case TermKind::Meet: return 3;
    case TermKind::Mult: return 4;
    default: return 6;
  }
}

const char* symbol(TermKind k) {
  switch (k) {
    case TermKind::Imp: return " -> ";
    case TermKind::Join: return " \\/ ";
    case TermKind::Meet: return " /\\ ";
    case TermKind::Mult: return "*";
    default: return "";
  }
}

void render(const Term& t, std::span<const std::string> names, std::string& out) {
  switch (t.kind()) {
    case TermKind::Var:
      if (t.var_index() < names.size())
        out += names[t.var_index()];
      else
        out += "x" + std::to_string(t.var_index());
      return;
    case TermKind::One: out += "1"; return;
    case TermKind::Zero: out += "0"; return;
    default: break;
  }
  // t -> 1 prints as ~t.
  if (t.kind() == TermKind::Imp && t.right().kind() == TermKind::One) {
    out += "~";
    const bool paren = precedence(t.left().kind()) < 6;
    if (paren) out += "(";
    render(t.left(), names, out);
    if (paren) out += ")";
    return;
  }
  const int p = precedence(t.kind());
  // Imp is right associative: parenthesize an Imp on the left. The other
  // operators are associative, so equal precedence needs no parentheses
  // except on the right where grouping would otherwise be lost.
  const bool lp = precedence(t.left().kind()) < p ||
                  (t.kind() == TermKind::Imp && t.left().kind() == TermKind::Imp);
  const bool rp = precedence(t.right().kind()) < p ||
                  (t.kind() != TermKind::Imp && precedence(t.right().kind()) == p);
  if (lp) out += "(";
  render(t.left(), names, out);
  if (lp) out += ")";
  out += symbol(t.kind());
  if (rp) out += "(";
  render(t.right(), names, out);
  if (rp) out += ")";
}

}  // namespace

std::string Term::to_string(std::span<const std::string> names) const {
  std::string out;
  render(*this, names, out);
  return out;
}

std::size_t Equation::arity() const {
  return std::max({lhs.arity(), rhs.arity(), var_names.size()});
}

std::string Equation::to_string() const {
  return lhs.to_string(var_names) + " = " + rhs.to_string(var_names);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Ident, One, Zero, Join, Meet, Mult, Imp, Imp1, Neg, Pow, LParen, RParen, Eq, Le, Num, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    auto two = [&](const char* t) { return s.substr(i, 2) == t; };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, i, std::string(s.substr(i, j - i))});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Num, i, std::string(s.substr(i, j - i))});
      i = j;
    } else if (two("\\/")) {
      out.push_back({Tok::Join, i, "\\/"});
      i += 2;
    } else if (two("/\\")) {
      out.push_back({Tok::Meet, i, "/\\"});
      i += 2;
    } else if (two("->")) {
      out.push_back({Tok::Imp, i, "->"});
      i += 2;
    } else if (two("=>")) {
      out.push_back({Tok::Imp1, i, "=>"});
      i += 2;
    } else if (two("<=")) {
      out.push_back({Tok::Le, i, "<="});
      i += 2;
    } else if (c == '*') {
      out.push_back({Tok::Mult, i++, "*"});
    } else if (c == '~') {
      out.push_back({Tok::Neg, i++, "~"});
    } else if (c == '^') {
      out.push_back({Tok::Pow, i++, "^"});
    } else if (c == '(') {
      out.push_back({Tok::LParen, i++, "("});
    } else if (c == ')') {
      out.push_back({Tok::RParen, i++, ")"});
    } else if (c == '=') {
      out.push_back({Tok::Eq, i++, "="});
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  std::variant<Term, Equation> parse_top() {
    Term lhs = implication();
    if (peek().kind == Tok::End) return lhs;
    const Token op = next();
    if (op.kind != Tok::Eq && op.kind != Tok::Le)
      throw SyntaxError("expected '=', '<=' or end of input", op.offset);
    Term rhs = implication();
    expect(Tok::End, "end of input");
    Equation eq{lhs, rhs, {}, names_};
    if (op.kind == Tok::Le) {
      eq.lhs = Term::meet(lhs, rhs);
      eq.rhs = lhs;
    }
    return eq;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) throw SyntaxError(std::string("expected ") + what, peek().offset);
    ++pos_;
  }

  Term implication() {
    Term lhs = join();
    if (peek().kind == Tok::Imp || peek().kind == Tok::Imp1) {
      const bool one = next().kind == Tok::Imp1;
      Term rhs = implication();
      return one ? Term::imp1(lhs, rhs) : Term::imp(lhs, rhs);
    }
    return lhs;
  }
  Term join() {
    Term t = meet();
    while (peek().kind == Tok::Join) {
      next();
      t = Term::join(t, meet());
    }
    return t;
  }
  Term meet() {
    Term t = mult();
    while (peek().kind == Tok::Meet) {
      next();
      t = Term::meet(t, mult());
    }
    return t;
  }
  Term mult() {
    Term t = unary();
    while (peek().kind == Tok::Mult) {
      next();
      t = Term::mult(t, unary());
    }
    return t;
  }
  Term unary() {
    if (peek().kind == Tok::Neg) {
      next();
      return Term::neg(unary());
    }
    Term t = atom();
    while (peek().kind == Tok::Pow) {
      next();
      const Token k = next();
      if (k.kind != Tok::Num) throw SyntaxError("expected exponent", k.offset);
      const auto e = std::stoul(k.text);
      if (e == 0) throw SyntaxError("exponent must be positive", k.offset);
      t = Term::power(t, e);
    }
    return t;
  }
  Term atom() {
    const Token t = next();
    switch (t.kind) {
      case Tok::Ident: {
        auto it = std::find(names_.begin(), names_.end(), t.text);
        if (it != names_.end()) return Term::var(static_cast<std::size_t>(it - names_.begin()));
        names_.push_back(t.text);
        return Term::var(names_.size() - 1);
      }
      case Tok::Num:
        if (t.text == "1") return Term::one();
        if (t.text == "0") return Term::zero();
        throw SyntaxError("only the constants 0 and 1 are allowed", t.offset);
      case Tok::LParen: {
        Term inner = implication();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::End: throw SyntaxError("unexpected end of input", t.offset);
      default: throw SyntaxError("unexpected '" + t.text + "'", t.offset);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> names_;
};

}  // namespace

std::variant<Term, Equation> parse(std::string_view text) { return Parser(text).parse_top(); }

Term parse_term(std::string_view text) {
  auto r = parse(text);
  if (auto* t = std::get_if<Term>(&r)) return *t;
  throw SyntaxError("expected a term, found an equation", 0);
}

Equation parse_equation(std::string_view text, std::string name) {
  auto r = parse(text);
  auto* e = std::get_if<Equation>(&r);
  if (!e) throw SyntaxError("expected '=' or '<='", text.size());
  e->name = std::move(name);
  return *e;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// Postfix program: operands are variables or constants, operators are the
// binary operations.
struct Instr {
  TermKind kind;
  std::size_t var;
};

void compile(const Term& t, std::vector<Instr>& prog) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::One:
    case TermKind::Zero: prog.push_back({t.kind(), t.kind() == TermKind::Var ? t.var_index() : 0}); return;
    default:
      compile(t.left(), prog);
      compile(t.right(), prog);
      prog.push_back({t.kind(), 0});
  }
}

class Program {
 public:
  Program(const FiniteAlgebra& alg, const Term& t) : alg_(alg) {
    compile(t, prog_);
    if (t.contains_zero() && !alg.zero())
      throw PreconditionError("term uses 0 but the algebra has no declared zero");
    stack_.resize(prog_.size());
  }

  Elem run(std::span<const Elem> env) {
    std::size_t sp = 0;
    for (const Instr& in : prog_) {
      switch (in.kind) {
        case TermKind::Var: stack_[sp++] = env[in.var]; break;
        case TermKind::One: stack_[sp++] = alg_.one(); break;
        case TermKind::Zero: stack_[sp++] = *alg_.zero(); break;
        default: {
          const Elem b = stack_[--sp];
          const Elem a = stack_[sp - 1];
          Elem r = 0;
          switch (in.kind) {
            case TermKind::Join: r = alg_.join(a, b); break;
            case TermKind::Meet: r = alg_.meet(a, b); break;
            case TermKind::Mult: r = alg_.mult(a, b); break;
            default: r = alg_.imp(a, b); break;
          }
          stack_[sp - 1] = r;
        }
      }
    }
    return stack_[0];
  }

 private:
  const FiniteAlgebra& alg_;
  std::vector<Instr> prog_;
  std::vector<Elem> stack_;
};

}  // namespace

Elem eval(const FiniteAlgebra& alg, const Term& t, std::span<const Elem> env) {
  if (env.size() < t.arity())
    throw PreconditionError("assignment covers " + std::to_string(env.size()) +
                            " variables, term needs " + std::to_string(t.arity()));
  for (Elem e : env)
    if (e >= alg.size()) throw PreconditionError("assignment value out of range");
  return Program(alg, t).run(env);
}

SatResult satisfies(const FiniteAlgebra& alg, const Equation& eq) {
  const std::size_t k = eq.arity();
  Program lhs(alg, eq.lhs), rhs(alg, eq.rhs);
  std::vector<Elem> env(k, 0);
  const auto n = static_cast<Elem>(alg.size());
  for (;;) {
    if (lhs.run(env) != rhs.run(env)) return SatResult{false, env};
    // Odometer with the last variable fastest: lexicographic order.
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++env[i] < n) break;
      env[i] = 0;
      if (i == 0) return SatResult{true, std::nullopt};
    }
    if (k == 0) return SatResult{true, std::nullopt};
  }
}

// ---------------------------------------------------------------------------
// kappa

Term kappa(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var: return Term::meet(t, Term::one());
    case TermKind::One: return Term::meet(Term::one(), Term::one());
    case TermKind::Zero: throw PreconditionError("kappa is defined on 0-free terms only");
    case TermKind::Join: return Term::join(kappa(t.left()), kappa(t.right()));
    case TermKind::Meet: return Term::meet(kappa(t.left()), kappa(t.right()));
    case TermKind::Mult: return Term::mult(kappa(t.left()), kappa(t.right()));
    case TermKind::Imp: return Term::imp1(kappa(t.left()), kappa(t.right()));
  }
  return t;
}

Equation kappa(const Equation& eq) {
  Term p = eq.rhs.kind() == TermKind::One   ? eq.lhs
           : eq.lhs.kind() == TermKind::One ? eq.rhs
                                            : Term::meet(Term::imp(eq.lhs, eq.rhs),
                                                         Term::imp(eq.rhs, eq.lhs));
  return Equation{kappa(p), Term::one(), eq.name.empty() ? "" : "kappa(" + eq.name + ")",
                  eq.var_names};
}

// ---------------------------------------------------------------------------
// Library

const std::vector<NamedEquation>& named_equations() {
  static const std::vector<NamedEquation> lib = [] {
    struct Row {
      const char* name;
      const char* text;
      bool integral;
      const char* description;
    };
    const Row rows[] = {
        {"P", "(x -> y) \\/ (y -> x) = 1", true, "prelinearity"},
        {"D", "x*(x -> y) = y*(y -> x)", true, "divisibility"},
        {"T", "(x -> y) -> y = (y -> x) -> x", true, "Tanaka's equation"},
        {"K1", "x*y /\\ 1 = (x /\\ 1)*(y /\\ 1)", false, "first twist-product axiom"},
        {"K2", "((x /\\ 1) -> y) /\\ ((~y /\\ 1) -> ~x) = x -> y", false,
         "second twist-product axiom"},
        {"cancellative", "x -> x*y = y", true, "cancellativity"},
        {"potent1", "x = x^2", true, "1-potency"},
        {"potent2", "x^2 = x^3", true, "2-potency"},
        {"potent3", "x^3 = x^4", true, "3-potency"},
        {"idempotent", "x*x = x", true, "idempotence"},
        {"GNPcL", "(((x /\\ 1) -> y) \\/ ((y /\\ 1) -> x)) /\\ 1 = 1", false,
         "Goedel Nelson paraconsistent lattices"},
        {"product_hoop", "(y -> z) \\/ ((x -> x*y) -> y) = 1", true, "product hoops"},
        {"eqn", "(x /\\ 1) => y = (x /\\ 1) => (y /\\ 1)", false, "consequence of K1"},
        {"GBA", "((x -> y) -> y) /\\ (x -> x*x) = (y -> x) -> x", true,
         "generalized Boolean algebras: idempotence and Tanaka in one equation"},
        {"GBA_K", "((x /\\ 1) => y) => y = ((y /\\ 1) => x) => x", false,
         "generalized Boolean negative cone, relative to idempotent cones"},
        {"K4_splitting", "(((x => x*y) -> (y /\\ 1)) \\/ ((z /\\ ~z) => (w \\/ ~w))) /\\ 1 = 1", false,
         "splitting equation for K_4"},
        {"CplusC_1", "((x -> y) -> y) /\\ ((y -> z) -> z) <= x \\/ y \\/ z", true,
         "first axiom of the sum of two cancellative varieties"},
        {"CplusC_2", "x -> x^2 = 1", true, "second axiom of the sum of two cancellative varieties"},
        {"KC_axiom", "(x /\\ 1) => x*y = y /\\ 1", false,
         "twist-products of cancellative hoops"},
        {"K3_splitting", "x => x*y = y /\\ 1", false, "splitting equation for K_3"},
        {"idempotent_cone", "(x /\\ 1)^2 = x /\\ 1", false, "idempotent negative cone"},
        {"K2C_splitting", "((x /\\ 1) => (y /\\ 1)) => (y /\\ 1) = ((y /\\ 1) => (x /\\ 1)) => (x /\\ 1)", false,
         "splitting equation for K(2 + C)"},
    };
    std::vector<NamedEquation> out;
    for (const Row& r : rows) out.push_back({parse_equation(r.text, r.name), r.integral, r.description});
    return out;
  }();
  return lib;
}

const NamedEquation& named_equation(std::string_view name) {
  for (const auto& e : named_equations())
    if (e.eq.name == name) return e;
  throw PreconditionError("unknown named equation '" + std::string(name) + "'");
}

Equation lambda_n(std::size_t n, LambdaVariant variant) {
  if (n < 1) throw PreconditionError("lambda_n needs n >= 1");
  const bool waj = variant == LambdaVariant::Wajsberg;
  std::optional<Term> lhs, rhs;
  for (std::size_t i = 0; i < n; ++i) {
    Term c = Term::imp(Term::imp(Term::var(i + 1), Term::var(waj ? 1 : i)), Term::var(i));
    lhs = lhs ? Term::meet(*lhs, c) : c;
  }
  for (std::size_t i = waj ? 1 : 0; i <= n; ++i)
    rhs = rhs ? Term::join(*rhs, Term::var(i)) : Term::var(i);
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return Equation{Term::meet(*lhs, *rhs), *lhs,
                  "lambda_" + std::to_string(n) + (waj ? "_wajsberg" : "_basic"), names};
}

}  // namespace reslat
