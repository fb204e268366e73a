#pragma once

// Terms over {join, meet, mult, imp, 1, 0}, an equation parser, brute-force
// model checking and the kappa translation into the twist-product signature.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "reslat/algebra.hpp"

namespace reslat {

enum class TermKind { Var, One, Zero, Join, Meet, Mult, Imp };

class Term {
 public:
  static Term var(std::size_t index);
  static Term one();
  static Term zero();
  static Term join(Term a, Term b);
  static Term meet(Term a, Term b);
  static Term mult(Term a, Term b);
  static Term imp(Term a, Term b);
  /// t -> 1
  static Term neg(Term t);
  /// (a -> b) /\ 1
  static Term imp1(Term a, Term b);
  /// t^k for k >= 1
  static Term power(Term t, std::size_t k);

  TermKind kind() const;
  /// Only for Var.
  std::size_t var_index() const;
  /// Only for binary nodes.
  const Term& left() const;
  const Term& right() const;

  /// Largest variable index plus one.
  std::size_t arity() const;
  bool contains_zero() const;
  std::size_t node_count() const;

  /// Infix rendering; variables use `names` when provided, else x0, x1, ...
  std::string to_string(std::span<const std::string> names = {}) const;

  bool operator==(const Term& other) const;

 private:
  struct Node;
  static Term make(TermKind kind, std::size_t var, const Term* l, const Term* r);
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Equation {
  Term lhs;
  Term rhs;
  std::string name;
  /// Display names for variables, by index.
  std::vector<std::string> var_names;

  std::size_t arity() const;
  std::string to_string() const;
};

/// Parses a term or an equation.
///   t ::= var | "1" | "0" | t "\/" t | t "/\" t | t "*" t | t "->" t
///       | t "=>" t | "~" t | t "^" k | "(" t ")"
///   e ::= t "=" t | t "<=" t
/// Binding from tightest: ~ and ^, *, /\, \/, then -> and => (right
/// associative). "=>" is (a -> b) /\ 1 and "~t" is t -> 1. "s <= t" is
/// encoded as s /\ t = s. Variables are numbered by first appearance.
/// Throws SyntaxError with a byte offset.
std::variant<Term, Equation> parse(std::string_view text);
Term parse_term(std::string_view text);
Equation parse_equation(std::string_view text, std::string name = {});

/// Throws PreconditionError when env does not cover the term's variables or a
/// 0 appears in an algebra without a declared zero.
Elem eval(const FiniteAlgebra& alg, const Term& t, std::span<const Elem> env);

struct SatResult {
  bool holds = true;
  /// Lexicographically first failing assignment, variable 0 most significant.
  std::optional<std::vector<Elem>> counterexample;

  explicit operator bool() const noexcept { return holds; }
};

/// Exhaustive check over all size^arity assignments.
SatResult satisfies(const FiniteAlgebra& alg, const Equation& eq);

/// x, 1 -> x /\ 1, 1 /\ 1; joins, meets and products translate
/// componentwise; r -> s becomes kappa(r) => kappa(s).
/// Throws PreconditionError when t contains 0.
Term kappa(const Term& t);

/// kappa(p) = 1 where p is the side opposite a literal 1, or
/// (s -> t) /\ (t -> s) for a general equation s = t.
Equation kappa(const Equation& eq);

struct NamedEquation {
  Equation eq;
  /// Stated over integral algebras (the input side of kappa).
  bool integral;
  std::string description;
};

const std::vector<NamedEquation>& named_equations();
/// Throws PreconditionError on an unknown name.
const NamedEquation& named_equation(std::string_view name);

enum class LambdaVariant { Wajsberg, Basic };

/// Wajsberg: /\_{i=0}^{n-1} ((x_{i+1} -> x_1) -> x_i) <= \/_{i=1}^{n} x_i
/// Basic:    /\_{i=0}^{n-1} ((x_{i+1} -> x_i) -> x_i) <= \/_{i=0}^{n} x_i
Equation lambda_n(std::size_t n, LambdaVariant variant);

}  // namespace reslat
