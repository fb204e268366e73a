#pragma once

// Finitely generated varieties compared through their subdirectly
// irreducible members, which by Jonsson's Lemma all lie in HS of the
// generators.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "reslat/algebra.hpp"
#include "reslat/subalgebras.hpp"
#include "reslat/terms.hpp"

namespace reslat {

inline constexpr std::size_t kDefaultHsCap = 36;

using Edge = std::pair<std::size_t, std::size_t>;

struct VarietyNode {
  std::string name;
  /// Display label for DOT output.
  std::string label;
  std::vector<FiniteAlgebra> generators;
  /// Sorted canonical forms of the nontrivial SI members.
  std::vector<CanonicalForm> si_set;
  /// Non-empty for nodes defined by equations instead of generators. Such
  /// nodes take no part in HS computations.
  std::vector<Equation> axioms;

  bool axiom_defined() const noexcept { return !axioms.empty(); }
};

struct VarietyPoset {
  std::vector<VarietyNode> nodes;
  /// order[i][j]: node i is contained in node j.
  std::vector<std::vector<bool>> order;
  /// Covers (lower, upper).
  std::vector<Edge> hasse;
};

/// Canonical representatives of HS(generators), trivial algebra included,
/// sorted by size then canonical form. Throws CapExceeded when some
/// subalgebra enumeration exceeds max_size.
std::vector<FiniteAlgebra> hs_closure(const std::vector<FiniteAlgebra>& generators,
                                      std::size_t max_size = kDefaultHsCap);

/// Nontrivial subdirectly irreducible members of hs_closure.
std::vector<FiniteAlgebra> si_members(const std::vector<FiniteAlgebra>& generators,
                                      std::size_t max_size = kDefaultHsCap);

/// V(g1) <= V(g2).
bool variety_leq(const std::vector<FiniteAlgebra>& g1, const std::vector<FiniteAlgebra>& g2,
                 std::size_t max_size = kDefaultHsCap);

/// (r,n) << (s,m): some k with n*k = m and s >= r*k. Throws
/// PreconditionError unless r <= n and s <= m.
bool ll_order(std::size_t r, std::size_t n, std::size_t s, std::size_t m);

/// Node generated by finite algebras; an empty list gives the trivial variety.
VarietyNode finite_node(std::string name, std::vector<FiniteAlgebra> generators,
                        std::size_t max_size = kDefaultHsCap);

/// Node defined by equations.
VarietyNode axiom_node(std::string name, std::vector<Equation> axioms);

/// Containment between nodes: finite nodes by SI sets; a finite node lies
/// below an axiom node when its generators satisfy every axiom; an axiom
/// node lies below another when its axioms include the other's; an axiom
/// node never lies below a finite node.
bool node_leq(const VarietyNode& a, const VarietyNode& b);

/// Order matrix and covers. Nodes with equal finite SI sets are merged,
/// keeping the first name.
VarietyPoset variety_poset(std::vector<VarietyNode> nodes);

/// Every subvariety of V(generators): one node per down-set of the SI poset,
/// named by the maximal members joined with "∨".
VarietyPoset subvariety_lattice(const std::vector<FiniteAlgebra>& generators,
                                std::size_t max_size = kDefaultHsCap);

/// Transitive reduction of a partial order matrix.
std::vector<Edge> hasse_edges(const std::vector<std::vector<bool>>& order);

/// Isomorphism of directed graphs on n1 and n2 vertices.
bool digraph_isomorphic(std::size_t n1, const std::vector<Edge>& e1, std::size_t n2,
                        const std::vector<Edge>& e2);

std::string to_dot(const VarietyPoset& p, const std::string& graph_name = "variety");

struct SplittingReport {
  /// Nodes whose generators satisfy the equation and do not contain the algebra.
  std::vector<std::string> satisfying;
  /// Nodes containing the algebra.
  std::vector<std::string> containing;
  /// Nodes in both classes or in neither.
  std::vector<std::string> violations;
  /// Axiom nodes where satisfaction cannot be decided.
  std::vector<std::string> skipped;

  bool holds() const noexcept { return violations.empty(); }
};

SplittingReport check_splitting(const VarietyPoset& family, const FiniteAlgebra& alg,
                                const Equation& eq, std::size_t max_size = kDefaultHsCap);

/// Name from a fixed catalog of small algebras ("K_3", "K_{1,2}", "L_3",
/// ...), or "A<size>.<k>" for unknown algebras. Integral and non-integral
/// catalogs are searched alike.
std::string catalog_name(const FiniteAlgebra& alg);

/// Catalog algebra by name; throws PreconditionError for unknown names.
FiniteAlgebra catalog_algebra(const std::string& name);

/// "gnpcl", "l2l3", "two-plus-l2", "kph-finite".
const std::vector<std::string>& preset_names();

/// Poset for a named preset; throws PreconditionError for unknown names.
VarietyPoset preset_poset(const std::string& name);

}  // namespace reslat
