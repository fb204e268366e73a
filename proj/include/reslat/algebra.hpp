#pragma once

// Finite commutative residuated lattices given by explicit operation tables.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace reslat {

/// Elements are dense indices 0..size-1.
using Elem = std::uint16_t;

/// Row-major size x size operation table.
using Table = std::vector<Elem>;

enum class Op { Join, Meet, Mult, Imp };

inline constexpr Op kAllOps[] = {Op::Join, Op::Meet, Op::Mult, Op::Imp};

const char* op_name(Op op);

class FiniteAlgebra {
 public:
  /// Throws StructuralError when a table is not size*size or holds an entry
  /// outside the universe, or when `one`/`zero` are out of range.
  FiniteAlgebra(std::size_t size, Table join, Table meet, Table mult, Table imp, Elem one,
                std::optional<Elem> zero = std::nullopt, std::vector<std::string> labels = {});

  /// The one-element algebra.
  static FiniteAlgebra trivial();

  std::size_t size() const noexcept { return n_; }
  Elem one() const noexcept { return one_; }
  std::optional<Elem> zero() const noexcept { return zero_; }

  Elem join(Elem a, Elem b) const { return join_[a * n_ + b]; }
  Elem meet(Elem a, Elem b) const { return meet_[a * n_ + b]; }
  Elem mult(Elem a, Elem b) const { return mult_[a * n_ + b]; }
  Elem imp(Elem a, Elem b) const { return imp_[a * n_ + b]; }
  Elem apply(Op op, Elem a, Elem b) const { return table(op)[a * n_ + b]; }

  /// a -> 1
  Elem neg(Elem a) const { return imp(a, one_); }

  const Table& table(Op op) const;
  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  FiniteAlgebra with_labels(std::vector<std::string> labels) const;
  FiniteAlgebra with_zero(std::optional<Elem> zero) const;

  /// Elements in index order.
  std::vector<Elem> universe() const;

  /// Same tables; labels are ignored.
  bool same_tables(const FiniteAlgebra& other) const;

  bool operator==(const FiniteAlgebra& other) const = default;

 private:
  std::size_t n_;
  Table join_, meet_, mult_, imp_;
  Elem one_;
  std::optional<Elem> zero_;
  std::vector<std::string> labels_;
};

/// Sorted subset of an algebra's universe.
struct SubUniverse {
  std::vector<Elem> elements;
  /// Only meaningful for subuniverses of a K-lattice.
  std::optional<bool> admissible;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(Elem a) const;
  bool operator==(const SubUniverse& other) const { return elements == other.elements; }
};

struct AxiomFailure {
  std::string axiom;
  std::vector<Elem> witness;
};

struct ValidationReport {
  std::vector<AxiomFailure> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// Checks the lattice, commutative monoid and residuation axioms, plus
/// `zero <= a` when a zero is declared. Every violated instance is listed.
ValidationReport validate(const FiniteAlgebra& a);

/// meet(a, b) == a
bool leq(const FiniteAlgebra& alg, Elem a, Elem b);

bool is_integral(const FiniteAlgebra& alg);

/// Global minimum of the lattice order, if there is one.
std::optional<Elem> is_bounded(const FiniteAlgebra& alg);

/// Global maximum of the lattice order, if there is one.
std::optional<Elem> top(const FiniteAlgebra& alg);

/// Smallest n >= 1 with a^n = 0; nullopt stands for infinite order.
/// The identity always has infinite order. Throws PreconditionError if the
/// algebra has no bottom.
std::optional<std::size_t> element_order(const FiniteAlgebra& alg, Elem a);

/// Elements of infinite order. Throws PreconditionError when the algebra is
/// unbounded or the result is not a multiplicatively closed filter.
SubUniverse radical(const FiniteAlgebra& alg);

/// True when `map` (indexed by elements of `from`) preserves all four
/// operations and the identity.
bool is_homomorphism(const FiniteAlgebra& from, const FiniteAlgebra& to, std::span<const Elem> map);

/// Image of `alg` under the bijection old -> perm[old]. Labels move along.
FiniteAlgebra relabel(const FiniteAlgebra& alg, std::span<const Elem> perm);

/// Algebra on the sorted subset `elements`, which must be closed under all
/// operations and contain one. Throws PreconditionError otherwise.
FiniteAlgebra restrict(const FiniteAlgebra& alg, std::span<const Elem> elements);

/// a^k for k >= 1.
Elem power(const FiniteAlgebra& alg, Elem a, std::size_t k);

bool is_idempotent(const FiniteAlgebra& alg);

/// 1 is join irreducible: a v b = 1 implies a = 1 or b = 1.
bool one_join_irreducible(const FiniteAlgebra& alg);

bool is_chain(const FiniteAlgebra& alg);

}  // namespace reslat
