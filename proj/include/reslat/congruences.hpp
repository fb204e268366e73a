#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "reslat/algebra.hpp"

namespace reslat {

enum class FilterKind { Congruence, Lattice };

struct Filter {
  /// Sorted element indices.
  std::vector<Elem> elements;
  FilterKind kind = FilterKind::Congruence;

  bool contains(Elem a) const;
  std::size_t size() const noexcept { return elements.size(); }
  bool operator==(const Filter& o) const { return elements == o.elements; }
};

class Congruence {
 public:
  /// Blocks are renumbered by first occurrence.
  explicit Congruence(std::vector<std::size_t> block_of);

  static Congruence identity(std::size_t n);
  static Congruence total(std::size_t n);

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return blocks_; }
  std::size_t block_of(Elem a) const { return block_of_[a]; }
  bool related(Elem a, Elem b) const { return block_of_[a] == block_of_[b]; }
  std::vector<std::vector<Elem>> blocks() const;

  /// Every block of *this lies inside a block of other.
  bool refines(const Congruence& other) const;

  bool operator==(const Congruence& o) const { return block_of_ == o.block_of_; }
  bool operator<(const Congruence& o) const { return block_of_ < o.block_of_; }

 private:
  std::vector<std::size_t> block_of_;
  std::size_t blocks_ = 0;
};

struct CongruenceLattice {
  /// Sorted by block count, descending (identity first, total last).
  std::vector<Congruence> elements;
  /// leq[i][j]: elements[i] refines elements[j].
  std::vector<std::vector<bool>> leq;

  std::size_t size() const noexcept { return elements.size(); }
  /// Indices of the atoms (covers of the identity).
  std::vector<std::size_t> atoms() const;
};

/// Subsets containing one that are upward closed and closed under mult.
/// Throws PreconditionError for non-integral input.
std::vector<Filter> congruence_filters(const FiniteAlgebra& alg);

/// Nonempty upward closed subsets closed under meet.
std::vector<Filter> lattice_filters(const FiniteAlgebra& alg);

/// Smallest lattice filter containing a.
Filter principal_lattice_filter(const FiniteAlgebra& alg, Elem a);

/// True when elements below one in X form an up-closed (within the negative
/// cone) multiplicative submonoid containing one.
bool is_congruence_filter(const FiniteAlgebra& alg, const Filter& x);

/// {(a, b) : (a -> b) /\ 1 and (b -> a) /\ 1 lie in X}. X must be a
/// congruence filter of the negative cone, given in alg's indices. Throws
/// PreconditionError when X is not a filter or the relation is not a
/// compatible equivalence.
Congruence theta_from_filter(const FiniteAlgebra& alg, const Filter& x);

/// Negative part of the 1-class.
Filter one_class(const FiniteAlgebra& alg, const Congruence& c);

bool is_compatible(const FiniteAlgebra& alg, const Congruence& c);

/// Least congruence relating a and b.
Congruence principal_congruence(const FiniteAlgebra& alg, Elem a, Elem b);

/// Least congruence above both.
Congruence congruence_join(const FiniteAlgebra& alg, const Congruence& x, const Congruence& y);

Congruence congruence_meet(const Congruence& x, const Congruence& y);

/// All congruences, obtained from the congruence filters of the negative cone.
CongruenceLattice congruence_lattice(const FiniteAlgebra& alg);

/// All congruences, obtained as joins of principal congruences. Independent
/// of the filter correspondence.
CongruenceLattice congruence_lattice_by_generation(const FiniteAlgebra& alg);

/// Block algebra; each block is represented by its least index. Throws
/// PreconditionError when c is not compatible.
FiniteAlgebra quotient(const FiniteAlgebra& alg, const Congruence& c);

/// Same as quotient, also returning the projection.
FiniteAlgebra quotient(const FiniteAlgebra& alg, const Congruence& c, std::vector<Elem>& proj);

bool is_simple(const FiniteAlgebra& alg);
bool is_subdirectly_irreducible(const FiniteAlgebra& alg);

/// Order isomorphism between two finite lattices given by their order
/// matrices.
bool order_isomorphic(const std::vector<std::vector<bool>>& a,
                      const std::vector<std::vector<bool>>& b);

}  // namespace reslat
