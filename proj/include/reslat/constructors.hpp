#pragma once

#include <cstddef>
#include <vector>

#include "reslat/algebra.hpp"

namespace reslat {

/// The two-element Boolean chain {0 < 1}.
FiniteAlgebra two();

/// The n-element idempotent chain, elements listed bottom to top. n >= 2.
FiniteAlgebra godel_chain(std::size_t n);

/// The (n+1)-element chain a^0 = 1 > a > ... > a^n = 0 with
/// a^r a^s = a^min(r+s,n) and a^r -> a^s = a^max(s-r,0). Index r holds a^r.
FiniteAlgebra wajsberg_chain(std::size_t n);

/// A0 stacked below A1 with the identities glued. Elements are A0 minus one,
/// then A1 minus one, then one; labels "L:x", "R:x" and "1".
/// Both summands must be integral.
FiniteAlgebra ordinal_sum(const FiniteAlgebra& a0, const FiniteAlgebra& a1);

/// Componentwise product; index of (x_1..x_k) is lexicographic with the first
/// factor most significant.
FiniteAlgebra direct_product(const std::vector<FiniteAlgebra>& algebras);

/// Every commutative residuated lattice with the given lattice reduct and
/// identity, found by backtracking over join-preserving associative
/// multiplications. The implication is the residual of the multiplication.
std::vector<FiniteAlgebra> residuated_expansions(std::size_t n, const Table& join,
                                                 const Table& meet, Elem one);

/// The five-element chain 0 = a^3 < a^2 < a->0 < a < 1, obtained by
/// searching all residuated multiplications on a five-element chain.
/// Throws ConstructionError unless exactly one candidate is tight.
FiniteAlgebra c5();

}  // namespace reslat
