#pragma once

// Twist-products K(A), negative cones and admissible subalgebras.

#include <cstddef>
#include <string>
#include <vector>

#include "reslat/algebra.hpp"
#include "reslat/congruences.hpp"
#include "reslat/kalgebra.hpp"

namespace reslat {

/// K(A) on A x A; pair (a, b) has index a*|A| + b and label "(a,b)".
///   (a,b) v (c,d)  = (a v c, b ^ d)
///   (a,b) ^ (c,d)  = (a ^ c, b v d)
///   (a,b)(c,d)     = (ac, (a -> d) ^ (c -> b))
///   (a,b) -> (c,d) = ((a -> c) ^ (d -> b), ad)
/// Throws PreconditionError for non-integral input.
KAlgebra k_expand(const FiniteAlgebra& a);

/// Elements below one, ascending.
std::vector<Elem> negative_cone_elements(const FiniteAlgebra& a);

/// Integral algebra on the elements below one, with a ->1 b = (a -> b) ^ 1.
FiniteAlgebra negative_cone(const FiniteAlgebra& a);

/// a |-> (a ^ 1, ~a ^ 1) into k_expand(negative_cone(a)), verified to be an
/// injective homomorphism. Throws PreconditionError unless a is a K-lattice.
std::vector<Elem> canonical_embedding(const FiniteAlgebra& a);

/// Names of the failed K-lattice conditions; empty for a K-lattice.
std::vector<std::string> k_lattice_failures(const FiniteAlgebra& a);

/// Valid, 1-involutive, 1-distributive and satisfies K1 and K2.
bool is_k_lattice(const FiniteAlgebra& a);

/// Bounded and (b -> 0) -> 0 = b for every b.
bool is_involutive(const FiniteAlgebra& a);

/// (a -> 0) -> b. Throws PreconditionError unless alg is involutive.
Elem circle_plus(const FiniteAlgebra& alg, Elem a, Elem b);

/// Nonempty, upward closed and closed under meet.
bool is_lattice_filter(const FiniteAlgebra& a, const Filter& f);

/// {(a, b) : a (+) b in F} as a subuniverse of k_expand(b).
SubUniverse admissible_from_filter(const FiniteAlgebra& b, const Filter& f);

/// {((a ^ 1) ->1 0) ->1 (~a ^ 1) : a in A}, as a lattice filter of
/// negative_cone(a) in that algebra's indices.
Filter recover_filter(const FiniteAlgebra& a);

/// {a v (a -> b)} for an integral idempotent algebra.
std::vector<Elem> dense_elements(const FiniteAlgebra& b);

/// Lattice filter containing every dense element.
bool is_regular_filter(const FiniteAlgebra& b, const Filter& f);

/// {(a, b) : a v b in F} as a subuniverse of k_expand(b).
SubUniverse admissible_brouwerian(const FiniteAlgebra& b, const Filter& f);

/// Index of each element of A in ordinal_sum(A, B).
std::vector<Elem> sum_embedding_left(const FiniteAlgebra& a, const FiniteAlgebra& b);
/// Index of each element of B in ordinal_sum(A, B).
std::vector<Elem> sum_embedding_right(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// S u (A x B) u (B x A) u (B x B) inside k_expand(ordinal_sum(a, b)), where
/// S is an admissible subuniverse of k_expand(a).
SubUniverse lift_over_sum(const SubUniverse& s, const FiniteAlgebra& a, const FiniteAlgebra& b);

/// The pairs of S' = T n (A x A) pulled back to k_expand(a) indices.
SubUniverse restrict_to_base(const SubUniverse& t, const FiniteAlgebra& a, const FiniteAlgebra& b);

/// A x A minus (0, 0). Throws PreconditionError unless 0 is meet-irreducible.
SubUniverse punctured(const FiniteAlgebra& a);

KAlgebra k3();
KAlgebra k4();
/// {(u, v) : u (+) v >= a^r} in K(L_p), r <= p.
KAlgebra k_rp(std::size_t r, std::size_t p);
/// K(G_n).
KAlgebra k_n2(std::size_t n);
/// K(G_n) minus (0, 0).
KAlgebra k_n2_minus_1(std::size_t n);
KAlgebra k8();

}  // namespace reslat
