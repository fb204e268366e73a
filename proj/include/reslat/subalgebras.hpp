#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "reslat/algebra.hpp"
#include "reslat/kalgebra.hpp"

namespace reslat {

inline constexpr std::size_t kDefaultSubuniverseCap = 16;
inline constexpr std::size_t kDefaultAdmissibleCap = 36;

/// Least subset containing `seed` and one that is closed under join, meet,
/// mult and imp. The constant 0 is not part of the generating signature.
SubUniverse generated(const FiniteAlgebra& alg, std::span<const Elem> seed);

/// Every subuniverse, in order of discovery from {1}. Throws CapExceeded when
/// alg.size() > max_size.
std::vector<SubUniverse> all_subuniverses(const FiniteAlgebra& alg,
                                          std::size_t max_size = kDefaultSubuniverseCap);

/// Subuniverses that contain `required`.
std::vector<SubUniverse> subuniverses_containing(const FiniteAlgebra& alg,
                                                 std::span<const Elem> required,
                                                 std::size_t max_size);

/// Bijection from A to B preserving all operations and one, found by
/// backtracking over colour classes.
std::optional<std::vector<Elem>> is_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// Injective homomorphism from `small` into `big`.
std::optional<std::vector<Elem>> find_embedding(const FiniteAlgebra& small,
                                                const FiniteAlgebra& big);

/// Isomorphism-invariant encoding of the operation tables.
struct CanonicalForm {
  std::vector<Elem> code;

  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;
};

/// Canonical form and the relabelling old -> canonical position used to
/// produce it.
struct Canonical {
  CanonicalForm form;
  std::vector<Elem> perm;
};

Canonical canonical(const FiniteAlgebra& alg);
CanonicalForm canonical_form(const FiniteAlgebra& alg);

/// Relabelled copy of `alg` whose tables are its canonical form.
FiniteAlgebra canonical_algebra(const FiniteAlgebra& alg);

/// One representative per isomorphism class of subalgebras, sorted by size
/// and then canonical form. Representatives are the restricted subalgebras.
std::vector<FiniteAlgebra> subalgebras_up_to_iso(const FiniteAlgebra& alg,
                                                 std::size_t max_size = kDefaultSubuniverseCap);

/// B contains every element below one.
bool is_admissible(const KAlgebra& k, const SubUniverse& b);

/// Subalgebra generated by the negative cone.
SubUniverse minimal_admissible(const KAlgebra& k);

/// Admissible subuniverses of k, each tagged admissible.
std::vector<SubUniverse> admissible_subuniverses(const KAlgebra& k,
                                                 std::size_t max_size = kDefaultAdmissibleCap);

/// KAlgebra on the elements of `sub`, keeping coordinates.
KAlgebra restrict_k(const KAlgebra& k, const SubUniverse& sub);

/// |A| > 2, A has a bottom, and every element other than the bottom and one
/// generates A.
bool is_tight(const FiniteAlgebra& alg);

}  // namespace reslat
