#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "reslat/algebra.hpp"
#include "reslat/constructors.hpp"
#include "reslat/errors.hpp"
#include "reslat/kexpansion.hpp"

using namespace reslat;

namespace {

// Ł_n indices are exponents: 0 is the identity, n is zero.
constexpr Elem kA = 1, kA2 = 2, kA3 = 3;

FiniteAlgebra with_imp(const FiniteAlgebra& a, Elem x, Elem y, Elem v) {
  Table imp = a.table(Op::Imp);
  imp[x * a.size() + y] = v;
  return FiniteAlgebra(a.size(), a.table(Op::Join), a.table(Op::Meet), a.table(Op::Mult), imp, a.one(),
                       a.zero(), a.labels());
}

Elem k_elem(const KAlgebra& k, Elem a, Elem b) { return *k.find(a, b); }

}  // namespace

TEST(Validate, WajsbergChainPasses) { EXPECT_TRUE(validate(wajsberg_chain(3)).passed()); }

TEST(Validate, TrivialPasses) { EXPECT_TRUE(validate(FiniteAlgebra::trivial()).passed()); }

TEST(Validate, CorruptedResiduationReportsWitness) {
  const FiniteAlgebra bad = with_imp(wajsberg_chain(3), kA, kA2, 0);
  const auto report = validate(bad);
  ASSERT_FALSE(report.passed());
  for (const auto& f : report.failures) {
    if (f.axiom != "residuation") continue;
    ASSERT_EQ(f.witness.size(), 3u);
    const Elem a = f.witness[0], b = f.witness[1], c = f.witness[2];
    // Every listed witness must genuinely break the adjunction.
    EXPECT_NE(leq(bad, bad.mult(a, b), c), leq(bad, a, bad.imp(b, c)));
  }
  // The brute-force scan's first residuation witness.
  const auto first = std::find_if(report.failures.begin(), report.failures.end(),
                                  [](const AxiomFailure& f) { return f.axiom == "residuation"; });
  ASSERT_NE(first, report.failures.end());
  EXPECT_EQ(first->witness, (std::vector<Elem>{0, kA, kA2}));
}

TEST(Validate, ReportsEveryFailure) {
  const FiniteAlgebra l3 = wajsberg_chain(3);
  Table mult = l3.table(Op::Mult);
  mult[kA * 4 + kA2] = kA;  // breaks commutativity and more
  const FiniteAlgebra bad(4, l3.table(Op::Join), l3.table(Op::Meet), mult, l3.table(Op::Imp), l3.one());
  const auto report = validate(bad);
  std::set<std::string> axioms;
  for (const auto& f : report.failures) axioms.insert(f.axiom);
  EXPECT_TRUE(axioms.count("mult-commutative"));
  EXPECT_GT(report.failures.size(), 1u);
}

TEST(Validate, MalformedTablesAreStructuralErrors) {
  EXPECT_THROW(FiniteAlgebra(2, {0, 1, 1}, {0, 0, 0, 1}, {0, 0, 0, 1}, {1, 1, 0, 1}, 1), StructuralError);
  EXPECT_THROW(FiniteAlgebra(2, {0, 1, 1, 2}, {0, 0, 0, 1}, {0, 0, 0, 1}, {1, 1, 0, 1}, 1), StructuralError);
  EXPECT_THROW(FiniteAlgebra(2, {0, 1, 1, 1}, {0, 0, 0, 1}, {0, 0, 0, 1}, {1, 1, 0, 1}, 5), StructuralError);
}

TEST(Validate, ZeroMustBeBottom) {
  const FiniteAlgebra t = two().with_zero(Elem{1});
  const auto report = validate(t);
  ASSERT_FALSE(report.passed());
  EXPECT_EQ(report.failures.front().axiom, "zero-bottom");
}

TEST(Order, Leq) {
  const FiniteAlgebra l3 = wajsberg_chain(3);
  EXPECT_TRUE(leq(l3, kA3, kA));
  EXPECT_FALSE(leq(l3, kA, kA2));
  const KAlgebra k = k_expand(two());
  EXPECT_TRUE(leq(k.algebra, k_elem(k, 0, 1), k_elem(k, 1, 0)));
  EXPECT_FALSE(leq(k.algebra, k_elem(k, 1, 0), k_elem(k, 0, 1)));
}

TEST(Order, IntegralAndBounded) {
  const FiniteAlgebra l3 = wajsberg_chain(3);
  EXPECT_TRUE(is_integral(l3));
  EXPECT_EQ(is_bounded(l3), std::optional<Elem>(kA3));
  const KAlgebra k = k_expand(two());
  EXPECT_FALSE(is_integral(k.algebra));
  EXPECT_EQ(top(k.algebra), std::optional<Elem>(k_elem(k, 1, 0)));
  EXPECT_TRUE(is_integral(FiniteAlgebra::trivial()));
  EXPECT_TRUE(is_bounded(FiniteAlgebra::trivial()).has_value());
}

TEST(ElementOrder, Examples) {
  const FiniteAlgebra l3 = wajsberg_chain(3);
  EXPECT_EQ(element_order(l3, kA), std::optional<std::size_t>(3));
  EXPECT_EQ(element_order(l3, kA2), std::optional<std::size_t>(2));
  EXPECT_FALSE(element_order(l3, l3.one()).has_value());
  const FiniteAlgebra g3 = godel_chain(3);
  for (Elem x = 1; x < g3.size(); ++x) EXPECT_FALSE(element_order(g3, x).has_value());
}

TEST(ElementOrder, IdentityHasInfiniteOrderEverywhere) {
  for (const auto& [name, a] : corpus::integral_small()) EXPECT_FALSE(element_order(a, a.one())) << name;
}

TEST(Radical, Examples) {
  EXPECT_EQ(radical(wajsberg_chain(3)).elements, std::vector<Elem>{0});
  const FiniteAlgebra g3 = godel_chain(3);
  EXPECT_EQ(radical(g3).elements, (std::vector<Elem>{1, 2}));
  EXPECT_EQ(radical(FiniteAlgebra::trivial()).elements, std::vector<Elem>{0});
}

TEST(Properties, ConstructedAlgebrasValidate) {
  for (const auto& [name, a] : corpus::integral_small()) {
    EXPECT_TRUE(validate(a).passed()) << name;
    if (a.size() <= 5) EXPECT_TRUE(validate(k_expand(a).algebra).passed()) << name;
  }
}

TEST(Properties, KOrderIsComponentwiseWithSecondReversed) {
  for (const auto& [name, a] : corpus::integral_small()) {
    if (a.size() > 5) continue;
    const KAlgebra k = k_expand(a);
    for (Elem p = 0; p < k.algebra.size(); ++p)
      for (Elem q = 0; q < k.algebra.size(); ++q) {
        const auto [x, y] = k.pair_of[p];
        const auto [u, v] = k.pair_of[q];
        EXPECT_EQ(leq(k.algebra, p, q), leq(a, x, u) && leq(a, v, y)) << name;
      }
  }
}

TEST(Properties, PowersDecreaseInIntegralAlgebras) {
  for (const auto& [name, a] : corpus::integral_small())
    for (Elem x = 0; x < a.size(); ++x)
      for (std::size_t k = 1; k < 8; ++k) EXPECT_TRUE(leq(a, power(a, x, k + 1), power(a, x, k))) << name;
}

TEST(Helpers, RelabelAndRestrict) {
  const FiniteAlgebra l2 = wajsberg_chain(2);
  const std::vector<Elem> perm{2, 0, 1};
  const FiniteAlgebra r = relabel(l2, perm);
  EXPECT_TRUE(validate(r).passed());
  EXPECT_TRUE(is_homomorphism(l2, r, perm));
  EXPECT_EQ(r.label(2), l2.label(0));
  const FiniteAlgebra l4 = wajsberg_chain(4);
  const std::vector<Elem> sub{0, 2, 4};
  EXPECT_TRUE(validate(restrict(l4, sub)).passed());
  const std::vector<Elem> notsub{0, 1, 4};
  EXPECT_THROW(restrict(l4, notsub), PreconditionError);
}

TEST(Helpers, RandomPermutationsPreserveValidity) {
  std::mt19937 rng(7);
  for (const auto& [name, a] : corpus::integral_small()) {
    std::vector<Elem> perm(a.size());
    std::iota(perm.begin(), perm.end(), Elem{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const FiniteAlgebra r = relabel(a, perm);
    EXPECT_TRUE(validate(r).passed()) << name;
    EXPECT_TRUE(is_homomorphism(a, r, perm)) << name;
  }
}
