#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "corpus.hpp"
#include "oracles.hpp"
#include "reslat/congruences.hpp"
#include "reslat/constructors.hpp"
#include "reslat/errors.hpp"
#include "reslat/kexpansion.hpp"
#include "reslat/subalgebras.hpp"
#include "reslat/variety.hpp"

using namespace reslat;

namespace {

bool iso(const FiniteAlgebra& a, const FiniteAlgebra& b) { return is_isomorphic(a, b).has_value(); }

bool contains_iso(const std::vector<FiniteAlgebra>& v, const FiniteAlgebra& a) {
  return std::any_of(v.begin(), v.end(), [&](const FiniteAlgebra& b) { return iso(a, b); });
}

std::vector<std::size_t> sizes(const std::vector<FiniteAlgebra>& v) {
  std::vector<std::size_t> s;
  for (const auto& a : v) s.push_back(a.size());
  return s;
}

FiniteAlgebra shuffled(const FiniteAlgebra& a, std::mt19937& rng) {
  std::vector<Elem> perm(a.size());
  for (Elem i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(a, perm);
}

}  // namespace

TEST(Generated, Examples) {
  const FiniteAlgebra l4 = wajsberg_chain(4);
  EXPECT_EQ(generated(l4, std::vector<Elem>{1}).size(), l4.size());
  EXPECT_EQ(generated(l4, std::vector<Elem>{}).elements, std::vector<Elem>{l4.one()});
  EXPECT_EQ(generated(l4, std::vector<Elem>{2}).size(), 3u);
  for (const auto& [name, a] : corpus::integral_small())
    for (Elem x = 0; x < a.size(); ++x) {
      auto expect = oracle::generate(a, {x, a.one()});
      EXPECT_EQ(generated(a, std::vector<Elem>{x}).elements, expect) << name;
    }
}

TEST(Generated, K8HasTwoGenerators) {
  const FiniteAlgebra k = k8().algebra;
  bool found = false;
  for (Elem x = 0; x < k.size() && !found; ++x)
    for (Elem y = x; y < k.size() && !found; ++y)
      found = generated(k, std::vector<Elem>{x, y}).size() == k.size();
  EXPECT_TRUE(found);
}

TEST(AllSubuniverses, Examples) {
  const FiniteAlgebra k4a = k4().algebra;
  const auto subs = all_subuniverses(k4a);
  EXPECT_EQ(subs.size(), oracle::subuniverses(k4a).size());
  EXPECT_EQ(sizes(subalgebras_up_to_iso(k4a)), (std::vector<std::size_t>{1, 3, 4}));
  EXPECT_EQ(all_subuniverses(two()).size(), 2u);
  const auto kg3 = subalgebras_up_to_iso(k_expand(godel_chain(3)).algebra);
  EXPECT_EQ(sizes(kg3), (std::vector<std::size_t>{1, 3, 4, 8, 9}));
  EXPECT_TRUE(contains_iso(kg3, k8().algebra));
  EXPECT_TRUE(contains_iso(kg3, k3().algebra));
  EXPECT_THROW(all_subuniverses(k_expand(godel_chain(5)).algebra), CapExceeded);
  EXPECT_NO_THROW(all_subuniverses(k_expand(godel_chain(5)).algebra, 25));
}

TEST(AllSubuniverses, AgreeWithSubsetEnumeration) {
  std::vector<FiniteAlgebra> algs{k3().algebra, k4().algebra, k8().algebra, k_rp(0, 2).algebra,
                                  k_rp(1, 2).algebra, k_n2(3).algebra};
  for (const auto& [name, a] : corpus::integral_small()) algs.push_back(a);
  for (const auto& a : algs) {
    std::vector<std::vector<Elem>> got;
    for (const auto& s : all_subuniverses(a)) got.push_back(s.elements);
    auto expect = oracle::subuniverses(a);
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(got, expect) << a.size();
  }
}

TEST(Isomorphism, Examples) {
  EXPECT_FALSE(iso(wajsberg_chain(2), godel_chain(3)));
  const FiniteAlgebra c = c5();
  const auto id = is_isomorphic(c, c);
  ASSERT_TRUE(id.has_value());
  EXPECT_TRUE(is_homomorphism(c, c, *id));
  const FiniteAlgebra l2 = wajsberg_chain(2);
  const SubUniverse s = admissible_from_filter(l2, principal_lattice_filter(l2, l2.one()));
  EXPECT_TRUE(iso(restrict(k_expand(l2).algebra, s.elements), k_rp(0, 2).algebra));
  EXPECT_FALSE(iso(k3().algebra, godel_chain(3)));
}

TEST(Isomorphism, AgreesWithPermutationOracle) {
  std::mt19937 rng(11);
  std::vector<FiniteAlgebra> algs;
  for (const auto& [name, a] : corpus::integral_small()) {
    algs.push_back(a);
    algs.push_back(shuffled(a, rng));
  }
  for (std::size_t i = 0; i < algs.size(); ++i)
    for (std::size_t j = i; j < algs.size(); ++j) {
      if (algs[i].size() != algs[j].size() || algs[i].size() > 6) continue;
      const auto w = is_isomorphic(algs[i], algs[j]);
      EXPECT_EQ(w.has_value(), oracle::isomorphic(algs[i], algs[j])) << i << " " << j;
      if (w) EXPECT_TRUE(is_homomorphism(algs[i], algs[j], *w));
    }
}

TEST(Canonical, StableOnCorpus) {
  std::mt19937 rng(5);
  std::vector<FiniteAlgebra> algs;
  for (const auto& [name, a] : corpus::integral_small()) {
    algs.push_back(a);
    algs.push_back(shuffled(a, rng));
  }
  for (const FiniteAlgebra& k : {k3().algebra, k4().algebra, k_rp(0, 2).algebra,
                                 k_rp(1, 2).algebra, k8().algebra, k_n2(3).algebra}) {
    algs.push_back(k);
    algs.push_back(shuffled(k, rng));
  }
  for (const auto& a : subalgebras_up_to_iso(k_expand(wajsberg_chain(3)).algebra)) algs.push_back(a);
  ASSERT_GE(algs.size(), 50u);
  for (std::size_t i = 0; i < algs.size(); ++i) {
    const FiniteAlgebra c = canonical_algebra(algs[i]);
    EXPECT_EQ(canonical_form(c), canonical_form(algs[i]));
    if (algs[i].size() <= 6) EXPECT_TRUE(oracle::isomorphic(c, algs[i]));
    for (std::size_t j = i + 1; j < algs.size(); ++j) {
      if (algs[i].size() != algs[j].size()) continue;
      EXPECT_EQ(canonical_form(algs[i]) == canonical_form(algs[j]), iso(algs[i], algs[j]))
          << i << " " << j;
      if (algs[i].size() <= 6)
        EXPECT_EQ(iso(algs[i], algs[j]), oracle::isomorphic(algs[i], algs[j]));
    }
  }
}

TEST(UpToIso, Examples) {
  EXPECT_EQ(sizes(subalgebras_up_to_iso(two())), (std::vector<std::size_t>{1, 2}));
  const auto kl3 = subalgebras_up_to_iso(k_expand(wajsberg_chain(3)).algebra);
  EXPECT_TRUE(contains_iso(kl3, k3().algebra));
  EXPECT_TRUE(contains_iso(kl3, k4().algebra));
  for (std::size_t r = 0; r <= 3; ++r) EXPECT_TRUE(contains_iso(kl3, k_rp(r, 3).algebra)) << r;
  for (std::size_t i = 0; i < kl3.size(); ++i)
    for (std::size_t j = i + 1; j < kl3.size(); ++j) EXPECT_FALSE(iso(kl3[i], kl3[j]));
  const auto kc5 = subalgebras_up_to_iso(k_expand(c5()).algebra, 25);
  EXPECT_TRUE(contains_iso(kc5, catalog_algebra("C_19")));
}

TEST(Admissible, MinimalExamples) {
  for (std::size_t p = 2; p <= 3; ++p) {
    const KAlgebra k = k_expand(wajsberg_chain(p));
    const SubUniverse m = minimal_admissible(k);
    EXPECT_TRUE(is_admissible(k, m));
    EXPECT_TRUE(iso(restrict(k.algebra, m.elements), k_rp(0, p).algebra)) << p;
  }
  const KAlgebra kt = k_expand(FiniteAlgebra::trivial());
  EXPECT_EQ(minimal_admissible(kt).size(), 1u);
  const KAlgebra kc = k_expand(c5());
  const SubUniverse m = minimal_admissible(kc);
  EXPECT_EQ(m.size(), 19u);
  EXPECT_TRUE(iso(restrict(kc.algebra, m.elements), catalog_algebra("C_19")));
  const KAlgebra k2 = k_expand(two());
  EXPECT_FALSE(is_admissible(k2, SubUniverse{{k2.algebra.one()}, {}}));
}

TEST(Admissible, EnumerationMatchesBruteForce) {
  for (const FiniteAlgebra& a : {two(), godel_chain(3), wajsberg_chain(2), wajsberg_chain(3)}) {
    const KAlgebra k = k_expand(a);
    std::size_t brute = 0;
    for (const auto& s : all_subuniverses(k.algebra, 16))
      if (is_admissible(k, s)) ++brute;
    const auto adm = admissible_subuniverses(k);
    EXPECT_EQ(adm.size(), brute);
    for (const auto& s : adm) EXPECT_EQ(s.admissible, std::optional<bool>(true));
  }
}

TEST(Admissible, CoverAlgebrasAreStrictlyAboveK3) {
  for (const FiniteAlgebra& a : {wajsberg_chain(2), wajsberg_chain(3), c5()}) {
    const KAlgebra k = k_expand(a);
    const FiniteAlgebra c = restrict(k.algebra, minimal_admissible(k).elements);
    EXPECT_TRUE(is_simple(c));
    const auto subs = subalgebras_up_to_iso(c, 25);
    ASSERT_EQ(subs.size(), 3u);
    EXPECT_EQ(subs[0].size(), 1u);
    EXPECT_TRUE(iso(subs[1], k3().algebra));
    EXPECT_TRUE(iso(subs[2], c));
  }
}

TEST(Admissible, LiftRestrictsToBase) {
  const std::vector<FiniteAlgebra> parts{two(), wajsberg_chain(2), godel_chain(3)};
  for (const auto& a : parts)
    for (const auto& b : parts) {
      const KAlgebra ka = k_expand(a);
      const KAlgebra kab = k_expand(ordinal_sum(a, b));
      for (const auto& s : admissible_subuniverses(ka)) {
        const SubUniverse t = lift_over_sum(s, a, b);
        EXPECT_TRUE(is_admissible(kab, t));
        EXPECT_EQ(restrict_to_base(t, a, b), s);
      }
    }
}

TEST(Tight, Examples) {
  EXPECT_TRUE(is_tight(wajsberg_chain(3)));
  EXPECT_FALSE(is_tight(wajsberg_chain(4)));
  EXPECT_FALSE(is_tight(two()));
  EXPECT_TRUE(is_tight(c5()));
  EXPECT_FALSE(is_tight(godel_chain(3)));
}

TEST(Tight, StructuralConsequences) {
  std::size_t seen = 0;
  for (const auto& [name, a] : corpus::integral_small()) {
    if (a.size() > 8 || !is_tight(a)) continue;
    ++seen;
    const Elem zero = *a.zero();
    std::size_t coatoms = 0;
    for (Elem x = 0; x < a.size(); ++x) {
      if (x != zero && x != a.one()) {
        EXPECT_NE(a.mult(x, x), x) << name;
      }
      if (x != a.one()) EXPECT_TRUE(element_order(a, x).has_value()) << name;
      bool coatom = x != a.one();
      for (Elem y = 0; y < a.size() && coatom; ++y)
        if (y != x && y != a.one() && oracle::le(a, x, y)) coatom = false;
      coatoms += coatom;
    }
    EXPECT_TRUE(is_simple(a)) << name;
    EXPECT_EQ(coatoms, 1u) << name;
  }
  EXPECT_GE(seen, 4u);
}

TEST(Tight, K3SitsInEveryKLattice) {
  std::vector<FiniteAlgebra> algs{k3().algebra, k4().algebra, k8().algebra, k_n2(4).algebra};
  for (std::size_t r = 0; r <= 3; ++r) algs.push_back(k_rp(r, 3).algebra);
  for (const auto& [name, a] : corpus::integral_small())
    if (a.size() > 1 && a.size() <= 4) algs.push_back(k_expand(a).algebra);
  for (const auto& a : algs) {
    const auto bottom = is_bounded(a);
    ASSERT_TRUE(bottom.has_value());
    const Elem t = a.neg(*bottom);
    std::vector<Elem> expect{*bottom, a.one(), t};
    std::sort(expect.begin(), expect.end());
    const SubUniverse s = generated(a, std::vector<Elem>{*bottom});
    EXPECT_EQ(s.elements, expect);
    EXPECT_TRUE(iso(restrict(a, s.elements), k3().algebra));
  }
}
