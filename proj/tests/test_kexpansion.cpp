#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "corpus.hpp"
#include "oracles.hpp"
#include "reslat/congruences.hpp"
#include "reslat/constructors.hpp"
#include "reslat/errors.hpp"
#include "reslat/kexpansion.hpp"
#include "reslat/subalgebras.hpp"
#include "reslat/terms.hpp"

using namespace reslat;

namespace {

bool iso(const FiniteAlgebra& a, const FiniteAlgebra& b) { return is_isomorphic(a, b).has_value(); }

FiniteAlgebra sub_of(const KAlgebra& k, const SubUniverse& s) { return restrict(k.algebra, s.elements); }

bool subset(const SubUniverse& a, const SubUniverse& b) {
  return std::includes(b.elements.begin(), b.elements.end(), a.elements.begin(), a.elements.end());
}

std::size_t potency(const FiniteAlgebra& a) {
  for (std::size_t n = 1;; ++n) {
    bool ok = true;
    for (Elem x = 0; x < a.size() && ok; ++x) ok = power(a, x, n) == power(a, x, n + 1);
    if (ok) return n;
  }
}

std::vector<FiniteAlgebra> k_lattices() {
  std::vector<FiniteAlgebra> v{k3().algebra, k4().algebra, k8().algebra, k_n2(3).algebra,
                               k_n2(4).algebra};
  for (std::size_t r = 0; r <= 3; ++r) v.push_back(k_rp(r, 3).algebra);
  for (const auto& [name, a] : corpus::integral_small())
    if (a.size() <= 4) v.push_back(k_expand(a).algebra);
  return v;
}

}  // namespace

TEST(KExpand, Examples) {
  EXPECT_TRUE(iso(k_expand(two()).algebra, k4().algebra));
  EXPECT_EQ(k_expand(FiniteAlgebra::trivial()).algebra.size(), 1u);
  EXPECT_EQ(k_expand(godel_chain(3)).algebra.size(), 9u);
  EXPECT_TRUE(iso(k_expand(godel_chain(3)).algebra, k_n2(3).algebra));
  EXPECT_THROW(k_expand(k3().algebra), PreconditionError);
}

TEST(KExpand, AgreesWithPairFormulas) {
  for (const auto& [name, a] : corpus::integral_small()) {
    const KAlgebra k = k_expand(a);
    EXPECT_TRUE(k.algebra.same_tables(oracle::kalman(a))) << name;
    EXPECT_EQ(k.algebra.size(), a.size() * a.size());
    EXPECT_EQ(k.pair_of[k.algebra.one()], std::make_pair(a.one(), a.one()));
    EXPECT_TRUE(validate(k.algebra).passed()) << name;
    EXPECT_TRUE(is_k_lattice(k.algebra)) << name;
    EXPECT_TRUE(iso(negative_cone(k.algebra), a)) << name;
    for (Elem e = 0; e < k.algebra.size(); ++e)
      EXPECT_EQ(k.find(k.pair_of[e].first, k.pair_of[e].second), e);
  }
}

TEST(NegativeCone, Examples) {
  EXPECT_TRUE(iso(negative_cone(k_expand(wajsberg_chain(2)).algebra), wajsberg_chain(2)));
  EXPECT_TRUE(iso(negative_cone(c5()), c5()));
  EXPECT_TRUE(iso(negative_cone(k3().algebra), two()));
  EXPECT_EQ(negative_cone_elements(k3().algebra).size(), 2u);
}

TEST(CanonicalEmbedding, K3) {
  const FiniteAlgebra a = k3().algebra;
  const auto f = canonical_embedding(a);
  const KAlgebra target = k_expand(negative_cone(a));
  EXPECT_TRUE(is_homomorphism(a, target.algebra, f));
  std::set<std::pair<Elem, Elem>> image;
  for (Elem x : f) image.insert(target.pair_of[x]);
  const Elem one = target.base.one(), bottom = one == 0 ? 1 : 0;
  EXPECT_EQ(image, (std::set<std::pair<Elem, Elem>>{{bottom, one}, {one, one}, {one, bottom}}));
}

TEST(CanonicalEmbedding, K8AndErrors) {
  const auto f = canonical_embedding(k8().algebra);
  EXPECT_EQ(std::set<Elem>(f.begin(), f.end()).size(), 8u);
  EXPECT_EQ(k_expand(negative_cone(k8().algebra)).algebra.size(), 9u);
  const auto t = canonical_embedding(k_expand(FiniteAlgebra::trivial()).algebra);
  EXPECT_EQ(t.size(), 1u);
  EXPECT_THROW(canonical_embedding(godel_chain(3)), PreconditionError);
}

TEST(KLattice, Recognition) {
  for (const auto& a : k_lattices()) {
    EXPECT_TRUE(is_k_lattice(a));
    EXPECT_TRUE(k_lattice_failures(a).empty());
    EXPECT_EQ(is_k_lattice(a), oracle::k_lattice(a));
  }
  EXPECT_TRUE(is_k_lattice(FiniteAlgebra::trivial()));
  for (const auto& [name, a] : corpus::integral_small()) {
    if (a.size() == 1) continue;
    EXPECT_FALSE(is_k_lattice(a)) << name;
    EXPECT_FALSE(k_lattice_failures(a).empty()) << name;
  }
}

TEST(CirclePlus, Examples) {
  const FiniteAlgebra l3 = wajsberg_chain(3);
  EXPECT_EQ(circle_plus(l3, 1, 2), 0);
  for (Elem a = 0; a < l3.size(); ++a) EXPECT_EQ(circle_plus(l3, a, *l3.zero()), a);
  const FiniteAlgebra l2 = wajsberg_chain(2);
  EXPECT_EQ(circle_plus(l2, 1, 1), 0);
  EXPECT_TRUE(is_involutive(l3));
  EXPECT_FALSE(is_involutive(godel_chain(3)));
  EXPECT_THROW(circle_plus(godel_chain(3), 0, 1), PreconditionError);
}

TEST(AdmissibleFromFilter, WajsbergChain) {
  const FiniteAlgebra l3 = wajsberg_chain(3);
  const KAlgebra k = k_expand(l3);
  EXPECT_EQ(admissible_from_filter(l3, principal_lattice_filter(l3, 0)).size(), 10u);
  EXPECT_EQ(admissible_from_filter(l3, principal_lattice_filter(l3, 1)).size(), 13u);
  EXPECT_EQ(admissible_from_filter(l3, principal_lattice_filter(l3, 2)).size(), 15u);
  EXPECT_EQ(admissible_from_filter(l3, principal_lattice_filter(l3, 3)).size(), 16u);
  for (const Filter& f : lattice_filters(l3)) {
    const SubUniverse s = admissible_from_filter(l3, f);
    EXPECT_TRUE(is_admissible(k, s));
    EXPECT_TRUE(oracle::closed(k.algebra, [&] {
      std::vector<bool> m(k.algebra.size());
      for (Elem e : s.elements) m[e] = true;
      return m;
    }()));
  }
  EXPECT_THROW(admissible_from_filter(l3, Filter{{3}}), PreconditionError);
  EXPECT_THROW(admissible_from_filter(godel_chain(3), Filter{{2}}), PreconditionError);
}

TEST(AdmissibleFromFilter, ExhaustiveCountMatchesFilters) {
  for (std::size_t p : {2, 3, 5}) {
    const FiniteAlgebra l = wajsberg_chain(p);
    const auto adm = admissible_subuniverses(k_expand(l));
    EXPECT_EQ(adm.size(), lattice_filters(l).size()) << p;
    EXPECT_EQ(adm.size(), p + 1) << p;
  }
}

TEST(RecoverFilter, RoundTrip) {
  const FiniteAlgebra l3 = wajsberg_chain(3);
  const std::size_t expect[] = {1, 2, 3, 4};
  for (std::size_t r = 0; r <= 3; ++r) {
    const KAlgebra k = k_rp(r, 3);
    const Filter f = recover_filter(k.algebra);
    EXPECT_EQ(f.size(), expect[r]) << r;
    const FiniteAlgebra cone = negative_cone(k.algebra);
    const KAlgebra back = k_expand(cone);
    const SubUniverse s = admissible_from_filter(cone, f);
    EXPECT_TRUE(iso(sub_of(back, s), k.algebra)) << r;
    const auto emb = canonical_embedding(k.algebra);
    EXPECT_EQ(std::set<Elem>(emb.begin(), emb.end()),
              std::set<Elem>(s.elements.begin(), s.elements.end()));
  }
  EXPECT_THROW(recover_filter(k8().algebra), PreconditionError);
}

TEST(Brouwerian, DenseAndRegular) {
  const FiniteAlgebra g3 = godel_chain(3);
  EXPECT_EQ(dense_elements(g3), (std::vector<Elem>{1, 2}));
  const Filter dense{{1, 2}};
  EXPECT_TRUE(is_regular_filter(g3, dense));
  EXPECT_FALSE(is_regular_filter(g3, Filter{{2}}));
  const FiniteAlgebra q = quotient(g3, theta_from_filter(g3, dense));
  EXPECT_TRUE(satisfies(q, named_equation("GBA").eq));
  const SubUniverse s = admissible_brouwerian(g3, dense);
  EXPECT_EQ(s.size(), 8u);
  EXPECT_TRUE(iso(sub_of(k_expand(g3), s), k8().algebra));
  EXPECT_THROW(admissible_brouwerian(g3, Filter{{2}}), PreconditionError);
  EXPECT_THROW(dense_elements(wajsberg_chain(2)), PreconditionError);
}

TEST(LiftOverSum, TwoPlusL2) {
  const FiniteAlgebra a = two(), b = wajsberg_chain(2);
  const KAlgebra ka = k_expand(a);
  const KAlgebra kab = k_expand(ordinal_sum(a, b));
  const auto base = admissible_subuniverses(ka);
  const auto lifted = admissible_subuniverses(kab);
  EXPECT_EQ(base.size(), 2u);
  EXPECT_EQ(lifted.size(), base.size());
  for (const SubUniverse& s : base) {
    const SubUniverse t = lift_over_sum(s, a, b);
    EXPECT_TRUE(is_admissible(kab, t));
    EXPECT_NE(std::find(lifted.begin(), lifted.end(), t), lifted.end());
    EXPECT_EQ(restrict_to_base(t, a, b), s);
  }
  for (const SubUniverse& t : lifted) EXPECT_EQ(lift_over_sum(restrict_to_base(t, a, b), a, b), t);
  const SubUniverse full{ka.algebra.universe(), true};
  EXPECT_EQ(lift_over_sum(full, a, b).size(), kab.algebra.size());
  EXPECT_TRUE(subset(lift_over_sum(minimal_admissible(ka), a, b), lift_over_sum(full, a, b)));
  EXPECT_THROW(lift_over_sum(SubUniverse{{ka.algebra.one()}, {}}, a, b), PreconditionError);
}

TEST(Punctured, Examples) {
  const KAlgebra kg3 = k_expand(godel_chain(3));
  EXPECT_TRUE(iso(sub_of(kg3, punctured(godel_chain(3))), k8().algebra));
  EXPECT_TRUE(iso(sub_of(k_expand(two()), punctured(two())), k3().algebra));
  EXPECT_THROW(punctured(direct_product({two(), two()})), PreconditionError);
}

TEST(Punctured, NoK4InsideForTightChains) {
  for (const FiniteAlgebra& a : {wajsberg_chain(2), wajsberg_chain(3), c5()}) {
    ASSERT_TRUE(is_tight(a));
    const KAlgebra k = k_expand(a);
    const FiniteAlgebra p = sub_of(k, punctured(a));
    EXPECT_FALSE(find_embedding(k4().algebra, p).has_value()) << a.size();
  }
}

TEST(Named, Parameters) {
  const std::size_t sizes[] = {10, 13, 15, 16};
  for (std::size_t r = 0; r <= 3; ++r) EXPECT_EQ(k_rp(r, 3).algebra.size(), sizes[r]);
  for (std::size_t p = 1; p <= 4; ++p)
    EXPECT_TRUE(iso(k_rp(p, p).algebra, k_expand(wajsberg_chain(p)).algebra)) << p;
  for (std::size_t n = 2; n <= 5; ++n) {
    EXPECT_EQ(k_n2(n).algebra.size(), n * n);
    EXPECT_EQ(k_n2_minus_1(n).algebra.size(), n * n - 1);
  }
  EXPECT_TRUE(iso(k_n2_minus_1(3).algebra, k8().algebra));
  EXPECT_TRUE(iso(k_n2_minus_1(2).algebra, k3().algebra));
  EXPECT_TRUE(iso(k4().algebra, k_n2(2).algebra));
  EXPECT_THROW(k_rp(4, 3), PreconditionError);
  EXPECT_THROW(k_rp(0, 0), PreconditionError);
}

TEST(Properties, HomomorphismLifting) {
  for (const auto& [name, a] : corpus::integral_small()) {
    if (a.size() > 5) continue;
    const KAlgebra ka = k_expand(a);
    for (const Congruence& c : congruence_lattice(a).elements) {
      std::vector<Elem> f;
      const FiniteAlgebra q = quotient(a, c, f);
      const KAlgebra kq = k_expand(q);
      std::vector<Elem> fk(ka.algebra.size());
      for (Elem e = 0; e < fk.size(); ++e) {
        const auto [x, y] = ka.pair_of[e];
        fk[e] = *kq.find(f[x], f[y]);
      }
      EXPECT_TRUE(is_homomorphism(ka.algebra, kq.algebra, fk)) << name;
    }
  }
}

TEST(Properties, ExpansionOfProducts) {
  const std::vector<FiniteAlgebra> small{two(), godel_chain(3), wajsberg_chain(2), wajsberg_chain(3)};
  for (const auto& a : small)
    for (const auto& b : small) {
      if (a.size() * b.size() > 9) continue;
      EXPECT_TRUE(iso(k_expand(direct_product({a, b})).algebra,
                      direct_product({k_expand(a).algebra, k_expand(b).algebra})));
    }
}

TEST(Properties, JoinIrreducibilityOfOne) {
  for (const auto& a : k_lattices())
    EXPECT_EQ(one_join_irreducible(negative_cone(a)), one_join_irreducible(a)) << a.size();
}

TEST(Properties, PotencyGrowsByOne) {
  for (const auto& [name, a] : corpus::integral_small()) {
    const std::size_t n = potency(a);
    if (n > 4 || a.size() == 1) continue;
    EXPECT_LE(potency(k_expand(a).algebra), n + 1) << name;
  }
}

TEST(Properties, SubdirectDecomposition) {
  // A = B x C with the two projection kernels; admissible subuniverses of
  // K(A) project onto admissible subuniverses of K(B) and K(C).
  const std::vector<std::pair<FiniteAlgebra, FiniteAlgebra>> cases{
      {two(), two()}, {wajsberg_chain(2), two()}};
  for (const auto& [b, c] : cases) {
    const FiniteAlgebra a = direct_product({b, c});
    const KAlgebra ka = k_expand(a), kb = k_expand(b), kc = k_expand(c);
    const auto adm_b = admissible_subuniverses(kb), adm_c = admissible_subuniverses(kc);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    const auto adm = admissible_subuniverses(ka);
    for (const SubUniverse& s : adm) {
      std::set<Elem> pb, pc;
      for (Elem e : s.elements) {
        const auto [x, y] = ka.pair_of[e];
        pb.insert(*kb.find(x / c.size(), y / c.size()));
        pc.insert(*kc.find(x % c.size(), y % c.size()));
      }
      const SubUniverse sb{{pb.begin(), pb.end()}, {}}, sc{{pc.begin(), pc.end()}, {}};
      const auto ib = std::find(adm_b.begin(), adm_b.end(), sb);
      const auto ic = std::find(adm_c.begin(), adm_c.end(), sc);
      ASSERT_NE(ib, adm_b.end());
      ASSERT_NE(ic, adm_c.end());
      seen.emplace(ib - adm_b.begin(), ic - adm_c.begin());
    }
    // Every pair of factors is realised, at least by the full product.
    EXPECT_EQ(seen.size(), adm_b.size() * adm_c.size());
    // Independent count: subuniverses containing the negative cone.
    if (ka.algebra.size() > 16) continue;
    std::size_t brute = 0;
    for (const auto& u : oracle::subuniverses(ka.algebra)) {
      bool ok = true;
      for (Elem x = 0; x < a.size() && ok; ++x)
        ok = std::find(u.begin(), u.end(), *ka.find(x, a.one())) != u.end();
      brute += ok;
    }
    EXPECT_EQ(adm.size(), brute);
  }
}
