#include "reslat/kexpansion.hpp"

#include <algorithm>

#include "reslat/constructors.hpp"
#include "reslat/errors.hpp"
#include "reslat/subalgebras.hpp"
#include "reslat/terms.hpp"

namespace reslat {

KAlgebra k_expand(const FiniteAlgebra& a) {
  if (!is_integral(a)) throw PreconditionError("k_expand needs an integral algebra");
  const std::size_t m = a.size(), n = m * m;
  Table join(n * n), meet(n * n), mult(n * n), imp(n * n);
  std::vector<std::pair<Elem, Elem>> pairs(n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    pairs[i] = {static_cast<Elem>(i / m), static_cast<Elem>(i % m)};
    labels[i] = "(" + a.label(pairs[i].first) + "," + a.label(pairs[i].second) + ")";
  }
  auto enc = [m](Elem x, Elem y) { return static_cast<Elem>(x * m + y); };
  for (std::size_t i = 0; i < n; ++i) {
    const auto [x, y] = pairs[i];
    for (std::size_t j = 0; j < n; ++j) {
      const auto [u, v] = pairs[j];
      const std::size_t k = i * n + j;
      join[k] = enc(a.join(x, u), a.meet(y, v));
      meet[k] = enc(a.meet(x, u), a.join(y, v));
      mult[k] = enc(a.mult(x, u), a.meet(a.imp(x, v), a.imp(u, y)));
      imp[k] = enc(a.meet(a.imp(x, u), a.imp(v, y)), a.mult(x, v));
    }
  }
  FiniteAlgebra alg(n, std::move(join), std::move(meet), std::move(mult), std::move(imp),
                    enc(a.one(), a.one()), std::nullopt, std::move(labels));
  return KAlgebra{std::move(alg), a, std::move(pairs)};
}

std::vector<Elem> negative_cone_elements(const FiniteAlgebra& a) {
  std::vector<Elem> out;
  for (Elem x = 0; x < a.size(); ++x)
    if (leq(a, x, a.one())) out.push_back(x);
  return out;
}

FiniteAlgebra negative_cone(const FiniteAlgebra& a) {
  const auto elems = negative_cone_elements(a);
  const std::size_t m = elems.size();
  std::vector<int> index(a.size(), -1);
  for (std::size_t i = 0; i < m; ++i) index[elems[i]] = static_cast<int>(i);
  Table t[4];
  for (auto& tab : t) tab.assign(m * m, 0);
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = a.label(elems[i]);
    for (std::size_t j = 0; j < m; ++j) {
      const Elem x = elems[i], y = elems[j];
      const Elem r[4] = {a.join(x, y), a.meet(x, y), a.mult(x, y), a.meet(a.imp(x, y), a.one())};
      for (int k = 0; k < 4; ++k) {
        if (index[r[k]] < 0) throw StructuralError("negative cone is not closed");
        t[k][i * m + j] = static_cast<Elem>(index[r[k]]);
      }
    }
  }
  std::optional<Elem> zero;
  if (a.zero() && index[*a.zero()] >= 0) zero = static_cast<Elem>(index[*a.zero()]);
  return FiniteAlgebra(m, std::move(t[0]), std::move(t[1]), std::move(t[2]), std::move(t[3]),
                       static_cast<Elem>(index[a.one()]), zero, std::move(labels));
}

std::vector<Elem> canonical_embedding(const FiniteAlgebra& a) {
  if (!is_k_lattice(a)) throw PreconditionError("canonical_embedding needs a K-lattice");
  const auto elems = negative_cone_elements(a);
  const std::size_t m = elems.size();
  std::vector<int> index(a.size(), -1);
  for (std::size_t i = 0; i < m; ++i) index[elems[i]] = static_cast<int>(i);
  const KAlgebra target = k_expand(negative_cone(a));
  std::vector<Elem> map(a.size());
  for (Elem x = 0; x < a.size(); ++x) {
    const Elem p = a.meet(x, a.one());
    const Elem q = a.meet(a.neg(x), a.one());
    map[x] = static_cast<Elem>(index[p] * m + index[q]);
  }
  auto sorted = map;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("canonical_embedding: map is not injective");
  if (!is_homomorphism(a, target.algebra, map))
    throw PreconditionError("canonical_embedding: map is not a homomorphism");
  return map;
}

std::vector<std::string> k_lattice_failures(const FiniteAlgebra& a) {
  std::vector<std::string> out;
  if (!validate(a).passed()) {
    out.push_back("residuated lattice axioms");
    return out;
  }
  const Elem one = a.one();
  for (Elem x = 0; x < a.size(); ++x) {
    if (a.neg(a.neg(x)) != x) {
      out.push_back("1-involutive");
      break;
    }
  }
  bool dist = true;
  for (Elem x = 0; x < a.size() && dist; ++x)
    for (Elem y = 0; y < a.size() && dist; ++y) {
      // x ^ (y v z) and x v (y ^ z) with one of x, y, z equal to 1.
      const Elem triples[3][3] = {{one, x, y}, {x, one, y}, {x, y, one}};
      for (const auto& t : triples) {
        if (a.meet(t[0], a.join(t[1], t[2])) != a.join(a.meet(t[0], t[1]), a.meet(t[0], t[2])) ||
            a.join(t[0], a.meet(t[1], t[2])) != a.meet(a.join(t[0], t[1]), a.join(t[0], t[2]))) {
          dist = false;
          break;
        }
      }
    }
  if (!dist) out.push_back("1-distributive");
  if (!satisfies(a, named_equation("K1").eq)) out.push_back("K1");
  if (!satisfies(a, named_equation("K2").eq)) out.push_back("K2");
  return out;
}

bool is_k_lattice(const FiniteAlgebra& a) { return k_lattice_failures(a).empty(); }

bool is_involutive(const FiniteAlgebra& a) {
  const auto z = is_bounded(a);
  if (!z) return false;
  for (Elem b = 0; b < a.size(); ++b)
    if (a.imp(a.imp(b, *z), *z) != b) return false;
  return true;
}

Elem circle_plus(const FiniteAlgebra& alg, Elem a, Elem b) {
  if (!is_involutive(alg)) throw PreconditionError("circle_plus needs a bounded involutive algebra");
  return alg.imp(alg.imp(a, *is_bounded(alg)), b);
}

bool is_lattice_filter(const FiniteAlgebra& a, const Filter& f) {
  if (f.elements.empty()) return false;
  for (Elem x : f.elements) {
    if (x >= a.size()) return false;
    for (Elem y = 0; y < a.size(); ++y)
      if (leq(a, x, y) && !f.contains(y)) return false;
    for (Elem y : f.elements)
      if (!f.contains(a.meet(x, y))) return false;
  }
  return true;
}

namespace {

SubUniverse verified_admissible(const KAlgebra& k, std::vector<Elem> elems, const char* what) {
  std::sort(elems.begin(), elems.end());
  SubUniverse s{elems, std::nullopt};
  if (generated(k.algebra, elems).elements != elems)
    throw ConstructionError(std::string(what) + ": result is not a subuniverse");
  if (!is_admissible(k, s)) throw ConstructionError(std::string(what) + ": result is not admissible");
  s.admissible = true;
  return s;
}

}  // namespace

SubUniverse admissible_from_filter(const FiniteAlgebra& b, const Filter& f) {
  if (!is_involutive(b)) throw PreconditionError("admissible_from_filter needs an involutive algebra");
  if (!is_lattice_filter(b, f)) throw PreconditionError("admissible_from_filter: not a lattice filter");
  const KAlgebra k = k_expand(b);
  std::vector<Elem> elems;
  for (Elem e = 0; e < k.algebra.size(); ++e) {
    const auto [x, y] = k.pair_of[e];
    if (f.contains(circle_plus(b, x, y))) elems.push_back(e);
  }
  return verified_admissible(k, std::move(elems), "admissible_from_filter");
}

Filter recover_filter(const FiniteAlgebra& a) {
  const FiniteAlgebra cone = negative_cone(a);
  if (!is_involutive(cone)) throw PreconditionError("recover_filter needs an involutive negative cone");
  const auto elems = negative_cone_elements(a);
  const Elem zero = elems[*is_bounded(cone)];
  auto imp1 = [&](Elem x, Elem y) { return a.meet(a.imp(x, y), a.one()); };
  Filter f{{}, FilterKind::Lattice};
  for (Elem x = 0; x < a.size(); ++x) {
    const Elem v = imp1(imp1(a.meet(x, a.one()), zero), a.meet(a.neg(x), a.one()));
    const auto pos = std::lower_bound(elems.begin(), elems.end(), v) - elems.begin();
    f.elements.push_back(static_cast<Elem>(pos));
  }
  std::sort(f.elements.begin(), f.elements.end());
  f.elements.erase(std::unique(f.elements.begin(), f.elements.end()), f.elements.end());
  if (!is_lattice_filter(cone, f)) throw ConstructionError("recover_filter: result is not a lattice filter");
  return f;
}

std::vector<Elem> dense_elements(const FiniteAlgebra& b) {
  if (!is_integral(b) || !is_idempotent(b)) throw PreconditionError("dense_elements needs a Brouwerian algebra");
  std::vector<Elem> out;
  for (Elem x = 0; x < b.size(); ++x)
    for (Elem y = 0; y < b.size(); ++y) out.push_back(b.join(x, b.imp(x, y)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_regular_filter(const FiniteAlgebra& b, const Filter& f) {
  if (!is_lattice_filter(b, f)) return false;
  for (Elem d : dense_elements(b))
    if (!f.contains(d)) return false;
  return true;
}

SubUniverse admissible_brouwerian(const FiniteAlgebra& b, const Filter& f) {
  if (!is_regular_filter(b, f)) throw PreconditionError("admissible_brouwerian: filter is not regular");
  const KAlgebra k = k_expand(b);
  std::vector<Elem> elems;
  for (Elem e = 0; e < k.algebra.size(); ++e) {
    const auto [x, y] = k.pair_of[e];
    if (f.contains(b.join(x, y))) elems.push_back(e);
  }
  return verified_admissible(k, std::move(elems), "admissible_brouwerian");
}

std::vector<Elem> sum_embedding_left(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const auto one = static_cast<Elem>(a.size() + b.size() - 2);
  std::vector<Elem> out(a.size());
  Elem next = 0;
  for (Elem x = 0; x < a.size(); ++x) out[x] = x == a.one() ? one : next++;
  return out;
}

std::vector<Elem> sum_embedding_right(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const auto one = static_cast<Elem>(a.size() + b.size() - 2);
  std::vector<Elem> out(b.size());
  auto next = static_cast<Elem>(a.size() - 1);
  for (Elem x = 0; x < b.size(); ++x) out[x] = x == b.one() ? one : next++;
  return out;
}

SubUniverse lift_over_sum(const SubUniverse& s, const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const KAlgebra ka = k_expand(a);
  if (!is_admissible(ka, s)) throw PreconditionError("lift_over_sum: S is not admissible");
  const FiniteAlgebra sum = ordinal_sum(a, b);
  const KAlgebra ks = k_expand(sum);
  const auto la = sum_embedding_left(a, b);
  const auto rb = sum_embedding_right(a, b);
  const std::size_t m = sum.size();
  std::vector<bool> upper(m, false);
  for (Elem y : rb) upper[y] = true;
  std::vector<bool> keep(m * m, false);
  for (Elem e : s.elements) {
    const auto [x, y] = ka.pair_of[e];
    keep[la[x] * m + la[y]] = true;
  }
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      if (upper[u] || upper[v]) keep[u * m + v] = true;
  std::vector<Elem> elems;
  for (std::size_t e = 0; e < m * m; ++e)
    if (keep[e]) elems.push_back(static_cast<Elem>(e));
  return verified_admissible(ks, std::move(elems), "lift_over_sum");
}

SubUniverse restrict_to_base(const SubUniverse& t, const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const auto la = sum_embedding_left(a, b);
  const std::size_t m = a.size() + b.size() - 1, n = a.size();
  SubUniverse out;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (t.contains(static_cast<Elem>(la[x] * m + la[y]))) out.elements.push_back(static_cast<Elem>(x * n + y));
  return out;
}

SubUniverse punctured(const FiniteAlgebra& a) {
  const auto z = is_bounded(a);
  if (!z) throw PreconditionError("punctured needs a bounded algebra");
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y)
      if (a.meet(x, y) == *z && x != *z && y != *z)
        throw PreconditionError("punctured: 0 is meet-reducible (" + a.label(x) + " /\\ " +
                                a.label(y) + " = 0)");
  const KAlgebra k = k_expand(a);
  std::vector<Elem> elems;
  for (Elem e = 0; e < k.algebra.size(); ++e)
    if (k.pair_of[e] != std::make_pair(*z, *z)) elems.push_back(e);
  return verified_admissible(k, std::move(elems), "punctured");
}

KAlgebra k4() { return k_expand(two()); }

KAlgebra k3() { return restrict_k(k4(), punctured(two())); }

KAlgebra k_rp(std::size_t r, std::size_t p) {
  if (p < 1 || r > p) throw PreconditionError("K_{r,p} needs 1 <= p and r <= p");
  const FiniteAlgebra l = wajsberg_chain(p);
  const Filter f = principal_lattice_filter(l, static_cast<Elem>(r));
  return restrict_k(k_expand(l), admissible_from_filter(l, f));
}

KAlgebra k_n2(std::size_t n) { return k_expand(godel_chain(n)); }

KAlgebra k_n2_minus_1(std::size_t n) {
  const FiniteAlgebra g = godel_chain(n);
  return restrict_k(k_expand(g), punctured(g));
}

KAlgebra k8() { return k_n2_minus_1(3); }

}  // namespace reslat
