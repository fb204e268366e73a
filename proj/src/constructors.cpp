#include "reslat/constructors.hpp"

#include <functional>
#include <string>

#include "reslat/errors.hpp"
#include "reslat/subalgebras.hpp"

namespace reslat {

namespace {

/// Chain 0 < 1 < ... < n-1 with the given multiplication; imp by residuation.
FiniteAlgebra chain_from_mult(std::size_t n, const Table& mult, Elem one,
                              std::vector<std::string> labels) {
  Table join(n * n), meet(n * n), imp(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      join[a * n + b] = static_cast<Elem>(std::max(a, b));
      meet[a * n + b] = static_cast<Elem>(std::min(a, b));
      Elem best = 0;
      for (std::size_t z = 0; z < n; ++z)
        if (mult[z * n + a] <= b) best = static_cast<Elem>(z);
      imp[a * n + b] = best;
    }
  }
  return FiniteAlgebra(n, join, meet, mult, imp, one, Elem{0}, std::move(labels));
}

}  // namespace

FiniteAlgebra two() {
  return FiniteAlgebra(2, {0, 1, 1, 1}, {0, 0, 0, 1}, {0, 0, 0, 1}, {1, 1, 0, 1}, 1, Elem{0},
                       {"0", "1"});
}

FiniteAlgebra godel_chain(std::size_t n) {
  if (n < 2) throw PreconditionError("godel_chain needs n >= 2");
  std::vector<std::string> labels;
  labels.push_back("0");
  for (std::size_t i = 1; i + 1 < n; ++i) {
    std::string l(1, static_cast<char>('a' + (i - 1) % 26));
    if (i > 26) l += std::to_string((i - 1) / 26);
    labels.push_back(l);
  }
  labels.push_back("1");
  Table mult(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mult[a * n + b] = static_cast<Elem>(std::min(a, b));
  return chain_from_mult(n, mult, static_cast<Elem>(n - 1), std::move(labels));
}

FiniteAlgebra wajsberg_chain(std::size_t n) {
  if (n < 1) throw PreconditionError("wajsberg_chain needs n >= 1");
  const std::size_t m = n + 1;
  Table join(m * m), meet(m * m), mult(m * m), imp(m * m);
  std::vector<std::string> labels(m);
  for (std::size_t r = 0; r < m; ++r) {
    labels[r] = r == 0 ? "1" : r == n ? "0" : r == 1 ? "a" : "a^" + std::to_string(r);
    for (std::size_t s = 0; s < m; ++s) {
      // Larger exponent means smaller element.
      join[r * m + s] = static_cast<Elem>(std::min(r, s));
      meet[r * m + s] = static_cast<Elem>(std::max(r, s));
      mult[r * m + s] = static_cast<Elem>(std::min(r + s, n));
      imp[r * m + s] = static_cast<Elem>(s > r ? s - r : 0);
    }
  }
  return FiniteAlgebra(m, join, meet, mult, imp, 0, static_cast<Elem>(n), std::move(labels));
}

FiniteAlgebra ordinal_sum(const FiniteAlgebra& a0, const FiniteAlgebra& a1) {
  if (!is_integral(a0) || !is_integral(a1))
    throw PreconditionError("ordinal_sum needs integral summands");
  // side 0 / 1 for the summands, side 2 for the shared identity.
  struct Slot {
    int side;
    Elem e;
  };
  std::vector<Slot> slots;
  std::vector<std::string> labels;
  for (Elem x = 0; x < a0.size(); ++x)
    if (x != a0.one()) {
      slots.push_back({0, x});
      labels.push_back("L:" + a0.label(x));
    }
  for (Elem x = 0; x < a1.size(); ++x)
    if (x != a1.one()) {
      slots.push_back({1, x});
      labels.push_back("R:" + a1.label(x));
    }
  const auto one = static_cast<Elem>(slots.size());
  slots.push_back({2, 0});
  labels.push_back("1");
  const std::size_t n = slots.size();

  std::vector<Elem> idx0(a0.size(), one), idx1(a1.size(), one);
  for (std::size_t i = 0; i < n; ++i) {
    if (slots[i].side == 0) idx0[slots[i].e] = static_cast<Elem>(i);
    if (slots[i].side == 1) idx1[slots[i].e] = static_cast<Elem>(i);
  }
  // Join of two lower elements whose join is 1 in A0 goes to the bottom of A1.
  const auto u1 = is_bounded(a1);
  if (!one_join_irreducible(a0) && !u1)
    throw PreconditionError("ordinal sum does not exist: A1 is unbounded");
  const Elem u = idx1[*u1];

  auto lift = [&](int side, Elem x) { return side == 0 ? idx0[x] : idx1[x]; };
  Table join(n * n), meet(n * n), mult(n * n), imp(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Slot a = slots[i], b = slots[j];
      const std::size_t k = i * n + j;
      const Elem ia = static_cast<Elem>(i), ib = static_cast<Elem>(j);
      if (a.side == 2 || b.side == 2) {
        join[k] = one;
        meet[k] = a.side == 2 ? ib : ia;
        mult[k] = a.side == 2 ? ib : ia;
        imp[k] = a.side == 2 ? ib : one;
      } else if (a.side != b.side) {
        const bool a_low = a.side == 0;
        join[k] = a_low ? ib : ia;
        meet[k] = a_low ? ia : ib;
        mult[k] = a_low ? ia : ib;
        imp[k] = a_low ? one : ib;
      } else {
        const FiniteAlgebra& s = a.side == 0 ? a0 : a1;
        const Elem j0 = s.join(a.e, b.e);
        join[k] = (a.side == 0 && j0 == s.one()) ? u : lift(a.side, j0);
        meet[k] = lift(a.side, s.meet(a.e, b.e));
        mult[k] = lift(a.side, s.mult(a.e, b.e));
        imp[k] = lift(a.side, s.imp(a.e, b.e));
      }
    }
  }
  std::optional<Elem> zero;
  if (a0.zero()) zero = lift(0, *a0.zero());
  if (a0.size() == 1 && a1.zero()) zero = lift(1, *a1.zero());
  return FiniteAlgebra(n, std::move(join), std::move(meet), std::move(mult), std::move(imp), one,
                       zero, std::move(labels));
}

FiniteAlgebra direct_product(const std::vector<FiniteAlgebra>& algebras) {
  if (algebras.empty()) throw PreconditionError("direct_product needs at least one factor");
  FiniteAlgebra acc = algebras.front();
  for (std::size_t f = 1; f < algebras.size(); ++f) {
    const FiniteAlgebra& b = algebras[f];
    const std::size_t na = acc.size(), nb = b.size(), n = na * nb;
    Table t[4];
    for (auto& tab : t) tab.assign(n * n, 0);
    std::vector<std::string> labels(n);
    for (std::size_t x = 0; x < n; ++x) {
      const Elem x1 = static_cast<Elem>(x / nb), x2 = static_cast<Elem>(x % nb);
      std::string l1 = acc.label(x1);
      // Nested tuples are flattened: "(p,q)" x "r" -> "(p,q,r)".
      if (f > 1) l1 = l1.substr(1, l1.size() - 2);
      labels[x] = "(" + l1 + "," + b.label(x2) + ")";
      for (std::size_t y = 0; y < n; ++y) {
        const Elem y1 = static_cast<Elem>(y / nb), y2 = static_cast<Elem>(y % nb);
        for (int k = 0; k < 4; ++k)
          t[k][x * n + y] = static_cast<Elem>(acc.apply(kAllOps[k], x1, y1) * nb +
                                              b.apply(kAllOps[k], x2, y2));
      }
    }
    std::optional<Elem> zero;
    if (acc.zero() && b.zero()) zero = static_cast<Elem>(*acc.zero() * nb + *b.zero());
    acc = FiniteAlgebra(n, std::move(t[0]), std::move(t[1]), std::move(t[2]), std::move(t[3]),
                        static_cast<Elem>(acc.one() * nb + b.one()), zero, std::move(labels));
  }
  return acc;
}

std::vector<FiniteAlgebra> residuated_expansions(std::size_t n, const Table& join,
                                                 const Table& meet, Elem one) {
  auto le = [&](Elem a, Elem b) { return meet[a * n + b] == a; };
  Elem bottom = 0;
  for (Elem a = 0; a < n; ++a) {
    bool ok = true;
    for (Elem b = 0; b < n && ok; ++b) ok = le(a, b);
    if (ok) bottom = a;
  }
  // Unordered pairs (a <= b) of elements other than one and bottom.
  std::vector<std::pair<Elem, Elem>> cells;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b)
      if (a != one && b != one && a != bottom && b != bottom) cells.push_back({a, b});

  const std::size_t none = 0xFFFF;
  std::vector<std::size_t> mult(n * n, none);
  for (Elem a = 0; a < n; ++a) {
    mult[a * n + one] = mult[one * n + a] = a;
    if (a != one) mult[a * n + bottom] = mult[bottom * n + a] = bottom;
  }
  if (n == 1) return {FiniteAlgebra::trivial()};
  if (one == bottom) return {};

  // Checks every law whose entries are all assigned.
  auto partial_ok = [&] {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        const auto xy = mult[x * n + y];
        if (xy == none) continue;
        for (Elem z = 0; z < n; ++z) {
          const auto xz = mult[x * n + z];
          const auto xyz = mult[x * n + join[y * n + z]];
          if (xz != none && xyz != none && xyz != join[xy * n + xz]) return false;
          const auto yz = mult[y * n + z];
          if (yz != none && mult[xy * n + z] != none && mult[x * n + yz] != none &&
              mult[xy * n + z] != mult[x * n + yz])
            return false;
        }
      }
    return true;
  };

  std::vector<FiniteAlgebra> out;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (!partial_ok()) return;
    if (k == cells.size()) {
      Table m(n * n), imp(n * n);
      for (std::size_t i = 0; i < n * n; ++i) m[i] = static_cast<Elem>(mult[i]);
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
          Elem r = bottom;
          for (Elem z = 0; z < n; ++z)
            if (le(m[z * n + a], b)) r = join[r * n + z];
          imp[a * n + b] = r;
        }
      FiniteAlgebra alg(n, join, meet, m, imp, one);
      if (validate(alg).passed()) out.push_back(std::move(alg));
      return;
    }
    const auto [a, b] = cells[k];
    for (Elem v = 0; v < n; ++v) {
      mult[a * n + b] = mult[b * n + a] = v;
      go(k + 1);
    }
    mult[a * n + b] = mult[b * n + a] = none;
  };
  go(0);
  return out;
}

FiniteAlgebra c5() {
  // 0 < a^2 < a->0 < a < 1
  const Elem z = 0, a2 = 1, an = 2, a = 3, one = 4;
  const std::size_t n = 5;
  Table join(n * n), meet(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      join[x * n + y] = std::max(x, y);
      meet[x * n + y] = std::min(x, y);
    }
  std::vector<FiniteAlgebra> hits;
  for (auto& alg : residuated_expansions(n, join, meet, one)) {
    if (alg.mult(a, a) != a2 || alg.mult(a2, a) != z || alg.imp(a, z) != an) continue;
    hits.push_back(alg.with_labels({"0", "a^2", "a->0", "a", "1"}).with_zero(z));
  }
  if (hits.size() != 1)
    throw ConstructionError("c5 search found " + std::to_string(hits.size()) +
                            " candidates, expected exactly one");
  if (!is_tight(hits.front())) throw ConstructionError("c5 search result is not tight");
  return hits.front();
}

}  // namespace reslat
