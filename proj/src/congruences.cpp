#include "reslat/congruences.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "detail.hpp"
#include "reslat/errors.hpp"

namespace reslat {

using detail::Mask;

bool Filter::contains(Elem a) const {
  return std::binary_search(elements.begin(), elements.end(), a);
}

Congruence::Congruence(std::vector<std::size_t> block_of) : block_of_(std::move(block_of)) {
  std::map<std::size_t, std::size_t> renum;
  for (auto& b : block_of_) {
    auto [it, fresh] = renum.try_emplace(b, renum.size());
    b = it->second;
  }
  blocks_ = renum.size();
}

Congruence Congruence::identity(std::size_t n) {
  std::vector<std::size_t> b(n);
  std::iota(b.begin(), b.end(), std::size_t{0});
  return Congruence(std::move(b));
}

Congruence Congruence::total(std::size_t n) { return Congruence(std::vector<std::size_t>(n, 0)); }

std::vector<std::vector<Elem>> Congruence::blocks() const {
  std::vector<std::vector<Elem>> out(blocks_);
  for (std::size_t a = 0; a < block_of_.size(); ++a) out[block_of_[a]].push_back(static_cast<Elem>(a));
  return out;
}

bool Congruence::refines(const Congruence& other) const {
  // Each of our blocks maps into a single block of other.
  std::vector<std::size_t> image(blocks_, SIZE_MAX);
  for (std::size_t a = 0; a < block_of_.size(); ++a) {
    auto& im = image[block_of_[a]];
    if (im == SIZE_MAX)
      im = other.block_of_[a];
    else if (im != other.block_of_[a])
      return false;
  }
  return true;
}

std::vector<std::size_t> CongruenceLattice::atoms() const {
  std::vector<std::size_t> out;
  if (elements.empty()) return out;
  // elements[0] is the identity.
  for (std::size_t i = 1; i < elements.size(); ++i) {
    bool atom = true;
    for (std::size_t j = 1; j < elements.size() && atom; ++j)
      if (j != i && leq[j][i]) atom = false;
    if (atom) out.push_back(i);
  }
  return out;
}

namespace {

std::vector<Elem> cone(const FiniteAlgebra& alg) {
  std::vector<Elem> out;
  for (Elem a = 0; a < alg.size(); ++a)
    if (leq(alg, a, alg.one())) out.push_back(a);
  return out;
}

std::vector<Filter> to_filters(const std::vector<Mask>& masks, FilterKind kind) {
  std::vector<Filter> out;
  for (const auto& m : masks) out.push_back(Filter{detail::members(m), kind});
  std::sort(out.begin(), out.end(), [](const Filter& x, const Filter& y) {
    return std::make_pair(x.size(), x.elements) < std::make_pair(y.size(), y.elements);
  });
  return out;
}

/// Filters of the negative cone, in alg's indices.
std::vector<Filter> cone_filters(const FiniteAlgebra& alg) {
  const auto neg = cone(alg);
  const std::size_t n = alg.size();
  auto close = [&](Mask& m) {
    for (bool changed = true; changed;) {
      changed = false;
      for (Elem a : neg) {
        if (!m[a]) continue;
        for (Elem b : neg) {
          if (!m[b] && leq(alg, a, b)) {
            m[b] = true;
            changed = true;
          }
          const Elem ab = alg.mult(a, b);
          if (m[b] && !m[ab]) {
            m[ab] = true;
            changed = true;
          }
        }
      }
    }
  };
  Mask start(n, false);
  start[alg.one()] = true;
  // Only cone elements may be added.
  std::vector<Mask> masks;
  {
    std::set<Mask> seen;
    close(start);
    seen.insert(start);
    std::vector<Mask> queue{start};
    while (!queue.empty()) {
      Mask s = queue.back();
      queue.pop_back();
      masks.push_back(s);
      for (Elem x : neg) {
        if (s[x]) continue;
        Mask t = s;
        t[x] = true;
        close(t);
        if (seen.insert(t).second) queue.push_back(t);
      }
    }
  }
  return to_filters(masks, FilterKind::Congruence);
}

}  // namespace

std::vector<Filter> congruence_filters(const FiniteAlgebra& alg) {
  if (!is_integral(alg)) throw PreconditionError("congruence_filters needs an integral algebra");
  return cone_filters(alg);
}

Filter principal_lattice_filter(const FiniteAlgebra& alg, Elem a) {
  Filter f{{}, FilterKind::Lattice};
  for (Elem b = 0; b < alg.size(); ++b)
    if (leq(alg, a, b)) f.elements.push_back(b);
  return f;
}

std::vector<Filter> lattice_filters(const FiniteAlgebra& alg) {
  const std::size_t n = alg.size();
  auto close = [&](Mask& m) {
    for (bool changed = true; changed;) {
      changed = false;
      for (Elem a = 0; a < n; ++a) {
        if (!m[a]) continue;
        for (Elem b = 0; b < n; ++b) {
          if (!m[b] && leq(alg, a, b)) {
            m[b] = true;
            changed = true;
          }
          if (m[b] && !m[alg.meet(a, b)]) {
            m[alg.meet(a, b)] = true;
            changed = true;
          }
        }
      }
    }
  };
  std::set<Mask> all;
  for (Elem a = 0; a < n; ++a) {
    Mask seed(n, false);
    seed[a] = true;
    for (auto& m : detail::enumerate_closed(n, seed, close)) all.insert(std::move(m));
  }
  return to_filters(std::vector<Mask>(all.begin(), all.end()), FilterKind::Lattice);
}

bool is_congruence_filter(const FiniteAlgebra& alg, const Filter& x) {
  if (!x.contains(alg.one())) return false;
  for (Elem a : x.elements) {
    if (a >= alg.size() || !leq(alg, a, alg.one())) return false;
    for (Elem b : x.elements)
      if (!x.contains(alg.mult(a, b))) return false;
    for (Elem b = 0; b < alg.size(); ++b)
      if (leq(alg, a, b) && leq(alg, b, alg.one()) && !x.contains(b)) return false;
  }
  return true;
}

Congruence theta_from_filter(const FiniteAlgebra& alg, const Filter& x) {
  if (!is_congruence_filter(alg, x)) throw PreconditionError("theta_from_filter: not a filter");
  const std::size_t n = alg.size();
  auto rel = [&](Elem a, Elem b) {
    return x.contains(alg.meet(alg.imp(a, b), alg.one())) &&
           x.contains(alg.meet(alg.imp(b, a), alg.one()));
  };
  std::vector<std::size_t> block(n, SIZE_MAX);
  std::size_t next = 0;
  for (Elem a = 0; a < n; ++a) {
    if (block[a] != SIZE_MAX) continue;
    block[a] = next;
    for (Elem b = a + 1; b < n; ++b)
      if (block[b] == SIZE_MAX && rel(a, b)) block[b] = next;
    ++next;
  }
  Congruence c(block);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (c.related(a, b) != rel(a, b))
        throw PreconditionError("theta_from_filter: relation is not an equivalence");
  if (!is_compatible(alg, c)) throw PreconditionError("theta_from_filter: relation is not compatible");
  return c;
}

Filter one_class(const FiniteAlgebra& alg, const Congruence& c) {
  Filter f;
  for (Elem a = 0; a < alg.size(); ++a)
    if (c.related(a, alg.one()) && leq(alg, a, alg.one())) f.elements.push_back(a);
  return f;
}

bool is_compatible(const FiniteAlgebra& alg, const Congruence& c) {
  if (c.size() != alg.size()) return false;
  const auto blocks = c.blocks();
  // Compare each element against its block representative.
  for (const auto& blk : blocks)
    for (Elem a : blk)
      for (Elem b = 0; b < alg.size(); ++b)
        for (Op op : kAllOps) {
          if (!c.related(alg.apply(op, a, b), alg.apply(op, blk[0], b))) return false;
          if (!c.related(alg.apply(op, b, a), alg.apply(op, b, blk[0]))) return false;
        }
  return true;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

Congruence close_congruence(const FiniteAlgebra& alg, UnionFind& uf) {
  const std::size_t n = alg.size();
  for (bool changed = true; changed;) {
    changed = false;
    for (Elem a = 0; a < n; ++a) {
      const Elem r = static_cast<Elem>(uf.find(a));
      if (r == a) continue;
      for (Elem b = 0; b < n; ++b)
        for (Op op : kAllOps) {
          changed |= uf.unite(alg.apply(op, a, b), alg.apply(op, r, b));
          changed |= uf.unite(alg.apply(op, b, a), alg.apply(op, b, r));
        }
    }
  }
  std::vector<std::size_t> block(n);
  for (std::size_t a = 0; a < n; ++a) block[a] = uf.find(a);
  return Congruence(std::move(block));
}

CongruenceLattice make_lattice(std::vector<Congruence> cs) {
  std::sort(cs.begin(), cs.end(), [](const Congruence& x, const Congruence& y) {
    if (x.block_count() != y.block_count()) return x.block_count() > y.block_count();
    return x < y;
  });
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  CongruenceLattice lat;
  lat.leq.assign(cs.size(), std::vector<bool>(cs.size(), false));
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) lat.leq[i][j] = cs[i].refines(cs[j]);
  lat.elements = std::move(cs);
  return lat;
}

}  // namespace

Congruence principal_congruence(const FiniteAlgebra& alg, Elem a, Elem b) {
  UnionFind uf(alg.size());
  uf.unite(a, b);
  return close_congruence(alg, uf);
}

Congruence congruence_join(const FiniteAlgebra& alg, const Congruence& x, const Congruence& y) {
  UnionFind uf(alg.size());
  for (Elem a = 0; a < alg.size(); ++a)
    for (Elem b = a + 1; b < alg.size(); ++b)
      if (x.related(a, b) || y.related(a, b)) uf.unite(a, b);
  return close_congruence(alg, uf);
}

Congruence congruence_meet(const Congruence& x, const Congruence& y) {
  std::vector<std::size_t> block(x.size());
  for (std::size_t a = 0; a < x.size(); ++a)
    block[a] = x.block_of(static_cast<Elem>(a)) * x.size() + y.block_of(static_cast<Elem>(a));
  return Congruence(std::move(block));
}

CongruenceLattice congruence_lattice(const FiniteAlgebra& alg) {
  std::vector<Congruence> cs;
  for (const auto& f : cone_filters(alg)) cs.push_back(theta_from_filter(alg, f));
  return make_lattice(std::move(cs));
}

CongruenceLattice congruence_lattice_by_generation(const FiniteAlgebra& alg) {
  const std::size_t n = alg.size();
  std::vector<Congruence> principal;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) principal.push_back(principal_congruence(alg, a, b));
  std::sort(principal.begin(), principal.end());
  principal.erase(std::unique(principal.begin(), principal.end()), principal.end());

  std::set<Congruence> seen{Congruence::identity(n)};
  std::vector<Congruence> queue{Congruence::identity(n)};
  while (!queue.empty()) {
    Congruence c = queue.back();
    queue.pop_back();
    for (const auto& p : principal) {
      if (p.refines(c)) continue;
      Congruence j = congruence_join(alg, c, p);
      if (seen.insert(j).second) queue.push_back(j);
    }
  }
  return make_lattice(std::vector<Congruence>(seen.begin(), seen.end()));
}

FiniteAlgebra quotient(const FiniteAlgebra& alg, const Congruence& c, std::vector<Elem>& proj) {
  if (!is_compatible(alg, c)) throw PreconditionError("quotient: partition is not a congruence");
  const auto blocks = c.blocks();
  const std::size_t m = blocks.size();
  proj.assign(alg.size(), 0);
  for (std::size_t i = 0; i < m; ++i)
    for (Elem a : blocks[i]) proj[a] = static_cast<Elem>(i);
  Table t[4];
  for (auto& tab : t) tab.assign(m * m, 0);
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = alg.label(blocks[i][0]);
    for (std::size_t j = 0; j < m; ++j)
      for (int k = 0; k < 4; ++k) t[k][i * m + j] = proj[alg.apply(kAllOps[k], blocks[i][0], blocks[j][0])];
  }
  std::optional<Elem> zero;
  if (alg.zero()) zero = proj[*alg.zero()];
  return FiniteAlgebra(m, std::move(t[0]), std::move(t[1]), std::move(t[2]), std::move(t[3]),
                       proj[alg.one()], zero, std::move(labels));
}

FiniteAlgebra quotient(const FiniteAlgebra& alg, const Congruence& c) {
  std::vector<Elem> proj;
  return quotient(alg, c, proj);
}

bool is_simple(const FiniteAlgebra& alg) { return congruence_lattice(alg).size() == 2; }

bool is_subdirectly_irreducible(const FiniteAlgebra& alg) {
  const auto lat = congruence_lattice(alg);
  return lat.size() >= 2 && lat.atoms().size() == 1;
}

bool order_isomorphic(const std::vector<std::vector<bool>>& a,
                      const std::vector<std::vector<bool>>& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return false;
  auto profile = [n](const std::vector<std::vector<bool>>& m, std::size_t i) {
    std::size_t up = 0, down = 0;
    for (std::size_t j = 0; j < n; ++j) {
      up += m[i][j];
      down += m[j][i];
    }
    return std::make_pair(up, down);
  };
  std::vector<std::pair<std::size_t, std::size_t>> pa(n), pb(n);
  for (std::size_t i = 0; i < n; ++i) {
    pa[i] = profile(a, i);
    pb[i] = profile(b, i);
  }
  {
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || pa[i] != pb[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k)
        ok = a[i][k] == b[j][map[k]] && a[k][i] == b[map[k]][j];
      if (!ok) continue;
      map[i] = static_cast<int>(j);
      used[j] = true;
      if (go(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return go(0);
}

}  // namespace reslat
