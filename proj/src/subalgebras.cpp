#include "reslat/subalgebras.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

#include "detail.hpp"
#include "reslat/errors.hpp"

namespace reslat {

namespace detail {

void close_under_ops(const FiniteAlgebra& alg, Mask& in) {
  std::vector<Elem> list = members(in);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Elem x = list[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const Elem y = list[j];
      const Elem r[5] = {alg.join(x, y), alg.meet(x, y), alg.mult(x, y), alg.imp(x, y),
                         alg.imp(y, x)};
      for (Elem z : r) {
        if (!in[z]) {
          in[z] = true;
          list.push_back(z);
        }
      }
    }
  }
}

std::vector<std::vector<int>> initial_colours(const std::vector<const FiniteAlgebra*>& algs) {
  using Key = std::tuple<int, int, int, int, int>;
  std::vector<std::vector<Key>> keys(algs.size());
  std::vector<Key> pool;
  for (std::size_t k = 0; k < algs.size(); ++k) {
    const FiniteAlgebra& alg = *algs[k];
    const std::size_t n = alg.size();
    keys[k].resize(n);
    for (Elem a = 0; a < n; ++a) {
      int below = 0, above = 0;
      for (Elem b = 0; b < n; ++b) {
        below += leq(alg, b, a);
        above += leq(alg, a, b);
      }
      keys[k][a] = {a != alg.one(), alg.mult(a, a) != a, below, above, leq(alg, a, alg.one())};
      pool.push_back(keys[k][a]);
    }
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  std::vector<std::vector<int>> out(algs.size());
  for (std::size_t k = 0; k < algs.size(); ++k)
    for (const Key& key : keys[k])
      out[k].push_back(
          static_cast<int>(std::lower_bound(pool.begin(), pool.end(), key) - pool.begin()));
  return out;
}

void refine(const std::vector<const FiniteAlgebra*>& algs, std::vector<std::vector<int>>& colours) {
  using Row = std::array<int, 6>;
  using Sig = std::pair<int, std::vector<Row>>;
  auto count = [&] {
    std::vector<int> all;
    for (auto& c : colours) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    return std::unique(all.begin(), all.end()) - all.begin();
  };
  auto before = count();
  for (;;) {
    std::vector<std::vector<Sig>> sigs(algs.size());
    std::vector<Sig> pool;
    for (std::size_t k = 0; k < algs.size(); ++k) {
      const FiniteAlgebra& alg = *algs[k];
      const auto& c = colours[k];
      const std::size_t n = alg.size();
      sigs[k].resize(n);
      for (Elem a = 0; a < n; ++a) {
        std::vector<Row> rows(n);
        for (Elem b = 0; b < n; ++b)
          rows[b] = {c[b], c[alg.join(a, b)], c[alg.meet(a, b)], c[alg.mult(a, b)],
                     c[alg.imp(a, b)], c[alg.imp(b, a)]};
        std::sort(rows.begin(), rows.end());
        sigs[k][a] = {c[a], std::move(rows)};
        pool.push_back(sigs[k][a]);
      }
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    for (std::size_t k = 0; k < algs.size(); ++k)
      for (std::size_t a = 0; a < sigs[k].size(); ++a)
        colours[k][a] = static_cast<int>(std::lower_bound(pool.begin(), pool.end(), sigs[k][a]) -
                                         pool.begin());
    auto after = count();
    if (after == before) return;
    before = after;
  }
}

}  // namespace detail

using detail::Mask;

SubUniverse generated(const FiniteAlgebra& alg, std::span<const Elem> seed) {
  Mask in(alg.size(), false);
  in[alg.one()] = true;
  for (Elem e : seed) {
    if (e >= alg.size()) throw PreconditionError("generated: seed element out of range");
    in[e] = true;
  }
  detail::close_under_ops(alg, in);
  return SubUniverse{detail::members(in), std::nullopt};
}

std::vector<SubUniverse> subuniverses_containing(const FiniteAlgebra& alg,
                                                 std::span<const Elem> required,
                                                 std::size_t max_size) {
  if (alg.size() > max_size)
    throw CapExceeded("subuniverse enumeration on " + std::to_string(alg.size()) +
                      " elements exceeds the cap of " + std::to_string(max_size));
  const SubUniverse base = generated(alg, required);
  auto masks = detail::enumerate_closed(alg.size(), detail::mask_of(alg.size(), base.elements),
                                        [&](Mask& m) { detail::close_under_ops(alg, m); });
  std::vector<SubUniverse> out;
  out.reserve(masks.size());
  for (auto& m : masks) out.push_back(SubUniverse{detail::members(m), std::nullopt});
  std::sort(out.begin(), out.end(), [](const SubUniverse& x, const SubUniverse& y) {
    return std::make_pair(x.size(), x.elements) < std::make_pair(y.size(), y.elements);
  });
  return out;
}

std::vector<SubUniverse> all_subuniverses(const FiniteAlgebra& alg, std::size_t max_size) {
  return subuniverses_containing(alg, {}, max_size);
}

namespace {

bool consistent(const FiniteAlgebra& a, const FiniteAlgebra& b, const std::vector<int>& map,
                const std::vector<int>& inv, Elem x) {
  for (Elem y = 0; y < a.size(); ++y) {
    if (map[y] < 0) continue;
    for (Op op : kAllOps) {
      for (int dir = 0; dir < 2; ++dir) {
        const Elem u = dir ? y : x, v = dir ? x : y;
        const Elem r = a.apply(op, u, v);
        const Elem s = b.apply(op, static_cast<Elem>(map[u]), static_cast<Elem>(map[v]));
        if (map[r] >= 0 && map[r] != s) return false;
        if (inv[s] >= 0 && inv[s] != r) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<Elem>> is_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  std::vector<const FiniteAlgebra*> algs{&a, &b};
  auto colours = detail::initial_colours(algs);
  detail::refine(algs, colours);
  std::vector<int> hist_a(2 * n + 1, 0), hist_b(2 * n + 1, 0);
  for (Elem x = 0; x < n; ++x) {
    ++hist_a[colours[0][x]];
    ++hist_b[colours[1][x]];
  }
  if (hist_a != hist_b) return std::nullopt;

  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), Elem{0});
  std::stable_sort(order.begin(), order.end(), [&](Elem x, Elem y) {
    return hist_a[colours[0][x]] < hist_a[colours[0][y]];
  });

  std::vector<int> map(n, -1), inv(n, -1);
  std::function<bool(std::size_t)> go = [&](std::size_t depth) {
    if (depth == n) return true;
    const Elem x = order[depth];
    for (Elem y = 0; y < n; ++y) {
      if (inv[y] >= 0 || colours[1][y] != colours[0][x]) continue;
      map[x] = y;
      inv[y] = x;
      if (consistent(a, b, map, inv, x) && go(depth + 1)) return true;
      map[x] = -1;
      inv[y] = -1;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  std::vector<Elem> out(n);
  for (Elem x = 0; x < n; ++x) out[x] = static_cast<Elem>(map[x]);
  return out;
}

std::optional<std::vector<Elem>> find_embedding(const FiniteAlgebra& small,
                                                const FiniteAlgebra& big) {
  if (small.size() > big.size()) return std::nullopt;
  // Greedy generating set of `small`.
  std::vector<Elem> gens;
  {
    Mask in(small.size(), false);
    in[small.one()] = true;
    detail::close_under_ops(small, in);
    for (;;) {
      int best = -1;
      std::size_t best_size = 0;
      for (Elem x = 0; x < small.size(); ++x) {
        if (in[x]) continue;
        Mask t = in;
        t[x] = true;
        detail::close_under_ops(small, t);
        const auto sz = static_cast<std::size_t>(std::count(t.begin(), t.end(), true));
        if (sz > best_size) {
          best_size = sz;
          best = x;
        }
      }
      if (best < 0) break;
      gens.push_back(static_cast<Elem>(best));
      in[best] = true;
      detail::close_under_ops(small, in);
    }
  }

  std::vector<int> img(small.size(), -1), pre(big.size(), -1);
  img[small.one()] = big.one();
  pre[big.one()] = small.one();

  // Extends the partial map to the closure of its domain; false on conflict.
  auto extend = [&](std::vector<int>& im, std::vector<int>& pr) {
    std::vector<Elem> known;
    for (Elem x = 0; x < small.size(); ++x)
      if (im[x] >= 0) known.push_back(x);
    for (std::size_t i = 0; i < known.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        for (Op op : kAllOps) {
          for (int dir = 0; dir < 2; ++dir) {
            if (dir && (op != Op::Imp || i == j)) continue;
            const Elem u = dir ? known[j] : known[i], v = dir ? known[i] : known[j];
            const Elem r = small.apply(op, u, v);
            const Elem s = big.apply(op, static_cast<Elem>(im[u]), static_cast<Elem>(im[v]));
            if (im[r] >= 0) {
              if (im[r] != s) return false;
            } else {
              if (pr[s] >= 0) return false;
              im[r] = s;
              pr[s] = r;
              known.push_back(r);
            }
          }
        }
      }
    }
    return true;
  };
  if (!extend(img, pre)) return std::nullopt;

  std::function<std::optional<std::vector<Elem>>(std::size_t, std::vector<int>, std::vector<int>)>
      go = [&](std::size_t k, std::vector<int> im,
               std::vector<int> pr) -> std::optional<std::vector<Elem>> {
    if (k == gens.size()) {
      std::vector<Elem> out(small.size());
      for (Elem x = 0; x < small.size(); ++x) out[x] = static_cast<Elem>(im[x]);
      return out;
    }
    const Elem g = gens[k];
    if (im[g] >= 0) return go(k + 1, std::move(im), std::move(pr));
    const bool idem = small.mult(g, g) == g;
    const bool neg = leq(small, g, small.one());
    for (Elem y = 0; y < big.size(); ++y) {
      if (pr[y] >= 0) continue;
      if ((big.mult(y, y) == y) != idem || leq(big, y, big.one()) != neg) continue;
      auto im2 = im;
      auto pr2 = pr;
      im2[g] = y;
      pr2[y] = g;
      if (!extend(im2, pr2)) continue;
      if (auto r = go(k + 1, std::move(im2), std::move(pr2))) return r;
    }
    return std::nullopt;
  };
  return go(0, std::move(img), std::move(pre));
}

Canonical canonical(const FiniteAlgebra& alg) {
  const std::size_t n = alg.size();
  std::vector<const FiniteAlgebra*> algs{&alg};
  Canonical best;
  bool have = false;

  std::function<void(std::vector<int>)> search = [&](std::vector<int> colour) {
    std::vector<std::vector<int>> cs{std::move(colour)};
    detail::refine(algs, cs);
    colour = std::move(cs[0]);
    std::vector<int> size(n, 0);
    for (int c : colour) ++size[c];
    int cell = -1;
    for (std::size_t c = 0; c < n; ++c) {
      if (size[c] > 1) {
        cell = static_cast<int>(c);
        break;
      }
    }
    if (cell < 0) {
      std::vector<Elem> perm(n), inv(n);
      for (Elem a = 0; a < n; ++a) {
        perm[a] = static_cast<Elem>(colour[a]);
        inv[colour[a]] = a;
      }
      std::vector<Elem> code;
      code.reserve(2 + 4 * n * n);
      code.push_back(static_cast<Elem>(n));
      code.push_back(perm[alg.one()]);
      for (Op op : kAllOps)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) code.push_back(perm[alg.apply(op, inv[i], inv[j])]);
      if (!have || code < best.form.code) {
        best.form.code = std::move(code);
        best.perm = std::move(perm);
        have = true;
      }
      return;
    }
    for (Elem v = 0; v < n; ++v) {
      if (colour[v] != cell) continue;
      std::vector<int> next(n);
      for (Elem x = 0; x < n; ++x) next[x] = 2 * colour[x] + (x == v ? 0 : 1);
      search(std::move(next));
    }
  };

  search(detail::initial_colours(algs)[0]);
  return best;
}

CanonicalForm canonical_form(const FiniteAlgebra& alg) { return canonical(alg).form; }

FiniteAlgebra canonical_algebra(const FiniteAlgebra& alg) {
  const auto c = canonical(alg);
  return relabel(alg, c.perm);
}

std::vector<FiniteAlgebra> subalgebras_up_to_iso(const FiniteAlgebra& alg, std::size_t max_size) {
  std::map<std::pair<std::size_t, CanonicalForm>, FiniteAlgebra> classes;
  for (const auto& s : all_subuniverses(alg, max_size)) {
    FiniteAlgebra sub = restrict(alg, s.elements);
    auto key = std::make_pair(sub.size(), canonical_form(sub));
    classes.try_emplace(std::move(key), std::move(sub));
  }
  std::vector<FiniteAlgebra> out;
  for (auto& [key, a] : classes) out.push_back(std::move(a));
  return out;
}

bool is_admissible(const KAlgebra& k, const SubUniverse& b) {
  const auto& a = k.algebra;
  for (Elem x = 0; x < a.size(); ++x)
    if (leq(a, x, a.one()) && !b.contains(x)) return false;
  return true;
}

namespace {

std::vector<Elem> cone_elements(const FiniteAlgebra& a) {
  std::vector<Elem> out;
  for (Elem x = 0; x < a.size(); ++x)
    if (leq(a, x, a.one())) out.push_back(x);
  return out;
}

}  // namespace

SubUniverse minimal_admissible(const KAlgebra& k) {
  SubUniverse s = generated(k.algebra, cone_elements(k.algebra));
  s.admissible = true;
  return s;
}

std::vector<SubUniverse> admissible_subuniverses(const KAlgebra& k, std::size_t max_size) {
  auto out = subuniverses_containing(k.algebra, cone_elements(k.algebra), max_size);
  for (auto& s : out) s.admissible = true;
  return out;
}

KAlgebra restrict_k(const KAlgebra& k, const SubUniverse& sub) {
  KAlgebra out{restrict(k.algebra, sub.elements), k.base, {}};
  out.pair_of.reserve(sub.size());
  for (Elem e : sub.elements) out.pair_of.push_back(k.pair_of[e]);
  return out;
}

std::optional<Elem> KAlgebra::find(Elem a, Elem b) const {
  for (std::size_t i = 0; i < pair_of.size(); ++i)
    if (pair_of[i].first == a && pair_of[i].second == b) return static_cast<Elem>(i);
  return std::nullopt;
}

bool is_tight(const FiniteAlgebra& alg) {
  if (alg.size() <= 2) return false;
  const auto bottom = is_bounded(alg);
  if (!bottom) return false;
  for (Elem a = 0; a < alg.size(); ++a) {
    if (a == *bottom || a == alg.one()) continue;
    const Elem seed[] = {a};
    if (generated(alg, seed).size() != alg.size()) return false;
  }
  return true;
}

}  // namespace reslat
