#pragma once

// Internal helpers shared by the enumeration and isomorphism code.

#include <algorithm>
#include <deque>
#include <unordered_set>
#include <vector>

#include "reslat/algebra.hpp"

namespace reslat::detail {

using Mask = std::vector<bool>;

inline std::vector<Elem> members(const Mask& m) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) out.push_back(static_cast<Elem>(i));
  return out;
}

inline Mask mask_of(std::size_t n, const std::vector<Elem>& elems) {
  Mask m(n, false);
  for (Elem e : elems) m[e] = true;
  return m;
}

/// Closes `in` under the four operations in place.
void close_under_ops(const FiniteAlgebra& alg, Mask& in);

/// Breadth-first enumeration of every closed set reachable from `start` by
/// adding one element and closing. `close` must be a closure operator.
template <class Close>
std::vector<Mask> enumerate_closed(std::size_t n, Mask start, Close close) {
  std::vector<Mask> out;
  std::unordered_set<Mask> seen;
  close(start);
  seen.insert(start);
  std::deque<Mask> queue{start};
  while (!queue.empty()) {
    Mask s = std::move(queue.front());
    queue.pop_front();
    for (std::size_t x = 0; x < n; ++x) {
      if (s[x]) continue;
      Mask t = s;
      t[x] = true;
      close(t);
      if (seen.insert(t).second) queue.push_back(t);
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// Colour refinement over several algebras at once so that colour ids are
/// comparable between them. Colours are renumbered 0..k-1 in a canonical order.
void refine(const std::vector<const FiniteAlgebra*>& algs, std::vector<std::vector<int>>& colours);

/// Iso-invariant starting colours, numbered consistently across `algs`.
std::vector<std::vector<int>> initial_colours(const std::vector<const FiniteAlgebra*>& algs);

}  // namespace reslat::detail
