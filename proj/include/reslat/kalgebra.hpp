#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "reslat/algebra.hpp"

namespace reslat {

/// A subalgebra of a twist-product K(base) that remembers the coordinates of
/// each element.
struct KAlgebra {
  FiniteAlgebra algebra;
  FiniteAlgebra base;
  /// pair_of[e] = (a, b) for element e of `algebra`.
  std::vector<std::pair<Elem, Elem>> pair_of;

  /// Element with coordinates (a, b), if present.
  std::optional<Elem> find(Elem a, Elem b) const;

  /// True when every pair of base elements is present.
  bool is_full() const noexcept { return algebra.size() == base.size() * base.size(); }
};

}  // namespace reslat
