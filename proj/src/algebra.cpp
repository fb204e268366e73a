#include "reslat/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "reslat/errors.hpp"

namespace reslat {

const char* op_name(Op op) {
  switch (op) {
    case Op::Join: return "join";
    case Op::Meet: return "meet";
    case Op::Mult: return "mult";
    case Op::Imp: return "imp";
  }
  return "?";
}

namespace {

void check_table(const char* name, const Table& t, std::size_t n) {
  if (t.size() != n * n) {
    throw StructuralError(std::string(name) + " table has " + std::to_string(t.size()) +
                          " entries, expected " + std::to_string(n * n));
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] >= n) {
      throw StructuralError(std::string(name) + " table entry (" + std::to_string(i / n) + "," +
                            std::to_string(i % n) + ") = " + std::to_string(t[i]) +
                            " is outside the universe");
    }
  }
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::size_t size, Table join, Table meet, Table mult, Table imp,
                             Elem one, std::optional<Elem> zero, std::vector<std::string> labels)
    : n_(size),
      join_(std::move(join)),
      meet_(std::move(meet)),
      mult_(std::move(mult)),
      imp_(std::move(imp)),
      one_(one),
      zero_(zero),
      labels_(std::move(labels)) {
  if (n_ == 0) throw StructuralError("algebra must have at least one element");
  if (n_ > 0xFFFF) throw StructuralError("algebra too large");
  check_table("join", join_, n_);
  check_table("meet", meet_, n_);
  check_table("mult", mult_, n_);
  check_table("imp", imp_, n_);
  if (one_ >= n_) throw StructuralError("one is outside the universe");
  if (zero_ && *zero_ >= n_) throw StructuralError("zero is outside the universe");
  if (labels_.empty()) {
    labels_.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
  } else if (labels_.size() != n_) {
    throw StructuralError("expected " + std::to_string(n_) + " labels, got " +
                          std::to_string(labels_.size()));
  }
}

FiniteAlgebra FiniteAlgebra::trivial() {
  return FiniteAlgebra(1, {0}, {0}, {0}, {0}, 0, Elem{0}, {"1"});
}

const Table& FiniteAlgebra::table(Op op) const {
  switch (op) {
    case Op::Join: return join_;
    case Op::Meet: return meet_;
    case Op::Mult: return mult_;
    case Op::Imp: return imp_;
  }
  return join_;
}

FiniteAlgebra FiniteAlgebra::with_labels(std::vector<std::string> labels) const {
  FiniteAlgebra copy = *this;
  if (labels.size() != n_) throw StructuralError("label count does not match size");
  copy.labels_ = std::move(labels);
  return copy;
}

FiniteAlgebra FiniteAlgebra::with_zero(std::optional<Elem> zero) const {
  FiniteAlgebra copy = *this;
  if (zero && *zero >= n_) throw StructuralError("zero is outside the universe");
  copy.zero_ = zero;
  return copy;
}

std::vector<Elem> FiniteAlgebra::universe() const {
  std::vector<Elem> u(n_);
  std::iota(u.begin(), u.end(), Elem{0});
  return u;
}

bool FiniteAlgebra::same_tables(const FiniteAlgebra& other) const {
  return n_ == other.n_ && one_ == other.one_ && join_ == other.join_ && meet_ == other.meet_ &&
         mult_ == other.mult_ && imp_ == other.imp_;
}

bool SubUniverse::contains(Elem a) const {
  return std::binary_search(elements.begin(), elements.end(), a);
}

ValidationReport validate(const FiniteAlgebra& alg) {
  ValidationReport report;
  const auto n = static_cast<Elem>(alg.size());
  auto fail = [&](const char* axiom, std::vector<Elem> w) {
    report.failures.push_back({axiom, std::move(w)});
  };

  for (Elem a = 0; a < n; ++a) {
    if (alg.join(a, a) != a) fail("join-idempotent", {a});
    if (alg.meet(a, a) != a) fail("meet-idempotent", {a});
    if (alg.mult(a, alg.one()) != a) fail("mult-identity", {a});
    for (Elem b = 0; b < n; ++b) {
      if (alg.join(a, b) != alg.join(b, a)) fail("join-commutative", {a, b});
      if (alg.meet(a, b) != alg.meet(b, a)) fail("meet-commutative", {a, b});
      if (alg.mult(a, b) != alg.mult(b, a)) fail("mult-commutative", {a, b});
      if (alg.join(a, alg.meet(a, b)) != a) fail("absorption-join-meet", {a, b});
      if (alg.meet(a, alg.join(a, b)) != a) fail("absorption-meet-join", {a, b});
      for (Elem c = 0; c < n; ++c) {
        if (alg.join(alg.join(a, b), c) != alg.join(a, alg.join(b, c)))
          fail("join-associative", {a, b, c});
        if (alg.meet(alg.meet(a, b), c) != alg.meet(a, alg.meet(b, c)))
          fail("meet-associative", {a, b, c});
        if (alg.mult(alg.mult(a, b), c) != alg.mult(a, alg.mult(b, c)))
          fail("mult-associative", {a, b, c});
        // ab <= c  <=>  a <= b -> c
        const bool lhs = alg.meet(alg.mult(a, b), c) == alg.mult(a, b);
        const bool rhs = alg.meet(a, alg.imp(b, c)) == a;
        if (lhs != rhs) fail("residuation", {a, b, c});
      }
    }
    if (alg.zero() && alg.meet(*alg.zero(), a) != *alg.zero()) fail("zero-bottom", {a});
  }
  return report;
}

bool leq(const FiniteAlgebra& alg, Elem a, Elem b) { return alg.meet(a, b) == a; }

bool is_integral(const FiniteAlgebra& alg) {
  for (Elem a = 0; a < alg.size(); ++a)
    if (!leq(alg, a, alg.one())) return false;
  return true;
}

std::optional<Elem> is_bounded(const FiniteAlgebra& alg) {
  for (Elem a = 0; a < alg.size(); ++a) {
    bool below_all = true;
    for (Elem b = 0; b < alg.size() && below_all; ++b) below_all = leq(alg, a, b);
    if (below_all) return a;
  }
  return std::nullopt;
}

std::optional<Elem> top(const FiniteAlgebra& alg) {
  for (Elem a = 0; a < alg.size(); ++a) {
    bool above_all = true;
    for (Elem b = 0; b < alg.size() && above_all; ++b) above_all = leq(alg, b, a);
    if (above_all) return a;
  }
  return std::nullopt;
}

Elem power(const FiniteAlgebra& alg, Elem a, std::size_t k) {
  Elem p = a;
  for (std::size_t i = 1; i < k; ++i) p = alg.mult(p, a);
  return p;
}

std::optional<std::size_t> element_order(const FiniteAlgebra& alg, Elem a) {
  const auto bottom = is_bounded(alg);
  if (!bottom) throw PreconditionError("element_order needs an algebra with a bottom element");
  if (a == alg.one()) return std::nullopt;
  std::vector<bool> seen(alg.size(), false);
  Elem p = a;
  for (std::size_t k = 1;; ++k) {
    if (p == *bottom) return k;
    // A repeated power means the sequence cycles (or stabilizes) above 0.
    if (seen[p]) return std::nullopt;
    seen[p] = true;
    p = alg.mult(p, a);
  }
}

SubUniverse radical(const FiniteAlgebra& alg) {
  if (!is_bounded(alg)) throw PreconditionError("radical needs a bounded algebra");
  SubUniverse rad;
  for (Elem a = 0; a < alg.size(); ++a)
    if (!element_order(alg, a)) rad.elements.push_back(a);
  for (Elem a : rad.elements) {
    for (Elem b = 0; b < alg.size(); ++b) {
      if (leq(alg, a, b) && !rad.contains(b))
        throw PreconditionError("radical is not upward closed");
    }
    for (Elem b : rad.elements) {
      if (!rad.contains(alg.mult(a, b)))
        throw PreconditionError("radical is not closed under multiplication");
    }
  }
  return rad;
}

bool is_homomorphism(const FiniteAlgebra& from, const FiniteAlgebra& to,
                     std::span<const Elem> map) {
  if (map.size() != from.size()) return false;
  if (map[from.one()] != to.one()) return false;
  for (Elem m : map)
    if (m >= to.size()) return false;
  for (Op op : kAllOps)
    for (Elem a = 0; a < from.size(); ++a)
      for (Elem b = 0; b < from.size(); ++b)
        if (map[from.apply(op, a, b)] != to.apply(op, map[a], map[b])) return false;
  return true;
}

FiniteAlgebra relabel(const FiniteAlgebra& alg, std::span<const Elem> perm) {
  const std::size_t n = alg.size();
  if (perm.size() != n) throw PreconditionError("relabel: permutation has the wrong length");
  std::vector<bool> hit(n, false);
  for (Elem p : perm) {
    if (p >= n || hit[p]) throw PreconditionError("relabel: not a permutation");
    hit[p] = true;
  }
  Table t[4];
  for (auto& tab : t) tab.assign(n * n, 0);
  std::vector<std::string> labels(n);
  for (Elem a = 0; a < n; ++a) {
    labels[perm[a]] = alg.label(a);
    for (Elem b = 0; b < n; ++b)
      for (int k = 0; k < 4; ++k) t[k][perm[a] * n + perm[b]] = perm[alg.apply(kAllOps[k], a, b)];
  }
  std::optional<Elem> zero;
  if (alg.zero()) zero = perm[*alg.zero()];
  return FiniteAlgebra(n, std::move(t[0]), std::move(t[1]), std::move(t[2]), std::move(t[3]),
                       perm[alg.one()], zero, std::move(labels));
}

FiniteAlgebra restrict(const FiniteAlgebra& alg, std::span<const Elem> elements) {
  const std::size_t m = elements.size();
  std::vector<int> index(alg.size(), -1);
  for (std::size_t i = 0; i < m; ++i) {
    if (elements[i] >= alg.size()) throw PreconditionError("restrict: element out of range");
    index[elements[i]] = static_cast<int>(i);
  }
  if (index[alg.one()] < 0) throw PreconditionError("restrict: subset does not contain one");
  Table t[4];
  for (auto& tab : t) tab.assign(m * m, 0);
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = alg.label(elements[i]);
    for (std::size_t j = 0; j < m; ++j) {
      for (int k = 0; k < 4; ++k) {
        const int r = index[alg.apply(kAllOps[k], elements[i], elements[j])];
        if (r < 0) throw PreconditionError("restrict: subset is not closed under " +
                                           std::string(op_name(kAllOps[k])));
        t[k][i * m + j] = static_cast<Elem>(r);
      }
    }
  }
  std::optional<Elem> zero;
  if (alg.zero() && index[*alg.zero()] >= 0) zero = static_cast<Elem>(index[*alg.zero()]);
  return FiniteAlgebra(m, std::move(t[0]), std::move(t[1]), std::move(t[2]), std::move(t[3]),
                       static_cast<Elem>(index[alg.one()]), zero, std::move(labels));
}

bool is_idempotent(const FiniteAlgebra& alg) {
  for (Elem a = 0; a < alg.size(); ++a)
    if (alg.mult(a, a) != a) return false;
  return true;
}

bool one_join_irreducible(const FiniteAlgebra& alg) {
  for (Elem a = 0; a < alg.size(); ++a)
    for (Elem b = 0; b < alg.size(); ++b)
      if (alg.join(a, b) == alg.one() && a != alg.one() && b != alg.one()) return false;
  return true;
}

bool is_chain(const FiniteAlgebra& alg) {
  for (Elem a = 0; a < alg.size(); ++a)
    for (Elem b = 0; b < alg.size(); ++b)
      if (!leq(alg, a, b) && !leq(alg, b, a)) return false;
  return true;
}

}  // namespace reslat
