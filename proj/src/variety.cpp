#include "reslat/variety.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "reslat/congruences.hpp"
#include "reslat/constructors.hpp"
#include "reslat/errors.hpp"
#include "reslat/kexpansion.hpp"

namespace reslat {

namespace {

using FormSet = std::set<CanonicalForm>;

struct ClosureEntry {
  std::vector<FiniteAlgebra> members;
  FormSet forms;
  FormSet si;
};

// HS closures are requested repeatedly for the same generator while building
// posets; results depend only on the canonical form and the cap.
const ClosureEntry& closure_of(const FiniteAlgebra& gen, std::size_t max_size) {
  static std::mutex mu;
  static std::map<std::pair<CanonicalForm, std::size_t>, ClosureEntry> cache;
  const auto key = std::make_pair(canonical_form(gen), max_size);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::map<CanonicalForm, FiniteAlgebra> found;
  std::vector<FiniteAlgebra> work;
  auto add = [&](const FiniteAlgebra& a) {
    Canonical c = canonical(a);
    if (found.count(c.form)) return;
    FiniteAlgebra rep = canonical_algebra(a);
    found.emplace(c.form, rep);
    work.push_back(rep);
  };
  add(gen);
  while (!work.empty()) {
    FiniteAlgebra a = std::move(work.back());
    work.pop_back();
    for (const auto& s : subalgebras_up_to_iso(a, max_size)) add(s);
    const auto lat = congruence_lattice(a);
    for (const auto& c : lat.elements) add(quotient(a, c));
  }
  ClosureEntry e;
  for (auto& [form, alg] : found) {
    e.forms.insert(form);
    if (alg.size() > 1 && is_subdirectly_irreducible(alg)) e.si.insert(form);
    e.members.push_back(alg);
  }
  std::stable_sort(e.members.begin(), e.members.end(),
                   [](const FiniteAlgebra& x, const FiniteAlgebra& y) { return x.size() < y.size(); });
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(e)).first->second;
}

FormSet si_forms(const std::vector<FiniteAlgebra>& gens, std::size_t max_size) {
  FormSet out;
  for (const auto& g : gens) {
    const auto& e = closure_of(g, max_size);
    out.insert(e.si.begin(), e.si.end());
  }
  return out;
}

bool same_equation(const Equation& a, const Equation& b) {
  return a.lhs == b.lhs && a.rhs == b.rhs;
}

bool has_axiom(const VarietyNode& n, const Equation& eq) {
  return std::any_of(n.axioms.begin(), n.axioms.end(),
                     [&](const Equation& e) { return same_equation(e, eq); });
}

std::string join_names(const std::vector<std::string>& names, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += sep;
    out += names[i];
  }
  return out;
}

std::string label_for(const std::vector<std::string>& names) {
  if (names.empty()) return "T";
  return "V(" + join_names(names, ",") + ")";
}

std::string name_for(const std::vector<std::string>& names) {
  if (names.empty()) return "T";
  return join_names(names, "∨");
}

}  // namespace

std::vector<FiniteAlgebra> hs_closure(const std::vector<FiniteAlgebra>& generators,
                                      std::size_t max_size) {
  std::map<CanonicalForm, FiniteAlgebra> all;
  all.emplace(canonical_form(FiniteAlgebra::trivial()), canonical_algebra(FiniteAlgebra::trivial()));
  for (const auto& g : generators) {
    for (const auto& m : closure_of(g, max_size).members) all.emplace(canonical_form(m), m);
  }
  std::vector<std::pair<CanonicalForm, FiniteAlgebra>> v(all.begin(), all.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    return x.second.size() < y.second.size();
  });
  std::vector<FiniteAlgebra> out;
  for (auto& [f, a] : v) out.push_back(std::move(a));
  return out;
}

std::vector<FiniteAlgebra> si_members(const std::vector<FiniteAlgebra>& generators,
                                      std::size_t max_size) {
  std::vector<FiniteAlgebra> out;
  for (auto& a : hs_closure(generators, max_size))
    if (a.size() > 1 && is_subdirectly_irreducible(a)) out.push_back(std::move(a));
  return out;
}

bool variety_leq(const std::vector<FiniteAlgebra>& g1, const std::vector<FiniteAlgebra>& g2,
                 std::size_t max_size) {
  const FormSet a = si_forms(g1, max_size);
  const FormSet b = si_forms(g2, max_size);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool ll_order(std::size_t r, std::size_t n, std::size_t s, std::size_t m) {
  if (r > n || s > m || n == 0 || m == 0)
    throw PreconditionError("ll_order: pairs must satisfy 0 <= r <= n, n >= 1");
  if (m % n != 0) return false;
  return s >= r * (m / n);
}

VarietyNode finite_node(std::string name, std::vector<FiniteAlgebra> generators,
                        std::size_t max_size) {
  VarietyNode n;
  const FormSet si = si_forms(generators, max_size);
  n.si_set.assign(si.begin(), si.end());
  std::vector<std::string> names;
  for (const auto& g : generators) names.push_back(catalog_name(g));
  n.label = label_for(names);
  n.name = name.empty() ? name_for(names) : std::move(name);
  n.generators = std::move(generators);
  return n;
}

VarietyNode axiom_node(std::string name, std::vector<Equation> axioms) {
  if (axioms.empty()) throw PreconditionError("axiom_node: empty axiom list");
  VarietyNode n;
  n.label = name;
  n.name = std::move(name);
  n.axioms = std::move(axioms);
  return n;
}

bool node_leq(const VarietyNode& a, const VarietyNode& b) {
  if (!a.axiom_defined() && !b.axiom_defined())
    return std::includes(b.si_set.begin(), b.si_set.end(), a.si_set.begin(), a.si_set.end());
  if (a.axiom_defined() && !b.axiom_defined()) return false;
  if (!a.axiom_defined()) {
    for (const auto& g : a.generators)
      for (const auto& eq : b.axioms)
        if (!satisfies(g, eq)) return false;
    return true;
  }
  return std::all_of(b.axioms.begin(), b.axioms.end(),
                     [&](const Equation& e) { return has_axiom(a, e); });
}

std::vector<Edge> hasse_edges(const std::vector<std::vector<bool>>& order) {
  const std::size_t n = order.size();
  std::vector<Edge> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !order[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && order[i][k] && order[k][j]) cover = false;
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

VarietyPoset variety_poset(std::vector<VarietyNode> nodes) {
  VarietyPoset p;
  for (auto& n : nodes) {
    bool dup = std::any_of(p.nodes.begin(), p.nodes.end(), [&](const VarietyNode& m) {
      if (n.axiom_defined() || m.axiom_defined()) return false;
      return m.si_set == n.si_set;
    });
    if (!dup) p.nodes.push_back(std::move(n));
  }
  const std::size_t k = p.nodes.size();
  p.order.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) p.order[i][j] = i == j || node_leq(p.nodes[i], p.nodes[j]);
  p.hasse = hasse_edges(p.order);
  return p;
}

VarietyPoset subvariety_lattice(const std::vector<FiniteAlgebra>& generators,
                                std::size_t max_size) {
  const auto si = si_members(generators, max_size);
  const std::size_t n = si.size();
  std::vector<CanonicalForm> forms;
  for (const auto& a : si) forms.push_back(canonical_form(a));
  // below[i][j]: si[i] in HS(si[j]).
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t j = 0; j < n; ++j) {
    const auto& e = closure_of(si[j], max_size);
    for (std::size_t i = 0; i < n; ++i) below[i][j] = e.forms.count(forms[i]) > 0;
  }
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> downsets;
  std::vector<std::vector<bool>> work{std::vector<bool>(n, false)};
  seen.insert(work.front());
  while (!work.empty()) {
    auto d = std::move(work.back());
    work.pop_back();
    for (std::size_t x = 0; x < n; ++x) {
      if (d[x]) continue;
      bool minimal = true;
      for (std::size_t y = 0; y < n && minimal; ++y)
        if (y != x && below[y][x] && !d[y]) minimal = false;
      if (!minimal) continue;
      auto e = d;
      e[x] = true;
      if (seen.insert(e).second) work.push_back(e);
    }
    downsets.push_back(std::move(d));
  }
  std::sort(downsets.begin(), downsets.end(), [](const auto& a, const auto& b) {
    auto ca = std::count(a.begin(), a.end(), true), cb = std::count(b.begin(), b.end(), true);
    if (ca != cb) return ca < cb;
    return a > b;
  });
  std::vector<VarietyNode> nodes;
  for (const auto& d : downsets) {
    VarietyNode node;
    std::vector<std::string> names;
    for (std::size_t x = 0; x < n; ++x) {
      if (!d[x]) continue;
      node.si_set.push_back(forms[x]);
      bool maximal = true;
      for (std::size_t y = 0; y < n && maximal; ++y)
        if (y != x && d[y] && below[x][y]) maximal = false;
      if (maximal) {
        node.generators.push_back(si[x]);
        names.push_back(catalog_name(si[x]));
      }
    }
    std::sort(node.si_set.begin(), node.si_set.end());
    node.name = name_for(names);
    node.label = label_for(names);
    nodes.push_back(std::move(node));
  }
  return variety_poset(std::move(nodes));
}

bool digraph_isomorphic(std::size_t n1, const std::vector<Edge>& e1, std::size_t n2,
                        const std::vector<Edge>& e2) {
  if (n1 != n2 || e1.size() != e2.size()) return false;
  const std::size_t n = n1;
  auto matrix = [n](const std::vector<Edge>& e) {
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (auto [a, b] : e) m[a][b] = true;
    return m;
  };
  const auto m1 = matrix(e1), m2 = matrix(e2);
  auto degrees = [n](const std::vector<std::vector<bool>>& m) {
    std::vector<std::pair<std::size_t, std::size_t>> d(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m[i][j]) {
          d[i].first++;
          d[j].second++;
        }
    return d;
  };
  const auto d1 = degrees(m1), d2 = degrees(m2);
  {
    auto s1 = d1, s2 = d2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;
  }
  std::vector<std::size_t> map(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || d1[i] != d2[c]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k)
        ok = m1[i][k] == m2[c][map[k]] && m1[k][i] == m2[map[k]][c];
      if (!ok) continue;
      map[i] = c;
      used[c] = true;
      if (extend(i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return extend(0);
}

std::string to_dot(const VarietyPoset& p, const std::string& graph_name) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "digraph " << quote(graph_name) << " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    os << "  n" << i << " [label=" << quote(p.nodes[i].label);
    if (p.nodes[i].axiom_defined()) os << ", shape=box";
    os << "];\n";
  }
  for (auto [a, b] : p.hasse) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

SplittingReport check_splitting(const VarietyPoset& family, const FiniteAlgebra& alg,
                                const Equation& eq, std::size_t max_size) {
  SplittingReport r;
  const CanonicalForm form = canonical_form(alg);
  for (const auto& node : family.nodes) {
    bool sat = false, contains = false;
    if (node.axiom_defined()) {
      contains = std::all_of(node.axioms.begin(), node.axioms.end(),
                             [&](const Equation& e) { return satisfies(alg, e).holds; });
      sat = has_axiom(node, eq);
      if (!contains && !sat) {
        r.skipped.push_back(node.name);
        continue;
      }
    } else {
      sat = std::all_of(node.generators.begin(), node.generators.end(),
                        [&](const FiniteAlgebra& g) { return satisfies(g, eq).holds; });
      for (const auto& g : node.generators)
        if (closure_of(g, max_size).forms.count(form)) contains = true;
    }
    if (sat == contains)
      r.violations.push_back(node.name);
    else if (sat)
      r.satisfying.push_back(node.name);
    else
      r.containing.push_back(node.name);
  }
  return r;
}

namespace {

struct CatalogEntry {
  std::string name;
  std::function<FiniteAlgebra()> make;
};

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    v.push_back({"trivial", [] { return FiniteAlgebra::trivial(); }});
    v.push_back({"2", [] { return two(); }});
    for (std::size_t n = 2; n <= 6; ++n)
      v.push_back({"L_" + std::to_string(n), [n] { return wajsberg_chain(n); }});
    for (std::size_t n = 3; n <= 5; ++n)
      v.push_back({"G_" + std::to_string(n), [n] { return godel_chain(n); }});
    v.push_back({"C_5", [] { return c5(); }});
    v.push_back({"K_3", [] { return k3().algebra; }});
    v.push_back({"K_4", [] { return k4().algebra; }});
    for (std::size_t p = 2; p <= 3; ++p)
      for (std::size_t r = 0; r <= p; ++r)
        v.push_back({"K_{" + std::to_string(r) + "," + std::to_string(p) + "}",
                     [r, p] { return k_rp(r, p).algebra; }});
    for (std::size_t n = 3; n <= 5; ++n) {
      v.push_back({"K_" + std::to_string(n * n - 1), [n] { return k_n2_minus_1(n).algebra; }});
      v.push_back({"K_" + std::to_string(n * n), [n] { return k_n2(n).algebra; }});
    }
    v.push_back({"K(2+L_2)", [] { return k_expand(ordinal_sum(two(), wajsberg_chain(2))).algebra; }});
    v.push_back({"T_{2+L_2}", [] {
                   const FiniteAlgebra a = two(), b = wajsberg_chain(2);
                   const KAlgebra k = k_expand(ordinal_sum(a, b));
                   return restrict_k(k, lift_over_sum(punctured(a), a, b)).algebra;
                 }});
    v.push_back({"C_19", [] { return restrict_k(k_expand(c5()), minimal_admissible(k_expand(c5()))).algebra; }});
    return v;
  }();
  return entries;
}

const std::map<CanonicalForm, std::string>& catalog_forms() {
  static const std::map<CanonicalForm, std::string> forms = [] {
    std::map<CanonicalForm, std::string> m;
    for (const auto& e : catalog_entries()) m.emplace(canonical_form(e.make()), e.name);
    return m;
  }();
  return forms;
}

}  // namespace

std::string catalog_name(const FiniteAlgebra& alg) {
  const CanonicalForm f = canonical_form(alg);
  const auto& forms = catalog_forms();
  if (auto it = forms.find(f); it != forms.end()) return it->second;
  // FNV-1a over the canonical code gives a stable short tag.
  std::uint32_t h = 2166136261u;
  for (Elem e : f.code) {
    h ^= e;
    h *= 16777619u;
  }
  std::ostringstream os;
  os << 'A' << alg.size() << '.' << std::hex << h;
  return os.str();
}

FiniteAlgebra catalog_algebra(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e.make();
  throw PreconditionError("unknown catalog algebra: " + name);
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"gnpcl", "l2l3", "two-plus-l2", "kph-finite"};
  return names;
}

VarietyPoset preset_poset(const std::string& name) {
  if (name == "gnpcl") {
    std::vector<VarietyNode> nodes;
    nodes.push_back(finite_node("", {}));
    for (const char* n : {"K_3", "K_4", "K_8", "K_9", "K_15", "K_16", "K_24", "K_25"})
      nodes.push_back(finite_node(n, {catalog_algebra(n)}, 25));
    return variety_poset(std::move(nodes));
  }
  if (name == "l2l3")
    return subvariety_lattice({catalog_algebra("K_{2,2}"), catalog_algebra("K_{3,3}")});
  if (name == "two-plus-l2") return subvariety_lattice({catalog_algebra("K(2+L_2)")});
  if (name == "kph-finite") {
    std::vector<Equation> axioms{kappa(named_equation("P").eq), kappa(named_equation("D").eq),
                                 kappa(named_equation("product_hoop").eq)};
    std::vector<VarietyNode> nodes;
    nodes.push_back(finite_node("", {}));
    nodes.push_back(finite_node("", {catalog_algebra("K_3")}));
    nodes.push_back(finite_node("", {catalog_algebra("K_4")}));
    nodes.push_back(axiom_node("K(PH)", axioms));
    axioms.push_back(named_equation("K2C_splitting").eq);
    nodes.push_back(axiom_node("K(CPH)", axioms));
    axioms.push_back(named_equation("K4_splitting").eq);
    nodes.push_back(axiom_node("V(K_3,K_w)", axioms));
    axioms.push_back(named_equation("KC_axiom").eq);
    nodes.push_back(axiom_node("K(C)", axioms));
    return variety_poset(std::move(nodes));
  }
  throw PreconditionError("unknown preset: " + name);
}

}  // namespace reslat
