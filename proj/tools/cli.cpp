#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "reslat/algebra.hpp"
#include "reslat/congruences.hpp"
#include "reslat/constructors.hpp"
#include "reslat/errors.hpp"
#include "reslat/figures.hpp"
#include "reslat/json_io.hpp"
#include "reslat/kexpansion.hpp"
#include "reslat/subalgebras.hpp"
#include "reslat/terms.hpp"
#include "reslat/variety.hpp"

namespace reslat::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

FiniteAlgebra load_algebra(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw JsonError(path + ": " + e.what());
  }
  FiniteAlgebra a = algebra_from_json(j);
  const auto report = validate(a);
  if (!report.passed()) {
    const auto& f = report.failures.front();
    std::string w;
    for (Elem e : f.witness) w += (w.empty() ? "" : ",") + std::to_string(e);
    throw StructuralError(path + ": not a commutative residuated lattice (" + f.axiom + " at (" + w +
                          "), " + std::to_string(report.failures.size()) + " failures)");
  }
  return a;
}

std::string elements_text(const FiniteAlgebra& a, const std::vector<Elem>& elems) {
  std::string s;
  for (Elem e : elems) s += (s.empty() ? "" : " ") + a.label(e);
  return s;
}

json elements_json(const std::vector<Elem>& elems) {
  json arr = json::array();
  for (Elem e : elems) arr.push_back(e);
  return arr;
}

std::vector<Elem> parse_elements(const FiniteAlgebra& a, const std::string& text) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (item.empty()) continue;
    bool found = false;
    for (Elem e = 0; e < a.size() && !found; ++e)
      if (a.label(e) == item) {
        out.push_back(e);
        found = true;
      }
    if (found) continue;
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(item, &used);
      if (used != item.size() || v >= a.size()) throw std::out_of_range(item);
      out.push_back(static_cast<Elem>(v));
    } catch (const std::exception&) {
      throw UsageError("unknown element \"" + item + "\"");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FiniteAlgebra named_algebra(const std::string& name, std::size_t r, std::size_t p, std::size_t n) {
  if (name == "K_{r,p}" || name == "K_rp") return k_rp(r, p).algebra;
  if (name == "K_{n^2}" || name == "K_n2") return k_n2(n).algebra;
  if (name == "K_{n^2-1}" || name == "K_n2-1") return k_n2_minus_1(n).algebra;
  return catalog_algebra(name);
}

struct Manifest {
  std::string target;
  json artifacts = json::array();
  json checks = json::array();
  bool pass = true;

  void check(const std::string& name, bool ok, json detail = nullptr) {
    json c{{"name", name}, {"pass", ok}};
    if (!detail.is_null()) c["detail"] = std::move(detail);
    checks.push_back(std::move(c));
    pass = pass && ok;
  }
};

void emit_algebra(Manifest& m, const fs::path& dir, const std::string& file, const FiniteAlgebra& a) {
  write_file(dir / file, dump(algebra_to_json(a)));
  const auto d = figures::lattice_diagram(a);
  m.artifacts.push_back(json{{"path", file}, {"kind", "algebra"}, {"name", catalog_name(a)},
                             {"size", a.size()}, {"covers", d.edges.size()}});
}

void emit_poset(Manifest& m, const fs::path& dir, const std::string& stem, const VarietyPoset& p) {
  write_file(dir / (stem + ".json"), dump(poset_to_json(p)));
  write_file(dir / (stem + ".dot"), to_dot(p, stem));
  m.artifacts.push_back(json{{"path", stem + ".json"}, {"kind", "poset"}, {"nodes", p.nodes.size()},
                             {"covers", p.hasse.size()}});
  m.artifacts.push_back(json{{"path", stem + ".dot"}, {"kind", "dot"}});
}

json graph_detail(const figures::FigureGraph& got, const figures::FigureGraph& want) {
  return json{{"computed", {{"nodes", got.nodes}, {"edges", got.edges.size()}}},
              {"figure", {{"nodes", want.nodes}, {"edges", want.edges.size()}}}};
}

void figure_check(Manifest& m, const std::string& name, const figures::FigureGraph& got,
                  const figures::FigureGraph& want) {
  m.check(name, figures::matches(got, want), graph_detail(got, want));
}

Manifest reproduce(const std::string& target, const fs::path& dir) {
  Manifest m;
  m.target = target;
  if (target == "figure-k-n-3") {
    const std::pair<std::size_t, figures::FigureGraph> cases[] = {
        {2, figures::k_2_3_figure()}, {1, figures::k_1_3_figure()}, {0, figures::k_0_3_figure()}};
    for (const auto& [r, fig] : cases) {
      const FiniteAlgebra a = k_rp(r, 3).algebra;
      const std::string stem = "K_" + std::to_string(r) + "_3";
      emit_algebra(m, dir, stem + ".json", a);
      m.check(stem + " size", a.size() == fig.nodes, json{{"size", a.size()}});
      figure_check(m, stem + " lattice diagram", figures::lattice_diagram(a), fig);
    }
  } else if (target == "k8") {
    const FiniteAlgebra a = k8().algebra;
    emit_algebra(m, dir, "K_8.json", a);
    m.check("K_8 size", a.size() == 8, json{{"size", a.size()}});
    figure_check(m, "K_8 lattice diagram", figures::lattice_diagram(a), figures::k8_figure());
  } else if (target == "c5-cover") {
    const FiniteAlgebra c = c5();
    const KAlgebra k = k_expand(c);
    const FiniteAlgebra cover = restrict_k(k, minimal_admissible(k)).algebra;
    emit_algebra(m, dir, "C_5.json", c);
    emit_algebra(m, dir, "C_19.json", cover);
    m.check("C_5 tight", is_tight(c));
    m.check("cover size", cover.size() == 19, json{{"size", cover.size()}});
    m.check("cover simple", is_simple(cover));
    figure_check(m, "cover lattice diagram", figures::lattice_diagram(cover),
                 figures::c5_cover_figure());
  } else if (target == "gnpcl-chain") {
    const VarietyPoset p = preset_poset("gnpcl");
    emit_poset(m, dir, "gnpcl", p);
    bool chain = true;
    for (std::size_t i = 0; i < p.nodes.size(); ++i)
      for (std::size_t j = 0; j < p.nodes.size(); ++j) chain = chain && (p.order[i][j] || p.order[j][i]);
    m.check("chain", chain && p.hasse.size() + 1 == p.nodes.size(),
            json{{"nodes", p.nodes.size()}, {"covers", p.hasse.size()}});
  } else if (target == "l2l3-poset") {
    const VarietyPoset p = preset_poset("l2l3");
    emit_poset(m, dir, "l2l3", p);
    m.check("node count 24", p.nodes.size() == 24, json{{"nodes", p.nodes.size()}});
    figure_check(m, "Hasse diagram", figures::poset_diagram(p), figures::l2l3_figure());
  } else if (target == "two-plus-l2-poset") {
    const VarietyPoset p = preset_poset("two-plus-l2");
    emit_poset(m, dir, "two_plus_l2", p);
    m.check("node count 19", p.nodes.size() == 19, json{{"nodes", p.nodes.size()}});
    figure_check(m, "Hasse diagram", figures::poset_diagram(p), figures::two_plus_l2_figure());
  } else if (target == "kph-finite-poset") {
    const VarietyPoset p = preset_poset("kph-finite");
    emit_poset(m, dir, "kph_finite", p);
    figure_check(m, "Hasse diagram", figures::poset_diagram(p), figures::kph_figure());
  } else {
    throw UsageError("unknown reproduce target: " + target);
  }
  return m;
}

const std::vector<std::string> kReproduceTargets{"figure-k-n-3",      "k8",
                                                 "c5-cover",          "gnpcl-chain",
                                                 "l2l3-poset",        "two-plus-l2-poset",
                                                 "kph-finite-poset"};

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Finite commutative residuated lattices and their twist-products", "reslat"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "reslat 1.0");

  // build
  auto* build = app.add_subcommand("build", "Build a named chain: two | godel N | wajsberg N | c5");
  std::string build_kind;
  std::size_t build_n = 0;
  build->add_option("kind", build_kind)->required()->check(CLI::IsMember({"two", "godel", "wajsberg", "c5"}));
  build->add_option("n", build_n);

  auto* sum = app.add_subcommand("sum", "Ordinal sum A (+) B");
  std::string sum_a, sum_b;
  sum->add_option("A", sum_a)->required();
  sum->add_option("B", sum_b)->required();

  auto* prod = app.add_subcommand("prod", "Direct product");
  std::vector<std::string> prod_files;
  prod->add_option("files", prod_files)->required();

  auto* kexp = app.add_subcommand("kexpand", "Twist-product K(A) of an integral algebra");
  std::string kexp_file;
  kexp->add_option("A", kexp_file)->required();

  auto* named = app.add_subcommand("named", "Named algebra (K_3, K_4, K_8, K_{r,p}, K_{n^2}, K_{n^2-1}, L_3, ...)");
  std::string named_name;
  std::size_t named_r = 0, named_p = 0, named_n = 0;
  named->add_option("name", named_name)->required();
  named->add_option("--r", named_r);
  named->add_option("--p", named_p);
  named->add_option("--n", named_n);

  auto* check = app.add_subcommand("check", "Check an equation exhaustively");
  std::string check_file, check_eq, check_named;
  bool check_kappa = false;
  check->add_option("A", check_file)->required();
  auto* eq_opt = check->add_option("--eq", check_eq, "equation text");
  auto* named_opt = check->add_option("--named", check_named, "library equation name");
  eq_opt->excludes(named_opt);
  check->add_flag("--kappa", check_kappa, "check the translated equation instead");

  auto* con = app.add_subcommand("con", "Congruence lattice summary");
  std::string con_file;
  bool con_blocks = false;
  con->add_option("A", con_file)->required();
  con->add_flag("--blocks", con_blocks);

  auto* subs = app.add_subcommand("subs", "Subuniverses");
  std::string subs_file;
  bool subs_iso = false, subs_adm = false;
  std::size_t subs_cap = kDefaultSubuniverseCap;
  subs->add_option("A", subs_file)->required();
  subs->add_flag("--up-to-iso", subs_iso);
  subs->add_flag("--admissible-only", subs_adm, "keep subuniverses containing every element below one");
  subs->add_option("--max-size", subs_cap)->capture_default_str();

  auto* iso = app.add_subcommand("iso", "Isomorphism test");
  std::string iso_a, iso_b;
  iso->add_option("A", iso_a)->required();
  iso->add_option("B", iso_b)->required();

  auto* adm = app.add_subcommand("admissible", "Admissible subalgebras of K(A)");
  std::string adm_file, adm_filter;
  bool adm_enum = false;
  std::size_t adm_cap = kDefaultAdmissibleCap;
  adm->add_option("A", adm_file)->required();
  auto* enum_flag = adm->add_flag("--enumerate", adm_enum);
  auto* filter_opt = adm->add_option("--filter", adm_filter, "comma-separated labels or indices of a lattice filter of A");
  enum_flag->excludes(filter_opt);
  adm->add_option("--max-size", adm_cap)->capture_default_str();

  auto* poset = app.add_subcommand("poset", "Subvariety poset");
  std::string poset_preset, poset_dot, poset_json;
  std::vector<std::string> poset_gens;
  std::size_t poset_cap = kDefaultHsCap;
  auto* preset_opt = poset->add_option("--preset", poset_preset)->check(CLI::IsMember(preset_names()));
  auto* gens_opt = poset->add_option("--generators", poset_gens)->delimiter(',');
  preset_opt->excludes(gens_opt);
  poset->add_option("--dot", poset_dot, "write DOT to this path");
  poset->add_option("--json", poset_json, "write JSON to this path instead of standard output");
  poset->add_option("--max-size", poset_cap)->capture_default_str();

  auto* repro = app.add_subcommand("reproduce", "Reproduce a published figure");
  std::string repro_target, repro_out = ".";
  repro->add_option("target", repro_target)->required()->check(CLI::IsMember(kReproduceTargets));
  repro->add_option("--out", repro_out)->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    throw UsageError(e.what());
  }

  if (build->parsed()) {
    FiniteAlgebra a = FiniteAlgebra::trivial();
    if (build_kind == "two") a = two();
    else if (build_kind == "c5") a = c5();
    else {
      if (build->count("n") == 0) throw UsageError("build " + build_kind + " needs N");
      a = build_kind == "godel" ? godel_chain(build_n) : wajsberg_chain(build_n);
    }
    out << dump(algebra_to_json(a));
    return 0;
  }
  if (sum->parsed()) {
    out << dump(algebra_to_json(ordinal_sum(load_algebra(sum_a), load_algebra(sum_b))));
    return 0;
  }
  if (prod->parsed()) {
    std::vector<FiniteAlgebra> as;
    for (const auto& f : prod_files) as.push_back(load_algebra(f));
    out << dump(algebra_to_json(direct_product(as)));
    return 0;
  }
  if (kexp->parsed()) {
    out << dump(algebra_to_json(k_expand(load_algebra(kexp_file)).algebra));
    return 0;
  }
  if (named->parsed()) {
    out << dump(algebra_to_json(named_algebra(named_name, named_r, named_p, named_n)));
    return 0;
  }
  if (check->parsed()) {
    const FiniteAlgebra a = load_algebra(check_file);
    if (check_named.empty() && check_eq.empty()) throw UsageError("check needs --eq or --named");
    Equation eq = check_named.empty() ? parse_equation(check_eq) : named_equation(check_named).eq;
    if (check_kappa) eq = kappa(eq);
    const SatResult r = satisfies(a, eq);
    if (r.holds) {
      out << "satisfied: " << eq.to_string() << "\n";
      return 0;
    }
    out << "counterexample:";
    const auto& env = *r.counterexample;
    for (std::size_t i = 0; i < env.size(); ++i) {
      const std::string name = i < eq.var_names.size() ? eq.var_names[i] : "x" + std::to_string(i);
      out << " " << name << "=" << a.label(env[i]);
    }
    out << "\n  lhs=" << a.label(eval(a, eq.lhs, env)) << " rhs=" << a.label(eval(a, eq.rhs, env)) << "\n";
    return 1;
  }
  if (con->parsed()) {
    const FiniteAlgebra a = load_algebra(con_file);
    const auto lat = congruence_lattice(a);
    const bool simple = lat.size() == 2;
    const bool si = lat.size() >= 2 && lat.atoms().size() == 1;
    out << "congruences=" << lat.size() << "\nsimple=" << (simple ? "true" : "false")
        << "\nsubdirectly_irreducible=" << (si ? "true" : "false") << "\n";
    if (con_blocks)
      for (const auto& c : lat.elements) {
        out << "  ";
        for (const auto& b : c.blocks()) out << "{" << elements_text(a, b) << "}";
        out << "\n";
      }
    return 0;
  }
  if (subs->parsed()) {
    const FiniteAlgebra a = load_algebra(subs_file);
    std::vector<SubUniverse> list;
    if (subs_adm) {
      const auto cone = negative_cone_elements(a);
      list = subuniverses_containing(a, cone, subs_cap);
    } else {
      list = all_subuniverses(a, subs_cap);
    }
    json j;
    if (subs_iso) {
      std::map<CanonicalForm, std::pair<std::size_t, std::vector<Elem>>> classes;
      for (const auto& s : list) {
        auto form = canonical_form(restrict(a, s.elements));
        auto [it, fresh] = classes.emplace(form, std::make_pair(std::size_t{0}, s.elements));
        it->second.first++;
        (void)fresh;
      }
      std::vector<json> rows;
      for (const auto& [form, v] : classes) {
        const FiniteAlgebra sub = restrict(a, v.second);
        rows.push_back(json{{"name", catalog_name(sub)}, {"size", sub.size()}, {"occurrences", v.first},
                            {"elements", elements_json(v.second)}});
      }
      std::stable_sort(rows.begin(), rows.end(),
                       [](const json& x, const json& y) { return x["size"] < y["size"]; });
      j["classes"] = rows;
      j["count"] = rows.size();
    } else {
      json arr = json::array();
      for (const auto& s : list) arr.push_back(elements_json(s.elements));
      j["subuniverses"] = std::move(arr);
      j["count"] = list.size();
    }
    out << dump(j);
    return 0;
  }
  if (iso->parsed()) {
    const FiniteAlgebra a = load_algebra(iso_a), b = load_algebra(iso_b);
    const auto m = is_isomorphic(a, b);
    if (!m) {
      out << "not isomorphic\n";
      return 1;
    }
    out << "isomorphic\n";
    for (Elem x = 0; x < a.size(); ++x) out << "  " << a.label(x) << " -> " << b.label((*m)[x]) << "\n";
    return 0;
  }
  if (adm->parsed()) {
    const FiniteAlgebra a = load_algebra(adm_file);
    const KAlgebra k = k_expand(a);
    std::vector<SubUniverse> list;
    if (!adm_filter.empty()) {
      Filter f{parse_elements(a, adm_filter), FilterKind::Lattice};
      if (is_involutive(a)) list.push_back(admissible_from_filter(a, f));
      else if (is_idempotent(a)) list.push_back(admissible_brouwerian(a, f));
      else throw PreconditionError("--filter needs an involutive or idempotent algebra");
    } else {
      list = admissible_subuniverses(k, adm_cap);
    }
    json arr = json::array();
    for (const auto& s : list) {
      const FiniteAlgebra sub = restrict_k(k, s).algebra;
      json e = algebra_to_json(sub);
      e["name"] = catalog_name(sub);
      e["elements"] = elements_json(s.elements);
      arr.push_back(std::move(e));
    }
    out << dump(arr);
    out << "admissible_count=" << list.size() << "\n";
    return 0;
  }
  if (poset->parsed()) {
    VarietyPoset p;
    if (!poset_preset.empty()) {
      p = preset_poset(poset_preset);
    } else if (!poset_gens.empty()) {
      std::vector<FiniteAlgebra> gens;
      for (const auto& g : poset_gens) gens.push_back(load_algebra(g));
      p = subvariety_lattice(gens, poset_cap);
    } else {
      throw UsageError("poset needs --preset or --generators");
    }
    if (!poset_dot.empty()) write_file(poset_dot, to_dot(p, poset_preset.empty() ? "variety" : poset_preset));
    if (!poset_json.empty()) write_file(poset_json, dump(poset_to_json(p)));
    else out << dump(poset_to_json(p));
    return 0;
  }
  if (repro->parsed()) {
    const fs::path dir(repro_out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
    const Manifest m = reproduce(repro_target, dir);
    const json manifest{{"target", m.target}, {"artifacts", m.artifacts}, {"checks", m.checks},
                        {"pass", m.pass}};
    write_file(dir / "manifest.json", dump(manifest));
    for (const auto& c : m.checks)
      out << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << "\n";
    out << "manifest=" << (dir / "manifest.json").string() << "\n";
    return m.pass ? 0 : 1;
  }
  throw UsageError("no subcommand");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
  } catch (const JsonError& e) {
    err << "json error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    err << "json error: " << e.what() << "\n";
  } catch (const StructuralError& e) {
    err << "structural error: " << e.what() << "\n";
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "precondition error: " << e.what() << "\n";
  } catch (const ConstructionError& e) {
    err << "construction error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace reslat::cli
