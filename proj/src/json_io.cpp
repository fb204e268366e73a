#include "reslat/json_io.hpp"

#include "reslat/errors.hpp"

namespace reslat {

using nlohmann::json;

namespace {

json table_json(const FiniteAlgebra& alg, Op op) {
  json rows = json::array();
  for (std::size_t a = 0; a < alg.size(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < alg.size(); ++b)
      row.push_back(alg.apply(op, static_cast<Elem>(a), static_cast<Elem>(b)));
    rows.push_back(std::move(row));
  }
  return rows;
}

const json& member(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw JsonError(std::string("missing member \"") + key + "\"");
  return *it;
}

std::size_t index_value(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw JsonError(std::string(what) + " must be a non-negative integer");
  return v.get<std::size_t>();
}

Table table_from(const json& j, const char* key, std::size_t n) {
  const json& rows = member(j, key);
  if (!rows.is_array()) throw JsonError(std::string("\"") + key + "\" must be an array");
  if (rows.size() != n)
    throw StructuralError(std::string("table ") + key + " has " + std::to_string(rows.size()) +
                          " rows, expected " + std::to_string(n));
  Table t;
  t.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array()) throw JsonError(std::string("rows of \"") + key + "\" must be arrays");
    if (row.size() != n)
      throw StructuralError(std::string("table ") + key + " has a row of length " +
                            std::to_string(row.size()) + ", expected " + std::to_string(n));
    for (const auto& v : row) {
      std::size_t x = index_value(v, "table entry");
      if (x >= n)
        throw StructuralError(std::string("table ") + key + " entry " + std::to_string(x) +
                              " out of range");
      t.push_back(static_cast<Elem>(x));
    }
  }
  return t;
}

}  // namespace

json algebra_to_json(const FiniteAlgebra& alg) {
  json j;
  j["size"] = alg.size();
  j["one"] = alg.one();
  j["zero"] = alg.zero() ? json(*alg.zero()) : json(nullptr);
  j["join"] = table_json(alg, Op::Join);
  j["meet"] = table_json(alg, Op::Meet);
  j["mult"] = table_json(alg, Op::Mult);
  j["imp"] = table_json(alg, Op::Imp);
  json labels = json::object();
  for (std::size_t i = 0; i < alg.size(); ++i) labels[std::to_string(i)] = alg.label(static_cast<Elem>(i));
  j["labels"] = std::move(labels);
  return j;
}

FiniteAlgebra algebra_from_json(const json& j) {
  if (!j.is_object()) throw JsonError("algebra document must be an object");
  const std::size_t n = index_value(member(j, "size"), "\"size\"");
  if (n == 0) throw StructuralError("size must be positive");
  const std::size_t one = index_value(member(j, "one"), "\"one\"");
  std::optional<Elem> zero;
  if (auto it = j.find("zero"); it != j.end() && !it->is_null())
    zero = static_cast<Elem>(index_value(*it, "\"zero\""));
  std::vector<std::string> labels;
  if (auto it = j.find("labels"); it != j.end() && !it->is_null()) {
    if (!it->is_object()) throw JsonError("\"labels\" must be an object");
    labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    for (const auto& [k, v] : it->items()) {
      std::size_t idx;
      try {
        std::size_t used = 0;
        idx = std::stoul(k, &used);
        if (used != k.size()) throw std::invalid_argument(k);
      } catch (const std::exception&) {
        throw JsonError("label key \"" + k + "\" is not an element index");
      }
      if (idx >= n) throw StructuralError("label key " + k + " out of range");
      if (!v.is_string()) throw JsonError("labels must be strings");
      labels[idx] = v.get<std::string>();
    }
  }
  if (one >= n) throw StructuralError("one out of range");
  return FiniteAlgebra(n, table_from(j, "join", n), table_from(j, "meet", n),
                       table_from(j, "mult", n), table_from(j, "imp", n), static_cast<Elem>(one),
                       zero, std::move(labels));
}

json poset_to_json(const VarietyPoset& p) {
  json nodes = json::array();
  for (const auto& n : p.nodes) {
    json node;
    node["name"] = n.name;
    node["label"] = n.label;
    json gens = json::array();
    for (const auto& g : n.generators) gens.push_back(catalog_name(g));
    node["generators"] = std::move(gens);
    node["si_count"] = n.si_set.size();
    json axioms = json::array();
    for (const auto& e : n.axioms) axioms.push_back(e.to_string());
    node["axioms"] = std::move(axioms);
    nodes.push_back(std::move(node));
  }
  json order = json::array();
  for (const auto& row : p.order) {
    json r = json::array();
    for (bool b : row) r.push_back(b ? 1 : 0);
    order.push_back(std::move(r));
  }
  json covers = json::array();
  for (auto [a, b] : p.hasse) covers.push_back(json::array({a, b}));
  return json{{"nodes", std::move(nodes)}, {"order", std::move(order)}, {"covers", std::move(covers)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace reslat
