#include "bimlab/algebra_io.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

#include "bimlab/constructions.hpp"

namespace bimlab {

namespace {

using nlohmann::ordered_json;

int lookup(const FinitePoset& p, const std::string& name) {
  int i = p.index_of(name);
  if (i < 0) throw IoError("unknown element '" + name + "'");
  return i;
}

std::vector<int> parse_table(const FinitePoset& p, const ordered_json& j, const char* field) {
  const int n = p.size();
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw IoError(std::string(field) + ": expected an n-by-n table of names");
  std::vector<int> t(n * n);
  for (int x = 0; x < n; ++x) {
    if (!j[x].is_array() || static_cast<int>(j[x].size()) != n)
      throw IoError(std::string(field) + ": row " + std::to_string(x) + " has wrong length");
    for (int y = 0; y < n; ++y) t[x * n + y] = lookup(p, j[x][y].get<std::string>());
  }
  return t;
}

std::vector<int> meet_table(const FinitePoset& p) {
  const int n = p.size();
  std::vector<int> t(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto m = p.meet(x, y);
      if (!m) throw IoError("mul \"meet\": order lacks a meet for (" + p.name_of(x) + "," +
                            p.name_of(y) + ")");
      t[x * n + y] = *m;
    }
  return t;
}

std::vector<int> join_table(const FinitePoset& p) {
  const int n = p.size();
  std::vector<int> t(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto m = p.join(x, y);
      if (!m) throw IoError("add \"join\": order lacks a join for (" + p.name_of(x) + "," +
                            p.name_of(y) + ")");
      t[x * n + y] = *m;
    }
  return t;
}

bool table_commutes(const std::vector<int>& t, int n) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (t[x * n + y] != t[y * n + x]) return false;
  return true;
}

}  // namespace

OrderedAlgebra load_algebra(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw IoError(std::string("not a valid algebra document: ") + e.what());
  }
  if (!doc.is_object()) throw IoError("algebra document must be a JSON object");

  static const std::set<std::string> known = {"name", "elements", "leq",  "mul",
                                              "one",  "add",      "zero", "lattice",
                                              "commutative"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!known.count(it.key())) throw IoError("unknown field '" + it.key() + "'");
  if (!doc.contains("elements")) throw IoError("missing field 'elements'");

  std::vector<std::string> names;
  for (const auto& e : doc["elements"]) names.push_back(e.get<std::string>());
  const int n = static_cast<int>(names.size());

  std::vector<std::pair<int, int>> covers;
  if (doc.contains("leq")) {
    FinitePoset tmp = FinitePoset::antichain(n, names);
    for (const auto& pr : doc["leq"]) {
      if (!pr.is_array() || pr.size() != 2) throw IoError("leq entries must be pairs");
      covers.emplace_back(lookup(tmp, pr[0].get<std::string>()),
                          lookup(tmp, pr[1].get<std::string>()));
    }
  }
  FinitePoset poset;
  try {
    poset = FinitePoset::from_cover_pairs(n, covers, names);
  } catch (const PosetError& e) {
    throw IoError(std::string("bad order: ") + e.what());
  }

  OrderedAlgebra a;
  a.poset = poset;
  if (doc.contains("name")) a.name = doc["name"].get<std::string>();

  if (doc.contains("mul")) {
    if (doc["mul"].is_string()) {
      if (doc["mul"] != "meet") throw IoError("mul: expected a table or \"meet\"");
      a.mul = meet_table(poset);
    } else {
      a.mul = parse_table(poset, doc["mul"], "mul");
    }
  }
  if (doc.contains("one")) a.one = lookup(poset, doc["one"].get<std::string>());
  if (doc.contains("zero")) a.zero = lookup(poset, doc["zero"].get<std::string>());

  if (doc.contains("add")) {
    if (doc["add"].is_string()) {
      std::string kind = doc["add"].get<std::string>();
      if (kind == "join") {
        a.add = join_table(poset);
      } else if (kind == "meet") {
        a.add = meet_table(poset);
      } else if (kind == "mul") {
        if (!a.mul) throw IoError("add \"mul\": no multiplication present");
        a.add = a.mul;
        if (!a.zero && a.one) a.zero = a.one;
      } else if (kind == "pbr") {
        if (!a.mul || !a.one || !a.zero)
          throw IoError("add \"pbr\": needs mul, one and zero");
        OrderedAlgebra br = a;
        br.add.reset();
        br.has_lattice = false;
        br.commutative = true;
        auto expanded = from_pointed_brouwerian(br, *a.zero);
        a.add = expanded.add;
      } else {
        throw IoError("add: expected a table or one of \"join\", \"meet\", \"mul\", \"pbr\"");
      }
    } else {
      a.add = parse_table(poset, doc["add"], "add");
    }
  }

  if (doc.contains("commutative"))
    a.commutative = doc["commutative"].get<bool>();
  else
    a.commutative = (!a.mul || table_commutes(*a.mul, n)) && (!a.add || table_commutes(*a.add, n));

  if (doc.contains("lattice")) {
    a.has_lattice = doc["lattice"].get<bool>();
  } else if (poset.is_lattice()) {
    // default: flag as lattice-ordered exactly when the admissibility laws hold
    OrderedAlgebra probe = a;
    probe.has_lattice = true;
    a.has_lattice = static_cast<bool>(validate(probe));
  }
  return a;
}

OrderedAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return load_algebra(text);
}

std::string dump_algebra(const OrderedAlgebra& a) {
  const int n = a.size();
  ordered_json doc;
  if (!a.name.empty()) doc["name"] = a.name;
  ordered_json els = ordered_json::array();
  for (int i = 0; i < n; ++i) els.push_back(a.el(i));
  doc["elements"] = els;
  ordered_json leq = ordered_json::array();
  for (auto [lo, hi] : a.poset.cover_pairs()) leq.push_back({a.el(lo), a.el(hi)});
  doc["leq"] = leq;
  auto dump_table = [&](const std::vector<int>& t) {
    ordered_json rows = ordered_json::array();
    for (int x = 0; x < n; ++x) {
      ordered_json row = ordered_json::array();
      for (int y = 0; y < n; ++y) row.push_back(a.el(t[x * n + y]));
      rows.push_back(row);
    }
    return rows;
  };
  if (a.mul) doc["mul"] = dump_table(*a.mul);
  if (a.one) doc["one"] = a.el(*a.one);
  if (a.add) doc["add"] = dump_table(*a.add);
  if (a.zero) doc["zero"] = a.el(*a.zero);
  doc["lattice"] = a.has_lattice;
  doc["commutative"] = a.commutative;
  return doc.dump(2) + "\n";
}

}  // namespace bimlab
