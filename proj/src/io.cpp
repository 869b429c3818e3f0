#include "affhecke/io.hpp"

#include <fstream>
#include <sstream>

namespace aff {

json to_json(const AffinePerm& w) {
  return json{{"n", w.n}, {"window", w.window}};
}

AffinePerm perm_from_json(const json& j) {
  AffinePerm w;
  w.n = j.at("n").get<int>();
  w.window = j.at("window").get<std::vector<long long>>();
  std::string why;
  if (!valid_window(w, &why))
    throw std::invalid_argument("invalid window: " + why);
  return w;
}

json to_json(const Laurent& p) {
  json j = json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.str();
  return j;
}

json to_json(const HeckeElt& h) {
  json terms = json::array();
  std::vector<const AffinePerm*> keys;
  for (const auto& [w, c] : h.terms()) keys.push_back(&w);
  std::sort(keys.begin(), keys.end(), [](auto* a, auto* b) {
    long long la = length(*a), lb = length(*b);
    if (la != lb) return la > lb;
    return a->window < b->window;
  });
  for (auto* w : keys)
    terms.push_back(json{{"window", w->window}, {"poly", to_json(h.coeff(*w))}});
  return json{{"n", h.n()}, {"terms", terms}};
}

json to_json(const Tableau& t) {
  json rows = json::array();
  for (int r = 1; r <= t.num_rows(); ++r) {
    json row = json::array();
    for (int c = t.row_begin(r) + 1; c <= t.row_end(r); ++c)
      row.push_back(t.at(r, c));
    rows.push_back(row);
  }
  json j{{"n", t.n()}, {"rows", rows}};
  if (t.is_skew()) j["inner"] = t.inner_shape();
  return j;
}

Tableau tableau_from_json(const json& j) {
  std::vector<std::vector<long long>> rows;
  for (const auto& row : j.at("rows"))
    rows.push_back(row.get<std::vector<long long>>());
  std::vector<int> inner;
  if (j.contains("inner")) inner = j.at("inner").get<std::vector<int>>();
  return Tableau(j.at("n").get<int>(), std::move(rows), std::move(inner));
}

json to_json(const CellDecomposition& cd) {
  json cells = json::array();
  for (int c = 0; c < cd.cell_count(); ++c) {
    json elems = json::array();
    for (int v : cd.cells[c]) elems.push_back(window_str(cd.verts[v]));
    cells.push_back(json{{"id", c},
                         {"label", to_json(cd.labels[c])},
                         {"label_text", cd.labels[c].str()},
                         {"degree", cd.degrees[c]},
                         {"elements", elems}});
  }
  json covers = json::array();
  for (auto& [a, b] : cd.covers) covers.push_back(json::array({a, b}));
  return json{{"backend", cd.backend},
              {"n", cd.n},
              {"cells", cells},
              {"covers", covers}};
}

json to_json(const CCPoset& p) {
  json verts = json::array();
  for (size_t i = 0; i < p.verts.size(); ++i)
    verts.push_back(json{{"id", i},
                         {"tableau", to_json(p.verts[i])},
                         {"degree", p.degrees.empty() ? 0 : p.degrees[i]}});
  json edges = json::array();
  for (const auto& e : p.edges) {
    json colors = json::array();
    for (const auto& cell : e.colors())
      colors.push_back(json::array({cell.first, cell.second}));
    edges.push_back(json{{"from", e.from}, {"to", e.to}, {"colors", colors}});
  }
  return json{{"verts", verts}, {"edges", edges}};
}

json to_json(const Verdict& v, bool with_time) {
  json j{{"claim", v.claim}, {"status", v.status_str()}};
  if (!v.witness.empty()) j["witness"] = v.witness;
  if (with_time) j["seconds"] = v.seconds;
  return j;
}

namespace {
std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\n')
      out += "\\n";
    else if (c == '"')
      out += "\\\"";
    else
      out += c;
  }
  return out;
}
}  // namespace

std::string dot_of(const CellDecomposition& cd) {
  std::ostringstream os;
  os << "digraph cells {\n";
  for (int c = 0; c < cd.cell_count(); ++c)
    os << "  n" << c << " [label=\"" << dot_escape(cd.labels[c].str())
       << "\\ndeg " << cd.degrees[c] << "\"];\n";
  for (auto& [a, b] : cd.covers) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string dot_of(const CCPoset& p) {
  std::ostringstream os;
  os << "digraph ccp {\n";
  for (size_t i = 0; i < p.verts.size(); ++i)
    os << "  n" << i << " [label=\"" << dot_escape(p.verts[i].str())
       << "\"];\n";
  for (const auto& e : p.edges) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\"";
    bool first = true;
    for (const auto& cell : e.colors()) {
      if (!first) os << " ";
      first = false;
      os << "(" << cell.first << "," << cell.second << ")";
    }
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

void KLDiskCache::save(
    const KLContext&, int n,
    const std::vector<std::pair<AffinePerm, HeckeElt>>& rows) const {
  json j{{"schema", schema_version}, {"n", n}};
  json data = json::array();
  for (const auto& [w, c] : rows)
    data.push_back(json{{"w", w.window}, {"cprime", to_json(c)}});
  j["rows"] = data;
  std::ofstream out(path_);
  out << j.dump();
}

std::vector<std::pair<AffinePerm, HeckeElt>> KLDiskCache::load(int n) const {
  std::vector<std::pair<AffinePerm, HeckeElt>> out;
  std::ifstream in(path_);
  if (!in) return out;
  json j;
  in >> j;
  if (!j.contains("schema") || j["schema"].get<int>() != schema_version)
    return out;
  if (j.at("n").get<int>() != n) return out;
  for (const auto& row : j.at("rows")) {
    AffinePerm w;
    w.n = n;
    w.window = row.at("w").get<std::vector<long long>>();
    HeckeElt h(n);
    for (const auto& term : row.at("cprime").at("terms")) {
      AffinePerm x;
      x.n = n;
      x.window = term.at("window").get<std::vector<long long>>();
      Laurent p;
      for (auto it = term.at("poly").begin(); it != term.at("poly").end(); ++it)
        p.add_mono(std::stoi(it.key()), Int(it.value().get<std::string>()));
      h.add_term(x, p);
    }
    out.emplace_back(w, h);
  }
  return out;
}

}  // namespace aff
