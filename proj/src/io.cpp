#include "vp/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vp {

json to_json(const CPath& p) { return {{"k", p.k}, {"l", p.l}, {"N", p.N}, {"a", p.a}, {"b", p.b}}; }

json to_json(const VPath& p) { return {{"k", p.k}, {"l", p.l}, {"N", p.N}, {"alpha", p.alpha}, {"beta", p.beta}}; }

CPath cpath_from_json(const json& j) {
  return CPath{j.at("k").get<int>(), j.at("l").get<int>(), j.at("N").get<int>(), j.at("a").get<std::vector<int>>(),
               j.at("b").get<std::vector<int>>()};
}

VPath vpath_from_json(const json& j) {
  return VPath{j.at("k").get<int>(), j.at("l").get<int>(), j.at("N").get<int>(), j.at("alpha").get<std::vector<int>>(),
               j.at("beta").get<std::vector<int>>()};
}

json to_json(const LaurentPoly3& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"q", e[0]}, {"z1", e[1]}, {"z2", e[2]}, {"c", c.get_str()}});
  return out;
}

LaurentPoly3 poly_from_json(const json& j) {
  LaurentPoly3 p;
  for (const auto& t : j) {
    mpz_class c;
    if (c.set_str(t.at("c").get<std::string>(), 10) != 0) throw std::invalid_argument("bad coefficient");
    p.add_term({t.at("q").get<int>(), t.at("z1").get<int>(), t.at("z2").get<int>()}, c);
  }
  return p;
}

json to_json(const TransferMatrix& m) {
  json labels = json::array(), rows = json::array();
  for (auto [a, b] : m.labels) labels.push_back({a, b});
  for (const auto& row : m.entries) {
    json r = json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    rows.push_back(std::move(r));
  }
  return {{"kind", std::string(1, m.kind)}, {"k", m.k}, {"N", m.N}, {"labels", labels}, {"rows", rows}};
}

TransferMatrix matrix_from_json(const json& j) {
  TransferMatrix m;
  m.kind = j.at("kind").get<std::string>().at(0);
  m.k = j.at("k").get<int>();
  m.N = j.at("N").get<int>();
  for (const auto& l : j.at("labels")) m.labels.emplace_back(l.at(0).get<int>(), l.at(1).get<int>());
  for (const auto& r : j.at("rows")) {
    std::vector<LaurentPoly3> row;
    for (const auto& e : r) row.push_back(poly_from_json(e));
    m.entries.push_back(std::move(row));
  }
  return m;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::V: return "V";
    case Family::U: return "U";
    case Family::W: return "W";
    case Family::Free: return "Free";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  if (s == "V" || s == "Vbar") return Family::V;
  if (s == "U" || s == "Ubar") return Family::U;
  if (s == "W" || s == "Wbar") return Family::W;
  throw std::invalid_argument("unknown family: " + s);
}

json to_json(const CoinvariantTable& t) {
  const auto& s = t.spec.module;
  json entries = json::array();
  for (const auto& e : t.entries) {
    json basis = json::array();
    for (const auto& b : e.basis) basis.push_back(to_compact(b));
    entries.push_back({{"m", e.w.m}, {"n", e.w.n}, {"d", e.w.d}, {"dim", e.dim}, {"basis", basis}});
  }
  return {{"module", s.name()},
          {"family", family_name(s.family) + (s.barred ? "bar" : "")},
          {"k", s.k},
          {"l1", s.l1},
          {"l2", s.l2},
          {"l3", s.eff_l3()},
          {"M", t.spec.M},
          {"N", t.spec.N},
          {"d_cap", t.spec.d_cap},
          {"aux_cap", t.spec.aux_cap},
          {"total_dim", t.total_dim},
          {"stabilized", t.stabilized},
          {"shell_weights", t.shell_weights},
          {"shell_nonzero", t.shell_nonzero},
          {"character", to_json(t.character())},
          {"entries", entries}};
}

std::string dims_csv_header() { return "family,k,l1,l2,l3,M,N,m,n,d,dim,stabilized\n"; }

std::string dims_csv_rows(const CoinvariantTable& t) {
  const auto& s = t.spec.module;
  std::ostringstream os;
  for (const auto& e : t.entries)
    os << family_name(s.family) << (s.barred ? "bar" : "") << ',' << s.k << ',' << s.l1 << ',' << s.l2 << ','
       << s.eff_l3() << ',' << t.spec.M << ',' << t.spec.N << ',' << e.w.m << ',' << e.w.n << ',' << e.w.d << ','
       << e.dim << ',' << (t.stabilized ? "true" : "false") << '\n';
  return os.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

GoldenMatrix load_golden_matrix(const std::string& path) {
  json j = read_json_file(path);
  GoldenMatrix g;
  for (const auto& l : j.at("labels")) g.labels.emplace_back(l.at(0).get<int>(), l.at(1).get<int>());
  for (const auto& r : j.at("rows")) g.rows.push_back(r.get<std::vector<std::string>>());
  return g;
}

bool golden_matches(const GoldenMatrix& g, const TransferMatrix& m, int n_value, std::string* why) {
  auto say = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (g.labels != m.labels) return say("labels differ");
  if (g.rows.size() != m.entries.size()) return say("row count differs");
  for (std::size_t r = 0; r < g.rows.size(); ++r) {
    if (g.rows[r].size() != m.entries[r].size()) return say("column count differs in row " + std::to_string(r));
    for (std::size_t c = 0; c < g.rows[r].size(); ++c)
      if (!(parse_monomial(g.rows[r][c], n_value) == m.entries[r][c]))
        return say("entry (" + std::to_string(r) + "," + std::to_string(c) + "): expected " + g.rows[r][c] + ", got " +
                   m.entries[r][c].to_string());
  }
  return true;
}

GoldenTable load_golden_table(const std::string& path) {
  json j = read_json_file(path);
  GoldenTable g;
  const int k = j.at("k").get<int>();
  for (const auto& c : j.at("columns"))
    g.columns.push_back(ModuleSpec::W3(k, c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<int>()));
  for (const auto& r : j.at("rows"))
    g.rows.push_back({r.at("M").get<int>(), r.at("N").get<int>(), r.at("cells").get<std::vector<std::vector<std::string>>>()});
  return g;
}

}  // namespace vp
