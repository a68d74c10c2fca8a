#include "gluecat/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gluecat {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::ParseError, "invalid JSON");
  return j;
}

void expect_type(const json& j, const std::string& type) {
  if (!j.contains("type") || j["type"] != type)
    fail(ErrorCode::ParseError, "expected document of type " + type);
}

json poset_json(const Poset& p) {
  json j;
  j["type"] = "poset";
  j["elements"] = p.names();
  json covers = json::array();
  for (auto [a, b] : p.covers()) covers.push_back({p.name(a), p.name(b)});
  j["covers"] = covers;
  return j;
}

Poset poset_of_json(const json& j) {
  expect_type(j, "poset");
  std::vector<std::string> elements = j.at("elements").get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& cov : j.at("covers")) pairs.emplace_back(cov.at(0), cov.at(1));
  return Poset::validate(std::move(elements), pairs);
}

json subnerve_json(const SubNerve& k) {
  json j;
  j["type"] = "subnerve";
  j["poset"] = poset_json(*k.base());
  json chains = json::array();
  for (const auto& c : k.maximal_chains()) {
    json chain = json::array();
    for (int e : c) chain.push_back(k.base()->name(e));
    chains.push_back(chain);
  }
  j["maximal_chains"] = chains;
  return j;
}

SubNerve subnerve_of_json(const json& j) {
  expect_type(j, "subnerve");
  auto base = std::make_shared<Poset>(poset_of_json(j.at("poset")));
  SubNerve k(base);
  for (const auto& chain : j.at("maximal_chains")) {
    Chain c;
    for (const auto& nm : chain) c.push_back(base->index(nm.get<std::string>()));
    k.insert_closed(c);
  }
  return k;
}

json category_json(const FinCategory& c) {
  json j;
  j["type"] = "category";
  j["objects"] = c.objects();
  json mors = json::array();
  for (const auto& m : c.morphisms())
    mors.push_back({{"name", m.name},
                    {"src", c.object_name(m.src)},
                    {"tgt", c.object_name(m.tgt)}});
  j["morphisms"] = mors;
  json ids = json::object();
  for (int o = 0; o < c.num_objects(); ++o) ids[c.object_name(o)] = c.mor(c.identity(o)).name;
  j["identities"] = ids;
  json comp = json::array();
  for (int f = 0; f < c.num_morphisms(); ++f)
    for (int g = 0; g < c.num_morphisms(); ++g)
      if (c.mor(f).tgt == c.mor(g).src)
        comp.push_back({c.mor(g).name, c.mor(f).name, c.mor(c.compose(g, f)).name});
  j["composition"] = comp;
  return j;
}

FinCategory category_of_json(const json& j) {
  if (j.contains("type") && j["type"] == "poset") return poset_category(poset_of_json(j));
  if (j.contains("type") && j["type"] == "finset_category") {
    std::vector<std::pair<std::string, std::vector<std::string>>> sets;
    for (const auto& s : j.at("sets"))
      sets.emplace_back(s.at(0).get<std::string>(), s.at(1).get<std::vector<std::string>>());
    return finset_category(sets);
  }
  expect_type(j, "category");
  std::vector<std::string> objects = j.at("objects").get<std::vector<std::string>>();
  auto obj_index = [&](const std::string& nm) {
    for (size_t i = 0; i < objects.size(); ++i)
      if (objects[i] == nm) return static_cast<int>(i);
    fail(ErrorCode::UnknownObject, nm);
  };
  std::vector<FinCategory::Mor> mors;
  for (const auto& m : j.at("morphisms"))
    mors.push_back({m.at("name").get<std::string>(), obj_index(m.at("src").get<std::string>()),
                    obj_index(m.at("tgt").get<std::string>())});
  auto mor_index = [&](const std::string& nm) {
    for (size_t i = 0; i < mors.size(); ++i)
      if (mors[i].name == nm) return static_cast<int>(i);
    fail(ErrorCode::UnknownObject, "morphism " + nm);
  };
  std::vector<int> ids(objects.size(), -1);
  for (const auto& [obj, mor] : j.at("identities").items()) ids[static_cast<size_t>(obj_index(obj))] = mor_index(mor);
  std::vector<std::array<int, 3>> comps;
  for (const auto& row : j.at("composition"))
    comps.push_back({mor_index(row.at(0)), mor_index(row.at(1)), mor_index(row.at(2))});
  return FinCategory::validate(std::move(objects), std::move(mors), std::move(ids), comps);
}

}  // namespace

std::string poset_to_json(const Poset& p) { return poset_json(p).dump(2); }
Poset poset_from_json(const std::string& text) { return poset_of_json(parse(text)); }

std::string subnerve_to_json(const SubNerve& k) { return subnerve_json(k).dump(2); }
SubNerve subnerve_from_json(const std::string& text) { return subnerve_of_json(parse(text)); }

std::string category_to_json(const FinCategory& c) { return category_json(c).dump(2); }
FinCategory category_from_json(const std::string& text) { return category_of_json(parse(text)); }

std::string certificate_to_json(const AnodyneCertificate& cert) {
  json j;
  j["type"] = "certificate";
  j["poset"] = poset_json(*cert.start.base());
  const Poset& base = *cert.start.base();
  auto chains_json = [&](const SubNerve& k) {
    json out = json::array();
    for (const auto& c : k.maximal_chains()) {
      json chain = json::array();
      for (int e : c) chain.push_back(base.name(e));
      out.push_back(chain);
    }
    return out;
  };
  j["start_maximal_chains"] = chains_json(cert.start);
  j["target_maximal_chains"] = chains_json(cert.target);
  json moves = json::array();
  for (const auto& mv : cert.moves) {
    json chain = json::array();
    for (int e : mv.chain) chain.push_back(base.name(e));
    moves.push_back({{"chain", chain}, {"k", mv.face_index}});
  }
  j["moves"] = moves;
  return j.dump(2);
}

AnodyneCertificate certificate_from_json(const std::string& text) {
  json j = parse(text);
  expect_type(j, "certificate");
  auto base = std::make_shared<Poset>(poset_of_json(j.at("poset")));
  AnodyneCertificate cert;
  cert.start = SubNerve(base);
  cert.target = SubNerve(base);
  auto load_chains = [&](const json& arr, SubNerve* k) {
    for (const auto& chain : arr) {
      Chain c;
      for (const auto& nm : chain) c.push_back(base->index(nm.get<std::string>()));
      k->insert_closed(c);
    }
  };
  load_chains(j.at("start_maximal_chains"), &cert.start);
  load_chains(j.at("target_maximal_chains"), &cert.target);
  for (const auto& mv : j.at("moves")) {
    HornMove move;
    for (const auto& nm : mv.at("chain")) move.chain.push_back(base->index(nm.get<std::string>()));
    move.face_index = mv.at("k").get<int>();
    cert.moves.push_back(std::move(move));
  }
  return cert;
}

std::string grid_to_json(const GridSimplex& g) {
  json j;
  j["type"] = "grid";
  j["dimension"] = g.dim();
  const FinCategory& c = *g.category();
  json objs = json::array();
  for (int r = 0; r <= g.dim(); ++r) {
    json row = json::array();
    for (int cc = 0; cc <= g.dim(); ++cc) row.push_back(c.object_name(g.object(r, cc)));
    objs.push_back(row);
  }
  j["objects"] = objs;
  json right = json::array(), down = json::array();
  for (int r = 0; r <= g.dim(); ++r) {
    json row = json::array();
    for (int cc = 0; cc < g.dim(); ++cc) row.push_back(c.mor(g.right(r, cc)).name);
    right.push_back(row);
  }
  for (int r = 0; r < g.dim(); ++r) {
    json row = json::array();
    for (int cc = 0; cc <= g.dim(); ++cc) row.push_back(c.mor(g.down(r, cc)).name);
    down.push_back(row);
  }
  j["right"] = right;
  j["down"] = down;
  return j.dump(2);
}

namespace {

void load_grid_arrays(const json& j, const FinCategory& c, int m, std::vector<int>* objs,
                      std::vector<int>* rgt, std::vector<int>* dwn) {
  for (const auto& row : j.at("objects"))
    for (const auto& nm : row) objs->push_back(c.object_index(nm.get<std::string>()));
  if (j.contains("right")) {
    for (const auto& row : j.at("right"))
      for (const auto& nm : row) rgt->push_back(c.mor_index(nm.get<std::string>()));
    for (const auto& row : j.at("down"))
      for (const auto& nm : row) dwn->push_back(c.mor_index(nm.get<std::string>()));
    return;
  }
  // Thin categories: arrows are recovered from the objects.
  if (!c.thin()) fail(ErrorCode::ParseError, "grid without arrows over a non-thin category");
  auto unique_hom = [&](int a, int b) {
    auto h = c.hom(a, b);
    if (h.size() != 1) fail(ErrorCode::ParseError, "no unique arrow for thin grid");
    return h[0];
  };
  for (int r = 0; r <= m; ++r)
    for (int cc = 0; cc < m; ++cc)
      rgt->push_back(unique_hom((*objs)[static_cast<size_t>(r * (m + 1) + cc)], (*objs)[static_cast<size_t>(r * (m + 1) + cc + 1)]));
  for (int r = 0; r < m; ++r)
    for (int cc = 0; cc <= m; ++cc)
      dwn->push_back(unique_hom((*objs)[static_cast<size_t>(r * (m + 1) + cc)], (*objs)[static_cast<size_t>((r + 1) * (m + 1) + cc)]));
}

}  // namespace

GridSimplex grid_from_json(const std::string& text, FinCategoryPtr cat) {
  json j = parse(text);
  expect_type(j, "grid");
  int m = j.at("dimension").get<int>();
  std::vector<int> objs, rgt, dwn;
  load_grid_arrays(j, *cat, m, &objs, &rgt, &dwn);
  return GridSimplex(std::move(cat), m, std::move(objs), std::move(rgt), std::move(dwn));
}

std::string sample_to_json(const BisimplexSample& s) {
  json j;
  j["type"] = "sample";
  j["n1"] = s.n1;
  j["n2"] = s.n2;
  const FinCategory& c = *s.cat;
  json objs = json::array();
  for (int r = 0; r <= s.n1; ++r) {
    json row = json::array();
    for (int cc = 0; cc <= s.n2; ++cc) row.push_back(c.object_name(s.object(r, cc)));
    objs.push_back(row);
  }
  j["objects"] = objs;
  json right = json::array(), down = json::array();
  for (int r = 0; r <= s.n1; ++r) {
    json row = json::array();
    for (int cc = 0; cc < s.n2; ++cc) row.push_back(c.mor(s.right[static_cast<size_t>(r * s.n2 + cc)]).name);
    right.push_back(row);
  }
  for (int r = 0; r < s.n1; ++r) {
    json row = json::array();
    for (int cc = 0; cc <= s.n2; ++cc) row.push_back(c.mor(s.down[static_cast<size_t>(r * (s.n2 + 1) + cc)]).name);
    down.push_back(row);
  }
  j["right"] = right;
  j["down"] = down;
  return j.dump(2);
}

BisimplexSample sample_from_json(const std::string& text, FinCategoryPtr cat) {
  json j = parse(text);
  const FinCategory& c = *cat;
  BisimplexSample s;
  s.cat = cat;
  if (j.contains("type") && j["type"] == "grid") {
    GridSimplex g = grid_from_json(text, cat);
    return sample_from_grid(g);
  }
  expect_type(j, "sample");
  s.n1 = j.at("n1").get<int>();
  s.n2 = j.at("n2").get<int>();
  for (const auto& row : j.at("objects"))
    for (const auto& nm : row) s.objects.push_back(c.object_index(nm.get<std::string>()));
  if (j.contains("right")) {
    for (const auto& row : j.at("right"))
      for (const auto& nm : row) s.right.push_back(c.mor_index(nm.get<std::string>()));
    for (const auto& row : j.at("down"))
      for (const auto& nm : row) s.down.push_back(c.mor_index(nm.get<std::string>()));
  } else {
    if (!c.thin()) fail(ErrorCode::ParseError, "sample without arrows over a non-thin category");
    auto unique_hom = [&](int a, int b) {
      auto h = c.hom(a, b);
      if (h.size() != 1) fail(ErrorCode::ParseError, "no unique arrow for thin sample");
      return h[0];
    };
    for (int r = 0; r <= s.n1; ++r)
      for (int cc = 0; cc < s.n2; ++cc)
        s.right.push_back(unique_hom(s.object(r, cc), s.object(r, cc + 1)));
    for (int r = 0; r < s.n1; ++r)
      for (int cc = 0; cc <= s.n2; ++cc)
        s.down.push_back(unique_hom(s.object(r, cc), s.object(r + 1, cc)));
  }
  return s;
}

std::string report_to_json(const Report& r) {
  json j;
  j["type"] = "report";
  j["ok"] = r.ok();
  json checks = json::array();
  for (const auto& e : r.checks)
    checks.push_back({{"name", e.name}, {"ok", e.ok}, {"witness", e.witness}});
  j["checks"] = checks;
  return j.dump(2);
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\\\"";
    else out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string poset_to_dot(const Poset& p) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (int e = 0; e < p.size(); ++e) os << "  " << quote(p.name(e)) << ";\n";
  for (auto [a, b] : p.covers())
    os << "  " << quote(p.name(a)) << " -> " << quote(p.name(b)) << ";\n";
  os << "}\n";
  return os.str();
}

std::string subnerve_to_dot(const SubNerve& k) {
  std::ostringstream os;
  os << "digraph skeleton {\n  rankdir=BT;\n";
  const Poset& p = *k.base();
  for (const auto& c : k.chains())
    if (c.size() == 1) os << "  " << quote(p.name(c[0])) << ";\n";
  for (const auto& c : k.chains())
    if (c.size() == 2)
      os << "  " << quote(p.name(c[0])) << " -> " << quote(p.name(c[1])) << ";\n";
  os << "}\n";
  return os.str();
}

std::string category_to_dot(const FinCategory& c) {
  std::ostringstream os;
  os << "digraph category {\n";
  for (int o = 0; o < c.num_objects(); ++o) os << "  " << quote(c.object_name(o)) << ";\n";
  for (int f = 0; f < c.num_morphisms(); ++f) {
    if (c.is_identity(f)) continue;
    os << "  " << quote(c.object_name(c.mor(f).src)) << " -> "
       << quote(c.object_name(c.mor(f).tgt)) << " [label=" << quote(c.mor(f).name) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string grid_to_dot(const GridSimplex& g) {
  std::ostringstream os;
  os << "digraph grid {\n";
  const FinCategory& c = *g.category();
  auto node = [&](int r, int cc) {
    return quote("(" + std::to_string(r) + "," + std::to_string(cc) + ") " +
                 c.object_name(g.object(r, cc)));
  };
  for (int r = 0; r <= g.dim(); ++r)
    for (int cc = 0; cc <= g.dim(); ++cc) os << "  " << node(r, cc) << ";\n";
  for (int r = 0; r <= g.dim(); ++r)
    for (int cc = 0; cc < g.dim(); ++cc)
      os << "  " << node(r, cc) << " -> " << node(r, cc + 1) << ";\n";
  for (int r = 0; r < g.dim(); ++r)
    for (int cc = 0; cc <= g.dim(); ++cc)
      os << "  " << node(r, cc) << " -> " << node(r + 1, cc) << ";\n";
  os << "}\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, "cannot write " + path);
  out << content;
}

}  // namespace gluecat
