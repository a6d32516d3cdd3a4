#include "alcove/json_io.hpp"


namespace alcove {

Json element_to_json(const RootSystem& rs, const AffElem& w) {
  Json j;
  j["translation"] = std::vector<Int>(w.mu.data(), w.mu.data() + w.mu.size());
  std::vector<int> word;
  for (int i : rs.weyl(w.u).word) word.push_back(i + 1);
  j["word"] = word;
  return j;
}

AffElem element_from_json(const RootSystem& rs, const Json& j) {
  if (!j.is_object() || !j.contains("translation") || !j.contains("word"))
    throw UsageError("element JSON needs 'translation' and 'word'");
  const Json& tr = j.at("translation");
  if (!tr.is_array() || static_cast<int>(tr.size()) != rs.rank())
    throw UsageError("'translation' must be an array of length rank");
  VecI mu(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    if (!tr[static_cast<std::size_t>(i)].is_number_integer())
      throw UsageError("'translation' entries must be integers");
    mu[i] = tr[static_cast<std::size_t>(i)].get<Int>();
  }
  const Json& wd = j.at("word");
  if (!wd.is_array()) throw UsageError("'word' must be an array");
  std::vector<int> word;
  for (const auto& x : wd) {
    if (!x.is_number_integer()) throw UsageError("'word' letters must be integers");
    word.push_back(x.get<int>());
  }
  return aff_from_word(rs, mu, word);
}

std::string chamber_key(const RootSystem& rs, int u) {
  const auto& word = rs.weyl(u).word;
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += std::to_string(i + 1);
  return s;
}

int chamber_from_key(const RootSystem& rs, const std::string& key) {
  for (int u = 0; u < rs.weyl_order(); ++u)
    if (chamber_key(rs, u) == key) return u;
  // Also accept any word spelling of the element.
  if (key != "e") {
    int u = 0;
    for (char c : key) {
      if (c < '1' || c > '0' + rs.rank()) throw UsageError("bad chamber word '" + key + "'");
      u = rs.weyl_mult(u, rs.simple_reflection(c - '1'));
    }
    return u;
  }
  throw UsageError("bad chamber word '" + key + "'");
}

Json tuple_to_json(const RootSystem& rs, const ChamberTuple& t) {
  Json entries = Json::object();
  for (int u = 0; u < rs.weyl_order(); ++u)
    entries[chamber_key(rs, u)] = element_to_json(rs, t.entries[static_cast<std::size_t>(u)]);
  Json j;
  j["entries"] = entries;
  return j;
}

ChamberTuple tuple_from_json(const RootSystem& rs, const Json& j) {
  if (j.is_object() && j.contains("coords")) return from_coords(rs, coords_from_json(rs, j));
  if (!j.is_object() || !j.contains("entries"))
    throw UsageError("tuple JSON needs 'entries' or 'coords'");
  ChamberTuple t;
  t.lattice = true;
  t.entries.assign(static_cast<std::size_t>(rs.weyl_order()), aff_identity(rs));
  std::vector<bool> seen(static_cast<std::size_t>(rs.weyl_order()), false);
  for (auto it = j.at("entries").begin(); it != j.at("entries").end(); ++it) {
    int u = chamber_from_key(rs, it.key());
    t.entries[static_cast<std::size_t>(u)] = element_from_json(rs, it.value());
    if (t.entries[static_cast<std::size_t>(u)].u != 0) t.lattice = false;
    seen[static_cast<std::size_t>(u)] = true;
  }
  for (bool s : seen)
    if (!s) throw UsageError("tuple JSON misses a chamber entry");
  return t;
}

Json coords_to_json(const RootSystem& rs, const QACoords& c) {
  Json coords = Json::object();
  for (int p = 0; p < rs.num_psi(); ++p)
    coords[std::to_string(p)] = c.coords[static_cast<std::size_t>(p)];
  Json j;
  j["coords"] = coords;
  return j;
}

QACoords coords_from_json(const RootSystem& rs, const Json& j) {
  if (!j.is_object() || !j.contains("coords")) throw UsageError("coords JSON needs 'coords'");
  QACoords c;
  c.coords.assign(static_cast<std::size_t>(rs.num_psi()), 0);
  std::vector<bool> seen(static_cast<std::size_t>(rs.num_psi()), false);
  for (auto it = j.at("coords").begin(); it != j.at("coords").end(); ++it) {
    int p = -1;
    try {
      p = std::stoi(it.key());
    } catch (...) {
      throw UsageError("coords keys must be Psi indices");
    }
    if (p < 0 || p >= rs.num_psi()) throw UsageError("Psi index out of range");
    if (!it.value().is_number_integer()) throw UsageError("coords values must be integers");
    c.coords[static_cast<std::size_t>(p)] = it.value().get<Int>();
    seen[static_cast<std::size_t>(p)] = true;
  }
  for (bool s : seen)
    if (!s) throw UsageError("coords JSON misses a Psi index");
  return c;
}

Json affroot_to_json(const RootSystem& rs, const AffRoot& r) {
  Json j;
  const VecI& c = rs.root(r.root).coords;
  j["root"] = std::vector<Int>(c.data(), c.data() + c.size());
  j["level"] = r.level;
  return j;
}

namespace {

std::vector<Int> vec_to_std(const VecI& v) {
  return std::vector<Int>(v.data(), v.data() + v.size());
}

std::vector<std::string> vecr_to_std(const VecR& v) {
  std::vector<std::string> out;
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i].str());
  return out;
}

}  // namespace

Json describe_root_system(const RootSystem& rs) {
  Json j;
  j["schema"] = "alcove.root_system.v1";
  j["type"] = to_string(rs.type());
  j["rank"] = rs.rank();
  Json cartan = Json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < rs.rank(); ++k) row.push_back(rs.cartan()(i, k));
    cartan.push_back(row);
  }
  j["cartan_matrix"] = cartan;
  Json roots = Json::array();
  for (int rt = 0; rt < rs.num_roots(); ++rt) {
    const Root& r = rs.root(rt);
    Json jr;
    jr["coords"] = vec_to_std(r.coords);
    jr["coroot"] = vec_to_std(r.coroot);
    jr["positive"] = r.positive;
    roots.push_back(jr);
  }
  j["roots"] = roots;
  j["weyl_order"] = rs.weyl_order();
  Json chambers = Json::array();
  for (int u = 0; u < rs.weyl_order(); ++u) {
    const Chamber& ch = rs.chamber(u);
    Json jc;
    jc["word"] = chamber_key(rs, u);
    std::vector<int> pos;
    for (int rt = 0; rt < rs.num_roots(); ++rt)
      if (ch.positive & (RootMask(1) << rt)) pos.push_back(rt);
    jc["positive_roots"] = pos;
    jc["simple_roots"] = ch.simple_roots;
    jc["psi"] = ch.psi;
    chambers.push_back(jc);
  }
  j["chambers"] = chambers;
  Json psis = Json::array();
  for (int p = 0; p < rs.num_psi(); ++p) {
    const PsiData& pd = rs.psi(p);
    Json jp;
    jp["weight"] = vec_to_std(pd.weight);
    jp["coweight"] = vecr_to_std(pd.coweight);
    jp["chambers_containing"] = pd.chambers_containing;
    std::vector<int> perp;
    for (int rt = 0; rt < rs.num_roots(); ++rt)
      if (pd.phi_perp & (RootMask(1) << rt)) perp.push_back(rt);
    jp["phi_perp"] = perp;
    psis.push_back(jp);
  }
  j["psi"] = psis;
  return j;
}

std::string json_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace alcove
