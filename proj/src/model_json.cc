#include <json.hpp>

#include "intck/models.hh"

namespace intck {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ModelFormatError("invalid JSON");
  return j;
}

void require_keys(const json& j, std::initializer_list<const char*> allowed, const char* what) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || it.key() == k;
    if (!ok) throw ModelFormatError(std::string("unknown key in ") + what + ": " + it.key());
  }
}

std::string get_string(const json& j, const char* what) {
  if (!j.is_string()) throw ModelFormatError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

int world_index(const Model& m, const json& j, const char* what) {
  int i = m.index_of(get_string(j, what));
  if (i < 0) throw ModelFormatError(std::string("unknown world in ") + what + ": " + j.get<std::string>());
  return i;
}

uint32_t world_set(const Model& m, const json& j, const char* what) {
  if (!j.is_array()) throw ModelFormatError(std::string(what) + " must be an array of worlds");
  uint32_t mask = 0;
  for (const auto& e : j) mask |= 1u << world_index(m, e, what);
  return mask;
}

void close_order(Model& m) {
  size_t n = m.worlds.size();
  for (size_t w = 0; w < n; ++w) m.leq[w] |= 1u << w;
  for (size_t k = 0; k < n; ++k)
    for (size_t w = 0; w < n; ++w)
      if (m.leq[w] >> k & 1) m.leq[w] |= m.leq[k];
}

Model model_from(const json& j) {
  if (!j.is_object()) throw ModelFormatError("model must be a JSON object");
  require_keys(j, {"worlds", "order", "r", "valuation"}, "model");
  if (!j.contains("worlds") || !j["worlds"].is_array() || j["worlds"].empty())
    throw ModelFormatError("model needs a nonempty \"worlds\" array");

  Model m;
  for (const auto& w : j["worlds"]) m.worlds.push_back(get_string(w, "worlds entry"));
  if (m.worlds.size() > static_cast<size_t>(kMaxWorlds))
    throw ModelFormatError("model exceeds the 16-world cap");
  for (size_t i = 0; i < m.worlds.size(); ++i)
    for (size_t k = i + 1; k < m.worlds.size(); ++k)
      if (m.worlds[i] == m.worlds[k]) throw ModelFormatError("duplicate world id: " + m.worlds[i]);

  m.leq.assign(m.worlds.size(), 0);
  if (j.contains("order")) {
    if (!j["order"].is_array()) throw ModelFormatError("\"order\" must be an array of pairs");
    for (const auto& pr : j["order"]) {
      if (!pr.is_array() || pr.size() != 2) throw ModelFormatError("order entry must be [from, to]");
      int a = world_index(m, pr[0], "order");
      int b = world_index(m, pr[1], "order");
      m.leq[a] |= 1u << b;
    }
  }
  close_order(m);

  if (j.contains("r")) {
    if (!j["r"].is_array()) throw ModelFormatError("\"r\" must be an array of triples");
    for (const auto& t : j["r"]) {
      if (!t.is_object()) throw ModelFormatError("r entry must be an object");
      require_keys(t, {"from", "set", "to"}, "r entry");
      if (!t.contains("from") || !t.contains("set") || !t.contains("to"))
        throw ModelFormatError("r entry needs \"from\", \"set\" and \"to\"");
      m.sel.push_back({world_index(m, t["from"], "r.from"), world_set(m, t["set"], "r.set"),
                       world_index(m, t["to"], "r.to")});
    }
    std::sort(m.sel.begin(), m.sel.end());
    m.sel.erase(std::unique(m.sel.begin(), m.sel.end()), m.sel.end());
  }

  if (j.contains("valuation")) {
    if (!j["valuation"].is_object()) throw ModelFormatError("\"valuation\" must be an object");
    for (auto it = j["valuation"].begin(); it != j["valuation"].end(); ++it) {
      try {
        mk_var(it.key());
      } catch (const std::invalid_argument&) {
        throw ModelFormatError("bad atom name in valuation: " + it.key());
      }
      m.val.emplace_back(it.key(), world_set(m, it.value(), "valuation"));
    }
    std::sort(m.val.begin(), m.val.end());
  }
  return m;
}

json set_to_json(const Model& m, uint32_t mask) {
  json arr = json::array();
  for (size_t w = 0; w < m.worlds.size(); ++w)
    if (mask >> w & 1) arr.push_back(m.worlds[w]);
  return arr;
}

json model_to(const Model& m) {
  json j;
  j["worlds"] = m.worlds;
  json order = json::array();
  for (size_t w = 0; w < m.worlds.size(); ++w)
    for (size_t v = 0; v < m.worlds.size(); ++v)
      if (w != v && (m.leq[w] >> v & 1)) order.push_back({m.worlds[w], m.worlds[v]});
  j["order"] = order;
  json r = json::array();
  auto sel = m.sel;
  std::sort(sel.begin(), sel.end());
  for (const auto& t : sel)
    r.push_back({{"from", m.worlds[t.from]}, {"set", set_to_json(m, t.set)}, {"to", m.worlds[t.to]}});
  j["r"] = r;
  json val = json::object();
  for (const auto& [atom, mask] : m.val) val[atom] = set_to_json(m, mask);
  j["valuation"] = val;
  return j;
}

}  // namespace

Model model_from_json(const std::string& text) { return model_from(parse_json(text)); }

std::string model_to_json(const Model& m) { return model_to(m).dump(2); }

std::string pointed_to_json(const PointedModel& pm) {
  json j;
  j["model"] = model_to(pm.model);
  j["world"] = pm.world;
  return j.dump(2);
}

PointedModel pointed_from_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw ModelFormatError("pointed model must be a JSON object");
  require_keys(j, {"model", "world"}, "pointed model");
  if (!j.contains("model") || !j.contains("world"))
    throw ModelFormatError("pointed model needs \"model\" and \"world\"");
  PointedModel pm{model_from(j["model"]), get_string(j["world"], "world")};
  if (pm.model.index_of(pm.world) < 0) throw ModelFormatError("unknown world: " + pm.world);
  return pm;
}

}  // namespace intck
