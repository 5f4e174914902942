#include <json.hpp>

#include <algorithm>

#include "intck/fosem.hh"

namespace intck {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SheafFormatError("invalid JSON");
  return j;
}

std::string get_string(const json& j, const char* what) {
  if (!j.is_string()) throw SheafFormatError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

int node_of(const KripkeSheaf& s, const std::string& id, const char* what) {
  int w = s.node_index(id);
  if (w < 0) throw SheafFormatError(std::string("unknown node in ") + what + ": " + id);
  return w;
}

int elem_of(const KripkeSheaf& s, int node, const json& j, const char* what) {
  std::string id = get_string(j, what);
  int e = s.elem_index(node, id);
  if (e < 0)
    throw SheafFormatError(std::string("unknown element in ") + what + " at node " +
                           s.nodes[static_cast<size_t>(node)] + ": " + id);
  return e;
}

void close_order(KripkeSheaf& s) {
  size_t n = s.nodes.size();
  for (size_t w = 0; w < n; ++w) s.order[w] |= 1u << w;
  for (size_t k = 0; k < n; ++k)
    for (size_t w = 0; w < n; ++w)
      if (s.order[w] >> k & 1) s.order[w] |= s.order[k];
}

KripkeSheaf sheaf_from(const json& j) {
  if (!j.is_object()) throw SheafFormatError("sheaf must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string k = it.key();
    if (k != "nodes" && k != "order" && k != "domains" && k != "interp" && k != "transitions")
      throw SheafFormatError("unknown key in sheaf: " + k);
  }
  if (!j.contains("nodes") || !j["nodes"].is_array() || j["nodes"].empty())
    throw SheafFormatError("sheaf needs a nonempty \"nodes\" array");

  KripkeSheaf s;
  for (const auto& w : j["nodes"]) s.nodes.push_back(get_string(w, "nodes entry"));
  if (s.nodes.size() > static_cast<size_t>(kMaxWorlds))
    throw SheafFormatError("sheaf exceeds the 16-node cap");
  for (size_t i = 0; i < s.nodes.size(); ++i)
    for (size_t k = i + 1; k < s.nodes.size(); ++k)
      if (s.nodes[i] == s.nodes[k]) throw SheafFormatError("duplicate node id: " + s.nodes[i]);

  s.order.assign(s.nodes.size(), 0);
  if (j.contains("order")) {
    if (!j["order"].is_array()) throw SheafFormatError("\"order\" must be an array of pairs");
    for (const auto& pr : j["order"]) {
      if (!pr.is_array() || pr.size() != 2)
        throw SheafFormatError("order entry must be [from, to]");
      int a = node_of(s, get_string(pr[0], "order"), "order");
      int b = node_of(s, get_string(pr[1], "order"), "order");
      s.order[static_cast<size_t>(a)] |= 1u << b;
    }
  }
  close_order(s);

  if (!j.contains("domains") || !j["domains"].is_object())
    throw SheafFormatError("sheaf needs a \"domains\" object");
  s.domains.assign(s.nodes.size(), {});
  for (auto it = j["domains"].begin(); it != j["domains"].end(); ++it) {
    int w = node_of(s, it.key(), "domains");
    if (!it.value().is_array() || it.value().empty())
      throw SheafFormatError("domain of " + it.key() + " must be a nonempty array");
    for (const auto& e : it.value())
      s.domains[static_cast<size_t>(w)].push_back(get_string(e, "domain entry"));
    auto& dom = s.domains[static_cast<size_t>(w)];
    for (size_t a = 0; a < dom.size(); ++a)
      for (size_t b = a + 1; b < dom.size(); ++b)
        if (dom[a] == dom[b])
          throw SheafFormatError("duplicate element id at " + it.key() + ": " + dom[a]);
  }
  for (size_t w = 0; w < s.nodes.size(); ++w)
    if (s.domains[w].empty()) throw SheafFormatError("node " + s.nodes[w] + " has no domain");

  s.interp.assign(s.nodes.size(), {});
  if (j.contains("interp")) {
    if (!j["interp"].is_object()) throw SheafFormatError("\"interp\" must be an object");
    for (auto it = j["interp"].begin(); it != j["interp"].end(); ++it) {
      int w = node_of(s, it.key(), "interp");
      if (!it.value().is_object())
        throw SheafFormatError("interp of " + it.key() + " must be an object");
      KripkeSheaf::Interp& i = s.interp[static_cast<size_t>(w)];
      for (auto rel = it.value().begin(); rel != it.value().end(); ++rel) {
        const std::string& name = rel.key();
        const json& body = rel.value();
        if (!body.is_array())
          throw SheafFormatError(name + " at " + it.key() + " must be an array");
        if (name == "O" || name == "S") {
          for (const auto& e : body)
            (name == "O" ? i.o : i.s).insert(elem_of(s, w, e, "O/S"));
        } else if (name == "In") {
          for (const auto& pr : body) {
            if (!pr.is_array() || pr.size() != 2)
              throw SheafFormatError("In entry must be [element, set]");
            i.in.insert({elem_of(s, w, pr[0], "In"), elem_of(s, w, pr[1], "In")});
          }
        } else if (name == "R") {
          for (const auto& t : body) {
            if (!t.is_array() || t.size() != 3)
              throw SheafFormatError("R entry must be [world, set, world]");
            i.r.insert(
                {elem_of(s, w, t[0], "R"), elem_of(s, w, t[1], "R"), elem_of(s, w, t[2], "R")});
          }
        } else {
          try {
            mk_var(name);
          } catch (const std::invalid_argument&) {
            throw SheafFormatError("bad atom name in interp: " + name);
          }
          std::set<int>& ext = i.preds[name];
          for (const auto& e : body) ext.insert(elem_of(s, w, e, name.c_str()));
        }
      }
    }
  }

  if (j.contains("transitions")) {
    if (!j["transitions"].is_object()) throw SheafFormatError("\"transitions\" must be an object");
    for (auto it = j["transitions"].begin(); it != j["transitions"].end(); ++it) {
      const std::string& key = it.key();
      size_t sep = key.find('>');
      if (sep == std::string::npos)
        throw SheafFormatError("transition key must be \"from>to\": " + key);
      int w = node_of(s, key.substr(0, sep), "transitions");
      int v = node_of(s, key.substr(sep + 1), "transitions");
      if (!it.value().is_object())
        throw SheafFormatError("transition " + key + " must be an object");
      std::vector<int> map(s.domains[static_cast<size_t>(w)].size(), -1);
      for (auto ent = it.value().begin(); ent != it.value().end(); ++ent) {
        int a = s.elem_index(w, ent.key());
        if (a < 0) throw SheafFormatError("unknown element in transition " + key + ": " + ent.key());
        map[static_cast<size_t>(a)] = elem_of(s, v, ent.value(), "transition target");
      }
      for (size_t a = 0; a < map.size(); ++a)
        if (map[a] < 0)
          throw SheafFormatError("transition " + key + " does not map element " +
                                 s.domains[static_cast<size_t>(w)][a]);
      s.transitions[{w, v}] = std::move(map);
    }
  }

  detail::check_sheaf_structure(s);
  return s;
}

}  // namespace

KripkeSheaf sheaf_from_json(const std::string& text) { return sheaf_from(parse_json(text)); }

std::string sheaf_to_json(const KripkeSheaf& s) {
  json j;
  j["nodes"] = s.nodes;
  json order = json::array();
  for (size_t w = 0; w < s.nodes.size(); ++w)
    for (size_t v = 0; v < s.nodes.size(); ++v)
      if (w != v && (s.order[w] >> v & 1)) order.push_back({s.nodes[w], s.nodes[v]});
  j["order"] = order;
  json domains = json::object();
  for (size_t w = 0; w < s.nodes.size(); ++w) domains[s.nodes[w]] = s.domains[w];
  j["domains"] = domains;
  json interp = json::object();
  for (size_t w = 0; w < s.nodes.size(); ++w) {
    const KripkeSheaf::Interp& i = s.interp[w];
    const auto& dom = s.domains[w];
    json node = json::object();
    json o = json::array(), set = json::array();
    for (int e : i.o) o.push_back(dom[static_cast<size_t>(e)]);
    for (int e : i.s) set.push_back(dom[static_cast<size_t>(e)]);
    node["O"] = o;
    node["S"] = set;
    json in = json::array();
    for (const auto& [a, b] : i.in)
      in.push_back({dom[static_cast<size_t>(a)], dom[static_cast<size_t>(b)]});
    node["In"] = in;
    json r = json::array();
    for (const auto& t : i.r)
      r.push_back({dom[static_cast<size_t>(t[0])], dom[static_cast<size_t>(t[1])],
                   dom[static_cast<size_t>(t[2])]});
    node["R"] = r;
    for (const auto& [atom, ext] : i.preds) {
      json arr = json::array();
      for (int e : ext) arr.push_back(dom[static_cast<size_t>(e)]);
      node[atom] = arr;
    }
    interp[s.nodes[w]] = node;
  }
  j["interp"] = interp;
  json transitions = json::object();
  for (const auto& [pair, map] : s.transitions) {
    auto [w, v] = pair;
    json t = json::object();
    for (size_t a = 0; a < map.size(); ++a)
      t[s.domains[static_cast<size_t>(w)][a]] =
          s.domains[static_cast<size_t>(v)][static_cast<size_t>(map[a])];
    transitions[s.nodes[static_cast<size_t>(w)] + ">" + s.nodes[static_cast<size_t>(v)]] = t;
  }
  j["transitions"] = transitions;
  return j.dump(2);
}

}  // namespace intck
