// Copyright 2026 The Flowgames Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "flowgames/io.h"

#include <fstream>
#include <set>
#include <sstream>

#include "flowgames/errors.h"

namespace flowgames::io {
namespace {

std::string Escape(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

std::string At(const std::string& base, const std::string& key) {
  return base + "/" + Escape(key);
}

std::string At(const std::string& base, size_t index) {
  return base + "/" + std::to_string(index);
}

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw InputError((where.empty() ? "/" : where) + ": " + what);
}

const Json& Field(const Json& obj, const std::string& key,
                  const std::string& where) {
  if (!obj.is_object()) Fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) Fail(where, "missing field \"" + key + "\"");
  return *it;
}

const Json* OptionalField(const Json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

std::string String(const Json& v, const std::string& where) {
  if (!v.is_string()) Fail(where, "expected a string");
  return v.get<std::string>();
}

const Json& Array(const Json& v, const std::string& where) {
  if (!v.is_array()) Fail(where, "expected an array");
  return v;
}

const Json& Object(const Json& v, const std::string& where) {
  if (!v.is_object()) Fail(where, "expected an object");
  return v;
}

std::vector<std::string> StringList(const Json& v, const std::string& where) {
  std::vector<std::string> out;
  size_t k = 0;
  for (const auto& item : Array(v, where)) out.push_back(String(item, At(where, k++)));
  return out;
}

// Runs `body`, prefixing library InputErrors with the pointer `where`.
template <typename F>
auto Located(const std::string& where, F body) -> decltype(body()) {
  try {
    return body();
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (!msg.empty() && msg[0] == '/') throw;
    Fail(where, msg);
  }
}

void ExpectType(const Json& doc, const std::string& type) {
  const std::string got = GameType(doc);
  if (got != type) {
    Fail("/type", "expected \"" + type + "\", got \"" + got + "\"");
  }
}

}  // namespace

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string Dump(const Json& value) { return value.dump(2) + "\n"; }

void WriteJsonFile(const std::string& path, const Json& value) {
  std::ofstream out(path);
  if (!out) throw InputError(path + ": cannot write file");
  out << Dump(value);
}

Rational ParseRational(const Json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(value.get<int64_t>());
  if (value.is_string()) {
    return Located(where, [&] { return Rational::Parse(value.get<std::string>()); });
  }
  Fail(where, "expected a rational as a \"p/q\" string or an integer");
}

Json ToJson(const Rational& value) { return value.ToString(); }

std::string GameType(const Json& doc) {
  if (!doc.is_object()) Fail("", "expected an object");
  if (const Json* t = OptionalField(doc, "type")) return String(*t, "/type");
  if (doc.contains("gates") || doc.contains("bits")) return "circuit";
  Fail("", "missing field \"type\"");
}

// ---------------------------------------------------------------------------
// Preference games

pref::PreferenceGame ParsePreferenceGame(const Json& doc) {
  ExpectType(doc, "preference");
  const auto players = StringList(Field(doc, "players", ""), "/players");
  std::unordered_map<std::string, int> index;
  for (size_t i = 0; i < players.size(); ++i) {
    if (!index.emplace(players[i], static_cast<int>(i)).second) {
      Fail(At("/players", i), "duplicate player '" + players[i] + "'");
    }
  }
  const Json& prefs = Object(Field(doc, "prefs", ""), "/prefs");
  for (const auto& [key, _] : prefs.items()) {
    if (!index.count(key)) Fail(At("/prefs", key), "unknown player");
  }
  std::vector<pref::TieClasses> lists;
  for (const auto& p : players) {
    const std::string where = At("/prefs", p);
    auto it = prefs.find(p);
    if (it == prefs.end()) Fail("/prefs", "no list for player '" + p + "'");
    pref::TieClasses classes;
    size_t c = 0;
    for (const auto& cls : Array(*it, where)) {
      const std::string cw = At(where, c++);
      std::vector<int> ids;
      size_t k = 0;
      for (const auto& id : Array(cls, cw)) {
        const std::string name = String(id, At(cw, k));
        auto found = index.find(name);
        if (found == index.end()) {
          Fail(At(cw, k), "unknown player '" + name + "'");
        }
        ids.push_back(found->second);
        ++k;
      }
      classes.push_back(std::move(ids));
    }
    lists.push_back(std::move(classes));
  }
  return Located("/prefs", [&] {
    return pref::PreferenceGame(players, std::move(lists));
  });
}

Json ToJson(const pref::PreferenceGame& game) {
  Json doc;
  doc["type"] = "preference";
  doc["players"] = game.names();
  Json prefs = Json::object();
  for (int i = 0; i < game.num_players(); ++i) {
    Json classes = Json::array();
    for (const auto& cls : game.classes(i)) {
      Json ids = Json::array();
      for (int j : cls) ids.push_back(game.name(j));
      classes.push_back(std::move(ids));
    }
    prefs[game.name(i)] = std::move(classes);
  }
  doc["prefs"] = std::move(prefs);
  return doc;
}

// ---------------------------------------------------------------------------
// BGP

bgp::BgpInstance ParseBgp(const Json& doc) {
  ExpectType(doc, "bgp");
  const std::string dest = String(Field(doc, "dest", ""), "/dest");
  const Json& paths = Object(Field(doc, "paths", ""), "/paths");
  const Json& prefs = Object(Field(doc, "prefs", ""), "/prefs");

  std::vector<std::string> nodes;
  std::unordered_map<std::string, int> index;
  auto add = [&](const std::string& name) {
    if (index.emplace(name, static_cast<int>(nodes.size())).second) {
      nodes.push_back(name);
    }
  };
  if (const Json* listed = OptionalField(doc, "nodes")) {
    for (const auto& name : StringList(*listed, "/nodes")) {
      if (index.count(name)) Fail("/nodes", "duplicate node '" + name + "'");
      add(name);
    }
    if (!index.count(dest)) Fail("/dest", "destination is not a listed node");
  } else {
    add(dest);
    for (const auto& [owner, list] : paths.items()) {
      add(owner);
      size_t p = 0;
      for (const auto& path : Array(list, At("/paths", owner))) {
        size_t k = 0;
        const std::string pw = At(At("/paths", owner), p++);
        for (const auto& x : Array(path, pw)) add(String(x, At(pw, k++)));
      }
    }
    for (const auto& [owner, _] : prefs.items()) add(owner);
  }

  const int n = static_cast<int>(nodes.size());
  std::vector<std::vector<bgp::Path>> all_paths(n);
  std::vector<std::vector<std::vector<int>>> classes(n);
  for (const auto& [owner, list] : paths.items()) {
    const std::string ow = At("/paths", owner);
    auto it = index.find(owner);
    if (it == index.end()) Fail(ow, "unknown node");
    size_t p = 0;
    for (const auto& path : Array(list, ow)) {
      const std::string pw = At(ow, p++);
      bgp::Path ids;
      size_t k = 0;
      for (const auto& x : Array(path, pw)) {
        const std::string name = String(x, At(pw, k));
        auto found = index.find(name);
        if (found == index.end()) Fail(At(pw, k), "unknown node '" + name + "'");
        ids.push_back(found->second);
        ++k;
      }
      all_paths[it->second].push_back(std::move(ids));
    }
  }
  for (const auto& [owner, list] : prefs.items()) {
    const std::string ow = At("/prefs", owner);
    auto it = index.find(owner);
    if (it == index.end()) Fail(ow, "unknown node");
    size_t c = 0;
    for (const auto& cls : Array(list, ow)) {
      const std::string cw = At(ow, c++);
      std::vector<int> ids;
      size_t k = 0;
      for (const auto& p : Array(cls, cw)) {
        if (!p.is_number_integer()) Fail(At(cw, k), "expected a path index");
        ids.push_back(p.get<int>());
        ++k;
      }
      classes[it->second].push_back(std::move(ids));
    }
  }
  return Located("", [&] {
    return bgp::BgpInstance(nodes, index.at(dest), std::move(all_paths),
                            std::move(classes));
  });
}

Json ToJson(const bgp::BgpInstance& inst) {
  Json doc;
  doc["type"] = "bgp";
  doc["nodes"] = inst.names();
  doc["dest"] = inst.name(inst.dest());
  Json paths = Json::object();
  Json prefs = Json::object();
  for (int v = 0; v < inst.num_nodes(); ++v) {
    if (inst.num_paths(v) == 0) continue;
    Json list = Json::array();
    for (const auto& path : inst.paths(v)) {
      Json names = Json::array();
      for (int x : path) names.push_back(inst.name(x));
      list.push_back(std::move(names));
    }
    paths[inst.name(v)] = std::move(list);
    prefs[inst.name(v)] = inst.classes(v);
  }
  doc["paths"] = std::move(paths);
  doc["prefs"] = std::move(prefs);
  return doc;
}

// ---------------------------------------------------------------------------
// BBC

namespace {

std::pair<std::string, std::string> SplitEdge(const std::string& key,
                                              const std::string& where) {
  const auto comma = key.find(',');
  if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos) {
    Fail(where, "edge keys have the form \"u,v\"");
  }
  return {key.substr(0, comma), key.substr(comma + 1)};
}

}  // namespace

bbc::BbcInstance ParseBbc(const Json& doc) {
  ExpectType(doc, "bbc");
  const std::string dest = String(Field(doc, "dest", ""), "/dest");
  const Json& cost = Object(Field(doc, "cost", ""), "/cost");
  const Json& budget = Object(Field(doc, "budget", ""), "/budget");
  const Json* lengths = OptionalField(doc, "lengths");
  if (lengths) Object(*lengths, "/lengths");
  const Rational big_m = ParseRational(Field(doc, "M", ""), "/M");

  std::vector<std::string> nodes;
  std::unordered_map<std::string, int> index;
  auto add = [&](const std::string& name) {
    if (index.emplace(name, static_cast<int>(nodes.size())).second) {
      nodes.push_back(name);
    }
  };
  if (const Json* listed = OptionalField(doc, "nodes")) {
    for (const auto& name : StringList(*listed, "/nodes")) {
      if (index.count(name)) Fail("/nodes", "duplicate node '" + name + "'");
      add(name);
    }
    if (!index.count(dest)) Fail("/dest", "destination is not a listed node");
  } else {
    for (const auto& [u, row] : cost.items()) {
      add(u);
      for (const auto& [v, _] : Object(row, At("/cost", u)).items()) add(v);
    }
    for (const auto& [u, _] : budget.items()) add(u);
    add(dest);
  }
  auto lookup = [&](const std::string& name, const std::string& where) {
    auto it = index.find(name);
    if (it == index.end()) Fail(where, "unknown node '" + name + "'");
    return it->second;
  };

  const int n = static_cast<int>(nodes.size());
  std::map<bbc::Edge, Rational> costs;
  for (const auto& [u, row] : cost.items()) {
    const std::string uw = At("/cost", u);
    const int ui = lookup(u, uw);
    for (const auto& [v, c] : Object(row, uw).items()) {
      costs[{ui, lookup(v, At(uw, v))}] = ParseRational(c, At(uw, v));
    }
  }
  std::vector<Rational> budgets(n, Rational(0));
  for (const auto& [u, b] : budget.items()) {
    budgets[lookup(u, At("/budget", u))] = ParseRational(b, At("/budget", u));
  }
  std::vector<std::map<bbc::Edge, Rational>> lens(n);
  if (lengths) {
    for (const auto& [u, table] : lengths->items()) {
      const std::string uw = At("/lengths", u);
      const int ui = lookup(u, uw);
      for (const auto& [key, len] : Object(table, uw).items()) {
        const std::string kw = At(uw, key);
        auto [x, y] = SplitEdge(key, kw);
        lens[ui][{lookup(x, kw), lookup(y, kw)}] = ParseRational(len, kw);
      }
    }
  }
  bbc::PenaltyMode mode = bbc::PenaltyMode::kSourceOnly;
  if (const Json* p = OptionalField(doc, "penalty")) {
    const std::string s = String(*p, "/penalty");
    if (s == "source") {
      mode = bbc::PenaltyMode::kSourceOnly;
    } else if (s == "any") {
      mode = bbc::PenaltyMode::kAnyNode;
    } else {
      Fail("/penalty", "expected \"source\" or \"any\"");
    }
  }
  return Located("", [&] {
    return bbc::BbcInstance(nodes, index.at(dest), std::move(costs),
                            std::move(budgets), std::move(lens), big_m, mode);
  });
}

Json ToJson(const bbc::BbcInstance& inst) {
  Json doc;
  doc["type"] = "bbc";
  doc["nodes"] = inst.names();
  doc["dest"] = inst.name(inst.dest());
  Json cost = Json::object();
  for (const auto& [e, c] : inst.costs()) {
    cost[inst.name(e.first)][inst.name(e.second)] = ToJson(c);
  }
  doc["cost"] = std::move(cost);
  Json budget = Json::object();
  for (int u = 0; u < inst.num_nodes(); ++u) {
    if (u != inst.dest()) budget[inst.name(u)] = ToJson(inst.budget(u));
  }
  doc["budget"] = std::move(budget);
  Json lengths = Json::object();
  for (int u = 0; u < inst.num_nodes(); ++u) {
    if (inst.lengths(u).empty()) continue;
    Json table = Json::object();
    for (const auto& [e, len] : inst.lengths(u)) {
      table[inst.name(e.first) + "," + inst.name(e.second)] = ToJson(len);
    }
    lengths[inst.name(u)] = std::move(table);
  }
  doc["lengths"] = std::move(lengths);
  doc["M"] = ToJson(inst.big_m());
  doc["penalty"] =
      inst.penalty() == bbc::PenaltyMode::kSourceOnly ? "source" : "any";
  return doc;
}

// ---------------------------------------------------------------------------
// Matrix games

personalized::MatrixGame ParseMatrix(const Json& doc) {
  ExpectType(doc, "matrix");
  const auto players = StringList(Field(doc, "players", ""), "/players");
  const Json& strategies = Object(Field(doc, "strategies", ""), "/strategies");
  std::vector<std::vector<std::string>> lists;
  for (const auto& p : players) {
    auto it = strategies.find(p);
    if (it == strategies.end()) {
      Fail("/strategies", "no strategies for player '" + p + "'");
    }
    lists.push_back(StringList(*it, At("/strategies", p)));
  }
  auto game = Located("/strategies", [&] {
    return personalized::MatrixGame(players, std::move(lists));
  });
  const int k = game.num_players();
  if (const Json* utilities = OptionalField(doc, "utilities")) {
    size_t e = 0;
    for (const auto& entry : Array(*utilities, "/utilities")) {
      const std::string ew = At("/utilities", e++);
      const auto names = StringList(Field(entry, "edge", ew), At(ew, "edge"));
      if (static_cast<int>(names.size()) != k) {
        Fail(At(ew, "edge"), "expected one strategy per player");
      }
      std::vector<int> edge(k);
      for (int i = 0; i < k; ++i) {
        edge[i] = Located(At(At(ew, "edge"), i),
                          [&] { return game.strategy_index(i, names[i]); });
      }
      const std::string pw = At(ew, "payoffs");
      for (const auto& [player, value] :
           Object(Field(entry, "payoffs", ew), pw).items()) {
        const int i = Located(At(pw, player),
                              [&] { return game.player_index(player); });
        game.add_utility(i, edge, ParseRational(value, At(pw, player)));
      }
    }
  }
  return game;
}

Json ToJson(const personalized::MatrixGame& game) {
  Json doc;
  doc["type"] = "matrix";
  doc["players"] = game.players();
  Json strategies = Json::object();
  for (int i = 0; i < game.num_players(); ++i) {
    strategies[game.player(i)] = game.strategies(i);
  }
  doc["strategies"] = std::move(strategies);
  std::map<int64_t, std::vector<int>> touched;
  for (int i = 0; i < game.num_players(); ++i) {
    for (const auto& [code, v] : game.utilities(i)) {
      if (!v.is_zero()) touched[code].push_back(i);
    }
  }
  Json utilities = Json::array();
  for (const auto& [code, who] : touched) {
    Json entry;
    Json edge = Json::array();
    const auto strat = game.Decode(code);
    for (int i = 0; i < game.num_players(); ++i) {
      edge.push_back(game.strategy(i, strat[i]));
    }
    entry["edge"] = std::move(edge);
    Json payoffs = Json::object();
    for (int i : who) payoffs[game.player(i)] = ToJson(game.utility(i, code));
    entry["payoffs"] = std::move(payoffs);
    utilities.push_back(std::move(entry));
  }
  doc["utilities"] = std::move(utilities);
  return doc;
}

// ---------------------------------------------------------------------------
// Graphical games

reductions::GraphicalGame ParseGraphical(const Json& doc) {
  ExpectType(doc, "graphical");
  const Json& nodes = Array(Field(doc, "nodes", ""), "/nodes");
  std::unordered_map<std::string, int> index;
  size_t k = 0;
  for (const auto& node : nodes) {
    const std::string w = At("/nodes", k);
    const std::string id = String(Field(node, "id", w), At(w, "id"));
    if (!index.emplace(id, static_cast<int>(k)).second) {
      Fail(At(w, "id"), "duplicate node '" + id + "'");
    }
    ++k;
  }
  reductions::GraphicalGame game;
  k = 0;
  for (const auto& node : nodes) {
    const std::string w = At("/nodes", k++);
    reductions::GraphicalNode out;
    out.id = node["id"].get<std::string>();
    if (const Json* inputs = OptionalField(node, "inputs")) {
      const auto names = StringList(*inputs, At(w, "inputs"));
      for (size_t j = 0; j < names.size(); ++j) {
        auto it = index.find(names[j]);
        if (it == index.end()) {
          Fail(At(At(w, "inputs"), j), "unknown node '" + names[j] + "'");
        }
        out.inputs.push_back(it->second);
      }
    }
    const size_t arity = out.inputs.size() + 1;
    if (const Json* payoff = OptionalField(node, "payoff")) {
      const std::string pw = At(w, "payoff");
      for (const auto& [key, value] : Object(*payoff, pw).items()) {
        std::vector<int> bits;
        std::stringstream ss(key);
        std::string part;
        while (std::getline(ss, part, ',')) {
          if (part != "0" && part != "1") Fail(At(pw, key), "keys are comma-separated bits");
          bits.push_back(part == "1");
        }
        if (bits.size() != arity) {
          Fail(At(pw, key), "expected " + std::to_string(arity) + " bits");
        }
        out.payoff[bits] = ParseRational(value, At(pw, key));
      }
    }
    game.nodes.push_back(std::move(out));
  }
  return game;
}

Json ToJson(const reductions::GraphicalGame& game) {
  Json doc;
  doc["type"] = "graphical";
  Json nodes = Json::array();
  for (const auto& node : game.nodes) {
    Json n;
    n["id"] = node.id;
    Json inputs = Json::array();
    for (int j : node.inputs) inputs.push_back(game.nodes[j].id);
    n["inputs"] = std::move(inputs);
    Json payoff = Json::object();
    for (const auto& [bits, v] : node.payoff) {
      std::string key;
      for (size_t b = 0; b < bits.size(); ++b) {
        key += (b ? "," : "") + std::to_string(bits[b]);
      }
      payoff[key] = ToJson(v);
    }
    n["payoff"] = std::move(payoff);
    nodes.push_back(std::move(n));
  }
  doc["nodes"] = std::move(nodes);
  return doc;
}

// ---------------------------------------------------------------------------
// Circuits

gadgets::Circuit ParseCircuit(const Json& doc) {
  const std::string type = GameType(doc);
  if (type != "circuit") Fail("/type", "expected \"circuit\", got \"" + type + "\"");
  gadgets::Circuit circuit;
  if (const Json* inputs = OptionalField(doc, "inputs")) {
    circuit.inputs = StringList(*inputs, "/inputs");
  }
  if (const Json* gates = OptionalField(doc, "gates")) {
    size_t k = 0;
    for (const auto& g : Array(*gates, "/gates")) {
      const std::string w = At("/gates", k++);
      gadgets::Gate gate;
      gate.id = String(Field(g, "id", w), At(w, "id"));
      const std::string kind = String(Field(g, "kind", w), At(w, "kind"));
      gate.kind = Located(At(w, "kind"), [&] { return gadgets::ParseGadgetKind(kind); });
      if (gate.kind == gadgets::GadgetKind::kOne) {
        Fail(At(w, "kind"), "ONE is internal; use VALUE");
      }
      if (const Json* args = OptionalField(g, "args")) {
        gate.args = StringList(*args, At(w, "args"));
      }
      circuit.gates.push_back(std::move(gate));
    }
  }
  if (const Json* outputs = OptionalField(doc, "outputs")) {
    circuit.outputs = StringList(*outputs, "/outputs");
  }
  if (const Json* bits = OptionalField(doc, "bits")) {
    gadgets::BitsSpec spec;
    spec.of = String(Field(*bits, "of", "/bits"), "/bits/of");
    const Json& n = Field(*bits, "n", "/bits");
    if (!n.is_number_integer()) Fail("/bits/n", "expected an integer");
    spec.n = n.get<int>();
    if (spec.n < 1 || spec.n > 32) Fail("/bits/n", "expected 1 <= n <= 32");
    circuit.bits = spec;
  }
  if (const Json* fb = OptionalField(doc, "feedback")) {
    gadgets::FeedbackSpec spec;
    spec.coordinates = StringList(Field(*fb, "coordinates", "/feedback"),
                                  "/feedback/coordinates");
    size_t k = 0;
    for (const auto& group :
         Array(Field(*fb, "groups", "/feedback"), "/feedback/groups")) {
      spec.groups.push_back(StringList(group, At("/feedback/groups", k++)));
    }
    circuit.feedback = spec;
  }
  if (const Json* eps = OptionalField(doc, "epsilon_l")) {
    circuit.eps_l = ParseRational(*eps, "/epsilon_l");
  }
  return circuit;
}

// ---------------------------------------------------------------------------
// Solutions

reductions::NamedSolution ParseWeights(const Json& doc) {
  const Json& weights = Object(Field(doc, "weights", ""), "/weights");
  reductions::NamedSolution out;
  for (const auto& [player, row] : weights.items()) {
    const std::string pw = At("/weights", player);
    auto& dst = out[player];
    for (const auto& [strategy, value] : Object(row, pw).items()) {
      dst[strategy] = ParseRational(value, At(pw, strategy));
    }
  }
  return out;
}

Json WeightsJson(const reductions::NamedSolution& solution) {
  Json weights = Json::object();
  for (const auto& [player, row] : solution) {
    Json r = Json::object();
    for (const auto& [strategy, value] : row) {
      if (!value.is_zero()) r[strategy] = ToJson(value);
    }
    weights[player] = std::move(r);
  }
  Json doc;
  doc["weights"] = std::move(weights);
  return doc;
}

Json ToJson(const reductions::SolutionMap& map) {
  Json forward = Json::array();
  for (const auto& [src, dst] : map.forward_table()) {
    forward.push_back({{"source", {src.player, src.strategy}},
                       {"target", {dst.player, dst.strategy}}});
  }
  Json slack = Json::array();
  for (const auto& s : map.slack()) slack.push_back({s.player, s.strategy});
  Json doc;
  doc["forward"] = std::move(forward);
  doc["slack"] = std::move(slack);
  return doc;
}

Json ToJson(const reductions::MetricEncoding& enc) {
  const auto& inst = enc.augmented;
  Json tables = Json::object();
  for (int v = 0; v < inst.num_nodes(); ++v) {
    if (inst.num_paths(v) == 0) continue;
    const auto& t = enc.tables[v];
    Json lengths = Json::object();
    for (const auto& [e, len] : t.explicit_lengths) {
      lengths[inst.name(e.first) + "," + inst.name(e.second)] = len;
    }
    tables[inst.name(v)] = {{"default", t.default_length},
                            {"lengths", std::move(lengths)}};
  }
  Json doc;
  doc["instance"] = ToJson(inst);
  doc["tables"] = std::move(tables);
  return doc;
}

}  // namespace flowgames::io
