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

#include "flowgames/gadgets.h"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

#include "flowgames/errors.h"

namespace flowgames::gadgets {
namespace {

struct KindInfo {
  GadgetKind kind;
  const char* name;
  int arity;
};

constexpr KindInfo kKinds[] = {
    {GadgetKind::kOr, "OR", 2},       {GadgetKind::kNot, "NOT", 1},
    {GadgetKind::kAnd, "AND", 2},     {GadgetKind::kSum, "SUM", 2},
    {GadgetKind::kDiff, "DIFF", 2},   {GadgetKind::kCopy, "COPY", 1},
    {GadgetKind::kDouble, "DOUBLE", 1}, {GadgetKind::kHalf, "HALF", 1},
    {GadgetKind::kValue, "VALUE", 0}, {GadgetKind::kLess, "LESS", 2},
    {GadgetKind::kCorrection, "CORRECTION", 1}, {GadgetKind::kOne, "ONE", 0},
};

const KindInfo& Info(GadgetKind kind) {
  for (const auto& info : kKinds) {
    if (info.kind == kind) return info;
  }
  throw InputError("unknown gadget kind");
}

// Number of doublings in LESS: 1 + ceil(log2(1 / eps_l)).
int LessDoublings(const Rational& eps_l) {
  int k = 0;
  Rational scaled = eps_l;
  while (scaled < Rational(1)) {
    scaled *= Rational(2);
    ++k;
  }
  return k + 1;
}

// Appends players for one gadget instance. `inject` is prepended as the
// first choice of the players that CORRECTION steers: H, H2 and H3 of a
// HALF, and C and S of a DOUBLE.
class Builder {
 public:
  Builder(std::vector<PlayerSpec>* players, Rational eps_l)
      : players_(players), eps_l_(std::move(eps_l)) {}

  GadgetNode Build(GadgetKind kind, const std::vector<std::string>& in,
                   const std::string& inst, const std::string& inject = "") {
    if (static_cast<int>(in.size()) != Info(kind).arity) {
      throw InputError(std::string(Info(kind).name) + " expects " +
                       std::to_string(Info(kind).arity) + " input(s), got " +
                       std::to_string(in.size()));
    }
    GadgetNode node;
    node.kind = kind;
    node.instance = inst;
    node.inputs = in;
    switch (kind) {
      case GadgetKind::kOne:
        node.output = Add(inst + "/V", {});
        break;
      case GadgetKind::kOr:
      case GadgetKind::kSum: {
        const char* r = kind == GadgetKind::kOr ? "R" : "S";
        std::string helper = Add(inst + "/" + r + "1", {{in[0]}, {in[1]}});
        node.output = Add(inst + "/" + r, Prefixed(inject, {{helper}}));
        break;
      }
      case GadgetKind::kNot:
        node.output = Add(inst + "/N", {{in[0]}});
        break;
      case GadgetKind::kDiff: {
        std::string d1 = Add(inst + "/D1", {{in[0]}});
        node.output = Add(inst + "/D", {{d1}, {in[1]}});
        break;
      }
      case GadgetKind::kCopy: {
        std::string c1 = Add(inst + "/C1", {{in[0]}});
        node.output = Add(inst + "/C", Prefixed(inject, {{c1}}));
        break;
      }
      case GadgetKind::kHalf: {
        std::string h1 = Add(inst + "/H1", {{in[0]}});
        std::string h = inst + "/H", h2 = inst + "/H2", h3 = inst + "/H3";
        Add(h2, Prefixed(inject, {{h1}, {h3}}));
        Add(h3, Prefixed(inject, {{h1}, {h}}));
        node.output = Add(h, Prefixed(inject, {{h1}, {h2}}));
        break;
      }
      case GadgetKind::kAnd: {
        GadgetNode nx = Child(&node, GadgetKind::kNot, {in[0]}, inst + "/nx");
        GadgetNode ny = Child(&node, GadgetKind::kNot, {in[1]}, inst + "/ny");
        GadgetNode r = Child(&node, GadgetKind::kOr, {nx.output, ny.output},
                             inst + "/or");
        node.output = Child(&node, GadgetKind::kNot, {r.output}, inst + "/out")
                          .output;
        break;
      }
      case GadgetKind::kDouble: {
        GadgetNode c =
            Child(&node, GadgetKind::kCopy, {in[0]}, inst + "/copy", inject);
        node.output = Child(&node, GadgetKind::kSum, {in[0], c.output},
                            inst + "/sum", inject)
                          .output;
        break;
      }
      case GadgetKind::kValue: {
        GadgetNode one = Child(&node, GadgetKind::kOne, {}, inst + "/one");
        node.output =
            Child(&node, GadgetKind::kHalf, {one.output}, inst + "/half")
                .output;
        break;
      }
      case GadgetKind::kLess: {
        std::string wire =
            Child(&node, GadgetKind::kDiff, {in[0], in[1]}, inst + "/diff")
                .output;
        const int k = LessDoublings(eps_l_);
        for (int i = 1; i <= k; ++i) {
          wire = Child(&node, GadgetKind::kDouble, {wire},
                       inst + "/m" + std::to_string(i))
                     .output;
        }
        node.output = wire;
        node.complement = inst + "/m" + std::to_string(k) + "/sum/S1";
        break;
      }
      case GadgetKind::kCorrection: {
        GadgetNode half =
            Child(&node, GadgetKind::kValue, {}, inst + "/value");
        GadgetNode less = Child(&node, GadgetKind::kLess,
                                {in[0], half.output}, inst + "/less");
        const std::string& high = less.output;     // ~1 when input >= 1/2
        const std::string& low = less.complement;  // ~1 when input <= 1/2
        std::string h = in[0];
        for (int i = 1; i <= 3; ++i) {
          h = Child(&node, GadgetKind::kHalf, {h},
                    inst + "/h" + std::to_string(i), high)
                  .output;
        }
        GadgetNode dbl =
            Child(&node, GadgetKind::kDouble, {in[0]}, inst + "/double", low);
        node.output =
            Child(&node, GadgetKind::kSum, {h, dbl.output}, inst + "/sum")
                .output;
        break;
      }
    }
    return node;
  }

 private:
  using Classes = std::vector<std::vector<std::string>>;

  static Classes Prefixed(const std::string& inject, Classes classes) {
    if (!inject.empty()) classes.insert(classes.begin(), {inject});
    return classes;
  }

  // Adds a player whose list is `classes` followed by itself.
  std::string Add(const std::string& id, Classes classes) {
    classes.push_back({id});
    players_->push_back({id, std::move(classes)});
    return id;
  }

  GadgetNode Child(GadgetNode* parent, GadgetKind kind,
                   const std::vector<std::string>& in, const std::string& inst,
                   const std::string& inject = "") {
    parent->children.push_back(Build(kind, in, inst, inject));
    return parent->children.back();
  }

  std::vector<PlayerSpec>* players_;
  Rational eps_l_;
};

void CheckEpsL(const Rational& eps_l) {
  if (eps_l.sign() <= 0 || eps_l > Rational(1, 2)) {
    throw InputError("epsilon_l must lie in (0, 1/2], got " +
                     eps_l.ToString());
  }
}

// Tarjan's algorithm over "i lists j" edges among internal players. SCCs
// come out dependencies first.
std::vector<std::vector<int>> DependencyOrder(
    const pref::PreferenceGame& game, const std::vector<bool>& internal) {
  const int n = game.num_players();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> sccs;
  int counter = 0;
  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (const auto& cls : game.classes(v)) {
      for (int u : cls) {
        if (u == v || !internal[u]) continue;
        if (index[u] < 0) {
          visit(u);
          low[v] = std::min(low[v], low[u]);
        } else if (on_stack[u]) {
          low[v] = std::min(low[v], index[u]);
        }
      }
    }
    if (low[v] == index[v]) {
      std::vector<int> scc;
      int u;
      do {
        u = stack.back();
        stack.pop_back();
        on_stack[u] = false;
        scc.push_back(u);
      } while (u != v);
      std::sort(scc.begin(), scc.end());
      sccs.push_back(std::move(scc));
    }
  };
  for (int v = 0; v < n; ++v) {
    if (internal[v] && index[v] < 0) visit(v);
  }
  return sccs;
}

// Solves a three-cycle i -> j -> k -> i where each member lists players
// with known weights, then its cycle successor, then itself. With r_i the
// weight left after the known prefix, an interior solution satisfies
// x_i + x_succ(i) = r_i.
void SolveThreeCycle(const pref::PreferenceGame& game,
                     const std::vector<int>& scc, pref::Profile* w) {
  std::set<int> members(scc.begin(), scc.end());
  std::map<int, int> succ;
  std::map<int, Rational> residual;
  for (int i : scc) {
    const auto& classes = game.classes(i);
    Rational remaining(1);
    bool found = false;
    for (const auto& cls : classes) {
      bool has_member = false;
      for (int u : cls) has_member |= (u != i && members.count(u) > 0);
      if (has_member) {
        if (cls.size() != 1 || found) {
          throw AnalysisError("cycle through " + game.name(i) +
                              " does not have the halving structure");
        }
        succ[i] = cls[0];
        found = true;
        continue;
      }
      if (std::find(cls.begin(), cls.end(), i) != cls.end()) break;
      if (found) {
        throw AnalysisError("cycle through " + game.name(i) +
                            " does not have the halving structure");
      }
      for (int u : cls) {
        Rational take = Min(remaining, (*w)[u][u]);
        remaining -= take;
      }
    }
    if (!found) {
      throw AnalysisError("cycle through " + game.name(i) +
                          " does not have the halving structure");
    }
    residual[i] = remaining;
  }
  const int a = scc[0], b = succ[a], c = succ[b];
  if (succ[c] != a || b == a || c == a || c == b) {
    throw AnalysisError("cycle through " + game.name(a) +
                        " does not have the halving structure");
  }
  const Rational ra = residual[a], rb = residual[b], rc = residual[c];
  const Rational half(1, 2);
  std::map<int, Rational> x = {{a, (ra - rb + rc) * half},
                               {b, (rb - rc + ra) * half},
                               {c, (rc - ra + rb) * half}};
  for (const auto& [v, value] : x) {
    if (value.sign() < 0) {
      throw AnalysisError("cycle through " + game.name(v) +
                          " has no interior solution");
    }
    (*w)[v] = std::vector<Rational>(game.num_players(), Rational(0));
    (*w)[v][v] = value;
  }
}

}  // namespace

std::string ToString(GadgetKind kind) { return Info(kind).name; }

GadgetKind ParseGadgetKind(const std::string& name) {
  for (const auto& info : kKinds) {
    if (name == info.name) return info.kind;
  }
  throw InputError("unknown gadget kind '" + name + "'");
}

int Arity(GadgetKind kind) { return Info(kind).arity; }

GameFragment BuildGadget(GadgetKind kind,
                         const std::vector<std::string>& inputs,
                         const std::string& instance, const Rational& eps_l) {
  CheckEpsL(eps_l);
  if (instance.empty()) throw InputError("gadget instance name is empty");
  GameFragment fragment;
  fragment.inputs = inputs;
  Builder builder(&fragment.players, eps_l);
  fragment.root = builder.Build(kind, inputs, instance);
  fragment.output = fragment.root.output;
  return fragment;
}

pref::PreferenceGame FragmentGame(const GameFragment& fragment) {
  std::vector<std::string> names;
  std::vector<std::vector<std::vector<std::string>>> lists;
  std::set<std::string> seen;
  auto add = [&](const std::string& id,
                 std::vector<std::vector<std::string>> prefs) {
    if (!seen.insert(id).second) {
      throw InputError("player id '" + id + "' occurs twice in fragment");
    }
    names.push_back(id);
    lists.push_back(std::move(prefs));
  };
  for (const auto& in : fragment.inputs) add(in, {{in}});
  for (const auto& p : fragment.players) add(p.id, p.prefs);
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(names.size()); ++i) index[names[i]] = i;
  std::vector<pref::TieClasses> prefs;
  for (size_t i = 0; i < names.size(); ++i) {
    pref::TieClasses classes;
    for (const auto& cls : lists[i]) {
      std::vector<int> ids;
      for (const auto& id : cls) {
        auto it = index.find(id);
        if (it == index.end()) {
          throw InputError("player '" + names[i] + "' lists unknown player '" +
                           id + "'");
        }
        ids.push_back(it->second);
      }
      classes.push_back(std::move(ids));
    }
    prefs.push_back(std::move(classes));
  }
  return pref::PreferenceGame(std::move(names), std::move(prefs));
}

FixpointResult EvaluateFixpoint(const GameFragment& fragment,
                                const std::map<std::string, Rational>& pins) {
  FixpointResult result;
  result.game = FragmentGame(fragment);
  const auto& game = result.game;
  const int n = game.num_players();
  result.profile = pref::ZeroProfile(n);
  auto& w = result.profile;

  std::vector<bool> internal(n, true);
  for (const auto& in : fragment.inputs) {
    auto it = pins.find(in);
    if (it == pins.end()) {
      throw InputError("input '" + in + "' is not pinned");
    }
    if (it->second.sign() < 0 || it->second > Rational(1)) {
      throw InputError("pinned value for '" + in + "' is outside [0, 1]");
    }
    const int i = game.index(in);
    internal[i] = false;
    w[i][i] = it->second;
  }
  for (const auto& [id, value] : pins) {
    if (std::find(fragment.inputs.begin(), fragment.inputs.end(), id) ==
        fragment.inputs.end()) {
      throw InputError("pinned player '" + id + "' is not an input");
    }
  }

  for (const auto& scc : DependencyOrder(game, internal)) {
    if (scc.size() == 1) {
      w[scc[0]] = pref::BestResponse(game, w, scc[0]);
    } else if (scc.size() == 3) {
      SolveThreeCycle(game, scc, &w);
      for (int v : scc) {
        auto row = pref::BestResponse(game, w, v);
        if (row[v] != w[v][v]) {
          throw AnalysisError("cycle through " + game.name(v) +
                              " is not self-consistent");
        }
        w[v] = std::move(row);
      }
    } else {
      throw AnalysisError("cyclic dependency of size " +
                          std::to_string(scc.size()) + " through " +
                          game.name(scc[0]) + " cannot be evaluated exactly");
    }
    result.order.insert(result.order.end(), scc.begin(), scc.end());
  }

  std::vector<int> subset;
  for (int i = 0; i < n; ++i) {
    if (internal[i]) subset.push_back(i);
  }
  auto check = pref::IsEpsEquilibrium(game, w, Rational(0), &subset);
  if (!check.ok) {
    throw AnalysisError("fixpoint fails the best-response check at " +
                        game.name(check.player));
  }
  if (!fragment.output.empty()) {
    const int out = game.index(fragment.output);
    result.output = w[out][out];
  }
  return result;
}

namespace {

Interval Clamp(Rational lo, Rational hi) {
  const Rational zero(0), one(1);
  return {Min(one, Max(zero, lo)), Min(one, Max(zero, hi))};
}

Interval Propagate(const GadgetNode& node, std::map<std::string, Interval>* wires,
                   const Rational& eps, const Rational& eps_l) {
  auto in = [&](int k) -> const Interval& {
    auto it = wires->find(node.inputs[k]);
    if (it == wires->end()) {
      throw InputError("no interval for wire '" + node.inputs[k] + "'");
    }
    return it->second;
  };
  const Rational one(1), zero(0);
  Interval out;
  switch (node.kind) {
    case GadgetKind::kOne:
      out = {one, one};
      break;
    case GadgetKind::kNot:
      out = Clamp(one - in(0).hi - eps, one - in(0).lo + eps);
      break;
    case GadgetKind::kOr:
    case GadgetKind::kSum:
      out = Clamp(Min(one, in(0).lo + in(1).lo) - eps * 3,
                  Min(one, in(0).hi + in(1).hi) + eps * 3);
      break;
    case GadgetKind::kDiff:
      out = Clamp(Max(zero, in(0).lo - in(1).hi) - eps * 3,
                  Max(zero, in(0).hi - in(1).lo) + eps * 3);
      break;
    case GadgetKind::kCopy:
      out = Clamp(in(0).lo - eps * 2, in(0).hi + eps * 2);
      break;
    case GadgetKind::kHalf:
      out = Clamp(in(0).lo / Rational(2) - eps * 4,
                  in(0).hi / Rational(2) + eps * 4);
      break;
    case GadgetKind::kCorrection: {
      const Interval& x = in(0);
      if (x.hi <= eps_l * 5) {
        out = {zero, eps_l * 2};
      } else if (x.lo >= one - eps_l * 5) {
        out = {one - eps_l * 2, one};
      } else {
        out = {zero, one};
      }
      break;
    }
    case GadgetKind::kAnd:
    case GadgetKind::kDouble:
    case GadgetKind::kValue:
    case GadgetKind::kLess:
      for (const auto& child : node.children) {
        Propagate(child, wires, eps, eps_l);
      }
      out = wires->at(node.output);
      break;
  }
  (*wires)[node.output] = out;
  return out;
}

}  // namespace

Interval IntervalPropagate(const GadgetNode& gadget,
                           const std::map<std::string, Interval>& inputs,
                           const Rational& eps, const Rational& eps_l) {
  CheckEpsL(eps_l);
  if (eps.sign() < 0) throw InputError("eps must be non-negative");
  if (eps > eps_l * eps_l * eps_l) {
    throw InputError("interval bounds need eps <= eps_l^3");
  }
  for (const auto& w : gadget.inputs) {
    auto it = inputs.find(w);
    if (it == inputs.end()) {
      throw InputError("no interval for input '" + w + "'");
    }
    if (it->second.lo > it->second.hi || it->second.lo.sign() < 0 ||
        it->second.hi > Rational(1)) {
      throw InputError("interval for '" + w + "' is not inside [0, 1]");
    }
  }
  std::map<std::string, Interval> wires = inputs;
  return Propagate(gadget, &wires, eps, eps_l);
}

CompiledCircuit CompileCircuit(const Circuit& circuit) {
  CheckEpsL(circuit.eps_l);
  CompiledCircuit out;
  GameFragment& frag = out.fragment;
  Builder builder(&frag.players, circuit.eps_l);

  std::set<std::string> fed_back;
  if (circuit.feedback) {
    if (circuit.feedback->coordinates.size() != 3) {
      throw InputError("feedback needs exactly three coordinates");
    }
    if (circuit.feedback->groups.size() != 8) {
      throw InputError("feedback needs eight groups of outputs");
    }
    for (const auto& g : circuit.feedback->groups) {
      if (g.size() != 6) {
        throw InputError("each feedback group needs six wires");
      }
    }
    fed_back.insert(circuit.feedback->coordinates.begin(),
                    circuit.feedback->coordinates.end());
  }

  std::set<std::string> wires;
  for (const auto& in : circuit.inputs) {
    if (in.empty() || in.find('/') != std::string::npos) {
      throw InputError("input name '" + in + "' may not be empty or contain /");
    }
    if (!wires.insert(in).second) {
      throw InputError("input '" + in + "' declared twice");
    }
    out.ports[in] = in;
  }
  for (const auto& c : fed_back) {
    if (!wires.count(c)) {
      throw InputError("feedback coordinate '" + c + "' is not an input");
    }
  }
  for (const auto& in : circuit.inputs) {
    if (!fed_back.count(in)) frag.inputs.push_back(in);
  }

  std::map<std::string, const Gate*> gates;
  for (const auto& g : circuit.gates) {
    if (g.id.empty() || g.id.find('/') != std::string::npos) {
      throw InputError("gate id '" + g.id + "' may not be empty or contain /");
    }
    if (wires.count(g.id) || !gates.emplace(g.id, &g).second) {
      throw InputError("wire '" + g.id + "' defined twice");
    }
    if (static_cast<int>(g.args.size()) != Arity(g.kind)) {
      throw InputError("gate '" + g.id + "': " + ToString(g.kind) +
                       " expects " + std::to_string(Arity(g.kind)) +
                       " argument(s)");
    }
  }

  // Depth-first instantiation so every gate follows its operands.
  std::map<std::string, int> state;  // 1 = in progress, 2 = done
  std::function<std::string(const std::string&)> resolve =
      [&](const std::string& wire) -> std::string {
    if (wires.count(wire)) return out.ports.at(wire);
    auto it = gates.find(wire);
    if (it == gates.end()) throw InputError("unknown wire '" + wire + "'");
    if (state[wire] == 1) {
      throw InputError("gate '" + wire + "' is part of a cycle");
    }
    if (state[wire] == 2) return out.ports.at(wire);
    state[wire] = 1;
    std::vector<std::string> args;
    for (const auto& a : it->second->args) args.push_back(resolve(a));
    GadgetNode node = builder.Build(it->second->kind, args, wire);
    state[wire] = 2;
    out.ports[wire] = node.output;
    return node.output;
  };
  for (const auto& g : circuit.gates) resolve(g.id);
  for (const auto& o : circuit.outputs) resolve(o);

  if (circuit.bits) {
    const auto& spec = *circuit.bits;
    if (spec.n < 1) throw InputError("bits.n must be at least 1");
    const std::string x = resolve(spec.of);
    std::string xi =
        builder.Build(GadgetKind::kCopy, {x}, "bits/x1").output;
    std::string constant =
        builder.Build(GadgetKind::kOne, {}, "bits/one").output;
    for (int i = 1; i <= spec.n; ++i) {
      const std::string tag = std::to_string(i);
      constant =
          builder.Build(GadgetKind::kHalf, {constant}, "bits/c" + tag).output;
      std::string bit =
          builder.Build(GadgetKind::kLess, {xi, constant}, "bits/b" + tag)
              .output;
      out.ports["bit" + tag] = bit;
      if (i == spec.n) break;
      std::string scaled = bit;
      for (int t = 1; t <= i; ++t) {
        scaled = builder
                     .Build(GadgetKind::kHalf, {scaled},
                            "bits/b" + tag + "h" + std::to_string(t))
                     .output;
      }
      xi = builder
               .Build(GadgetKind::kDiff, {xi, scaled},
                      "bits/x" + std::to_string(i + 1))
               .output;
    }
  }

  if (circuit.feedback) {
    const auto& fb = *circuit.feedback;
    std::vector<std::string> ors;
    for (int b = 0; b < 6; ++b) {
      std::string acc = resolve(fb.groups[0][b]);
      for (int v = 1; v < 8; ++v) {
        acc = builder
                  .Build(GadgetKind::kOr, {acc, resolve(fb.groups[v][b])},
                         "feedback/or" + std::to_string(b) + "_" +
                             std::to_string(v))
                  .output;
      }
      ors.push_back(acc);
    }
    for (int c = 0; c < 3; ++c) {
      const std::string& coord = fb.coordinates[c];
      const std::string tag = "feedback/" + coord;
      std::string a =
          builder.Build(GadgetKind::kAnd, {ors[2 * c], ors[2 * c + 1]},
                        tag + "/and")
              .output;
      std::string na = builder.Build(GadgetKind::kNot, {a}, tag + "/not").output;
      std::string copy =
          builder.Build(GadgetKind::kCopy, {coord}, tag + "/copy").output;
      // The coordinate itself plays the SUM role over (copy, not).
      std::string helper = tag + "/S1";
      frag.players.push_back({helper, {{copy}, {na}, {helper}}});
      frag.players.push_back({coord, {{helper}, {coord}}});
    }
  }

  out.game = FragmentGame(frag);
  return out;
}

}  // namespace flowgames::gadgets
