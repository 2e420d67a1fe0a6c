#include "etakit/diagram.hpp"

#include "etakit/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace etakit {

namespace {

const std::string kNoOwner;

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  return tokens;
}

}  // namespace

LinkDiagram::LinkDiagram(std::map<std::string, Component> components, std::vector<Crossing> crossings)
    : components_(std::move(components)), crossings_(std::move(crossings)) {
  for (const auto& [name, comp] : components_) {
    for (const auto& arc : comp.arcs) arc_owner_.emplace(arc, name);
  }
}

const Component& LinkDiagram::component(const std::string& name) const {
  auto it = components_.find(name);
  if (it == components_.end()) throw UnknownComponent("no component named '" + name + "'");
  return it->second;
}

const std::string& LinkDiagram::component_of(const std::string& arc) const {
  auto it = arc_owner_.find(arc);
  return it == arc_owner_.end() ? kNoOwner : it->second;
}

std::vector<Violation> validate(const LinkDiagram& d) {
  std::vector<Violation> out;

  std::map<std::string, std::string> owner;
  for (const auto& [name, comp] : d.components()) {
    if (comp.arcs.empty()) out.push_back({name, "component has no arcs"});
    if (comp.unknot && (comp.arcs.size() != 1 || comp.arcs[0] != name)) {
      out.push_back({name, "unknot component must consist of the single arc '" + name + "'"});
    }
    for (const auto& arc : comp.arcs) {
      auto [it, inserted] = owner.emplace(arc, name);
      if (!inserted) out.push_back({arc, "arc declared in both '" + it->second + "' and '" + name + "'"});
    }
  }

  for (std::size_t i = 0; i < d.crossings().size(); ++i) {
    const Crossing& x = d.crossings()[i];
    const std::string id = "crossing #" + std::to_string(i + 1);
    if (x.sign != 1 && x.sign != -1) out.push_back({id, "sign must be +1 or -1"});
    for (const std::string* arc : {&x.over_in, &x.over_out, &x.under_in, &x.under_out}) {
      if (!owner.count(*arc)) out.push_back({id, "references unknown arc '" + *arc + "'"});
    }
    if (x.over_in != x.over_out) {
      out.push_back({id, "over strand changes arc ('" + x.over_in + "' vs '" + x.over_out + "')"});
    }
  }
  if (!out.empty()) return out;

  std::map<std::string, int> ins, outs;
  std::map<std::string, std::string> next;
  for (const Crossing& x : d.crossings()) {
    ++ins[x.under_in];
    ++outs[x.under_out];
    next[x.under_in] = x.under_out;
  }

  std::set<std::string> broken;
  for (const auto& [name, comp] : d.components()) {
    for (const auto& arc : comp.arcs) {
      int i = ins[arc], o = outs[arc];
      if (comp.unknot) {
        bool touched = i || o;
        for (const Crossing& x : d.crossings()) touched = touched || x.over_in == arc;
        if (touched) out.push_back({arc, "unknot component takes part in a crossing"});
        continue;
      }
      if (i == 1 && o == 1) continue;
      if (i == 0 && o == 0 && comp.arcs.size() == 1) continue;  // closed loop passing only over
      out.push_back({arc, "arc ends at " + std::to_string(i) + " and starts at " + std::to_string(o) +
                              " undercrossings (expected 1 and 1)"});
      broken.insert(name);
    }
  }

  for (const auto& [name, comp] : d.components()) {
    if (comp.unknot || comp.arcs.empty() || broken.count(name) || ins[comp.arcs[0]] == 0) continue;
    const auto& arcs = comp.arcs;
    bool ok = true;
    for (std::size_t k = 0; k < arcs.size() && ok; ++k) {
      ok = next[arcs[k]] == arcs[(k + 1) % arcs.size()];
    }
    if (!ok) out.push_back({name, "component arcs do not form a single cycle in the listed order"});
  }

  std::map<std::pair<std::string, std::string>, int> between;
  for (const Crossing& x : d.crossings()) {
    const std::string& a = owner[x.over_in];
    const std::string& b = owner[x.under_in];
    if (a != b) ++between[std::minmax(a, b)];
  }
  for (const auto& [pair, count] : between) {
    if (count % 2 != 0) {
      out.push_back({pair.first + "/" + pair.second,
                     "odd number of crossings between components (" + std::to_string(count) + ")"});
    }
  }
  return out;
}

LinkDiagram parse_diagram(std::string_view text) {
  std::map<std::string, Component> components;
  std::vector<Crossing> crossings;
  std::istringstream in{std::string(text)};
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw SyntaxError("line " + std::to_string(lineno) + ": " + why);
    };
    if (tok[0] == "component") {
      if (tok.size() < 4 || tok[2] != "arcs") fail("expected 'component <name> arcs <a1> ...'");
      Component c;
      c.arcs.assign(tok.begin() + 3, tok.end());
      if (!components.emplace(tok[1], std::move(c)).second) fail("duplicate component '" + tok[1] + "'");
    } else if (tok[0] == "unknot") {
      if (tok.size() != 2) fail("expected 'unknot <name>'");
      if (!components.emplace(tok[1], Component{{tok[1]}, true}).second) {
        fail("duplicate component '" + tok[1] + "'");
      }
    } else if (tok[0] == "crossing") {
      if (tok.size() != 8 || tok[2] != "over" || tok[5] != "under" || (tok[1] != "+" && tok[1] != "-")) {
        fail("expected 'crossing <+|-> over <in> <out> under <in> <out>'");
      }
      crossings.push_back({tok[1] == "+" ? 1 : -1, tok[3], tok[4], tok[6], tok[7]});
    } else {
      fail("unknown directive '" + tok[0] + "'");
    }
  }
  LinkDiagram d(std::move(components), std::move(crossings));
  if (auto violations = validate(d); !violations.empty()) {
    throw ConsistencyError(violations.front().subject + ": " + violations.front().message);
  }
  return d;
}

std::string serialize(const LinkDiagram& d) {
  std::ostringstream out;
  for (const auto& [name, comp] : d.components()) {
    if (comp.unknot) {
      out << "unknot " << name << '\n';
      continue;
    }
    out << "component " << name << " arcs";
    for (const auto& arc : comp.arcs) out << ' ' << arc;
    out << '\n';
  }
  for (const Crossing& x : d.crossings()) {
    out << "crossing " << (x.sign > 0 ? '+' : '-') << " over " << x.over_in << ' ' << x.over_out << " under "
        << x.under_in << ' ' << x.under_out << '\n';
  }
  return out.str();
}

int linking_number(const LinkDiagram& d, const std::string& c1, const std::string& c2) {
  d.component(c1);
  d.component(c2);
  if (c1 == c2) throw SameComponent("linking number needs two distinct components");
  int sum = 0;
  for (const Crossing& x : d.crossings()) {
    const std::string& a = d.component_of(x.over_in);
    const std::string& b = d.component_of(x.under_in);
    if ((a == c1 && b == c2) || (a == c2 && b == c1)) sum += x.sign;
  }
  if (sum % 2 != 0) {
    throw ConsistencyError("odd signed crossing sum between '" + c1 + "' and '" + c2 + "'");
  }
  return sum / 2;
}

int writhe(const LinkDiagram& d, const std::string& c) {
  d.component(c);
  int sum = 0;
  for (const Crossing& x : d.crossings()) {
    if (d.component_of(x.over_in) == c && d.component_of(x.under_in) == c) sum += x.sign;
  }
  return sum;
}

void DiagramBuilder::add_component(const std::string& name) {
  if (passages_.count(name)) throw ConsistencyError("duplicate component '" + name + "'");
  order_.push_back(name);
  passages_[name];
}

std::size_t DiagramBuilder::add_crossing(int sign) {
  signs_.push_back(sign);
  return signs_.size() - 1;
}

void DiagramBuilder::pass_over(const std::string& component, std::size_t crossing) {
  passages_.at(component).push_back({crossing, true});
}

void DiagramBuilder::pass_under(const std::string& component, std::size_t crossing) {
  passages_.at(component).push_back({crossing, false});
}

LinkDiagram DiagramBuilder::build() const {
  std::vector<Crossing> crossings(signs_.size());
  std::vector<int> over_seen(signs_.size()), under_seen(signs_.size());
  for (std::size_t i = 0; i < signs_.size(); ++i) crossings[i].sign = signs_[i];

  std::map<std::string, Component> components;
  for (const auto& name : order_) {
    const auto& seq = passages_.at(name);
    std::vector<std::size_t> unders;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (!seq[i].over) unders.push_back(i);
    }
    Component comp;
    if (seq.empty()) {
      comp = {{name}, true};
    } else if (unders.empty()) {
      comp.arcs = {name + ".0"};
      for (const auto& p : seq) {
        crossings[p.crossing].over_in = crossings[p.crossing].over_out = comp.arcs[0];
        ++over_seen[p.crossing];
      }
    } else {
      const std::size_t n = unders.size();
      for (std::size_t k = 0; k < n; ++k) comp.arcs.push_back(name + "." + std::to_string(k));
      // passages before the first underpass belong to the last arc
      std::size_t current = n - 1;
      for (std::size_t i = 0, k = 0; i < seq.size(); ++i) {
        Crossing& x = crossings[seq[i].crossing];
        if (seq[i].over) {
          x.over_in = x.over_out = comp.arcs[current];
          ++over_seen[seq[i].crossing];
        } else {
          x.under_in = comp.arcs[current];
          current = k++;
          x.under_out = comp.arcs[current];
          ++under_seen[seq[i].crossing];
        }
      }
    }
    components.emplace(name, std::move(comp));
  }
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (over_seen[i] != 1 || under_seen[i] != 1) {
      throw ConsistencyError("builder crossing #" + std::to_string(i + 1) + " lacks a unique over/under passage");
    }
  }
  return LinkDiagram(std::move(components), std::move(crossings));
}

}  // namespace etakit
