#include "etakit/quotient.hpp"

#include "etakit/error.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>

namespace etakit {

std::vector<Level> assign_levels(std::size_t arc_count, Level first_level, const std::vector<int>& jumps) {
  if (jumps.size() != arc_count) throw ConsistencyError("need one jump per arc");
  Level total = 0;
  for (int j : jumps) total += j;
  if (total != 0) {
    throw NonzeroHolonomy("jumps sum to " + std::to_string(total) + " around the cycle; the region strand must not link the axis");
  }
  std::vector<Level> levels(arc_count);
  Level current = first_level;
  for (std::size_t k = 0; k < arc_count; ++k) {
    levels[k] = current;
    current += jumps[k];
  }
  return levels;
}

LeveledQuotient::LeveledQuotient(std::vector<std::string> arcs, Level first_level, std::vector<int> jumps,
                                 std::vector<LeveledCrossing> crossings)
    : arcs_(std::move(arcs)), jumps_(std::move(jumps)), crossings_(std::move(crossings)) {
  if (arcs_.empty()) throw ConsistencyError("leveled quotient needs at least one arc");
  for (int j : jumps_) {
    if (j < -1 || j > 1) throw ConsistencyError("jump must be +1, -1 or 0");
  }
  for (const auto& x : crossings_) {
    if (x.over >= arcs_.size() || x.under >= arcs_.size()) throw ConsistencyError("crossing references unknown arc");
    if (x.sign != 1 && x.sign != -1) throw ConsistencyError("crossing sign must be +1 or -1");
  }
  levels_ = assign_levels(arcs_.size(), first_level, jumps_);
}

Level LeveledQuotient::max_difference() const {
  Level m = 0;
  for (const auto& x : crossings_) m = std::max(m, std::abs(difference(x)));
  return m;
}

EtaTilde::EtaTilde(std::map<Level, Integer> coeffs) {
  for (auto& [i, c] : coeffs) add(i, c);
}

Integer EtaTilde::at(Level i) const {
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

void EtaTilde::add(Level i, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

bool EtaTilde::is_symmetric() const {
  for (const auto& [i, c] : coeffs_) {
    if (at(-i) != c) return false;
  }
  return true;
}

Level EtaTilde::radius() const {
  Level r = 0;
  for (const auto& [i, c] : coeffs_) r = std::max(r, std::abs(i));
  return r;
}

LeveledQuotient parse_leveled(std::string_view text) {
  std::vector<std::string> arcs;
  std::map<std::string, std::size_t> index;
  std::vector<std::optional<Level>> explicit_levels;
  std::map<std::string, int> jump_of;
  struct RawCrossing {
    int sign;
    std::string over, under;
    int line;
  };
  std::vector<RawCrossing> raw;

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) -> void {
    throw SyntaxError("line " + std::to_string(lineno) + ": " + why);
  };
  auto parse_int = [&](const std::string& s) -> Level {
    char* end = nullptr;
    long long v = std::strtoll(s.c_str(), &end, 10);
    if (s.empty() || *end != '\0') fail("expected integer, got '" + s + "'");
    return v;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "arc") {
      if (tok.size() != 2 && !(tok.size() == 4 && tok[2] == "level")) fail("expected 'arc <id> [level <int>]'");
      if (index.count(tok[1])) fail("duplicate arc '" + tok[1] + "'");
      index[tok[1]] = arcs.size();
      arcs.push_back(tok[1]);
      explicit_levels.push_back(tok.size() == 4 ? std::optional<Level>(parse_int(tok[3])) : std::nullopt);
    } else if (tok[0] == "jump") {
      if (tok.size() != 3) fail("expected 'jump <arc-id> <+1|-1|0>'");
      if (tok[2] != "+1" && tok[2] != "-1" && tok[2] != "0") fail("jump must be +1, -1 or 0");
      if (!jump_of.emplace(tok[1], static_cast<int>(parse_int(tok[2]))).second) {
        fail("duplicate jump for arc '" + tok[1] + "'");
      }
    } else if (tok[0] == "crossing") {
      if (tok.size() != 6 || tok[2] != "over" || tok[4] != "under" || (tok[1] != "+" && tok[1] != "-")) {
        fail("expected 'crossing <+|-> over <arc-id> under <arc-id>'");
      }
      raw.push_back({tok[1] == "+" ? 1 : -1, tok[3], tok[5], lineno});
    } else {
      fail("unknown directive '" + tok[0] + "'");
    }
  }
  if (arcs.empty()) throw SyntaxError("no arcs declared");
  if (!explicit_levels[0]) throw SyntaxError("the first arc needs an explicit level");

  std::vector<int> jumps(arcs.size());
  for (const auto& [arc, j] : jump_of) {
    auto it = index.find(arc);
    if (it == index.end()) throw SyntaxError("jump for unknown arc '" + arc + "'");
    jumps[it->second] = j;
  }
  for (const auto& arc : arcs) {
    if (!jump_of.count(arc)) throw SyntaxError("missing jump for arc '" + arc + "'");
  }

  std::vector<LeveledCrossing> crossings;
  for (const auto& r : raw) {
    auto o = index.find(r.over), u = index.find(r.under);
    if (o == index.end() || u == index.end()) {
      throw SyntaxError("line " + std::to_string(r.line) + ": crossing references unknown arc");
    }
    crossings.push_back({r.sign, o->second, u->second});
  }

  LeveledQuotient q(arcs, *explicit_levels[0], jumps, std::move(crossings));
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    if (explicit_levels[k] && *explicit_levels[k] != q.level_of(k)) {
      throw JumpMismatch("arc '" + arcs[k] + "' declares level " + std::to_string(*explicit_levels[k]) +
                         " but the jumps give " + std::to_string(q.level_of(k)));
    }
  }
  return q;
}

std::string serialize(const LeveledQuotient& q) {
  std::ostringstream out;
  for (std::size_t k = 0; k < q.arcs().size(); ++k) {
    out << "arc " << q.arcs()[k] << " level " << q.level_of(k) << '\n';
  }
  for (std::size_t k = 0; k < q.arcs().size(); ++k) {
    int j = q.jumps()[k];
    out << "jump " << q.arcs()[k] << ' ' << (j > 0 ? "+1" : j < 0 ? "-1" : "0") << '\n';
  }
  for (const auto& x : q.crossings()) {
    out << "crossing " << (x.sign > 0 ? '+' : '-') << " over " << q.arcs()[x.over] << " under " << q.arcs()[x.under]
        << '\n';
  }
  return out.str();
}

EtaTilde tally_eta_tilde(const LeveledQuotient& q) {
  EtaTilde e;
  for (const auto& x : q.crossings()) e.add(q.difference(x), x.sign);
  if (!e.is_symmetric()) {
    std::string detail;
    for (const auto& [i, c] : e.coeffs()) {
      if (e.at(-i) != c) {
        detail = "c_" + std::to_string(i) + " = " + c.str() + " but c_" + std::to_string(-i) + " = " + e.at(-i).str();
        break;
      }
    }
    throw AsymmetricTally("tally is not symmetric: " + detail);
  }
  return e;
}

}  // namespace etakit
