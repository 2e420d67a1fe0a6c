#include "etakit/pi1.hpp"

#include "etakit/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>
#include <sstream>

namespace etakit {

Word::Word(std::vector<Letter> letters) {
  for (auto& l : letters) {
    if (l.exp != 1 && l.exp != -1) throw ConsistencyError("letter exponent must be +1 or -1");
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp) {
      letters_.pop_back();
    } else {
      letters_.push_back(std::move(l));
    }
  }
}

Word Word::power(const std::string& gen, int k) {
  std::vector<Letter> v(static_cast<std::size_t>(std::abs(k)), Letter{gen, k < 0 ? -1 : 1});
  return Word(std::move(v));
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->gen, -it->exp});
  return w;
}

Word Word::cyclically_reduced() const {
  std::size_t lo = 0, hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo].gen == letters_[hi - 1].gen && letters_[lo].exp == -letters_[hi - 1].exp) {
    ++lo;
    --hi;
  }
  Word w;
  w.letters_.assign(letters_.begin() + static_cast<long>(lo), letters_.begin() + static_cast<long>(hi));
  return w;
}

Word Word::rotated(std::size_t k) const {
  if (letters_.empty()) return *this;
  k %= letters_.size();
  std::vector<Letter> v(letters_.begin() + static_cast<long>(k), letters_.end());
  v.insert(v.end(), letters_.begin(), letters_.begin() + static_cast<long>(k));
  return Word(std::move(v));
}

int Word::occurrences(const std::string& gen) const {
  return static_cast<int>(std::count_if(letters_.begin(), letters_.end(), [&](const Letter& l) { return l.gen == gen; }));
}

int Word::exponent_sum(const std::string& gen) const {
  int s = 0;
  for (const auto& l : letters_) {
    if (l.gen == gen) s += l.exp;
  }
  return s;
}

Word Word::substituted(const std::string& gen, const Word& w) const {
  const Word inv = w.inverse();
  std::vector<Letter> v;
  for (const auto& l : letters_) {
    if (l.gen != gen) {
      v.push_back(l);
      continue;
    }
    const auto& src = l.exp > 0 ? w.letters_ : inv.letters_;
    v.insert(v.end(), src.begin(), src.end());
  }
  return Word(std::move(v));
}

Word& Word::operator*=(const Word& rhs) {
  std::vector<Letter> v = letters_;
  v.insert(v.end(), rhs.letters_.begin(), rhs.letters_.end());
  *this = Word(std::move(v));
  return *this;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size();) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    const int k = static_cast<int>(j - i) * letters_[i].exp;
    if (!out.empty()) out += ' ';
    out += letters_[i].gen;
    if (k != 1) out += "^" + std::to_string(k);
    i = j;
  }
  return out;
}

Word Word::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Letter> v;
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    std::string gen = tok;
    int k = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      gen = tok.substr(0, caret);
      std::string e = tok.substr(caret + 1);
      if (!e.empty() && e[0] == '+') e.erase(0, 1);
      auto [p, ec] = std::from_chars(e.data(), e.data() + e.size(), k);
      if (ec != std::errc() || p != e.data() + e.size() || e.empty()) {
        throw SyntaxError("bad exponent in '" + tok + "'");
      }
    }
    if (gen.empty()) throw SyntaxError("missing generator in '" + tok + "'");
    for (int i = 0; i < std::abs(k); ++i) v.push_back({gen, k < 0 ? -1 : 1});
  }
  return Word(std::move(v));
}

bool same_relator(const Word& a, const Word& b) {
  const Word ca = a.cyclically_reduced(), cb = b.cyclically_reduced();
  if (ca.size() != cb.size()) return false;
  if (ca.empty()) return true;
  const Word ib = cb.inverse();
  for (std::size_t k = 0; k < ca.size(); ++k) {
    const Word r = ca.rotated(k);
    if (r == cb || r == ib) return true;
  }
  return false;
}

std::optional<std::pair<std::string, std::string>> as_commutator(const Word& w) {
  const Word c = w.cyclically_reduced();
  if (c.size() != 4) return std::nullopt;
  const auto& l = c.letters();
  if (l[0].gen == l[2].gen && l[1].gen == l[3].gen && l[0].gen != l[1].gen && l[0].exp == -l[2].exp &&
      l[1].exp == -l[3].exp) {
    return std::make_pair(std::min(l[0].gen, l[1].gen), std::max(l[0].gen, l[1].gen));
  }
  return std::nullopt;
}

GroupPresentation::GroupPresentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (!seen.insert(g).second) throw ConsistencyError("generator '" + g + "' declared twice");
  }
  for (auto& r : relators) add_relator(std::move(r));
}

bool GroupPresentation::declares(const std::string& gen) const {
  return std::find(generators_.begin(), generators_.end(), gen) != generators_.end();
}

void GroupPresentation::check(const Word& w) const {
  for (const auto& l : w.letters()) {
    if (!declares(l.gen)) throw UndeclaredGenerator("generator '" + l.gen + "' is not declared");
  }
}

void GroupPresentation::add_relator(Word w) {
  check(w);
  relators_.push_back(std::move(w));
}

void GroupPresentation::remove_relator(std::size_t i) { relators_.erase(relators_.begin() + static_cast<long>(i)); }

void GroupPresentation::replace_relator(std::size_t i, Word w) {
  check(w);
  relators_.at(i) = std::move(w);
}

void GroupPresentation::eliminate(const std::string& gen, const Word& w) {
  if (w.occurrences(gen) != 0) throw ConsistencyError("substitution for '" + gen + "' mentions it");
  check(w);
  for (auto& r : relators_) r = r.substituted(gen, w);
  generators_.erase(std::find(generators_.begin(), generators_.end(), gen));
}

GroupPresentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::vector<std::string>> gens;
  std::vector<Word> rels;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    std::string rest;
    std::getline(ls, rest);
    try {
      if (head == "gens:") {
        if (gens) throw SyntaxError("second gens line");
        std::istringstream gs(rest);
        gens.emplace();
        for (std::string g; gs >> g;) gens->push_back(g);
      } else if (head == "rel:") {
        if (!gens) throw SyntaxError("rel before gens");
        rels.push_back(Word::parse(rest));
      } else {
        throw SyntaxError("unknown keyword '" + head + "'");
      }
    } catch (const SyntaxError& e) {
      throw SyntaxError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!gens) throw SyntaxError("missing gens line");
  return GroupPresentation(std::move(*gens), std::move(rels));
}

std::string serialize(const GroupPresentation& p) {
  std::string out = "gens:";
  for (const auto& g : p.generators()) out += " " + g;
  out += '\n';
  for (const auto& r : p.relators()) out += "rel: " + r.to_string() + '\n';
  return out;
}

GroupPresentation wirtinger(const LinkDiagram& d) {
  std::vector<std::string> gens;
  for (const auto& [name, comp] : d.components()) gens.insert(gens.end(), comp.arcs.begin(), comp.arcs.end());
  std::vector<Word> rels;
  for (const Crossing& x : d.crossings()) {
    const Word g = Word::power(x.over_in, x.sign);
    rels.push_back(Word{{x.under_out, -1}} * g.inverse() * Word{{x.under_in, 1}} * g);
  }
  return GroupPresentation(std::move(gens), std::move(rels));
}

Word longitude(const LinkDiagram& d, const std::string& component, const std::string& start_arc) {
  const Component& comp = d.component(component);
  const std::string start = start_arc.empty() ? comp.arcs.front() : start_arc;
  if (std::find(comp.arcs.begin(), comp.arcs.end(), start) == comp.arcs.end()) {
    throw ConsistencyError("arc '" + start + "' is not on component '" + component + "'");
  }
  std::map<std::string, const Crossing*> leaving;
  for (const Crossing& x : d.crossings()) leaving[x.under_in] = &x;
  Word w = Word::power(start, -writhe(d, component));
  std::string arc = start;
  for (auto it = leaving.find(arc); it != leaving.end(); it = leaving.find(arc)) {
    w *= Word::power(it->second->over_in, it->second->sign);
    arc = it->second->under_out;
    if (arc == start) break;
  }
  return w;
}

std::vector<Word> surgery_relators(const LinkDiagram& d, const std::map<std::string, int>& framings,
                                   const std::map<std::string, std::string>& start_arcs) {
  for (const auto& [name, f] : framings) d.component(name);
  std::vector<Word> out;
  for (const auto& [name, comp] : d.components()) {
    auto f = framings.find(name);
    if (f == framings.end()) throw UnknownComponent("component '" + name + "' has no framing");
    auto s = start_arcs.find(name);
    const std::string start = s == start_arcs.end() ? comp.arcs.front() : s->second;
    out.push_back(longitude(d, name, start) * Word::power(start, f->second));
  }
  return out;
}

Word handle_relator(const GroupPresentation& p, const Word& attaching) {
  for (const auto& l : attaching.letters()) {
    if (!p.declares(l.gen)) throw UndeclaredGenerator("generator '" + l.gen + "' is not declared");
  }
  return attaching.cyclically_reduced();
}

std::size_t budget_from_env() {
  if (const char* v = std::getenv("ETAKIT_BUDGET")) {
    std::size_t b = 0;
    std::string_view s(v);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), b);
    if (ec == std::errc() && p == s.data() + s.size()) return b;
  }
  return kDefaultBudget;
}

namespace {

// On a word of the abelian subgroup <a, b>, collapse each maximal block of
// a and b letters to a^p b^q. Returned cyclically reduced.
Word commute_rewrite(const Word& w, const std::string& a, const std::string& b) {
  const auto& l = w.letters();
  auto in = [&](const Letter& x) { return x.gen == a || x.gen == b; };
  auto collapse = [&](const std::vector<Letter>& block) {
    int p = 0, q = 0;
    for (const auto& x : block) (x.gen == a ? p : q) += x.exp;
    return Word::power(a, p) * Word::power(b, q);
  };
  if (std::all_of(l.begin(), l.end(), in)) return collapse(l).cyclically_reduced();
  std::size_t k = 0;
  while (in(l[k])) ++k;
  const Word r = w.rotated(k);
  Word out;
  std::vector<Letter> block;
  for (const auto& x : r.letters()) {
    if (in(x)) {
      block.push_back(x);
      continue;
    }
    if (!block.empty()) {
      out *= collapse(block);
      block.clear();
    }
    out *= Word{x};
  }
  if (!block.empty()) out *= collapse(block);
  return out.cyclically_reduced();
}

std::size_t generator_rank(const GroupPresentation& p, const std::string& g) {
  return static_cast<std::size_t>(std::find(p.generators().begin(), p.generators().end(), g) - p.generators().begin());
}

// Solves relator r for its unique occurrence of g.
Word solve_for(const Word& r, const std::string& g) {
  std::size_t k = 0;
  while (r.letters()[k].gen != g) ++k;
  const Word rot = r.rotated(k);
  const int e = rot.letters()[0].exp;
  Word rest(std::vector<Letter>(rot.letters().begin() + 1, rot.letters().end()));
  return e > 0 ? rest.inverse() : rest;
}

void apply_eliminate(GroupPresentation& p, std::size_t i, const std::string& g) {
  const Word w = solve_for(p.relators()[i], g);
  p.remove_relator(i);
  p.eliminate(g, w);
}

}  // namespace

Simplification tietze_simplify(const GroupPresentation& input, std::size_t budget) {
  Simplification s;
  GroupPresentation& p = s.presentation;
  p = input;
  std::size_t cap = 0;
  for (const auto& r : input.relators()) cap = std::max(cap, r.size());
  cap = 4 * std::max<std::size_t>(cap, 1);

  auto record = [&](Move m) {
    s.log.push_back(std::move(m));
    if (s.log.size() >= budget) s.budget_exhausted = true;
  };

  while (!s.budget_exhausted) {
    bool changed = false;
    for (std::size_t i = 0; i < p.relators().size() && !s.budget_exhausted; ++i) {
      Word c = p.relators()[i].cyclically_reduced();
      if (c != p.relators()[i]) {
        p.replace_relator(i, c);
        record({"reduce", static_cast<long>(i), -1, {}, c});
        changed = true;
      }
    }
    if (s.budget_exhausted) break;

    // drop empty and duplicate relators
    bool dropped = false;
    for (std::size_t i = 0; i < p.relators().size() && !dropped; ++i) {
      if (p.relators()[i].empty()) {
        p.remove_relator(i);
        record({"drop", static_cast<long>(i), -1, {}, {}});
        dropped = true;
        break;
      }
      for (std::size_t j = i + 1; j < p.relators().size(); ++j) {
        if (same_relator(p.relators()[i], p.relators()[j])) {
          p.remove_relator(j);
          record({"drop", static_cast<long>(j), static_cast<long>(i), {}, {}});
          dropped = true;
          break;
        }
      }
    }
    if (dropped) continue;
    if (s.budget_exhausted) break;

    bool rewrote = false;
    for (std::size_t v = 0; v < p.relators().size() && !rewrote; ++v) {
      auto pair = as_commutator(p.relators()[v]);
      if (!pair) continue;
      for (std::size_t i = 0; i < p.relators().size(); ++i) {
        if (i == v) continue;
        Word r = commute_rewrite(p.relators()[i], pair->first, pair->second);
        if (r.size() < p.relators()[i].size()) {
          p.replace_relator(i, r);
          record({"commute", static_cast<long>(i), static_cast<long>(v), {}, r});
          rewrote = true;
          break;
        }
      }
    }
    if (rewrote) continue;

    // eliminate a generator occurring once, shortest relator first
    std::vector<std::size_t> order(p.relators().size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return p.relators()[a].size() < p.relators()[b].size(); });
    bool eliminated = false;
    for (std::size_t i : order) {
      const Word& r = p.relators()[i];
      std::vector<std::string> cands;
      for (const auto& g : p.generators()) {
        if (r.occurrences(g) == 1) cands.push_back(g);
      }
      std::sort(cands.begin(), cands.end(), [&](const std::string& a, const std::string& b) {
        return generator_rank(p, a) > generator_rank(p, b);
      });
      for (const auto& g : cands) {
        const Word w = solve_for(r, g);
        bool fits = true;
        for (std::size_t j = 0; j < p.relators().size() && fits; ++j) {
          if (j != i && p.relators()[j].substituted(g, w).size() > cap) fits = false;
        }
        if (!fits) continue;
        record({"eliminate", static_cast<long>(i), -1, g, w});
        apply_eliminate(p, i, g);
        eliminated = true;
        break;
      }
      if (eliminated) break;
    }
    if (!eliminated && !changed) break;
  }
  return s;
}

GroupPresentation replay(const GroupPresentation& input, const std::vector<Move>& log) {
  GroupPresentation p = input;
  std::size_t step = 0;
  auto fail = [&](const std::string& why) {
    throw ReplayError("move " + std::to_string(step) + ": " + why);
  };
  for (const Move& m : log) {
    ++step;
    const auto n = static_cast<long>(p.relators().size());
    if (m.relator < 0 || m.relator >= n) fail("relator index out of range");
    const auto i = static_cast<std::size_t>(m.relator);
    const Word& r = p.relators()[i];
    if (m.kind == "reduce") {
      if (r.cyclically_reduced() != m.result) fail("reduction result differs");
      p.replace_relator(i, m.result);
    } else if (m.kind == "drop") {
      if (m.via < 0) {
        if (!r.empty()) fail("dropped relator is not empty");
      } else {
        if (m.via >= n || m.via == m.relator) fail("bad duplicate reference");
        if (!same_relator(r, p.relators()[static_cast<std::size_t>(m.via)])) fail("relators are not duplicates");
      }
      p.remove_relator(i);
    } else if (m.kind == "commute") {
      if (m.via < 0 || m.via >= n || m.via == m.relator) fail("bad commutator reference");
      auto pair = as_commutator(p.relators()[static_cast<std::size_t>(m.via)]);
      if (!pair) fail("referenced relator is not a commutator");
      if (commute_rewrite(r, pair->first, pair->second) != m.result) fail("rewrite result differs");
      p.replace_relator(i, m.result);
    } else if (m.kind == "eliminate") {
      if (!p.declares(m.generator) || r.occurrences(m.generator) != 1) fail("generator does not occur exactly once");
      if (solve_for(r, m.generator) != m.result) fail("solved word differs");
      apply_eliminate(p, i, m.generator);
    } else {
      fail("unknown move kind '" + m.kind + "'");
    }
  }
  return p;
}

std::vector<Integer> abelianization(const GroupPresentation& p) {
  const std::size_t rows = p.relators().size(), cols = p.generators().size();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = p.relators()[i].exponent_sum(p.generators()[j]);
  }
  // Smith normal form by repeated pivoting on the smallest entry
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) break;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Integer f = a[i][t] / a[t][t];
        if (f != 0) {
          for (std::size_t j = t; j < cols; ++j) a[i][j] -= f * a[t][j];
        }
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Integer f = a[t][j] / a[t][t];
        if (f != 0) {
          for (std::size_t i = t; i < rows; ++i) a[i][j] -= f * a[i][t];
        }
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // the pivot must divide the rest of the submatrix
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (a[t][t] == 0) break;
    diag.push_back(abs(a[t][t]));
  }
  std::vector<Integer> factors;
  for (const auto& d : diag) {
    if (d != 1) factors.push_back(d);
  }
  for (std::size_t k = diag.size(); k < cols; ++k) factors.push_back(0);
  return factors;
}

Certification certify_trivial(const GroupPresentation& p, std::size_t budget) {
  Certification c;
  c.h1 = abelianization(p);
  c.simplification = tietze_simplify(p, budget);
  const GroupPresentation& t = c.simplification.presentation;
  if (!c.h1.empty()) {
    c.reason = "abelianization is nontrivial";
    return c;
  }
  if (c.simplification.budget_exhausted) {
    c.reason = "move budget exhausted";
    return c;
  }
  if (t.generators().empty()) {
    c.verdict = Verdict::certified;
    c.reason = "presentation simplifies to the trivial presentation";
    return c;
  }
  if (t.generators().size() == 1) {
    c.verdict = Verdict::certified;
    c.reason = "cyclic group with trivial abelianization";
    return c;
  }
  std::set<std::pair<std::string, std::string>> commuting;
  for (const auto& r : t.relators()) {
    if (auto pair = as_commutator(r)) commuting.insert(*pair);
  }
  const auto& g = t.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!commuting.count({std::min(g[i], g[j]), std::max(g[i], g[j])})) {
        c.reason = "generators " + g[i] + " and " + g[j] + " are not known to commute";
        return c;
      }
    }
  }
  c.verdict = Verdict::certified;
  c.reason = "abelian group with trivial abelianization";
  return c;
}

LinkDiagram w_surgery_diagram(int m, int n) {
  if (m < 1 || n < 1 || m > 3 || n > 3) {
    throw TemplateUnavailable("no half-twist template for W_{" + std::to_string(m) + "," + std::to_string(n) + "}");
  }
  // Base template, crossings in the order of the printed relators.
  // Extra twists cut x1 below x5 and y4 below y1.
  auto chain = [](const std::string& p, const std::string& first, int extra) {
    std::vector<std::string> arcs{first};
    for (int k = 0; k < extra; ++k) arcs.push_back(p + std::to_string(6 + k));
    return arcs;
  };
  const auto xs = chain("x", "x1", m - 1);
  const auto ys = chain("y", "y4", n - 1);
  auto cx = [](int sign, const std::string& over, const std::string& u, const std::string& v) {
    return Crossing{sign, over, over, u, v};
  };
  std::vector<Crossing> c{
      cx(1, "x1", "y5", "y1"),       cx(1, "y5", "x5", "x1"), cx(1, "x5", xs.back(), "x2"),
      cx(1, "y1", ys.back(), "y5"),  cx(1, "x2", "y1", "y2"), cx(1, "y2", "x2", "x3"),
      cx(1, "x3", "x4", "x5"),       cx(1, "y4", "y2", "y3"), cx(-1, "y4", "x3", "x4"),
      cx(-1, "x3", "y3", "y4"),
  };
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) c.push_back(cx(1, "x5", xs[k], xs[k + 1]));
  for (std::size_t k = 0; k + 1 < ys.size(); ++k) c.push_back(cx(1, "y1", ys[k], ys[k + 1]));

  std::vector<std::string> xa = xs, ya{"y1", "y2", "y3"};
  xa.insert(xa.end(), {"x2", "x3", "x4", "x5"});
  ya.insert(ya.end(), ys.begin(), ys.end());
  ya.push_back("y5");
  std::map<std::string, Component> comps{{"x", {xa, false}}, {"y", {ya, false}}};
  LinkDiagram d(std::move(comps), std::move(c));
  if (auto v = validate(d); !v.empty()) throw ConsistencyError(v.front().subject + ": " + v.front().message);
  return d;
}

GroupPresentation w_family_presentation(int m, int n) {
  const LinkDiagram d = w_surgery_diagram(m, n);
  GroupPresentation p = wirtinger(d);
  p.add_relator(longitude(d, "x", "x3"));
  p.add_relator(longitude(d, "y", "y3"));
  p.add_relator(handle_relator(p, Word{{"x1", 1}, {"x5", -1}}));
  return p;
}

}  // namespace etakit
