#include "etakit/cover.hpp"

#include "etakit/error.hpp"
#include "etakit/eta.hpp"

#include <algorithm>

namespace etakit {

std::string lift_name(Level k) { return "lift[" + std::to_string(k) + "]"; }

Level minimum_depth(const LeveledQuotient& q) { return q.max_difference() + 1; }

Level default_depth(const LeveledQuotient& q) { return minimum_depth(q) + 2; }

namespace {

// One of the four strand pairings of a base crossing.
struct Pairing {
  bool over_forward;
  bool under_forward;
  int sign_factor;
};

constexpr Pairing kPairings[] = {
    {true, true, -1},
    {false, false, -1},
    {true, false, 1},
    {false, true, 1},
};

// The strand of base arc a of lift j; forward strands sit on the arc's own
// level, backward strands one above.
struct Strand {
  Level lift;
  std::size_t arc;
  bool forward;
  friend auto operator<=>(const Strand&, const Strand&) = default;
};

}  // namespace

TruncatedCover build_truncated_cover(const LeveledQuotient& q, Level depth) {
  if (depth < minimum_depth(q)) {
    throw DepthTooSmall("depth " + std::to_string(depth) + " is below the minimum " +
                        std::to_string(minimum_depth(q)) + " for this input");
  }
  TruncatedCover cover;
  cover.depth = depth;
  const std::size_t m = q.arcs().size();

  // passages per strand, in creation order
  struct Pass {
    std::size_t crossing;
    bool over;
  };
  std::map<Strand, std::vector<Pass>> along;
  std::vector<int> signs;
  // pushoff copies of lift[0]'s crossings with other lifts
  std::map<Strand, std::vector<Pass>> pushoff_along;
  std::vector<std::pair<Strand, std::size_t>> pushoff_partner;  // other strand, crossing

  for (std::size_t b = 0; b < q.crossings().size(); ++b) {
    const LeveledCrossing& x = q.crossings()[b];
    for (const Pairing& p : kPairings) {
      const Level alpha = q.level_of(x.over) + (p.over_forward ? 0 : 1);
      const Level beta = q.level_of(x.under) + (p.under_forward ? 0 : 1);
      for (Level j = -depth; j <= depth; ++j) {
        const Level jj = j + alpha - beta;  // same sheet j + alpha
        if (jj < -depth || jj > depth) {
          ++cover.dropped;
          continue;
        }
        const int sign = p.sign_factor * x.sign;
        const std::size_t id = signs.size();
        signs.push_back(sign);
        cover.provenance.push_back(b);
        along[{j, x.over, p.over_forward}].push_back({id, true});
        along[{jj, x.under, p.under_forward}].push_back({id, false});
        if ((j == 0) != (jj == 0)) {
          const std::size_t pid = signs.size();
          signs.push_back(sign);
          cover.provenance.push_back(b);
          if (j == 0) {
            pushoff_along[{0, x.over, p.over_forward}].push_back({pid, true});
            along[{jj, x.under, p.under_forward}].push_back({pid, false});
          } else {
            along[{j, x.over, p.over_forward}].push_back({pid, true});
            pushoff_along[{0, x.under, p.under_forward}].push_back({pid, false});
          }
        }
      }
    }
  }

  DiagramBuilder builder;
  std::vector<std::size_t> ids(signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) ids[i] = builder.add_crossing(signs[i]);
  auto walk = [&](const std::string& name, Level j, const std::map<Strand, std::vector<Pass>>& table) {
    builder.add_component(name);
    auto emit = [&](std::size_t arc, bool forward) {
      auto it = table.find({j, arc, forward});
      if (it == table.end()) return;
      for (const Pass& p : it->second) {
        if (p.over) {
          builder.pass_over(name, ids[p.crossing]);
        } else {
          builder.pass_under(name, ids[p.crossing]);
        }
      }
    };
    for (std::size_t a = 0; a < m; ++a) emit(a, true);
    for (std::size_t a = m; a-- > 0;) emit(a, false);
  };
  for (Level j = -depth; j <= depth; ++j) walk(lift_name(j), j, along);
  walk(kPushoffName, 0, pushoff_along);
  cover.diagram = builder.build();
  return cover;
}

std::map<Level, Integer> oracle_coefficients(const TruncatedCover& cover) {
  std::map<Level, Integer> a;
  for (Level i = 2; i <= cover.depth; ++i) {
    const int plus = linking_number(cover.diagram, kPushoffName, lift_name(i));
    const int minus = linking_number(cover.diagram, kPushoffName, lift_name(-i));
    a[i] = plus;
    a[-i] = minus;
  }
  Integer odd = 0, total = 0;
  for (const auto& [i, c] : a) {
    total += c;
    if (i % 2 != 0) odd += c;
  }
  // a_1 = a_{-1} by symmetry of linking with translates
  a[1] = a[-1] = -odd / 2;
  total += 2 * a[1];
  a[0] = -total;
  return a;
}

std::map<Level, Integer> oracle_coefficients(const LeveledQuotient& q, Level depth) {
  return oracle_coefficients(build_truncated_cover(q, depth));
}

CrossCheck compare(Level depth, const std::map<Level, Integer>& oracle, const LaurentPoly& eta) {
  CrossCheck r;
  r.depth = depth;
  for (Level i = -depth; i <= depth; ++i) {
    auto it = oracle.find(i);
    Integer o = it == oracle.end() ? Integer(0) : it->second;
    Integer e = eta.coeff(i);
    r.oracle[i] = o;
    r.algorithm[i] = e;
    if (o != e) r.mismatches.push_back({i, o, e});
  }
  // anything the window cannot show is a mismatch too
  for (const auto& [i, c] : eta.coeffs()) {
    if (i < -depth || i > depth) r.mismatches.push_back({i, 0, c});
  }
  return r;
}

CrossCheck cross_check(const LeveledQuotient& q, Level depth) {
  auto oracle = oracle_coefficients(q, depth);
  return compare(depth, oracle, compute_eta(q));
}

LinkDiagram quotient_link(const LeveledQuotient& q) {
  DiagramBuilder builder;
  builder.add_component("O");
  builder.add_component("L");
  const std::size_t m = q.arcs().size();
  std::vector<std::size_t> ids;
  for (const auto& x : q.crossings()) ids.push_back(builder.add_crossing(x.sign));
  std::vector<std::vector<std::pair<std::size_t, bool>>> on_arc(m);
  for (std::size_t i = 0; i < q.crossings().size(); ++i) {
    on_arc[q.crossings()[i].over].push_back({ids[i], true});
    on_arc[q.crossings()[i].under].push_back({ids[i], false});
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (auto [id, over] : on_arc[a]) {
      if (over) {
        builder.pass_over("L", id);
      } else {
        builder.pass_under("L", id);
      }
    }
    if (int jump = q.jumps()[a]; jump != 0) {
      std::size_t first = builder.add_crossing(jump);
      std::size_t second = builder.add_crossing(jump);
      builder.pass_under("L", first);
      builder.pass_over("O", first);
      builder.pass_over("L", second);
      builder.pass_under("O", second);
    }
  }
  return builder.build();
}

}  // namespace etakit
