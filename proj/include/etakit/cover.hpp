#pragma once

#include "etakit/diagram.hpp"
#include "etakit/quotient.hpp"

#include <map>
#include <string>
#include <vector>

namespace etakit {

// Lifts of L to the truncated infinite cyclic cover of the complement of O.
// Each arc of L is followed by a reversed partner one sheet higher, so a lift
// closes up even though L itself passes the axis half-plane.
struct TruncatedCover {
  Level depth = 0;
  LinkDiagram diagram;  // components lift[k] for |k| <= depth, plus pushoff[0]
  std::vector<std::size_t> provenance;  // cover crossing -> base crossing
  std::size_t dropped = 0;  // lifted crossings falling outside the window
};

std::string lift_name(Level k);
inline const std::string kPushoffName = "pushoff[0]";

// Smallest admissible depth: one more than the largest level difference.
Level minimum_depth(const LeveledQuotient& q);
Level default_depth(const LeveledQuotient& q);

// Throws DepthTooSmall if depth < minimum_depth(q).
TruncatedCover build_truncated_cover(const LeveledQuotient& q, Level depth);

// i -> lk(pushoff[0], lift[i]) for 2 <= |i| <= depth. Entries at |i| <= 1 are
// completed from the identities sum_i a_i = 0 and sum_{i odd} a_i = 0.
std::map<Level, Integer> oracle_coefficients(const LeveledQuotient& q, Level depth);
std::map<Level, Integer> oracle_coefficients(const TruncatedCover& cover);

struct Mismatch {
  Level i = 0;
  Integer oracle;
  Integer algorithm;
};

struct CrossCheck {
  Level depth = 0;
  std::map<Level, Integer> oracle;
  std::map<Level, Integer> algorithm;
  std::vector<Mismatch> mismatches;
  bool match() const { return mismatches.empty(); }
};

// Compares over -depth..depth; zero coefficients are listed explicitly.
CrossCheck compare(Level depth, const std::map<Level, Integer>& oracle, const LaurentPoly& eta);
CrossCheck cross_check(const LeveledQuotient& q, Level depth);

// The two-component quotient link O u L. Each axis passage of L becomes a
// pair of crossings with O of the jump's sign, so lk(O, L) is the sum of
// the jumps.
LinkDiagram quotient_link(const LeveledQuotient& q);

}  // namespace etakit
