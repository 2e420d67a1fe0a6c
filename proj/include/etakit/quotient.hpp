#pragma once

#include "etakit/laurent.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace etakit {

using Level = std::int64_t;

struct LeveledCrossing {
  int sign = 1;           // tally sign, +1 or -1
  std::size_t over = 0;   // index into LeveledQuotient::arcs()
  std::size_t under = 0;

  friend bool operator==(const LeveledCrossing&, const LeveledCrossing&) = default;
};

// Pseudo-fundamental-region data of a strongly invertible knot: the arcs of
// the region strand in cyclic order, the axis passage (jump) between each arc
// and its successor, the induced integer levels, and the signed crossings.
class LeveledQuotient {
 public:
  LeveledQuotient() = default;
  // Levels are reconstructed from first_level and the jumps. Throws
  // NonzeroHolonomy, or ConsistencyError for malformed input.
  LeveledQuotient(std::vector<std::string> arcs, Level first_level, std::vector<int> jumps,
                  std::vector<LeveledCrossing> crossings);

  const std::vector<std::string>& arcs() const { return arcs_; }
  const std::vector<Level>& levels() const { return levels_; }
  const std::vector<int>& jumps() const { return jumps_; }
  const std::vector<LeveledCrossing>& crossings() const { return crossings_; }

  Level level_of(std::size_t arc) const { return levels_.at(arc); }
  // level(over) - level(under)
  Level difference(const LeveledCrossing& x) const { return levels_[x.over] - levels_[x.under]; }
  // Largest |level difference| over all crossings (0 when there are none).
  Level max_difference() const;

  friend bool operator==(const LeveledQuotient&, const LeveledQuotient&) = default;

 private:
  std::vector<std::string> arcs_;
  std::vector<Level> levels_;
  std::vector<int> jumps_;
  std::vector<LeveledCrossing> crossings_;
};

// Symmetric finitely supported map i -> c_i, the coefficient of x_i.
class EtaTilde {
 public:
  EtaTilde() = default;
  explicit EtaTilde(std::map<Level, Integer> coeffs);

  const std::map<Level, Integer>& coeffs() const { return coeffs_; }
  Integer at(Level i) const;
  void add(Level i, const Integer& c);
  bool is_symmetric() const;
  // Largest |i| with c_i != 0.
  Level radius() const;

  friend bool operator==(const EtaTilde&, const EtaTilde&) = default;

 private:
  std::map<Level, Integer> coeffs_;
};

// Prefix sums of the jumps starting at first_level. Throws NonzeroHolonomy.
std::vector<Level> assign_levels(std::size_t arc_count, Level first_level, const std::vector<int>& jumps);

// Throws SyntaxError, JumpMismatch, NonzeroHolonomy.
LeveledQuotient parse_leveled(std::string_view text);
std::string serialize(const LeveledQuotient& q);

// Adds the crossing sign to c_d, d = level(over) - level(under). Throws
// AsymmetricTally when the result is not symmetric.
EtaTilde tally_eta_tilde(const LeveledQuotient& q);

}  // namespace etakit
