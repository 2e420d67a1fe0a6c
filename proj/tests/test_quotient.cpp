#include "etakit/error.hpp"
#include "etakit/eta.hpp"
#include "etakit/quotient.hpp"
#include "random_leveled.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace etakit;

TEST_CASE("parse leveled files") {
  const auto q = parse_leveled("arc a level 0\narc b level 1\njump a +1\njump b -1\n");
  CHECK(q.arcs().size() == 2);
  CHECK(q.levels() == std::vector<Level>{0, 1});
  CHECK_THROWS_AS(parse_leveled("arc a level 0\narc b\njump a +1\njump b +1\n"), NonzeroHolonomy);
  CHECK_THROWS_AS(parse_leveled("arc a level 0\narc b level 2\njump a +1\njump b -1\n"), JumpMismatch);
  CHECK_THROWS_AS(parse_leveled("arc a\njump a 0\n"), SyntaxError);
  CHECK_THROWS_AS(parse_leveled("arc a level 0\n"), SyntaxError);
  CHECK_THROWS_AS(parse_leveled("arc a level 0\njump a 2\n"), SyntaxError);
  CHECK_THROWS_AS(parse_leveled("arc a level 0\njump a 0\ncrossing + over a under z\n"), SyntaxError);
  CHECK_THROWS_AS(parse_leveled("arc a level 0\njump a 0\nbogus\n"), SyntaxError);
}

TEST_CASE("assign levels") {
  CHECK(assign_levels(3, 4, {0, 0, 0}) == std::vector<Level>{4, 4, 4});
  CHECK(assign_levels(4, 0, {1, 1, -1, -1}) == std::vector<Level>{0, 1, 2, 1});
  CHECK_THROWS_AS(assign_levels(2, 0, {1, 1}), NonzeroHolonomy);
  const auto q = parse_leveled(read_corpus("K1_tau.lvq"));
  CHECK(assign_levels(q.arcs().size(), q.levels()[0], q.jumps()) == q.levels());
  CHECK(q.levels() == std::vector<Level>{0, 1, 2, 1});
}

TEST_CASE("tally") {
  const auto q = parse_leveled(
      "arc a level 0\narc b\njump a +1\njump b -1\n"
      "crossing + over b under a\ncrossing + over a under b\n");
  const auto e = tally_eta_tilde(q);
  CHECK(e.coeffs() == std::map<Level, Integer>{{-1, 1}, {1, 1}});
  const auto lopsided = parse_leveled("arc a level 0\narc b\njump a +1\njump b -1\ncrossing + over b under a\n");
  CHECK_THROWS_AS(tally_eta_tilde(lopsided), AsymmetricTally);
  CHECK(tally_eta_tilde(parse_leveled("arc a level 0\njump a 0\n")).coeffs().empty());
}

TEST_CASE("corpus tallies") {
  const auto k1t = tally_eta_tilde(parse_leveled(read_corpus("K1_tau.lvq")));
  CHECK(k1t.at(0) == 2);
  CHECK(k1t.at(1) == 2);
  CHECK(k1t.at(-1) == 2);
  CHECK(k1t.at(2) == 1);
  CHECK(k1t.at(-2) == 1);
  CHECK(k1t.at(3) == 0);
  const auto k2s = tally_eta_tilde(parse_leveled(read_corpus("K2_sigma.lvq")));
  CHECK(k2s.coeffs() == std::map<Level, Integer>{{-3, -1}, {-2, -3}, {-1, -1}, {0, -2}, {1, -1}, {2, -3}, {3, -1}});
}

TEST_CASE("every corpus tally equals the family closed form") {
  for (int n = 1; n <= 3; ++n) {
    for (auto inv : {Involution::tau, Involution::sigma}) {
      const std::string name = "K" + std::to_string(n) + "_" + std::string(to_string(inv)) + ".lvq";
      CAPTURE(name);
      CHECK(tally_eta_tilde(parse_leveled(read_corpus(name))) == eta_tilde_closed_form(FamilyParams(n, inv)));
    }
  }
}

TEST_CASE("tally ignores level shifts, relabeling and crossing order") {
  std::mt19937 rng(17);
  for (int k = 0; k < 100; ++k) {
    const auto q = random_leveled(rng);
    const auto e = tally_eta_tilde(q);
    CHECK(e.is_symmetric());
    LeveledQuotient shifted(q.arcs(), q.levels()[0] + 5, q.jumps(), q.crossings());
    CHECK(tally_eta_tilde(shifted) == e);
    auto renamed = q.arcs();
    for (auto& a : renamed) a = "z_" + a;
    auto reordered = q.crossings();
    std::reverse(reordered.begin(), reordered.end());
    CHECK(tally_eta_tilde(LeveledQuotient(renamed, q.levels()[0], q.jumps(), reordered)) == e);
  }
}

TEST_CASE("serialization round trip") {
  std::mt19937 rng(23);
  for (int k = 0; k < 50; ++k) {
    const auto q = random_leveled(rng);
    CHECK(parse_leveled(serialize(q)) == q);
  }
  const auto q = parse_leveled(read_corpus("K3_tau.lvq"));
  CHECK(parse_leveled(serialize(q)) == q);
}
