#include "etakit/diagram.hpp"
#include "etakit/error.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace etakit;

TEST_CASE("Hopf link") {
  const auto d = parse_diagram(read_corpus("hopf.diag"));
  CHECK(d.components().size() == 2);
  CHECK(d.crossings().size() == 2);
  CHECK(validate(d).empty());
  CHECK(linking_number(d, "A", "B") == 1);
  CHECK(linking_number(d, "B", "A") == 1);

  const auto neg = parse_diagram(
      "component A arcs a\ncomponent B arcs b\n"
      "crossing - over a a under b b\ncrossing - over b b under a a\n");
  CHECK(linking_number(neg, "A", "B") == -1);
}

TEST_CASE("unlink, unknot, trefoil, figure eight") {
  const auto unlink = parse_diagram(read_corpus("unlink.diag"));
  CHECK(linking_number(unlink, "A", "B") == 0);
  const auto unknot = parse_diagram(read_corpus("unknot.diag"));
  CHECK(writhe(unknot, "K") == 0);
  CHECK(unknot.component("K").unknot);
  CHECK(writhe(parse_diagram(read_corpus("trefoil.diag")), "K") == 3);
  CHECK(writhe(parse_diagram(read_corpus("figure8.diag")), "K") == 0);
}

TEST_CASE("surgery link of the cobordism") {
  const auto d = parse_diagram(read_corpus("W11_surgery.diag"));
  CHECK(d.components().size() == 2);
  std::size_t arcs = 0;
  for (const auto& [name, c] : d.components()) arcs += c.arcs.size();
  CHECK(arcs == 10);
  CHECK(linking_number(d, "x", "y") == 1);
  CHECK(writhe(d, "x") == 2);
  CHECK(writhe(d, "y") == 2);
}

TEST_CASE("quotient link has lk(O, L) = 0") {
  const auto d = parse_diagram(read_corpus("K1_tau_quotient.diag"));
  CHECK(linking_number(d, "O", "L") == 0);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(parse_diagram("component A arcs a b\n"
                                "crossing + over a a under a b\ncrossing + over b b under a b\n"),
                  ConsistencyError);
  CHECK_THROWS_AS(parse_diagram("component A arcs a\ncrossing * over a a under a a\n"), SyntaxError);
  CHECK_THROWS_AS(parse_diagram("knot A\n"), SyntaxError);
  const auto d = parse_diagram(read_corpus("hopf.diag"));
  CHECK_THROWS_AS(linking_number(d, "A", "Z"), UnknownComponent);
  CHECK_THROWS_AS(linking_number(d, "A", "A"), SameComponent);
  CHECK_THROWS_AS(writhe(d, "Z"), UnknownComponent);
}

TEST_CASE("validation reports") {
  SUBCASE("unknown arc") {
    LinkDiagram d({{"K", {{"a"}, false}}}, {{1, "a", "a", "a", "zz"}});
    CHECK(validate(d).size() == 1);
  }
  SUBCASE("component split into two cycles") {
    // a -> b -> a and c -> d -> c declared as one component
    LinkDiagram d({{"K", {{"a", "b", "c", "d"}, false}}},
                  {{1, "c", "c", "a", "b"}, {1, "d", "d", "b", "a"}, {1, "a", "a", "c", "d"}, {1, "b", "b", "d", "c"}});
    CHECK(validate(d).size() == 1);
  }
  SUBCASE("odd crossing count between components") {
    LinkDiagram d({{"A", {{"a"}, false}}, {"B", {{"b"}, false}}},
                  {{1, "b", "b", "a", "a"}, {1, "a", "a", "a", "a"}});
    CHECK_FALSE(validate(d).empty());
  }
}

TEST_CASE("serialization round trip") {
  for (const char* name : {"hopf.diag", "trefoil.diag", "figure8.diag", "unlink.diag", "unknot.diag",
                           "W11_surgery.diag", "W23_surgery.diag", "K1_tau_quotient.diag"}) {
    CAPTURE(name);
    const auto d = parse_diagram(read_corpus(name));
    CHECK(parse_diagram(serialize(d)) == d);
  }
}

TEST_CASE("builder") {
  DiagramBuilder b;
  b.add_component("A");
  b.add_component("B");
  b.add_component("C");
  auto x = b.add_crossing(1), y = b.add_crossing(1);
  b.pass_over("A", x);
  b.pass_under("A", y);
  b.pass_under("B", x);
  b.pass_over("B", y);
  const auto d = b.build();
  CHECK(validate(d).empty());
  CHECK(linking_number(d, "A", "B") == 1);
  CHECK(d.component("C").unknot);
  CHECK(linking_number(d, "A", "C") == 0);

  DiagramBuilder bad;
  bad.add_component("A");
  bad.pass_over("A", bad.add_crossing(1));
  CHECK_THROWS_AS(bad.build(), ConsistencyError);
}
