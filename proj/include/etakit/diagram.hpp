#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace etakit {

// A crossing of an oriented link diagram. Arcs run from one undercrossing to
// the next, so the over strand is a single arc: over_in and over_out name the
// same arc in every valid diagram. They are kept separately to mirror the
// file format.
struct Crossing {
  int sign = 1;  // +1 or -1
  std::string over_in;
  std::string over_out;
  std::string under_in;
  std::string under_out;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Component {
  std::vector<std::string> arcs;  // cyclic order along the orientation
  // Declared with `unknot`: one arc named after the component, no crossings.
  bool unknot = false;

  friend bool operator==(const Component&, const Component&) = default;
};

struct Violation {
  std::string subject;  // offending arc, crossing or component
  std::string message;
};

// Combinatorial (Gauss-code level) link diagram. Signs are stored, not
// derived; planar realizability is not checked.
class LinkDiagram {
 public:
  LinkDiagram() = default;
  LinkDiagram(std::map<std::string, Component> components, std::vector<Crossing> crossings);

  const std::map<std::string, Component>& components() const { return components_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Component& component(const std::string& name) const;  // UnknownComponent
  bool has_component(const std::string& name) const { return components_.count(name) != 0; }

  // Owning component of an arc, or empty string for undeclared arcs.
  const std::string& component_of(const std::string& arc) const;

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.components_ == b.components_ && a.crossings_ == b.crossings_;
  }

 private:
  std::map<std::string, Component> components_;
  std::vector<Crossing> crossings_;
  std::map<std::string, std::string> arc_owner_;
};

// Empty result iff every structural invariant holds.
std::vector<Violation> validate(const LinkDiagram& d);

// Throws SyntaxError or ConsistencyError (first violation).
LinkDiagram parse_diagram(std::string_view text);
std::string serialize(const LinkDiagram& d);

// Half the signed count of crossings between the two components.
int linking_number(const LinkDiagram& d, const std::string& c1, const std::string& c2);
// Signed count of self-crossings.
int writhe(const LinkDiagram& d, const std::string& c);

// Assembles a diagram from per-component passage sequences. Arcs are cut at
// each underpass and named "<component>.<k>".
class DiagramBuilder {
 public:
  void add_component(const std::string& name);
  std::size_t add_crossing(int sign);
  void pass_over(const std::string& component, std::size_t crossing);
  void pass_under(const std::string& component, std::size_t crossing);
  // Throws ConsistencyError unless every crossing got one over and one under passage.
  LinkDiagram build() const;

 private:
  struct Passage {
    std::size_t crossing;
    bool over;
  };
  std::vector<std::string> order_;
  std::map<std::string, std::vector<Passage>> passages_;
  std::vector<int> signs_;
};

}  // namespace etakit
