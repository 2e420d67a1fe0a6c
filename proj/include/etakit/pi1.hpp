#pragma once

#include "etakit/diagram.hpp"
#include "etakit/laurent.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace etakit {

struct Letter {
  std::string gen;
  int exp = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word in a free group.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);  // reduces
  Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

  static Word power(const std::string& gen, int k);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  // Conjugates into cyclically reduced form.
  Word cyclically_reduced() const;
  // Left rotation by k letters. Callers reduce afterwards, if needed.
  Word rotated(std::size_t k) const;
  int occurrences(const std::string& gen) const;
  int exponent_sum(const std::string& gen) const;
  // Replaces every occurrence of gen by w.
  Word substituted(const std::string& gen, const Word& w) const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word a, const Word& b) { return a *= b; }
  friend bool operator==(const Word&, const Word&) = default;

  // "x1 x5^-1", "1" for the empty word. Runs of a letter are written with
  // an exponent: "x3^-2".
  std::string to_string() const;
  static Word parse(std::string_view text);  // SyntaxError

 private:
  std::vector<Letter> letters_;
};

// Equal up to cyclic permutation and inversion.
bool same_relator(const Word& a, const Word& b);
// If w is cyclically a commutator of two distinct generators, returns them.
std::optional<std::pair<std::string, std::string>> as_commutator(const Word& w);

class GroupPresentation {
 public:
  GroupPresentation() = default;
  // Throws UndeclaredGenerator or ConsistencyError (duplicate generator).
  GroupPresentation(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  bool declares(const std::string& gen) const;

  void add_relator(Word w);  // UndeclaredGenerator
  void remove_relator(std::size_t i);
  void replace_relator(std::size_t i, Word w);
  // Substitutes w for gen everywhere, then removes gen.
  void eliminate(const std::string& gen, const Word& w);

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;

 private:
  void check(const Word& w) const;

  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

// `gens: x1 x2 ...` then `rel: ...` lines; `#` comments. Throws SyntaxError,
// UndeclaredGenerator.
GroupPresentation parse_presentation(std::string_view text);
std::string serialize(const GroupPresentation& p);

// One generator per arc, relator v^-1 g^-s u g^s per crossing.
GroupPresentation wirtinger(const LinkDiagram& d);
// Read along the component from start_arc (default: its first arc): the
// meridian start_arc^-writhe, then over^sign at each undercrossing.
Word longitude(const LinkDiagram& d, const std::string& component, const std::string& start_arc = {});
// longitude * meridian^framing for each component, in name order.
std::vector<Word> surgery_relators(const LinkDiagram& d, const std::map<std::string, int>& framings,
                                   const std::map<std::string, std::string>& start_arcs = {});
// Validates and reduces an attaching word.
Word handle_relator(const GroupPresentation& p, const Word& attaching);

struct Move {
  std::string kind;  // reduce, drop, commute, eliminate
  long relator = -1;  // index at the time of the move
  long via = -1;
  std::string generator;
  Word result;
};

struct Simplification {
  GroupPresentation presentation;
  std::vector<Move> log;
  bool budget_exhausted = false;
};

inline constexpr std::size_t kDefaultBudget = 10000;
// ETAKIT_BUDGET when set and valid, else kDefaultBudget.
std::size_t budget_from_env();

Simplification tietze_simplify(const GroupPresentation& p, std::size_t budget = kDefaultBudget);
// Applies the log to p. Throws ReplayError if a move does not apply.
GroupPresentation replay(const GroupPresentation& p, const std::vector<Move>& log);

// Invariant factors; 0 stands for a free summand. Empty means trivial.
std::vector<Integer> abelianization(const GroupPresentation& p);

enum class Verdict { certified, inconclusive };

struct Certification {
  Verdict verdict = Verdict::inconclusive;
  std::string reason;
  Simplification simplification;
  std::vector<Integer> h1;  // of the input
};

Certification certify_trivial(const GroupPresentation& p, std::size_t budget = kDefaultBudget);

// Surgery diagram with m-1 and n-1 extra half twists on the two
// components. Throws TemplateUnavailable outside 1 <= m, n <= 3.
LinkDiagram w_surgery_diagram(int m, int n);
// Wirtinger relators, both 0-framed longitudes and the handle relator.
GroupPresentation w_family_presentation(int m, int n);

}  // namespace etakit
