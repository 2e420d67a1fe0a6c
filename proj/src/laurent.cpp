#include "etakit/laurent.hpp"

#include "etakit/error.hpp"

#include <cctype>
#include <sstream>

namespace etakit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view context) {
  s = trim(s);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw SyntaxError("expected integer in '" + std::string(context) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw SyntaxError("expected integer in '" + std::string(context) + "'");
    }
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

LaurentPoly::LaurentPoly(Integer constant) { add_term(0, constant); }

LaurentPoly::LaurentPoly(std::map<Exponent, Integer> coeffs) {
  for (auto& [e, c] : coeffs) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(Integer coeff, Exponent exp) {
  LaurentPoly p;
  p.add_term(exp, coeff);
  return p;
}

void LaurentPoly::add_term(Exponent exp, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Integer LaurentPoly::coeff(Exponent exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

LaurentPoly LaurentPoly::reciprocal() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(-e, c);
  return r;
}

bool LaurentPoly::is_palindromic() const { return *this == reciprocal(); }

Rational LaurentPoly::evaluate(const Rational& t0) const {
  if (t0 == 0) throw ZeroArgument("cannot evaluate a Laurent polynomial at t = 0");
  Rational sum = 0;
  for (const auto& [e, c] : coeffs_) {
    Rational power = 1;
    Rational base = e >= 0 ? t0 : Rational(1) / t0;
    for (Exponent k = 0, n = e >= 0 ? e : -e; k < n; ++k) power *= base;
    sum += Rational(c) * power;
  }
  return sum;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  LaurentPoly product;
  for (const auto& [e1, c1] : coeffs_) {
    for (const auto& [e2, c2] : rhs.coeffs_) product.add_term(e1 + e2, c1 * c2);
  }
  *this = std::move(product);
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r;
  for (const auto& [e, c] : a.coeffs_) r.coeffs_.emplace(e, -c);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) out << " + ";
    first = false;
    out << c << "*t^" << e;
  }
  return out.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  text = trim(text);
  if (text == "0") return {};
  LaurentPoly p;
  std::size_t pos = 0;
  while (true) {
    std::size_t sep = text.find(" + ", pos);
    std::string_view term = trim(text.substr(pos, sep == std::string_view::npos ? std::string_view::npos : sep - pos));
    std::size_t star = term.find("*t^");
    if (star == std::string_view::npos) throw SyntaxError("malformed term '" + std::string(term) + "'");
    Integer c = parse_integer(term.substr(0, star), term);
    Integer e = parse_integer(term.substr(star + 3), term);
    p.add_term(static_cast<Exponent>(e), c);
    if (sep == std::string_view::npos) break;
    pos = sep + 3;
  }
  return p;
}

SymBracket::SymBracket(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0);
}

Integer SymBracket::at(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Integer(0); }

std::string SymBracket::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j) out << ", ";
    out << coeffs_[j];
  }
  out << ']';
  return out.str();
}

SymBracket SymBracket::parse(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw SyntaxError("bracket must be written as [a0, a1, ...]");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<Integer> coeffs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    coeffs.push_back(parse_integer(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos), text));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return SymBracket(std::move(coeffs));
}

LaurentPoly from_bracket(const SymBracket& b) {
  std::map<Exponent, Integer> coeffs;
  const auto& a = b.coeffs();
  coeffs[0] = a[0];
  for (std::size_t j = 1; j < a.size(); ++j) {
    auto e = static_cast<Exponent>(j);
    coeffs[e] = a[j];
    coeffs[-e] = a[j];
  }
  return LaurentPoly(std::move(coeffs));
}

SymBracket to_bracket(const LaurentPoly& p) {
  if (p.is_zero()) return SymBracket();
  for (const auto& [e, c] : p.coeffs()) {
    if (p.coeff(-e) != c) {
      throw NotPalindromic("coefficients at t^" + std::to_string(e) + " and t^" + std::to_string(-e) + " differ");
    }
  }
  Exponent top = p.max_exponent();
  std::vector<Integer> coeffs(static_cast<std::size_t>(top < 0 ? 0 : top) + 1);
  for (Exponent j = 0; j <= top; ++j) coeffs[static_cast<std::size_t>(j)] = p.coeff(j);
  return SymBracket(std::move(coeffs));
}

}  // namespace etakit
