#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace etakit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Exponent = std::int64_t;

// Exact Laurent polynomial in one variable t. Zero coefficients are never
// stored, so structural equality is polynomial equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Integer constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(std::map<Exponent, Integer> coeffs);

  static LaurentPoly monomial(Integer coeff, Exponent exp);
  static LaurentPoly t(Exponent exp = 1) { return monomial(1, exp); }

  const std::map<Exponent, Integer>& coeffs() const { return coeffs_; }
  Integer coeff(Exponent exp) const;
  bool is_zero() const { return coeffs_.empty(); }
  // Only meaningful when !is_zero().
  Exponent min_exponent() const { return coeffs_.begin()->first; }
  Exponent max_exponent() const { return coeffs_.rbegin()->first; }

  // t -> t^{-1}
  LaurentPoly reciprocal() const;
  bool is_palindromic() const;
  Rational evaluate(const Rational& t0) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  // "c*t^e + c*t^e" sorted by exponent; "0" for the zero polynomial.
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  void add_term(Exponent exp, const Integer& c);

  std::map<Exponent, Integer> coeffs_;
};

// [a_0, a_1, ..., a_n] denoting a_0 + sum_j a_j (t^{-j} + t^j). Trailing
// zeros are trimmed; the zero polynomial is the single entry [0].
class SymBracket {
 public:
  SymBracket() : coeffs_{0} {}
  explicit SymBracket(std::vector<Integer> coeffs);
  SymBracket(std::initializer_list<Integer> coeffs)
      : SymBracket(std::vector<Integer>(coeffs)) {}

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  // a_j, zero past the end.
  Integer at(std::size_t j) const;

  friend bool operator==(const SymBracket& a, const SymBracket& b) = default;

  std::string to_string() const;
  static SymBracket parse(std::string_view text);

 private:
  std::vector<Integer> coeffs_;
};

LaurentPoly from_bracket(const SymBracket& b);
// Throws NotPalindromic.
SymBracket to_bracket(const LaurentPoly& p);

}  // namespace etakit
