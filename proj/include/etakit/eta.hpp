#pragma once

#include "etakit/laurent.hpp"
#include "etakit/quotient.hpp"

#include <string_view>

namespace etakit {

enum class Involution { tau, sigma };

std::string_view to_string(Involution inv);
Involution parse_involution(std::string_view s);  // SyntaxError

// A member (K_n, tau) or (K_n, sigma) of the canonical knot family.
struct FamilyParams {
  int n = 1;  // n >= 1
  Involution involution = Involution::tau;

  FamilyParams() = default;
  FamilyParams(int n_, Involution inv);  // throws ConsistencyError if n < 1
};

// eta' = sum_i c_i (t^{i-1} - 2 t^i + t^{i+1}).
LaurentPoly substitute(const EtaTilde& e);

// [a_0, a_1, a_2, ...] -> [-2 sum_{j>=1} a_{2j}, -sum_{j>=1} a_{2j+1}, a_2, a_3, ...]
SymBracket normalize(const SymBracket& eta_prime);

struct EtaComputation {
  EtaTilde eta_tilde;
  SymBracket eta_prime;  // intermediate; entries 0 and 1 are discarded by normalize
  SymBracket eta;
  LaurentPoly eta_poly;
};

// Substitution and normalization applied to a given tally.
EtaComputation eta_pipeline(const EtaTilde& e);
EtaComputation compute_eta_detailed(const LeveledQuotient& q);
LaurentPoly compute_eta(const LeveledQuotient& q);

// Closed forms for the family, in exact integer arithmetic.
EtaTilde eta_tilde_closed_form(const FamilyParams& p);
SymBracket eta_closed_form(const FamilyParams& p);
// eta' exactly as printed for the family. For odd n with tau this differs from
// substitute(eta_tilde_closed_form) in entries 0 and 1.
SymBracket printed_eta_prime(const FamilyParams& p);

struct Distinction {
  bool distinct = false;
  SymBracket tau;
  SymBracket sigma;
};

Distinction sakuma_distinguish(int n);

}  // namespace etakit
