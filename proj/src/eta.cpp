#include "etakit/eta.hpp"

#include "etakit/error.hpp"

namespace etakit {

std::string_view to_string(Involution inv) { return inv == Involution::tau ? "tau" : "sigma"; }

Involution parse_involution(std::string_view s) {
  if (s == "tau") return Involution::tau;
  if (s == "sigma") return Involution::sigma;
  throw SyntaxError("involution must be 'tau' or 'sigma', got '" + std::string(s) + "'");
}

FamilyParams::FamilyParams(int n_, Involution inv) : n(n_), involution(inv) {
  if (n < 1) throw ConsistencyError("family parameter n must be >= 1");
}

LaurentPoly substitute(const EtaTilde& e) {
  // Coefficient of t^k is the second difference c_{k+1} - 2 c_k + c_{k-1}.
  std::map<Exponent, Integer> out;
  for (const auto& [i, c] : e.coeffs()) {
    out[i - 1] += c;
    out[i] -= 2 * c;
    out[i + 1] += c;
  }
  return LaurentPoly(std::move(out));
}

SymBracket normalize(const SymBracket& eta_prime) {
  std::vector<Integer> b(std::max<std::size_t>(eta_prime.coeffs().size(), 2));
  for (std::size_t j = 2; j < eta_prime.coeffs().size(); ++j) {
    b[j] = eta_prime.coeffs()[j];
    if (j % 2 == 0) {
      b[0] -= 2 * b[j];
    } else {
      b[1] -= b[j];
    }
  }
  return SymBracket(std::move(b));
}

EtaComputation eta_pipeline(const EtaTilde& e) {
  EtaComputation r;
  r.eta_tilde = e;
  r.eta_prime = to_bracket(substitute(r.eta_tilde));
  r.eta = normalize(r.eta_prime);
  r.eta_poly = from_bracket(r.eta);
  return r;
}

EtaComputation compute_eta_detailed(const LeveledQuotient& q) { return eta_pipeline(tally_eta_tilde(q)); }

LaurentPoly compute_eta(const LeveledQuotient& q) { return compute_eta_detailed(q).eta_poly; }

namespace {

EtaTilde symmetric(std::initializer_list<std::pair<Level, Integer>> halves) {
  EtaTilde e;
  for (const auto& [i, c] : halves) {
    e.add(i, c);
    if (i != 0) e.add(-i, c);
  }
  return e;
}

}  // namespace

// The half-integer looking coefficients are exact after the parity branch:
// h = (n-1)/2 for odd n and h = n/2 for even n.
EtaTilde eta_tilde_closed_form(const FamilyParams& p) {
  const Integer n = p.n;
  const bool odd = p.n % 2 != 0;
  if (p.involution == Involution::tau) {
    if (odd) {
      Integer h = (n - 1) / 2;
      return symmetric({{3, -h}, {2, -n + 2}, {1, h + 2}, {0, 2}});
    }
    Integer h = n / 2;
    return symmetric({{5, -h}, {3, n - 1}, {2, -n + 1}, {1, -h + 1}});
  }
  if (odd) {
    Integer h = (n - 1) / 2;
    return symmetric({{5, h}, {3, -n + 2}, {2, n - 2}, {1, h - 1}});
  }
  Integer h = n / 2;
  return symmetric({{3, h - 2}, {2, n - 5}, {1, -h}, {0, -2}});
}

SymBracket eta_closed_form(const FamilyParams& p) {
  const Integer n = p.n;
  const bool odd = p.n % 2 != 0;
  if (p.involution == Involution::tau) {
    if (odd) {
      Integer h = (n - 1) / 2;
      return SymBracket{-3 * n + 3, -1, 2 * n - 2, 1, -h};
    }
    Integer h = n / 2;
    return SymBracket{-5 * n + 6, 2 * n - 3, 5 * h - 2, -3 * n + 3, h - 1, n, -h};
  }
  if (odd) {
    Integer h = (n - 1) / 2;
    // (-5n+9)/2 = -5h + 2 and (-n+3)/2 = -h + 1
    return SymBracket{5 * n - 11, -2 * n + 5, -5 * h + 2, 3 * n - 6, -h + 1, -n + 1, h};
  }
  Integer h = n / 2;
  return SymBracket{3 * n - 12, 1, -2 * n + 8, -1, h - 2};
}

SymBracket printed_eta_prime(const FamilyParams& p) {
  const Integer n = p.n;
  const bool odd = p.n % 2 != 0;
  if (p.involution == Involution::tau) {
    if (odd) {
      Integer h = (n - 1) / 2;
      return SymBracket{n + 1, -2 * n - 1, 2 * n - 2, 1, -h};
    }
    Integer h = n / 2;
    return SymBracket{-n + 2, -1, 5 * h - 2, -3 * n + 3, h - 1, n, -h};
  }
  if (odd) {
    Integer h = (n - 1) / 2;
    return SymBracket{n - 3, 1, -5 * h + 2, 3 * n - 6, -h + 1, -n + 1, h};
  }
  Integer h = n / 2;
  return SymBracket{-n + 4, 2 * n - 7, -2 * n + 8, -1, h - 2};
}

Distinction sakuma_distinguish(int n) {
  Distinction d;
  d.tau = eta_closed_form(FamilyParams(n, Involution::tau));
  d.sigma = eta_closed_form(FamilyParams(n, Involution::sigma));
  d.distinct = from_bracket(d.tau) != from_bracket(d.sigma);
  return d;
}

}  // namespace etakit
