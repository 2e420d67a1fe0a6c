#include "etakit/report.hpp"

#include <openssl/evp.h>

#include <cstdio>

namespace etakit {

Json to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

Json to_json(const SymBracket& b) {
  Json j = Json::array();
  for (const auto& c : b.coeffs()) j.push_back(to_json(c));
  return j;
}

Json to_json(const EtaTilde& e) {
  Json j = Json::object();
  for (const auto& [i, c] : e.coeffs()) j[std::to_string(i)] = to_json(c);
  return j;
}

Json to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [i, c] : p.coeffs()) j[std::to_string(i)] = to_json(c);
  return j;
}

Json to_json(const std::map<Level, Integer>& m) {
  Json j = Json::object();
  for (const auto& [i, c] : m) j[std::to_string(i)] = to_json(c);
  return j;
}

Json to_json(const Move& m) {
  Json j{{"kind", m.kind}, {"relator", m.relator}};
  if (m.via >= 0) j["via"] = m.via;
  if (!m.generator.empty()) j["generator"] = m.generator;
  if (m.kind != "drop") j["result"] = m.result.to_string();
  return j;
}

Json to_json(const CrossCheck& c) {
  Json mism = Json::array();
  for (const auto& m : c.mismatches) {
    mism.push_back({{"i", m.i}, {"oracle", to_json(m.oracle)}, {"algorithm", to_json(m.algorithm)}});
  }
  return {{"depth", c.depth},
          {"oracle", to_json(c.oracle)},
          {"algorithm", to_json(c.algorithm)},
          {"verdict", c.match() ? "match" : "mismatch"},
          {"mismatches", mism}};
}

Json to_json(const Certification& c) {
  Json h1 = Json::array();
  for (const auto& f : c.h1) h1.push_back(to_json(f));
  Json log = Json::array();
  for (const auto& m : c.simplification.log) log.push_back(to_json(m));
  return {{"h1", h1},
          {"h1_trivial", c.h1.empty()},
          {"verdict", c.verdict == Verdict::certified ? "certified" : "inconclusive"},
          {"reason", c.reason},
          {"budget_exhausted", c.simplification.budget_exhausted},
          {"moves", c.simplification.log.size()},
          {"terminal", serialize(c.simplification.presentation)},
          {"log", log}};
}

Json eta_report(const EtaComputation& e, const std::optional<FamilyParams>& params) {
  Json j;
  j["n"] = params ? Json(params->n) : Json(nullptr);
  j["involution"] = params ? Json(std::string(to_string(params->involution))) : Json(nullptr);
  j["eta_tilde"] = to_json(e.eta_tilde);
  j["eta_prime_bracket"] = to_json(e.eta_prime);
  j["eta_prime_intermediate"] = true;
  j["eta_bracket"] = to_json(e.eta);
  j["eta_poly"] = to_json(e.eta_poly);
  j["eta_text"] = e.eta_poly.to_string();
  j["checks"] = {{"palindromic", e.eta_poly.is_palindromic()},
                 {"vanishes_at_1", e.eta_poly.evaluate(1) == 0}};
  return j;
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

}  // namespace etakit
