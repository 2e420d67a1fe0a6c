#pragma once

#include "etakit/cover.hpp"
#include "etakit/eta.hpp"
#include "etakit/pi1.hpp"

#include <nlohmann/json.hpp>

#include <optional>

namespace etakit {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become numbers, larger ones strings.
Json to_json(const Integer& v);
Json to_json(const SymBracket& b);
Json to_json(const EtaTilde& e);
Json to_json(const LaurentPoly& p);
Json to_json(const std::map<Level, Integer>& m);
Json to_json(const Move& m);
Json to_json(const CrossCheck& c);
Json to_json(const Certification& c);

// The eta result object; params are null for file input.
Json eta_report(const EtaComputation& e, const std::optional<FamilyParams>& params);

std::string sha256_hex(std::string_view data);

}  // namespace etakit
