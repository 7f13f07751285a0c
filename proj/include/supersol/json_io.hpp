#pragma once

#include <json.hpp>

#include <string>

#include "supersol/berezin.hpp"
#include "supersol/radial.hpp"
#include "supersol/super_element.hpp"
#include "supersol/verify.hpp"

namespace supersol {

// Canonical JSON forms. Exact scalars are emitted as "num/den" strings and
// pi powers as integers counting halves (pi_pow = 2 means pi^1). Bitmask
// fields are bitstrings whose i-th character (0-based) is the generator of
// index i+1. Term order follows the canonical map order, so files are
// byte-stable.

nlohmann::ordered_json to_json(const Coefficient& c);
nlohmann::ordered_json to_json(const SuperElement& e);
nlohmann::ordered_json to_json(const RadialExpr& e);
nlohmann::ordered_json to_json(const CheckReport& r, bool with_timings = false);
nlohmann::ordered_json to_json(const PairingReport& r);
nlohmann::ordered_json to_json(const ResidualReport& r);
nlohmann::ordered_json to_json(const SampledSuperFunction& f);

RadialExpr radial_from_json(const nlohmann::json& j);
SuperTestFunction test_function_from_json(const nlohmann::json& j);

std::string mask_to_bitstring(std::uint32_t mask, int width);
std::uint32_t bitstring_to_mask(const std::string& s);

// Fixed decimal formatting used in every machine-readable output, so that
// identical invocations produce byte-identical files.
std::string format_double(double v);

}  // namespace supersol
