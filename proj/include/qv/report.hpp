#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qv/record.hpp"

namespace qv {

// Fixed field order: family, params, status, first_mismatch, lhs_coeff,
// rhs_coeff, truncation, elapsed_ms. Optional fields are null when absent;
// coefficients are exact rational strings. Reruns with the same inputs are
// byte-identical apart from elapsed_ms.
nlohmann::ordered_json record_json(const VerificationRecord& r);

std::string records_json(const std::vector<VerificationRecord>& rs);

std::string csv_header();
std::string record_csv(const VerificationRecord& r);

std::string record_text(const VerificationRecord& r);

}  // namespace qv
