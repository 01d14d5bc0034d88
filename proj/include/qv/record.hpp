#pragma once

#include <map>
#include <optional>
#include <string>

#include "qv/qlaurent.hpp"

namespace qv {

enum class Status {
    Equal,
    Mismatch,
    NonNegative,
    NegativeCoefficient,
    Error,
};

const char* status_name(Status s);

// Outcome of checking one identity instance or one positivity cell.
// Exact coefficients at the first discrepancy are carried as decimal
// strings so the record survives serialization without rounding.
struct VerificationRecord {
    std::string family;
    std::map<std::string, long> params;
    Status status = Status::Error;
    std::optional<long> first_mismatch;  // exponent of first disagreement
    std::optional<std::string> lhs_coeff;
    std::optional<std::string> rhs_coeff;
    std::optional<long> truncation;
    double elapsed_ms = 0.0;
    std::string note;  // human diagnostics only, not serialized

    bool ok() const {
        return status == Status::Equal || status == Status::NonNegative;
    }
};

VerificationRecord compare_polys(std::string family,
                                 std::map<std::string, long> params,
                                 const QLaurent& lhs, const QLaurent& rhs);

VerificationRecord compare_series(std::string family,
                                  std::map<std::string, long> params,
                                  const QSeries& lhs, const QSeries& rhs);

// NonNegative / NegativeCoefficient on a single polynomial.
VerificationRecord check_nonneg(std::string family,
                                std::map<std::string, long> params,
                                const QLaurent& value);

}  // namespace qv
