#include "qv/record.hpp"

namespace qv {

const char* status_name(Status s) {
    switch (s) {
        case Status::Equal: return "equal";
        case Status::Mismatch: return "mismatch";
        case Status::NonNegative: return "nonnegative";
        case Status::NegativeCoefficient: return "negative_coefficient";
        case Status::Error: return "error";
    }
    return "error";
}

VerificationRecord compare_polys(std::string family,
                                 std::map<std::string, long> params,
                                 const QLaurent& lhs, const QLaurent& rhs) {
    VerificationRecord r;
    r.family = std::move(family);
    r.params = std::move(params);
    if (lhs == rhs) {
        r.status = Status::Equal;
        return r;
    }
    r.status = Status::Mismatch;
    QLaurent diff = lhs - rhs;
    long e = diff.min_exp();
    r.first_mismatch = e;
    r.lhs_coeff = lhs.coeff(e).get_str();
    r.rhs_coeff = rhs.coeff(e).get_str();
    return r;
}

VerificationRecord compare_series(std::string family,
                                  std::map<std::string, long> params,
                                  const QSeries& lhs, const QSeries& rhs) {
    VerificationRecord r;
    r.family = std::move(family);
    r.params = std::move(params);
    r.truncation = lhs.trunc();
    if (lhs == rhs) {
        r.status = Status::Equal;
        return r;
    }
    r.status = Status::Mismatch;
    for (long e = 0; e <= lhs.trunc(); ++e) {
        if (lhs.at(e) != rhs.at(e)) {
            r.first_mismatch = e;
            r.lhs_coeff = lhs.at(e).get_str();
            r.rhs_coeff = rhs.at(e).get_str();
            break;
        }
    }
    return r;
}

VerificationRecord check_nonneg(std::string family,
                                std::map<std::string, long> params,
                                const QLaurent& value) {
    VerificationRecord r;
    r.family = std::move(family);
    r.params = std::move(params);
    r.status = Status::NonNegative;
    for (const auto& [e, v] : value.terms()) {
        if (v < 0) {
            r.status = Status::NegativeCoefficient;
            r.first_mismatch = e;
            r.lhs_coeff = v.get_str();
            break;
        }
    }
    return r;
}

}  // namespace qv
