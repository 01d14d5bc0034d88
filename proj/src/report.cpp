#include "qv/report.hpp"

#include <sstream>

namespace qv {

nlohmann::ordered_json record_json(const VerificationRecord& r) {
    nlohmann::ordered_json j;
    j["family"] = r.family;
    nlohmann::ordered_json pj = nlohmann::ordered_json::object();
    for (const auto& kv : r.params) pj[kv.first] = kv.second;
    j["params"] = std::move(pj);
    j["status"] = status_name(r.status);
    j["first_mismatch"] = r.first_mismatch ? nlohmann::ordered_json(*r.first_mismatch)
                                           : nlohmann::ordered_json(nullptr);
    j["lhs_coeff"] =
        r.lhs_coeff ? nlohmann::ordered_json(*r.lhs_coeff) : nlohmann::ordered_json(nullptr);
    j["rhs_coeff"] =
        r.rhs_coeff ? nlohmann::ordered_json(*r.rhs_coeff) : nlohmann::ordered_json(nullptr);
    j["truncation"] =
        r.truncation ? nlohmann::ordered_json(*r.truncation) : nlohmann::ordered_json(nullptr);
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

std::string records_json(const std::vector<VerificationRecord>& rs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) arr.push_back(record_json(r));
    return arr.dump(2) + "\n";
}

std::string csv_header() {
    return "family,params,status,first_mismatch,lhs_coeff,rhs_coeff,truncation,elapsed_ms";
}

namespace {

std::string params_compact(const std::map<std::string, long>& p) {
    std::string s;
    for (const auto& kv : p) {
        if (!s.empty()) s += ' ';
        s += kv.first + "=" + std::to_string(kv.second);
    }
    return s;
}

}  // namespace

std::string record_csv(const VerificationRecord& r) {
    std::ostringstream os;
    os << r.family << ',' << params_compact(r.params) << ',' << status_name(r.status) << ',';
    if (r.first_mismatch) os << *r.first_mismatch;
    os << ',';
    if (r.lhs_coeff) os << *r.lhs_coeff;
    os << ',';
    if (r.rhs_coeff) os << *r.rhs_coeff;
    os << ',';
    if (r.truncation) os << *r.truncation;
    os << ',' << r.elapsed_ms;
    return os.str();
}

std::string record_text(const VerificationRecord& r) {
    std::ostringstream os;
    os << r.family;
    std::string ps = params_compact(r.params);
    if (!ps.empty()) os << ' ' << ps;
    os << ": " << status_name(r.status);
    if (r.first_mismatch) {
        os << " at q^" << *r.first_mismatch;
        if (r.lhs_coeff && r.rhs_coeff)
            os << " (lhs " << *r.lhs_coeff << ", rhs " << *r.rhs_coeff << ")";
        else if (r.lhs_coeff)
            os << " (coefficient " << *r.lhs_coeff << ")";
    }
    if (!r.note.empty()) os << " [" << r.note << "]";
    return os.str();
}

}  // namespace qv
