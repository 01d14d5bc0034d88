#pragma once

#include <string>
#include <vector>

#include "qv/gsum.hpp"
#include "qv/record.hpp"
#include "qv/transforms.hpp"

namespace qv {

enum class FamilyKind { polynomial, series, positivity };

const char* kind_name(FamilyKind k);

// Upper bound of a parameter: either a number or another parameter's value
// plus an offset (so "i" can run 1..v and "Delta" 0..v-1).
struct ParamBound {
    bool symbolic = false;
    long value = 0;       // numeric bound
    std::string param;    // when symbolic
    long offset = 0;      // added to the referenced parameter
    long resolve(const std::map<std::string, long>& chosen) const;
};

struct ParamSpec {
    std::string name;
    long lo = 0;
    bool no_lo = false;     // parameter ranges over all integers (offsets like j)
    bool unbounded = true;  // no intrinsic upper limit (sizes like L, M)
    ParamBound hi;          // intrinsic bound when !unbounded
    long grid_lo = 0;       // sweep window (defaults to lo)
    long smoke_hi = 0;
    long full_hi = 0;
};

struct FamilyDesc {
    std::string id;
    FamilyKind kind;
    std::vector<ParamSpec> params;
    std::string sketch;     // one-line shape of the identity
    long trunc_smoke = 24;  // series kinds: default truncation per level
    long trunc_full = 40;
};

using Params = std::map<std::string, long>;

const std::vector<FamilyDesc>& registry();

// Case-exact lookup; also accepts the decorated spelling of S3-F.
// Returns nullptr when unknown.
const FamilyDesc* lookup(const std::string& id);

// Checks ranges and cross-parameter constraints. On failure returns false
// and, if why != nullptr, stores a message.
bool validate_params(const FamilyDesc& fam, const Params& p, std::string* why);

// Exact evaluators for the polynomial and positivity kinds.
QLaurent eval_lhs_poly(const std::string& id, const Params& p);
QLaurent eval_rhs_poly(const std::string& id, const Params& p);

// Truncated evaluators for the series kind.
QSeries eval_lhs_series(const std::string& id, const Params& p, long trunc);
QSeries eval_rhs_series(const std::string& id, const Params& p, long trunc);

// Uniform entry point. Polynomial kind compares sides exactly; series kind
// to order trunc (default 100); positivity kind checks nonnegativity of the
// instance. Exceptions become Error records, never escape.
VerificationRecord verify(const std::string& id, const Params& p,
                          long trunc = 100);

// The level-dependent sweep grid for one family (smoke = quick ceilings,
// full = the deep grids used by the batch acceptance run).
std::vector<Params> default_grid(const FamilyDesc& fam, bool full);

// Route equivalence: the kernel transform of the tail family core (tail on:
// FQ shape, off: the plain-core shape) reproduces the two-variable family's
// target sum up to a fixed power of q. Used by tests and the batch driver.
VerificationRecord route_equivalence_record(bool tail, long v, long Delta,
                                            long L);

// Shared internals that tests exercise directly.
QLaurent ag_core_lhs(long v, long i, long L, bool tail);   // FQ / N16 left side
QLaurent inner_core(long v, long Delta, long k, bool tail);  // T11 / N17 inner sum
QLaurent halved_core_lhs(long v, long L);  // left side of the folded family B5-414c

}  // namespace qv
