#pragma once

#include "qv/qbinom.hpp"
#include "qv/qlaurent.hpp"

namespace qv {

// G(N, M, alpha, beta, K) = sum_j (-1)^j q^(K j ((a+b) j + (a-b)) / 2)
//                                 [N+M choose N-Kj]
// with the sum over the full integer support ceil(-M/K) <= j <= floor(N/K).
// alpha, beta are rationals constrained so that K*alpha and K*beta are
// integers; then every exponent is an integer (checked, NonIntegerExponent
// otherwise).
struct GParams {
    long N = 0;
    long M = 0;
    Rat alpha;
    Rat beta;
    long K = 1;
};

QLaurent g_eval(const GParams& p);

// Linear form c0 + cL*L + cM*M + cj*j used to describe binomial entries of
// one-variable alternating sums.
struct LinearForm {
    long c0 = 0, cL = 0, cM = 0, cj = 0;
    long eval(long L, long M, long j) const {
        return c0 + cL * L + cM * M + cj * j;
    }
};

struct BinomDesc {
    LinearForm top;
    LinearForm bottom;
    long base = 1;                 // binomial in q^base
    bool floor_half_bottom = false;  // bottom index is floor(value/2)
};

// sum_j (-1)^j q^(A j^2 + B j + C) * prod binoms(L, M, j). A, B, C are
// rationals; every surviving exponent must be an integer. The j window is
// derived from the binomial supports, which must bound it on both sides.
struct AltSumSpec {
    Rat A, B, C;
    std::vector<BinomDesc> binoms;
};

QLaurent alt_sum(const AltSumSpec& s, long L, long M = 0);

// sum_j (-1)^j q^(v j^2) [L+M-(v-1)j choose L-vj] [L+b+M+(v-1)j choose L+b+vj]
// The workhorse two-binomial alternating sum; defined for all integer L
// (negative L gives 0 through empty support).
QLaurent alt_sum_double(long L, long M, long v, long b);

}  // namespace qv
