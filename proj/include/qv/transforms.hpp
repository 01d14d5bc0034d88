#pragma once

#include <functional>
#include <map>
#include <memory>
#include <utility>

#include "qv/gsum.hpp"
#include "qv/record.hpp"

namespace qv {

inline long tri(long j) { return j * (j + 1) / 2; }

// The three positivity-preserving kernels. All are polynomials in q with
// nonnegative coefficients:
//   C[L,k] = sum_m q^(T(m)+T(m+k))   [L choose m, k]
//   W[L,k] = sum_m q^((m+k)^2+k^2)   [L choose m, 2k]
//   O[L,k] = sum_m q^(2T(m+k)+2T(k)) [L choose m, 2k+1]
enum class KernelKind { C, W, O };

const char* kernel_name(KernelKind k);

QLaurent kernel(KernelKind kind, long L, long k);
std::shared_ptr<const QLaurent> kernel_ref(KernelKind kind, long L, long k);

// Largest k with a nonzero kernel at this L.
long kernel_kmax(KernelKind kind, long L);

// Finitely supported weight sequence j -> alpha_j.
using AlphaSeq = std::map<long, QLaurent>;

// The shape binomial pairing a weight at j with the k-th kernel:
//   C: [k choose floor((k-j)/2)]   W: [2k choose k-j]   O: [2k+1 choose k-j]
QLaurent shape_binom(KernelKind kind, long k, long j);

// F(k) = sum_j alpha_j * shape_binom(kind, k, j)
QLaurent alpha_shape(KernelKind kind, const AlphaSeq& alpha, long k);

// Exponent attached to alpha_j on the transformed side:
//   C: T(j)   W: 2j^2   O: 2j^2+2j
long transform_weight(KernelKind kind, long j);

// Bounded transform law. Returns (lhs, rhs) where
//   lhs = sum_k kernel(kind, L, k) * alpha_shape(kind, alpha, k)
//   rhs = sum_j alpha_j q^(transform_weight) * B(L, j)
// with B the target binomial ([2L+1 choose L-j], [2L choose L-2j],
// [2L choose L-2j-1] for C, W, O). The two sides agree identically for any
// finitely supported alpha.
std::pair<QLaurent, QLaurent> apply_transform(KernelKind kind,
                                              const AlphaSeq& alpha, long L);

// Single delta weight at j = a, checked end to end.
VerificationRecord kernel_identity_record(KernelKind kind, long L, long a);

// L -> infinity version. F supplies the series limit of the shape sums;
// the lhs becomes a weighted double sum with Pochhammer denominators:
//   C: sum_{m,k} q^(T(m)+T(m+k))   / ((q)_m (q)_k)     F(k)
//   W: sum_{m,k} q^((m+k)^2+k^2)   / ((q)_m (q)_{2k})  F(k)
//   O: sum_{m,k} q^(2T(m+k)+2T(k)) / ((q)_m (q)_{2k+1}) F(k)
QSeries apply_limit_transform(KernelKind kind,
                              const std::function<QSeries(long k, long trunc)>& F,
                              long trunc);

// Series limit of the transformed side for a finite alpha:
//   (sum_j alpha_j q^(transform_weight)) / (q)_inf
QSeries limit_transform_rhs(KernelKind kind, const AlphaSeq& alpha, long trunc);

}  // namespace qv
