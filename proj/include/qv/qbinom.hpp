#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "qv/qlaurent.hpp"

namespace qv {

// Gaussian binomial [top choose bottom] in base q^d. Zero unless
// 0 <= bottom <= top. Results are polynomials with nonnegative integer
// coefficients.
QLaurent qbin(long top, long bottom, long d = 1);

// Cached variant sharing one immutable value per (top, bottom, d); the hot
// paths (kernels, alternating sums) hold these instead of copying maps.
std::shared_ptr<const QLaurent> qbin_ref(long top, long bottom, long d = 1);

std::size_t qbin_cache_size();

// [L choose m, n] = [L choose m] [L-m choose n]
QLaurent trinom(long L, long m, long n);

// One factor pattern (1 + sign * q^exp * q^(base*t)) for t = 0, 1, ...
// sign 0 means the literal factor 0, which shows up in halved specials.
struct Mono {
    int sign = 1;
    long exp = 0;
};

struct PochSpec {
    std::vector<Mono> factors;
    long base = 1;                // exponent step between consecutive t
    std::optional<long> length;   // nullopt: infinite product
};

// Finite product over t = 0..length-1 of every listed factor.
// Requires spec.length with value >= 0. Negative exponents are allowed;
// the result is a Laurent polynomial.
QLaurent poch_finite(const PochSpec& spec);

// Infinite product truncated to q^trunc. Requires no length, base >= 1 and
// every factor exponent >= 1 once stepped (otherwise the product does not
// converge coefficientwise and DivergentSpec is thrown).
QSeries poch_infinite(const PochSpec& spec, long trunc);

// Convenience single-pattern builders.
QLaurent poch1(int sign, long exp, long base, long length);
QSeries poch1_inf(int sign, long exp, long base, long trunc);

// sum_n q^(n(n-1)/2) z^n [L choose n] with z = sign * q^zexp, as a closed
// product: prod_{t=0}^{L-1} (1 + sign q^(zexp+t)).
QLaurent qbinom_theorem_rhs(long L, int sign, long zexp);

// 1/(q;q)_inf truncated, i.e. the partition generating function.
QSeries partitions_gf(long trunc);

}  // namespace qv
