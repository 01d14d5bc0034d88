#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "qv/qbinom.hpp"

using qv::Mono;
using qv::PochSpec;
using qv::QLaurent;
using qv::QSeries;
using qv::Rat;

namespace {

QLaurent from_coeffs(const std::vector<long>& cs, long lo = 0) {
    QLaurent p;
    for (std::size_t i = 0; i < cs.size(); ++i)
        p.add_term(lo + static_cast<long>(i), cs[i]);
    return p;
}

// (q;q)_m as a series, inverted
QSeries inv_poch_series(long m, long trunc) {
    return qv::series_inverse_unit(qv::to_series(qv::poch1(-1, 1, 1, m), trunc));
}

}  // namespace

TEST_CASE("frozen small Gaussian binomials") {
    CHECK(qv::qbin(0, 0) == QLaurent::one());
    CHECK(qv::qbin(4, 2) == from_coeffs({1, 1, 2, 1, 1}));
    CHECK(qv::qbin(3, -1).is_zero());
    CHECK(qv::qbin(2, 3).is_zero());
    CHECK(qv::qbin(-1, 0).is_zero());
    CHECK(qv::qbin(5, 0) == QLaurent::one());
    CHECK(qv::qbin(5, 5) == QLaurent::one());

    // base q^2
    QLaurent b2 = qv::qbin(3, 1, 2);
    CHECK(b2 == from_coeffs({1, 0, 1, 0, 1}));
    CHECK(qv::trinom(2, 1, 1) == from_coeffs({1, 1}));
}

TEST_CASE("symmetry [n,k] == [n,n-k] up to top 30") {
    for (long n = 0; n <= 30; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(qv::qbin(n, k) == qv::qbin(n, n - k));
}

TEST_CASE("both Pascal recurrences, bases 1 and 2") {
    for (long d = 1; d <= 2; ++d)
        for (long n = 1; n <= 30; ++n)
            for (long k = 0; k <= n; ++k) {
                QLaurent lhs = qv::qbin(n, k, d);
                QLaurent r1 = qv::qbin(n - 1, k, d) +
                              qv::qbin(n - 1, k - 1, d).shifted(d * (n - k));
                QLaurent r2 = qv::qbin(n - 1, k, d).shifted(d * k) +
                              qv::qbin(n - 1, k - 1, d);
                CHECK(lhs == r1);
                CHECK(lhs == r2);
            }
}

TEST_CASE("nonnegative integer coefficients and palindromicity") {
    for (long n = 0; n <= 30; ++n)
        for (long k = 0; k <= n; ++k) {
            QLaurent b = qv::qbin(n, k);
            CHECK(b.nonneg());
            for (const auto& kv : b.terms()) CHECK(kv.second.get_den() == 1);
            // coefficients read the same from both ends
            long top = k * (n - k);
            CHECK(b.max_exp() == top);
            bool pal = true;
            for (const auto& kv : b.terms())
                if (kv.second != b.coeff(top - kv.first)) pal = false;
            CHECK(pal);
        }
}

TEST_CASE("base substitution matches explicit base argument") {
    for (long n = 0; n <= 12; ++n)
        for (long k = 0; k <= n; ++k)
            for (long d = 2; d <= 3; ++d)
                CHECK(qv::qbin(n, k, d) == qv::qbin(n, k).substitute_power(d));
}

TEST_CASE("qbin_ref shares one immutable value") {
    auto a = qv::qbin_ref(10, 4);
    auto b = qv::qbin_ref(10, 4);
    CHECK(a.get() == b.get());
    CHECK(*a == qv::qbin(10, 4));
    std::size_t before = qv::qbin_cache_size();
    qv::qbin_ref(23, 11);
    CHECK(qv::qbin_cache_size() >= before);
}

TEST_CASE("finite Pochhammer products") {
    // (q;q)_3 = (1-q)(1-q^2)(1-q^3)
    QLaurent p = qv::poch1(-1, 1, 1, 3);
    QLaurent manual = QLaurent::one();
    for (long t = 1; t <= 3; ++t) {
        QLaurent f = QLaurent::one();
        f.add_term(t, -1);
        manual = manual * f;
    }
    CHECK(p == manual);

    // empty product
    CHECK(qv::poch1(-1, 1, 1, 0) == QLaurent::one());

    // (-q;q^2)_2 = (1+q)(1+q^3)
    QLaurent q2 = qv::poch1(1, 1, 2, 2);
    CHECK(q2 == from_coeffs({1, 1, 0, 1, 1}));

    // negative exponents are allowed in finite products: (-1/q;q^2)_1 = 1+q^{-1}
    QLaurent neg = qv::poch1(1, -1, 2, 1);
    CHECK(neg.coeff(-1) == 1);
    CHECK(neg.coeff(0) == 1);

    // a sign-0 factor is the literal 0
    PochSpec zero_spec;
    zero_spec.factors = {Mono{0, 0}};
    zero_spec.base = 1;
    zero_spec.length = 2;
    CHECK(qv::poch_finite(zero_spec).is_zero());

    // multi-factor spec multiplies all patterns at every step
    PochSpec multi;
    multi.factors = {Mono{-1, 1}, Mono{-1, 2}};
    multi.base = 3;
    multi.length = 2;
    CHECK(qv::poch_finite(multi) ==
          qv::poch1(-1, 1, 3, 2) * qv::poch1(-1, 2, 3, 2));
}

TEST_CASE("infinite Pochhammer guards") {
    PochSpec no_len;
    no_len.factors = {Mono{-1, 1}};
    no_len.base = 1;
    no_len.length = 5;
    CHECK_THROWS_AS(qv::poch_infinite(no_len, 10), std::invalid_argument);

    // factor with exponent 0 never moves: coefficientwise divergent
    CHECK_THROWS_AS(qv::poch1_inf(-1, 0, 1, 10), qv::DivergentSpec);

    PochSpec bad_base;
    bad_base.factors = {Mono{-1, 1}};
    bad_base.base = 0;
    CHECK_THROWS_AS(qv::poch_infinite(bad_base, 10), qv::DivergentSpec);

    PochSpec zero_factor;
    zero_factor.factors = {Mono{0, 1}};
    zero_factor.base = 1;
    CHECK_THROWS_AS(qv::poch_infinite(zero_factor, 10), qv::DivergentSpec);
}

TEST_CASE("Euler product and pentagonal numbers") {
    QSeries e = qv::poch1_inf(-1, 1, 1, 5);
    QSeries want(5);
    want.set(0, 1);
    want.set(1, -1);
    want.set(2, -1);
    want.set(5, 1);
    CHECK(e == want);

    // exponents with nonzero coefficient are exactly k(3k-1)/2, coefficient (-1)^k
    QSeries big = qv::poch1_inf(-1, 1, 1, 26);
    QSeries pent(26);
    for (long k = -4; k <= 4; ++k) {
        long e2 = k * (3 * k - 1) / 2;
        if (e2 >= 0 && e2 <= 26) pent.add(e2, (k % 2 == 0) ? 1 : -1);
    }
    CHECK(big == pent);
}

TEST_CASE("partition generating function") {
    QSeries p = qv::partitions_gf(10);
    const long want[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (long n = 0; n <= 10; ++n) CHECK(p.at(n) == want[n]);

    // product with (q;q)_inf collapses to 1
    QSeries prod = p * qv::poch1_inf(-1, 1, 1, 10);
    CHECK(prod == QSeries::one(10));
}

TEST_CASE("closed product form of the binomial theorem sum") {
    // sum_n q^(n(n-1)/2) z^n [L,n] with z = sign q^zexp
    for (long L = 0; L <= 20; ++L)
        for (int sign : {1, -1})
            for (long zexp = 0; zexp <= 3; ++zexp) {
                QLaurent lhs;
                for (long n = 0; n <= L; ++n) {
                    QLaurent term =
                        qv::qbin(L, n).shifted(n * (n - 1) / 2 + n * zexp);
                    if (sign < 0 && (n & 1)) term = term.scaled(-1);
                    lhs += term;
                }
                CHECK(lhs == qv::qbinom_theorem_rhs(L, sign, zexp));
            }
}

TEST_CASE("limit stabilization of binomials") {
    // [L+m, m] agrees with 1/(q;q)_m through q^L
    for (long m = 1; m <= 5; ++m)
        for (long L = 0; L <= 14; ++L)
            CHECK(qv::to_series(qv::qbin(L + m, m), L) == inv_poch_series(m, L));

    // [L+M, L] agrees with the partition series through q^min(L,M)
    for (long L = 2; L <= 10; ++L)
        for (long M = 2; M <= 10; ++M) {
            long T = std::min(L, M);
            CHECK(qv::to_series(qv::qbin(L + M, L), T) == qv::partitions_gf(T));
        }

    // [L; m, n] agrees with 1/((q)_m (q)_n) through q^(L-m-n)
    for (long m = 0; m <= 3; ++m)
        for (long n = 0; n <= 3; ++n)
            for (long L = m + n; L <= m + n + 8; ++L) {
                long T = L - m - n;
                QSeries rhs = inv_poch_series(m, T) * inv_poch_series(n, T);
                CHECK(qv::to_series(qv::trinom(L, m, n), T) == rhs);
            }
}
