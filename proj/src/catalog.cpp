#include "qv/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "qv/positivity.hpp"
#include "qv/transforms.hpp"

namespace qv {

namespace {

long isqrt_floor(long n) {
    if (n <= 0) return 0;
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

Rat alt_sign(long j) { return (j % 2 != 0) ? Rat(-1) : Rat(1); }

QLaurent one_plus(int sign, long e) {
    QLaurent p = QLaurent::one();
    p.add_term(e, sign);
    return p;
}

// Nonincreasing tuples Ns[0] >= Ns[1] >= ... >= 0 bounded by hi at idx.
void tuple_rec(std::vector<long>& Ns, std::size_t idx, long hi,
               const std::function<void(const std::vector<long>&)>& leaf) {
    if (idx == Ns.size()) {
        leaf(Ns);
        return;
    }
    for (long N = 0; N <= hi; ++N) {
        Ns[idx] = N;
        tuple_rec(Ns, idx + 1, N, leaf);
    }
}

// Lazily extended table of 1/(q^d;q^d)_n at a fixed truncation.
class InvPoch {
public:
    InvPoch(long trunc, long d) : trunc_(trunc), d_(d) { v_.push_back(QSeries::one(trunc)); }

    const QSeries& operator()(long n) {
        while (static_cast<long>(v_.size()) <= n) {
            long i = static_cast<long>(v_.size());
            v_.push_back(v_.back() * series_inverse_unit(to_series(one_plus(-1, d_ * i), trunc_)));
        }
        return v_[static_cast<std::size_t>(n)];
    }

private:
    long trunc_;
    long d_;
    std::vector<QSeries> v_;
};

// ---------------------------------------------------------------- polynomial
// right sides

// sum_j (-1)^j q^(v j^2 + B j) [2L+c0 choose L-vj], with B = v-i when the
// tail weights are present and 0 otherwise; c0 = v-i in both cases.
QLaurent fq_like_rhs(long v, long i, long L, bool tail) {
    AltSumSpec s;
    s.A = v;
    s.B = tail ? (v - i) : 0;
    s.binoms = {BinomDesc{LinearForm{v - i, 2, 0, 0}, LinearForm{0, 1, 0, -v}, 1, false}};
    return alt_sum(s, L);
}

// sum_j (-1)^j q^(v(2v+1) j^2 + jc j) [2L choose L-Delta-2vj]
QLaurent t11_like_rhs(long v, long Delta, long L, long jc) {
    AltSumSpec s;
    s.A = v * (2 * v + 1);
    s.B = jc;
    s.binoms = {BinomDesc{LinearForm{0, 2, 0, 0}, LinearForm{-Delta, 1, 0, -2 * v}, 1, false}};
    return alt_sum(s, L);
}

// Triple sum over m, k and the inner tuples; the two-variable families share
// this left side and differ only in the tail weights and the rhs j-coefficient.
QLaurent t11_triple_lhs(long v, long Delta, long L, bool tail) {
    QLaurent total;
    for (long k = 0; 2 * k + Delta <= L; ++k) {
        QLaurent inner = inner_core(v, Delta, k, tail);
        if (inner.is_zero()) continue;
        for (long m = 0; m + 2 * k + Delta <= L; ++m) {
            QLaurent t = trinom(L, m, 2 * k + Delta);
            if (t.is_zero()) continue;
            long e = (m + k) * (m + k) + k * k + Delta * (m + 2 * k);
            total += (t * inner).shifted(e);
        }
    }
    return total;
}

// One-variable alternating sums with exponent 2j^2 + Bj over
// [2L+topc0 choose L+botc0-2j].
AltSumSpec s3_spec(long B, long topc0, long botc0) {
    AltSumSpec s;
    s.A = 2;
    s.B = B;
    s.binoms = {BinomDesc{LinearForm{topc0, 2, 0, 0}, LinearForm{botc0, 1, 0, -2}, 1, false}};
    return s;
}

QLaurent s3_rhs(char tag, long L) {
    switch (tag) {
        case 'F':  // (-q^2;q^2)_L
            return poch1(1, 2, 2, L);
        case 'I':  // (-q;q^2)_L
            return poch1(1, 1, 2, L);
        case '7':  // q^L (-q;q^2)_L
            return poch1(1, 1, 2, L).shifted(L);
        case 'A':  // (-q;q^2)_{L-1} (1 - q^{2L})
            if (L == 0) return QLaurent();
            return poch1(1, 1, 2, L - 1) * one_plus(-1, 2 * L);
        case 'B': {  // q^L prod_{t=0}^{L-1} (1 + q^{2t-1}); Laurent before the shift
            QLaurent p = QLaurent::one();
            for (long t = 0; t < L; ++t) p = p * one_plus(1, 2 * t - 1);
            return p.shifted(L);
        }
        case 'X':  // (1 + q^L) (-q^2;q^2)_{L-1}
            if (L == 0) return QLaurent::one();
            return one_plus(1, L) * poch1(1, 2, 2, L - 1);
        case 'Y':  // (1 - q^L) (-q^2;q^2)_{L-1}
            if (L == 0) return QLaurent();
            return one_plus(-1, L) * poch1(1, 2, 2, L - 1);
        case 'Z': {  // (-1;q^2)_L (1 + q^L + q^{L+1} - q^{2L+1}) / 2
            QLaurent f = QLaurent::one();
            f.add_term(L, 1);
            f.add_term(L + 1, 1);
            f.add_term(2 * L + 1, -1);
            return poch1(1, 0, 2, L).scaled(Rat(1, 2)) * f;
        }
        case 'C': {  // (-q^2;q^2)_{L-2} ((1+q^L)(1-q^{2L}) + q^{L-1}(1-q^L)(1+q^2))
            if (L == 0) return QLaurent();
            QLaurent base = (L >= 2) ? poch1(1, 2, 2, L - 2)
                                     : QLaurent::one().scaled(Rat(1, 2));
            QLaurent f = one_plus(1, L) * one_plus(-1, 2 * L);
            f += (one_plus(-1, L) * one_plus(1, 2)).shifted(L - 1);
            return base * f;
        }
        default:
            throw std::logic_error("bad closed-form tag");
    }
}

// Three-term recurrence right side: (1+q-q^L)[L-1,k] + q^{2L-2k}[L-1,k-1]
// + (q^L - q)[L-2,k].
QLaurent prodinger_rhs(long L, long k) {
    QLaurent f1 = QLaurent::one();
    f1.add_term(1, 1);
    f1.add_term(L, -1);
    QLaurent r = f1 * qbin(L - 1, k);
    r += qbin(L - 1, k - 1).shifted(2 * L - 2 * k);
    QLaurent f3;
    f3.add_term(L, 1);
    f3.add_term(1, -1);
    r += f3 * qbin(L - 2, k);
    return r;
}

QLaurent l51_lhs(long al, long be, long j, long m1, long m2, long M) {
    QLaurent total;
    long ilo = std::max(-j - al, j - be);
    long ihi = std::min({M, m1 - j - al, m2 + j - be});
    for (long i = ilo; i <= ihi; ++i) {
        QLaurent p = qbin(m1 + m2 + M - i, M - i) * qbin(m1, i + j + al) * qbin(m2, i - j + be);
        if (p.is_zero()) continue;
        total += p.shifted(i * i + (al + be) * i);
    }
    return total;
}

QLaurent l51_rhs(long al, long be, long j, long m1, long m2, long M) {
    QLaurent p = qbin(m1 + M - j + be, M + j + al) * qbin(m2 + M + j + al, M - j + be);
    return p.shifted((j + al) * (j - be));
}

QLaurent t41_lhs(long a, long b, long j, long L, long M) {
    QLaurent total;
    for (long i = 0; i <= M; ++i) {
        QLaurent p = qbin(2 * L + b + M - i, M - i) * qbin(L - (a - 1) * j, L - i - a * j) *
                     qbin(L + b + (a - 1) * j, L + b - i + a * j);
        if (p.is_zero()) continue;
        total += p.shifted(i * i);
    }
    return total;
}

QLaurent t41_rhs(long a, long b, long j, long L, long M) {
    QLaurent p = qbin(L + M - a * j, L - (a + 1) * j) *
                 qbin(L + b + M + a * j, L + b + (a + 1) * j);
    return p.shifted(j * j);
}

QLaurent t43_lhs(long v, long b, long L, long M) {
    QLaurent total;
    for (long i = 0; i <= M; ++i) {
        QLaurent f = alt_sum_double(L - i, i, v, b);
        if (f.is_zero()) continue;
        total += (qbin(2 * L + b + M - i, M - i) * f).shifted(i * i);
    }
    return total;
}

QLaurent l41_lhs(long i, long L, long M) {
    QLaurent total;
    for (long n1 = 0; n1 <= std::min(L, M); ++n1) {
        QLaurent p = qbin(2 * L + 2 - i + M - n1, M - n1) * qbin(L, n1, 2);
        if (p.is_zero()) continue;
        total += p.shifted(n1 * n1);
    }
    return total;
}

// Multisum left side carrying the extra [2L+v-i+M-N1 choose M-N1] factor.
QLaurent t44_core(long v, long i, long L, long M) {
    if (v == 1) return qbin(2 * L + v - i + M, M);
    QLaurent total;
    std::vector<long> Ns(static_cast<std::size_t>(v - 1));
    tuple_rec(Ns, 0, M, [&](const std::vector<long>& N) {
        QLaurent p = qbin(2 * L + v - i + M - N[0], M - N[0]);
        if (p.is_zero()) return;
        long prefix = 0;
        for (long t = 0; t + 1 < v - 1; ++t) prefix += N[static_cast<std::size_t>(t)];
        p = p * qbin(L - prefix, N[static_cast<std::size_t>(v - 2)], 2);
        if (p.is_zero()) return;
        long run = 0;
        for (long jj = 1; jj <= v - 2; ++jj) {
            run += N[static_cast<std::size_t>(jj - 1)];
            long nj = N[static_cast<std::size_t>(jj - 1)] - N[static_cast<std::size_t>(jj)];
            long top = nj + 2 * L - 2 * run + std::min(v - i, v - 1 - jj);
            p = p * qbin(top, nj);
            if (p.is_zero()) return;
        }
        long e = 0;
        for (long x : N) e += x * x;
        total += p.shifted(e);
    });
    return total;
}

QLaurent b414c_rhs(long v, long L) {
    AltSumSpec s;
    s.A = v;
    s.binoms = {BinomDesc{LinearForm{0, 1, 0, 0}, LinearForm{0, 1, 0, -2 * v}, 1, true}};
    return alt_sum(s, L);
}

// sum_j (-1)^j q^(v(2v+1) j^2 + v j) [2L+1 choose L-2vj]
QLaurent b421_rhs(long v, long L) {
    AltSumSpec s;
    s.A = v * (2 * v + 1);
    s.B = v;
    s.binoms = {BinomDesc{LinearForm{1, 2, 0, 0}, LinearForm{0, 1, 0, -2 * v}, 1, false}};
    return alt_sum(s, L);
}

QLaurent b421_lhs(long v, long L) {
    QLaurent total;
    for (long k = 0; k <= L; ++k) {
        QLaurent f = halved_core_lhs(v, k);
        if (f.is_zero()) continue;
        total += *kernel_ref(KernelKind::C, L, k) * f;
    }
    return total;
}

long pow2(long n) { return 1L << n; }
long chain_x(long n) { return ((1L << (2 * n)) - 1) / 3; }

// Alternating-sum twin of each positivity instance, used as an independent
// cross-check of the G evaluation path.
QLaurent pos_alt_rhs(const std::string& id, const Params& p) {
    if (id == "POS-FQ") return fq_like_rhs(p.at("v"), p.at("i"), p.at("L"), true);
    if (id == "POS-T11") {
        long v = p.at("v"), D = p.at("Delta");
        return t11_like_rhs(v, D, p.at("L"), (2 * v + 1) * D);
    }
    if (id == "POS-N17") {
        long v = p.at("v"), D = p.at("Delta");
        return t11_like_rhs(v, D, p.at("L"), 2 * v * D);
    }
    if (id == "POS-ODD") return b421_rhs(p.at("v"), p.at("L"));
    AltSumSpec s;
    long v = p.at("v");
    if (id == "POS-EVEN") {
        s.A = v * (10 * v + 1);
        s.B = 5 * v;
        s.binoms = {BinomDesc{LinearForm{0, 2, 0, 0}, LinearForm{-1, 1, 0, -4 * v}, 1, false}};
        return alt_sum(s, p.at("L"));
    }
    long n = p.at("n");
    long X = chain_x(n), K = pow2(n) * v;
    s.A = v * (2 * v * X + 1);
    if (id == "POS-CHAIN-C") {
        s.B = v * X;
        s.binoms = {BinomDesc{LinearForm{0, 2, 0, 0}, LinearForm{-pow2(n - 2), 1, 0, -K}, 1, false}};
        return alt_sum(s, p.at("L"));
    }
    long D = p.at("Delta");
    s.B = (id == "POS-CHAIN-T") ? (2 * v * X + 1) * D : 2 * v * X * D;
    s.binoms = {BinomDesc{LinearForm{0, 2, 0, 0}, LinearForm{-D * pow2(n - 1), 1, 0, -K}, 1, false}};
    return alt_sum(s, p.at("L"));
}

// ---------------------------------------------------------------- series

// (q^m;q^m)_inf (q^e1;q^m)_inf (q^e2;q^m)_inf / (q;q)_inf
QSeries triple_product_series(long m, long e1, long e2, long trunc) {
    QSeries r = poch1_inf(-1, m, m, trunc);
    r = r * poch1_inf(-1, e1, m, trunc);
    r = r * poch1_inf(-1, e2, m, trunc);
    return r * partitions_gf(trunc);
}

// Multisum over tuples with Pochhammer denominators; last factor lives in
// base q^2 for the even-modulus family and base q for the odd one.
QSeries ser_tuple_lhs(long v, long i, long trunc, bool last_q2) {
    InvPoch inv1(trunc, 1), inv2(trunc, 2);
    QSeries acc(trunc);
    std::vector<long> Ns(static_cast<std::size_t>(v - 1));
    tuple_rec(Ns, 0, isqrt_floor(trunc), [&](const std::vector<long>& N) {
        long e = 0;
        for (long x : N) e += x * x;
        for (long t = i - 1; t < v - 1; ++t) e += N[static_cast<std::size_t>(t)];
        if (e > trunc) return;
        QSeries den = QSeries::one(trunc);
        for (long t = 0; t + 1 < v - 1; ++t)
            den = den * inv1(N[static_cast<std::size_t>(t)] - N[static_cast<std::size_t>(t + 1)]);
        long nlast = N[static_cast<std::size_t>(v - 2)];
        den = den * (last_q2 ? inv2(nlast) : inv1(nlast));
        acc += den.shifted(e);
    });
    return acc;
}

QSeries ser_inner_lhs(long v, long Delta, long trunc, bool tail) {
    InvPoch inv1(trunc, 1);
    QSeries acc(trunc);
    for (long k = 0; 2 * k * k + 2 * Delta * k <= trunc; ++k) {
        QLaurent inner = inner_core(v, Delta, k, tail);
        if (inner.is_zero()) continue;
        QSeries innerk = to_series(inner.truncated(trunc), trunc) * inv1(2 * k + Delta);
        for (long m = 0;; ++m) {
            long e = (m + k) * (m + k) + k * k + Delta * (m + 2 * k);
            if (e > trunc) break;
            acc += (innerk * inv1(m)).shifted(e);
        }
    }
    return acc;
}

QSeries ser_folded_lhs(long v, long trunc) {
    InvPoch inv1(trunc, 1);
    QSeries acc(trunc);
    for (long k = 0; tri(k) <= trunc; ++k) {
        QLaurent inner = halved_core_lhs(v, k);
        if (inner.is_zero()) continue;
        QSeries innerk = to_series(inner.truncated(trunc), trunc) * inv1(k);
        for (long m = 0;; ++m) {
            long e = tri(m) + tri(m + k);
            if (e > trunc) break;
            acc += (innerk * inv1(m)).shifted(e);
        }
    }
    return acc;
}

// One weighted double sum q^expf(m,k) numf(k) / ((q)_m (q)_{2k(+1)} [extra]).
QSeries m20_dsum(long trunc, InvPoch& inv,
                 const std::function<long(long, long)>& expf,
                 const std::function<QLaurent(long)>& numf, bool den_odd,
                 const std::function<QLaurent(long)>& extra_den = nullptr) {
    QSeries acc(trunc);
    for (long k = 0;; ++k) {
        QLaurent num = numf(k);
        long lead = expf(0, k) + num.min_exp();
        if (lead > trunc) break;
        long s0 = std::max(0L, -num.min_exp());
        QSeries numk = to_series(num.shifted(s0), trunc) * inv(den_odd ? 2 * k + 1 : 2 * k);
        if (extra_den) numk = numk * series_inverse_unit(to_series(extra_den(k), trunc));
        for (long m = 0;; ++m) {
            if (expf(m, k) + num.min_exp() > trunc) break;
            acc += (numk * inv(m)).shifted(expf(m, k) - s0);
        }
    }
    return acc;
}

QSeries m20_lhs(long idx, long trunc) {
    InvPoch inv(trunc, 1);
    auto e_22 = [](long m, long k) { return k * k + (m + k) * (m + k) + 2 * (m + 2 * k); };
    auto e_12 = [](long m, long k) { return k * k + (m + k) * (m + k) + m + 2 * k; };
    auto e_13 = [](long m, long k) { return k * k + (m + k) * (m + k) + m + 3 * k; };
    auto e_01 = [](long m, long k) { return k * k + (m + k) * (m + k) + k; };
    auto e_00 = [](long m, long k) { return k * k + (m + k) * (m + k); };
    auto neg1 = [](long k) { return poch1(1, 0, 2, k); };    // (-1;q^2)_k
    auto negq = [](long k) { return poch1(1, 1, 2, k); };    // (-q;q^2)_k
    auto negq2 = [](long k) { return poch1(1, 2, 2, k); };   // (-q^2;q^2)_k
    auto neginv = [](long k) { return poch1(1, -1, 2, k); };  // (-1/q;q^2)_k
    auto bump = [](long k) { return one_plus(1, k + 1); };   // 1 + q^{k+1}
    switch (idx) {
        case 1:
            return m20_dsum(trunc, inv, e_22, negq2, true, bump);
        case 2:
            return m20_dsum(trunc, inv, e_22, negq, true);
        case 3: {
            QSeries a = m20_dsum(trunc, inv, e_22,
                                 [&](long k) { return (bump(k) * neg1(k)).scaled(Rat(1, 2)); }, true);
            QSeries b = m20_dsum(trunc, inv,
                                 [&](long m, long k) { return e_22(m, k) + k; },
                                 [&](long k) { return (one_plus(1, 2) * neg1(k)).scaled(Rat(1, 2)); },
                                 true, bump);
            return a + b;
        }
        case 4:
            return m20_dsum(trunc, inv, e_13, negq, true);
        case 5:
            return m20_dsum(trunc, inv, e_12, negq2, true);
        case 6:
            return m20_dsum(trunc, inv, e_12, negq, true);
        case 7: {
            QSeries a = m20_dsum(trunc, inv, e_12,
                                 [&](long k) { return neg1(k).scaled(Rat(1, 2)); }, false);
            QSeries b = m20_dsum(trunc, inv, e_13,
                                 [&](long k) { return neg1(k).scaled(Rat(1, 2)); }, true);
            return a + b * to_series(one_plus(1, 1), trunc);
        }
        case 8:
            return m20_dsum(trunc, inv, e_01, neginv, false);
        case 9:
            return m20_dsum(trunc, inv, e_00,
                            [&](long k) { return (one_plus(1, k) * neg1(k)).scaled(Rat(1, 2)); },
                            false);
        case 10:
            return m20_dsum(trunc, inv, e_00, negq, false);
        default:
            throw std::invalid_argument("index out of range");
    }
}

// Both sides carry the balancing factor q^floor(s^2/4) so they are honest
// power series even when z = zc * q^s drags exponents below zero.
QSeries jtp_lhs(long zc, long s, long trunc) {
    QSeries acc(trunc);
    long shift = s * s / 4;
    long J = isqrt_floor(trunc + shift) + s + 2;
    for (long j = -J; j <= J; ++j) {
        long e = j * j + s * j + shift;
        if (e < 0 || e > trunc) continue;
        Rat c = alt_sign(j);
        if (zc < 0) c = c * alt_sign(j);  // (-1)^j zc^j
        acc.add(e, c);
    }
    return acc;
}

QSeries jtp_rhs(long zc, long s, long trunc) {
    long shift = s * s / 4;
    QLaurent head = QLaurent::one();
    long t = 0;
    for (; 1 - s + 2 * t <= 0; ++t) head = head * one_plus(static_cast<int>(-zc), 1 - s + 2 * t);
    long e0 = 1 - s + 2 * t;
    QSeries r = to_series(head.shifted(shift), trunc);
    r = r * poch1_inf(-1, 2, 2, trunc);
    r = r * poch1_inf(static_cast<int>(-zc), e0, 2, trunc);
    r = r * poch1_inf(static_cast<int>(-zc), 1 + s, 2, trunc);
    return r;
}

// ---------------------------------------------------------------- registry

ParamSpec p_size(const char* name, long lo, long smoke, long full) {
    ParamSpec s;
    s.name = name;
    s.lo = lo;
    s.grid_lo = lo;
    s.smoke_hi = smoke;
    s.full_hi = full;
    return s;
}

ParamSpec p_sym(const char* name, long lo, const char* ref, long off) {
    ParamSpec s;
    s.name = name;
    s.lo = lo;
    s.grid_lo = lo;
    s.unbounded = false;
    s.hi.symbolic = true;
    s.hi.param = ref;
    s.hi.offset = off;
    return s;
}

ParamSpec p_pin(const char* name, long lo, long hi) {
    ParamSpec s;
    s.name = name;
    s.lo = lo;
    s.grid_lo = lo;
    s.unbounded = false;
    s.hi.value = hi;
    s.smoke_hi = hi;
    s.full_hi = hi;
    return s;
}

ParamSpec p_any(const char* name, long glo, long ghi) {
    ParamSpec s;
    s.name = name;
    s.no_lo = true;
    s.grid_lo = glo;
    s.smoke_hi = ghi;
    s.full_hi = ghi;
    return s;
}

std::vector<FamilyDesc> build_registry() {
    std::vector<FamilyDesc> r;
    auto poly = [&](const char* id, std::vector<ParamSpec> ps, const char* sketch) {
        r.push_back({id, FamilyKind::polynomial, std::move(ps), sketch, 24, 40});
    };
    auto series = [&](const char* id, std::vector<ParamSpec> ps, const char* sketch,
                      long ts, long tf) {
        r.push_back({id, FamilyKind::series, std::move(ps), sketch, ts, tf});
    };
    auto positivity = [&](const char* id, std::vector<ParamSpec> ps, const char* sketch) {
        r.push_back({id, FamilyKind::positivity, std::move(ps), sketch, 24, 40});
    };

    poly("FQ", {p_size("v", 2, 3, 4), p_sym("i", 1, "v", 0), p_size("L", 0, 6, 12)},
         "tail-weighted multisum == sum_j (-1)^j q^{j(vj+v-i)} [2L+v-i; L-vj]");
    poly("N16", {p_size("v", 2, 3, 4), p_sym("i", 1, "v", 0), p_size("L", 0, 6, 10)},
         "plain multisum == sum_j (-1)^j q^{v j^2} [2L+v-i; L-vj]");
    poly("T11", {p_size("v", 2, 3, 3), p_sym("Delta", 0, "v", -1), p_size("L", 0, 5, 8)},
         "trinomial triple sum (tail) == sum_j (-1)^j q^{v(2v+1)j^2+(2v+1)Dj} [2L; L-D-2vj]");
    poly("N17", {p_size("v", 2, 3, 3), p_sym("Delta", 0, "v", -1), p_size("L", 0, 5, 8)},
         "trinomial triple sum (plain) == sum_j (-1)^j q^{v(2v+1)j^2+2vDj} [2L; L-D-2vj]");

    poly("S3-F", {p_size("L", 0, 10, 30)},
         "sum_j (-1)^j q^{2j^2+j} [2L+1; L-2j] == (-q^2;q^2)_L");
    poly("S3-I2", {p_size("L", 0, 10, 30)},
         "sum_j (-1)^j q^{2j^2} [2L; L-2j] == (-q;q^2)_L");
    poly("S3-27", {p_size("L", 0, 10, 30)},
         "sum_j (-1)^j q^{2j^2+2j} [2L+1; L-2j] == q^L (-q;q^2)_L");
    poly("S3-A", {p_size("L", 0, 10, 30)},
         "sum_j (-1)^j q^{2j^2} [2L; L-2j-1] == (-q;q^2)_{L-1} (1-q^{2L})");
    poly("S3-B", {p_size("L", 0, 10, 30)},
         "sum_j (-1)^j q^{2j^2-2j} [2L; L-2j] == q^L (-1/q;q^2)_L");
    poly("S3-X", {p_size("L", 0, 10, 30)},
         "sum_j (-1)^j q^{2j^2-j} [2L; L-2j] == (1+q^L) (-q^2;q^2)_{L-1}");
    poly("S3-Y", {p_size("L", 0, 10, 30)},
         "sum_j (-1)^j q^{2j^2+j} [2L; L-2j-1] == (1-q^L) (-q^2;q^2)_{L-1}");
    poly("S3-Z", {p_size("L", 0, 10, 30)},
         "sum_j (-1)^j q^{2j^2-j} [2L+1; L-2j] == (-1;q^2)_L (1+q^L+q^{L+1}-q^{2L+1})/2");
    poly("S3-C", {p_size("L", 0, 10, 30)},
         "sum_j (-1)^j q^{2j^2-j} [2L; L-2j-1] == (-q^2;q^2)_{L-2} ((1+q^L)(1-q^{2L}) + "
         "q^{L-1}(1-q^L)(1+q^2))");
    poly("S3-Prodinger", {p_size("L", 1, 8, 20), p_sym("k", 0, "L", 0)},
         "[L; k] == (1+q-q^L)[L-1; k] + q^{2L-2k}[L-1; k-1] + (q^L-q)[L-2; k]");

    poly("B5-L51",
         {p_any("alpha", -3, 3), p_any("beta", -3, 3), p_any("j", -3, 3),
          p_size("m1", 0, 6, 6), p_size("m2", 0, 6, 6), p_size("M", 0, 6, 6)},
         "sum_i q^{i^2+(a+b)i} [m1+m2+M-i; M-i][m1; i+j+a][m2; i-j+b] == "
         "q^{(j+a)(j-b)} [m1+M-j+b; M+j+a][m2+M+j+a; M-j+b]");
    poly("B5-T41",
         {p_size("a", 1, 2, 2), p_size("b", 0, 1, 2), p_any("j", -3, 3),
          p_size("L", 0, 3, 5), p_size("M", 0, 3, 5)},
         "sum_i q^{i^2} [2L+b+M-i; M-i][L-(a-1)j; L-i-aj][L+b+(a-1)j; L+b-i+aj] == "
         "q^{j^2} [L+M-aj; L-(a+1)j][L+b+M+aj; L+b+(a+1)j]");
    poly("B5-T42", {p_size("v", 1, 3, 4), p_size("L", 0, 4, 6), p_size("M", 0, 4, 6)},
         "F_v(L,M,v) == F_{v-1}(L,M,v) for the double-binomial alternating sum F_b");
    poly("B5-T43a",
         {p_size("v", 1, 2, 3), p_size("b", 0, 2, 3), p_size("L", 0, 3, 5),
          p_size("M", 0, 3, 5)},
         "sum_i q^{i^2} [2L+b+M-i; M-i] F_b(L-i,i,v) == F_b(L,M,v+1)");
    poly("B5-T43b", {p_size("v", 1, 2, 3), p_size("L", 0, 3, 5), p_size("M", 0, 3, 5)},
         "sum_i q^{i^2} [2L+v+M-i; M-i] F_v(L-i,i,v) == F_{v+1}(L,M,v+1)");
    poly("B5-47x", {p_size("L", 0, 5, 8), p_size("M", 0, 5, 8)},
         "sum_j (-1)^j q^{j^2} [L+M; L-j][L+M; L+j] == [L+M; L]_{q^2}");
    poly("B5-48y", {p_size("L", 0, 5, 8), p_size("M", 0, 5, 8)},
         "sum_j (-1)^j q^{j^2} [L+M; L-j][L+1+M; L+1+j] == [L+M; L]_{q^2}");
    poly("B5-L41", {p_pin("i", 1, 2), p_size("L", 0, 5, 6), p_size("M", 0, 5, 6)},
         "sum_n q^{n^2} [2L+2-i+M-n; M-n][L; n]_{q^2} == F_{2-i}(L,M,2)");
    poly("B5-410", {p_size("v", 2, 3, 4), p_size("L", 0, 4, 6), p_size("M", 0, 4, 6)},
         "multisum with extra [2L+v-1+M-N1; M-N1] == F_v(L,M,v)");
    poly("B5-T44",
         {p_size("v", 2, 3, 4), p_sym("i", 1, "v", 0), p_size("L", 0, 3, 6),
          p_size("M", 0, 3, 6)},
         "multisum with extra [2L+v-i+M-N1; M-N1] == F_{v-i}(L,M,v)");
    poly("B5-414c", {p_size("v", 2, 3, 4), p_size("L", 0, 6, 10)},
         "folded multisum == sum_j (-1)^j q^{v j^2} [L; floor((L-2vj)/2)]");
    poly("B5-421", {p_size("v", 2, 3, 4), p_size("L", 0, 4, 6)},
         "sum_k C[L,k] folded(v,k) == sum_j (-1)^j q^{v(2v+1)j^2+vj} [2L+1; L-2vj]");

    series("SER-11", {p_size("v", 2, 2, 3), p_sym("i", 1, "v", 0)},
           "even-modulus multisum series == (q^{2v},q^i,q^{2v-i};q^{2v})_inf / (q)_inf", 24, 40);
    series("SER-AG", {p_size("v", 2, 2, 3), p_sym("i", 1, "v", 0)},
           "odd-modulus multisum series == (q^{2v+1},q^i,q^{2v+1-i};q^{2v+1})_inf / (q)_inf",
           24, 40);
    series("SER-15", {p_size("v", 2, 2, 3), p_sym("Delta", 0, "v", -1)},
           "inner-core double sum (tail) == (q^{2V},q^{V-s},q^{V+s};q^{2V})_inf / (q)_inf, "
           "V=v(2v+1), s=(2v+1)D",
           24, 40);
    series("SER-19", {p_size("v", 2, 2, 3), p_sym("Delta", 0, "v", -1)},
           "inner-core double sum (plain) == (q^{2V},q^{V-s},q^{V+s};q^{2V})_inf / (q)_inf, "
           "V=v(2v+1), s=2vD",
           24, 40);
    series("SER-422", {p_size("v", 2, 2, 3)},
           "folded-core double sum == (q^{2V},q^{2v^2},q^{2v(v+1)};q^{2V})_inf / (q)_inf", 24, 40);
    series("SER-JTP", {p_pin("zsign", -1, 1), p_size("zexp", 1, 2, 2)},
           "q^{floor(s^2/4)} sum_j (-z)^j q^{j^2+sj} == q^{floor(s^2/4)} (q^2;q^2)_inf "
           "(q/z;q^2)_inf (zq;q^2)_inf, z = zsign q^zexp",
           20, 40);
    for (long a = 1; a <= 10; ++a)
        r.push_back({"M20-" + std::to_string(a),
                     FamilyKind::series,
                     {},
                     "Pochhammer-weighted double sum == (q^20,q^a,q^{20-a};q^20)_inf / (q)_inf",
                     24, 60});

    positivity("POS-FQ", {p_size("v", 2, 2, 3), p_sym("i", 1, "v", 0), p_size("L", 0, 6, 10)},
               "G(L, L+v-i, (2v-i)/v, i/v, v) has nonnegative coefficients");
    positivity("POS-T11",
               {p_size("v", 2, 2, 3), p_sym("Delta", 0, "v", -1), p_size("L", 0, 6, 10)},
               "G(L-D, L+D, (v+D)(2v+1)/2v, (v-D)(2v+1)/2v, 2v) >= 0");
    positivity("POS-N17",
               {p_size("v", 2, 2, 3), p_sym("Delta", 0, "v", -1), p_size("L", 0, 6, 10)},
               "G(L-D, L+D, (2v(v+D)+v)/2v, (2v(v-D)+v)/2v, 2v) >= 0");
    positivity("POS-ODD", {p_size("v", 2, 2, 3), p_size("L", 0, 6, 10)},
               "G(L, L+1, v+1, v, 2v) >= 0");
    positivity("POS-EVEN", {p_size("v", 2, 2, 3), p_size("L", 1, 6, 10)},
               "G(L-1, L+1, (5v+3)/2, (5v-2)/2, 4v) >= 0");
    positivity("POS-CHAIN-C", {p_size("v", 2, 2, 3), p_size("n", 2, 2, 3), p_size("L", 0, 6, 10)},
               "G(L-2^{n-2}, L+2^{n-2}, v(X(2v+1)+1)/K, v(X(2v-1)+1)/K, K) >= 0, "
               "K=2^n v, X=(4^n-1)/3");
    positivity("POS-CHAIN-T",
               {p_size("v", 2, 2, 3), p_sym("Delta", 0, "v", -1), p_size("n", 1, 2, 3),
                p_size("L", 0, 6, 10)},
               "G(L-D 2^{n-1}, L+D 2^{n-1}, (v+D)(2vX+1)/K, (v-D)(2vX+1)/K, K) >= 0");
    positivity("POS-CHAIN-N",
               {p_size("v", 2, 2, 3), p_sym("Delta", 0, "v", -1), p_size("n", 1, 2, 3),
                p_size("L", 0, 6, 10)},
               "G(L-D 2^{n-1}, L+D 2^{n-1}, (2vX(v+D)+v)/K, (2vX(v-D)+v)/K, K) >= 0");
    return r;
}

long rat_to_long(const Rat& x) {
    if (x.get_den() != 1) throw NonIntegerExponent("scaled parameter is not an integer");
    return x.get_num().get_si();
}

}  // namespace

const char* kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::polynomial: return "polynomial";
        case FamilyKind::series: return "series";
        case FamilyKind::positivity: return "positivity";
    }
    return "?";
}

long ParamBound::resolve(const std::map<std::string, long>& chosen) const {
    if (!symbolic) return value;
    auto it = chosen.find(param);
    if (it == chosen.end())
        throw std::invalid_argument("bound references missing parameter " + param);
    return it->second + offset;
}

const std::vector<FamilyDesc>& registry() {
    static const std::vector<FamilyDesc> reg = build_registry();
    return reg;
}

const FamilyDesc* lookup(const std::string& id) {
    for (const auto& f : registry())
        if (f.id == id) return &f;
    // tolerate decorated spellings (combining marks), e.g. the F-with-tilde
    std::string plain;
    for (char c : id)
        if (!(c & 0x80)) plain.push_back(c);
    if (plain != id)
        for (const auto& f : registry())
            if (f.id == plain) return &f;
    return nullptr;
}

bool validate_params(const FamilyDesc& fam, const Params& p, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    for (const auto& kv : p) {
        bool known = false;
        for (const auto& ps : fam.params) known |= (ps.name == kv.first);
        if (!known) return fail("unknown parameter " + kv.first);
    }
    for (const auto& ps : fam.params) {
        auto it = p.find(ps.name);
        if (it == p.end()) return fail("missing parameter " + ps.name);
        long x = it->second;
        if (!ps.no_lo && x < ps.lo)
            return fail(ps.name + " must be >= " + std::to_string(ps.lo));
        if (!ps.unbounded) {
            long hb = ps.hi.resolve(p);
            if (x > hb) return fail(ps.name + " must be <= " + std::to_string(hb));
        }
    }
    if (fam.id == "SER-JTP" && p.at("zsign") == 0) return fail("zsign must be +1 or -1");
    if (fam.id == "POS-CHAIN-C" && p.at("L") < pow2(p.at("n") - 2))
        return fail("L must be >= 2^(n-2)");
    if ((fam.id == "POS-CHAIN-T" || fam.id == "POS-CHAIN-N") &&
        p.at("L") < p.at("Delta") * pow2(p.at("n") - 1))
        return fail("L must be >= Delta * 2^(n-1)");
    if ((fam.id == "POS-T11" || fam.id == "POS-N17") && p.at("L") < p.at("Delta"))
        return fail("L must be >= Delta");
    return true;
}

QLaurent ag_core_lhs(long v, long i, long L, bool tail) {
    if (v == 1) return L >= 0 ? QLaurent::one() : QLaurent();
    if (L < 0) return QLaurent();
    QLaurent total;
    std::vector<long> Ns(static_cast<std::size_t>(v - 1));
    tuple_rec(Ns, 0, L, [&](const std::vector<long>& N) {
        long prefix = 0;
        for (long t = 0; t + 1 < v - 1; ++t) prefix += N[static_cast<std::size_t>(t)];
        QLaurent p = qbin(L - prefix, N[static_cast<std::size_t>(v - 2)], 2);
        if (p.is_zero()) return;
        long run = 0;
        for (long jj = 1; jj <= v - 2; ++jj) {
            run += N[static_cast<std::size_t>(jj - 1)];
            long nj = N[static_cast<std::size_t>(jj - 1)] - N[static_cast<std::size_t>(jj)];
            long top = nj + 2 * L - 2 * run + std::min(v - i, v - 1 - jj);
            p = p * qbin(top, nj);
            if (p.is_zero()) return;
        }
        long e = 0;
        for (long x : N) e += x * x;
        if (tail)
            for (long t = i - 1; t < v - 1; ++t) e += N[static_cast<std::size_t>(t)];
        total += p.shifted(e);
    });
    return total;
}

QLaurent inner_core(long v, long Delta, long k, bool tail) {
    if (v == 1) return QLaurent::one();
    if (k < 0) return QLaurent();
    QLaurent total;
    std::vector<long> Ns(static_cast<std::size_t>(v - 1));
    tuple_rec(Ns, 0, k, [&](const std::vector<long>& N) {
        long prefix = 0;
        for (long t = 0; t + 1 < v - 1; ++t) prefix += N[static_cast<std::size_t>(t)];
        QLaurent p = qbin(k - prefix, N[static_cast<std::size_t>(v - 2)], 2);
        if (p.is_zero()) return;
        long run = 0;
        for (long jj = 1; jj <= v - 2; ++jj) {
            run += N[static_cast<std::size_t>(jj - 1)];
            long nj = N[static_cast<std::size_t>(jj - 1)] - N[static_cast<std::size_t>(jj)];
            long top = nj + 2 * k - 2 * run + std::min(Delta, v - 1 - jj);
            p = p * qbin(top, nj);
            if (p.is_zero()) return;
        }
        long e = 0;
        for (long x : N) e += x * x;
        if (tail)
            for (long t = v - 1 - Delta; t < v - 1; ++t) e += N[static_cast<std::size_t>(t)];
        total += p.shifted(e);
    });
    return total;
}

QLaurent halved_core_lhs(long v, long L) {
    if (v == 1) return QLaurent::one();
    if (L < 0) return QLaurent();
    QLaurent total;
    long half = L / 2;
    std::vector<long> Ns(static_cast<std::size_t>(v - 1));
    tuple_rec(Ns, 0, half, [&](const std::vector<long>& N) {
        long prefix = 0;
        for (long t = 0; t + 1 < v - 1; ++t) prefix += N[static_cast<std::size_t>(t)];
        QLaurent p = qbin(half - prefix, N[static_cast<std::size_t>(v - 2)], 2);
        if (p.is_zero()) return;
        long run = 0;
        for (long jj = 1; jj <= v - 2; ++jj) {
            run += N[static_cast<std::size_t>(jj - 1)];
            long nj = N[static_cast<std::size_t>(jj - 1)] - N[static_cast<std::size_t>(jj)];
            long top = nj + L - 2 * run;
            p = p * qbin(top, nj);
            if (p.is_zero()) return;
        }
        long e = 0;
        for (long x : N) e += x * x;
        total += p.shifted(e);
    });
    return total;
}

QLaurent eval_lhs_poly(const std::string& id, const Params& p) {
    const FamilyDesc* fam = lookup(id);
    if (!fam) throw std::invalid_argument("unknown family " + id);
    if (fam->kind == FamilyKind::series)
        throw std::invalid_argument(fam->id + " is a series family");
    if (fam->kind == FamilyKind::positivity) return g_eval(instance_gparams(fam->id, p));
    const std::string& f = fam->id;
    if (f == "FQ") return ag_core_lhs(p.at("v"), p.at("i"), p.at("L"), true);
    if (f == "N16") return ag_core_lhs(p.at("v"), p.at("i"), p.at("L"), false);
    if (f == "T11") return t11_triple_lhs(p.at("v"), p.at("Delta"), p.at("L"), true);
    if (f == "N17") return t11_triple_lhs(p.at("v"), p.at("Delta"), p.at("L"), false);
    if (f == "S3-F") return alt_sum(s3_spec(1, 1, 0), p.at("L"));
    if (f == "S3-I2") return alt_sum(s3_spec(0, 0, 0), p.at("L"));
    if (f == "S3-27") return alt_sum(s3_spec(2, 1, 0), p.at("L"));
    if (f == "S3-A") return alt_sum(s3_spec(0, 0, -1), p.at("L"));
    if (f == "S3-B") return alt_sum(s3_spec(-2, 0, 0), p.at("L"));
    if (f == "S3-X") return alt_sum(s3_spec(-1, 0, 0), p.at("L"));
    if (f == "S3-Y") return alt_sum(s3_spec(1, 0, -1), p.at("L"));
    if (f == "S3-Z") return alt_sum(s3_spec(-1, 1, 0), p.at("L"));
    if (f == "S3-C") return alt_sum(s3_spec(-1, 0, -1), p.at("L"));
    if (f == "S3-Prodinger") return qbin(p.at("L"), p.at("k"));
    if (f == "B5-L51")
        return l51_lhs(p.at("alpha"), p.at("beta"), p.at("j"), p.at("m1"), p.at("m2"),
                       p.at("M"));
    if (f == "B5-T41")
        return t41_lhs(p.at("a"), p.at("b"), p.at("j"), p.at("L"), p.at("M"));
    if (f == "B5-T42") return alt_sum_double(p.at("L"), p.at("M"), p.at("v"), p.at("v"));
    if (f == "B5-T43a") return t43_lhs(p.at("v"), p.at("b"), p.at("L"), p.at("M"));
    if (f == "B5-T43b") return t43_lhs(p.at("v"), p.at("v"), p.at("L"), p.at("M"));
    if (f == "B5-47x") return alt_sum_double(p.at("L"), p.at("M"), 1, 0);
    if (f == "B5-48y") return alt_sum_double(p.at("L"), p.at("M"), 1, 1);
    if (f == "B5-L41") return l41_lhs(p.at("i"), p.at("L"), p.at("M"));
    if (f == "B5-410") return t44_core(p.at("v"), 1, p.at("L"), p.at("M"));
    if (f == "B5-T44") return t44_core(p.at("v"), p.at("i"), p.at("L"), p.at("M"));
    if (f == "B5-414c") return halved_core_lhs(p.at("v"), p.at("L"));
    if (f == "B5-421") return b421_lhs(p.at("v"), p.at("L"));
    throw std::logic_error("unhandled polynomial family " + f);
}

QLaurent eval_rhs_poly(const std::string& id, const Params& p) {
    const FamilyDesc* fam = lookup(id);
    if (!fam) throw std::invalid_argument("unknown family " + id);
    if (fam->kind == FamilyKind::series)
        throw std::invalid_argument(fam->id + " is a series family");
    if (fam->kind == FamilyKind::positivity) return pos_alt_rhs(fam->id, p);
    const std::string& f = fam->id;
    if (f == "FQ") return fq_like_rhs(p.at("v"), p.at("i"), p.at("L"), true);
    if (f == "N16") return fq_like_rhs(p.at("v"), p.at("i"), p.at("L"), false);
    if (f == "T11") {
        long v = p.at("v"), D = p.at("Delta");
        return t11_like_rhs(v, D, p.at("L"), (2 * v + 1) * D);
    }
    if (f == "N17") {
        long v = p.at("v"), D = p.at("Delta");
        return t11_like_rhs(v, D, p.at("L"), 2 * v * D);
    }
    if (f == "S3-F") return s3_rhs('F', p.at("L"));
    if (f == "S3-I2") return s3_rhs('I', p.at("L"));
    if (f == "S3-27") return s3_rhs('7', p.at("L"));
    if (f == "S3-A") return s3_rhs('A', p.at("L"));
    if (f == "S3-B") return s3_rhs('B', p.at("L"));
    if (f == "S3-X") return s3_rhs('X', p.at("L"));
    if (f == "S3-Y") return s3_rhs('Y', p.at("L"));
    if (f == "S3-Z") return s3_rhs('Z', p.at("L"));
    if (f == "S3-C") return s3_rhs('C', p.at("L"));
    if (f == "S3-Prodinger") return prodinger_rhs(p.at("L"), p.at("k"));
    if (f == "B5-L51")
        return l51_rhs(p.at("alpha"), p.at("beta"), p.at("j"), p.at("m1"), p.at("m2"),
                       p.at("M"));
    if (f == "B5-T41")
        return t41_rhs(p.at("a"), p.at("b"), p.at("j"), p.at("L"), p.at("M"));
    if (f == "B5-T42") {
        long v = p.at("v");
        return alt_sum_double(p.at("L"), p.at("M"), v, v - 1);
    }
    if (f == "B5-T43a") {
        long v = p.at("v");
        return alt_sum_double(p.at("L"), p.at("M"), v + 1, p.at("b"));
    }
    if (f == "B5-T43b") {
        long v = p.at("v");
        return alt_sum_double(p.at("L"), p.at("M"), v + 1, v + 1);
    }
    if (f == "B5-47x" || f == "B5-48y") return qbin(p.at("L") + p.at("M"), p.at("L"), 2);
    if (f == "B5-L41") return alt_sum_double(p.at("L"), p.at("M"), 2, 2 - p.at("i"));
    if (f == "B5-410") {
        long v = p.at("v");
        return alt_sum_double(p.at("L"), p.at("M"), v, v);
    }
    if (f == "B5-T44") {
        long v = p.at("v");
        return alt_sum_double(p.at("L"), p.at("M"), v, v - p.at("i"));
    }
    if (f == "B5-414c") return b414c_rhs(p.at("v"), p.at("L"));
    if (f == "B5-421") return b421_rhs(p.at("v"), p.at("L"));
    throw std::logic_error("unhandled polynomial family " + f);
}

QSeries eval_lhs_series(const std::string& id, const Params& p, long trunc) {
    const FamilyDesc* fam = lookup(id);
    if (!fam) throw std::invalid_argument("unknown family " + id);
    if (fam->kind != FamilyKind::series)
        throw std::invalid_argument(fam->id + " is not a series family");
    const std::string& f = fam->id;
    if (f == "SER-11") return ser_tuple_lhs(p.at("v"), p.at("i"), trunc, true);
    if (f == "SER-AG") return ser_tuple_lhs(p.at("v"), p.at("i"), trunc, false);
    if (f == "SER-15") return ser_inner_lhs(p.at("v"), p.at("Delta"), trunc, true);
    if (f == "SER-19") return ser_inner_lhs(p.at("v"), p.at("Delta"), trunc, false);
    if (f == "SER-422") return ser_folded_lhs(p.at("v"), trunc);
    if (f == "SER-JTP") return jtp_lhs(p.at("zsign"), p.at("zexp"), trunc);
    if (f.rfind("M20-", 0) == 0) return m20_lhs(std::stol(f.substr(4)), trunc);
    throw std::logic_error("unhandled series family " + f);
}

QSeries eval_rhs_series(const std::string& id, const Params& p, long trunc) {
    const FamilyDesc* fam = lookup(id);
    if (!fam) throw std::invalid_argument("unknown family " + id);
    if (fam->kind != FamilyKind::series)
        throw std::invalid_argument(fam->id + " is not a series family");
    const std::string& f = fam->id;
    if (f == "SER-11") {
        long v = p.at("v"), i = p.at("i");
        return triple_product_series(2 * v, i, 2 * v - i, trunc);
    }
    if (f == "SER-AG") {
        long v = p.at("v"), i = p.at("i");
        return triple_product_series(2 * v + 1, i, 2 * v + 1 - i, trunc);
    }
    if (f == "SER-15" || f == "SER-19") {
        long v = p.at("v"), D = p.at("Delta");
        long V = v * (2 * v + 1);
        long s = (f == "SER-15") ? (2 * v + 1) * D : 2 * v * D;
        return triple_product_series(2 * V, V - s, V + s, trunc);
    }
    if (f == "SER-422") {
        long v = p.at("v");
        long V = v * (2 * v + 1);
        return triple_product_series(2 * V, 2 * v * v, 2 * v * (v + 1), trunc);
    }
    if (f == "SER-JTP") return jtp_rhs(p.at("zsign"), p.at("zexp"), trunc);
    if (f.rfind("M20-", 0) == 0) {
        long a = std::stol(f.substr(4));
        return triple_product_series(20, a, 20 - a, trunc);
    }
    throw std::logic_error("unhandled series family " + f);
}

VerificationRecord verify(const std::string& id, const Params& p, long trunc) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationRecord r;
    r.family = id;
    r.params = p;
    try {
        const FamilyDesc* fam = lookup(id);
        if (!fam) {
            r.note = "unknown family " + id;
        } else {
            r.family = fam->id;
            std::string why;
            if (!validate_params(*fam, p, &why)) {
                r.note = "invalid parameters: " + why;
            } else if (fam->kind == FamilyKind::polynomial) {
                r = compare_polys(fam->id, p, eval_lhs_poly(fam->id, p),
                                  eval_rhs_poly(fam->id, p));
            } else if (fam->kind == FamilyKind::series) {
                QSeries lhs = eval_lhs_series(fam->id, p, trunc);
                QSeries rhs = eval_rhs_series(fam->id, p, trunc);
                r = compare_series(fam->id, p, lhs, rhs);
                if (r.status == Status::Equal && fam->id.rfind("M20-", 0) == 0 &&
                    (!lhs.integral() || !lhs.nonneg())) {
                    r.status = Status::Error;
                    r.note = "series fails integrality or nonnegativity";
                }
            } else {
                GParams g = instance_gparams(fam->id, p);
                long aK = rat_to_long(g.alpha * g.K);
                long bK = rat_to_long(g.beta * g.K);
                if (!conjecture_member(g.N, g.M, aK, bK, g.K)) {
                    r.note = "instance escapes the conjectured domain";
                } else {
                    r = check_nonneg(fam->id, p, g_eval(g));
                }
            }
        }
    } catch (const std::exception& e) {
        r.status = Status::Error;
        r.family = id;
        r.params = p;
        r.note = e.what();
        const FamilyDesc* fam = lookup(id);
        if (fam) r.family = fam->id;
    }
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return r;
}

std::vector<Params> default_grid(const FamilyDesc& fam, bool full) {
    std::vector<Params> out;
    if (fam.id == "B5-L51") {
        // fixed-seed random tuples; mt19937's output sequence is pinned by the
        // standard, so this grid is reproducible everywhere
        std::mt19937 rng(12345);
        auto draw = [&rng](long span, long off) {
            return static_cast<long>(rng() % static_cast<unsigned long>(span)) + off;
        };
        long count = full ? 200 : 50;
        for (long t = 0; t < count; ++t) {
            Params p;
            p["alpha"] = draw(7, -3);
            p["beta"] = draw(7, -3);
            p["j"] = draw(7, -3);
            p["m1"] = draw(7, 0);
            p["m2"] = draw(7, 0);
            p["M"] = draw(7, 0);
            out.push_back(std::move(p));
        }
        return out;
    }
    Params cur;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == fam.params.size()) {
            std::string why;
            if (validate_params(fam, cur, &why)) out.push_back(cur);
            return;
        }
        const ParamSpec& ps = fam.params[idx];
        long hi;
        if (!ps.unbounded && ps.hi.symbolic)
            hi = ps.hi.resolve(cur);
        else if (!ps.unbounded)
            hi = ps.hi.value;
        else
            hi = full ? ps.full_hi : ps.smoke_hi;
        for (long x = ps.grid_lo; x <= hi; ++x) {
            cur[ps.name] = x;
            rec(idx + 1);
        }
        cur.erase(ps.name);
    };
    rec(0);
    return out;
}

VerificationRecord route_equivalence_record(bool tail, long v, long Delta, long L) {
    long i = v - Delta;
    long delta = Delta / 2;
    KernelKind kind = (Delta % 2 == 0) ? KernelKind::W : KernelKind::O;
    QLaurent acc;
    for (long k = 0; k <= kernel_kmax(kind, L); ++k) {
        QLaurent core = ag_core_lhs(v, i, k - delta, tail);
        if (core.is_zero()) continue;
        acc += *kernel_ref(kind, L, k) * core;
    }
    long jc = tail ? (2 * v + 1) * Delta : 2 * v * Delta;
    QLaurent want = t11_like_rhs(v, Delta, L, jc).shifted(Delta * Delta / 2);
    return compare_polys(tail ? "route-FQ-T11" : "route-N16-N17",
                         {{"v", v}, {"Delta", Delta}, {"L", L}}, acc, want);
}

}  // namespace qv
