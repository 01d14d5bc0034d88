#include "qv/gsum.hpp"

#include <optional>

namespace qv {

namespace {

long floor_div(long a, long b) {
    long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
long ceil_div(long a, long b) { return -floor_div(-a, b); }

long rat_to_long_exp(const Rat& e) {
    if (e.get_den() != 1)
        throw NonIntegerExponent("exponent " + e.get_str() + " is not an integer");
    return static_cast<long>(e.get_num().get_si());
}

}  // namespace

QLaurent g_eval(const GParams& p) {
    if (p.K < 1) throw std::invalid_argument("g_eval: K must be positive");
    QLaurent acc;
    long jlo = ceil_div(-p.M, p.K), jhi = floor_div(p.N, p.K);
    Rat sum = p.alpha + p.beta, dif = p.alpha - p.beta;
    for (long j = jlo; j <= jhi; ++j) {
        auto b = qbin_ref(p.N + p.M, p.N - p.K * j);
        if (b->is_zero()) continue;
        Rat e = Rat(p.K * j) * (sum * j + dif) / 2;
        QLaurent t = b->shifted(rat_to_long_exp(e));
        if (j & 1) acc -= t;
        else acc += t;
    }
    return acc;
}

QLaurent alt_sum(const AltSumSpec& s, long L, long M) {
    // Bound j by the supports of the binomials: each gives linear
    // inequalities a + c*j >= 0.
    std::optional<long> lo, hi;
    bool empty = false;
    auto constrain = [&](long a, long c) {
        if (c > 0) {
            long b = ceil_div(-a, c);
            if (!lo || b > *lo) lo = b;
        } else if (c < 0) {
            long b = floor_div(a, -c);
            if (!hi || b < *hi) hi = b;
        } else if (a < 0) {
            empty = true;
        }
    };
    for (const BinomDesc& d : s.binoms) {
        long b0 = d.bottom.eval(L, M, 0), bj = d.bottom.cj;
        long t0 = d.top.eval(L, M, 0), tj = d.top.cj;
        constrain(b0, bj);  // bottom >= 0
        if (d.floor_half_bottom)
            constrain(2 * t0 - b0 + 1, 2 * tj - bj);  // floor(bottom/2) <= top
        else
            constrain(t0 - b0, tj - bj);  // bottom <= top
    }
    if (empty) return {};
    if (!lo || !hi)
        throw std::invalid_argument("alt_sum: spec does not bound the j window");

    QLaurent acc;
    for (long j = *lo; j <= *hi; ++j) {
        QLaurent t = QLaurent::one();
        for (const BinomDesc& d : s.binoms) {
            long bot = d.bottom.eval(L, M, j);
            if (d.floor_half_bottom) bot = floor_div(bot, 2);
            auto b = qbin_ref(d.top.eval(L, M, j), bot, d.base);
            if (b->is_zero()) {
                t = QLaurent();
                break;
            }
            t = t * *b;
        }
        if (t.is_zero()) continue;
        long e = rat_to_long_exp(s.A * j * j + s.B * j + s.C);
        t = t.shifted(e);
        if (j & 1) acc -= t;
        else acc += t;
    }
    return acc;
}

QLaurent alt_sum_double(long L, long M, long v, long b) {
    QLaurent acc;
    long jlo = std::max(ceil_div(-(L + b), v), -M);
    long jhi = std::min(floor_div(L, v), M);
    for (long j = jlo; j <= jhi; ++j) {
        auto p = qbin_ref(L + M - (v - 1) * j, L - v * j);
        if (p->is_zero()) continue;
        auto r = qbin_ref(L + b + M + (v - 1) * j, L + b + v * j);
        if (r->is_zero()) continue;
        QLaurent t = (*p * *r).shifted(v * j * j);
        if (j & 1) acc -= t;
        else acc += t;
    }
    return acc;
}

}  // namespace qv
