#include "qv/qbinom.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace qv {

namespace {

// [m+i choose i] is built by ascending i: multiply by (1 - q^(m+i)) and
// divide exactly by (1 - q^i). Every intermediate is again a Gaussian
// binomial, so the coefficients stay nonnegative integers throughout and
// the synthetic division r[e] = t[e] + r[e-i] terminates with zero
// remainder. Dense integer vectors keep this tight.
std::vector<mpz_class> qbin_dense(long top, long bot) {
    long m = top - bot;
    std::vector<mpz_class> c{1};
    for (long i = 1; i <= bot; ++i) {
        long shift = m + i;
        std::vector<mpz_class> t(c.size() + static_cast<std::size_t>(shift));
        for (std::size_t e = 0; e < c.size(); ++e) {
            t[e] += c[e];
            t[e + static_cast<std::size_t>(shift)] -= c[e];
        }
        for (std::size_t e = static_cast<std::size_t>(i); e < t.size(); ++e)
            t[e] += t[e - static_cast<std::size_t>(i)];
        // the trailing i entries are the remainder and must vanish
        t.resize(t.size() - static_cast<std::size_t>(i));
        c = std::move(t);
    }
    return c;
}

QLaurent qbin_make(long top, long bot, long d) {
    QLaurent r;
    std::vector<mpz_class> c = qbin_dense(top, bot);
    for (std::size_t e = 0; e < c.size(); ++e)
        if (c[e] != 0) r.add_term(static_cast<long>(e) * d, Rat(c[e]));
    return r;
}

struct Key {
    long top, bot, d;
    bool operator==(const Key&) const = default;
};
struct KeyHash {
    std::size_t operator()(const Key& k) const {
        std::size_t h = static_cast<std::size_t>(k.top);
        h = h * 1000003u + static_cast<std::size_t>(k.bot);
        h = h * 1000003u + static_cast<std::size_t>(k.d);
        return h;
    }
};

std::shared_mutex cache_mu;
std::unordered_map<Key, std::shared_ptr<const QLaurent>, KeyHash> cache;

}  // namespace

std::shared_ptr<const QLaurent> qbin_ref(long top, long bot, long d) {
    if (bot < 0 || bot > top)
        return std::make_shared<const QLaurent>();
    bot = std::min(bot, top - bot);  // symmetry halves the key space
    bool cacheable = top <= 400 && d >= 1 && d <= 4;
    if (cacheable) {
        Key k{top, bot, d};
        {
            std::shared_lock lk(cache_mu);
            auto it = cache.find(k);
            if (it != cache.end()) return it->second;
        }
        auto v = std::make_shared<const QLaurent>(qbin_make(top, bot, d));
        std::unique_lock lk(cache_mu);
        return cache.try_emplace(k, std::move(v)).first->second;
    }
    return std::make_shared<const QLaurent>(qbin_make(top, bot, d));
}

QLaurent qbin(long top, long bottom, long d) { return *qbin_ref(top, bottom, d); }

std::size_t qbin_cache_size() {
    std::shared_lock lk(cache_mu);
    return cache.size();
}

QLaurent trinom(long L, long m, long n) {
    auto a = qbin_ref(L, m);
    if (a->is_zero()) return {};
    auto b = qbin_ref(L - m, n);
    if (b->is_zero()) return {};
    return *a * *b;
}

QLaurent poch_finite(const PochSpec& spec) {
    if (!spec.length) throw std::invalid_argument("poch_finite: length required");
    long n = *spec.length;
    if (n < 0) throw std::invalid_argument("poch_finite: length must be >= 0");
    QLaurent r = QLaurent::one();
    for (long t = 0; t < n; ++t) {
        for (const Mono& f : spec.factors) {
            QLaurent factor = QLaurent::one();
            if (f.sign != 0)
                factor.add_term(f.exp + spec.base * t, Rat(f.sign));
            else
                factor = QLaurent();
            r = r * factor;
            if (r.is_zero()) return r;
        }
    }
    return r;
}

QSeries poch_infinite(const PochSpec& spec, long trunc) {
    if (spec.length)
        throw std::invalid_argument("poch_infinite: spec must be infinite");
    if (spec.base < 1)
        throw DivergentSpec("infinite product needs a positive exponent step");
    for (const Mono& f : spec.factors) {
        if (f.sign == 0) throw DivergentSpec("zero factor in infinite product");
        if (f.exp < 1)
            throw DivergentSpec("factor exponent " + std::to_string(f.exp) +
                                " does not march off to infinity");
    }
    QSeries r = QSeries::one(trunc);
    for (const Mono& f : spec.factors) {
        for (long t = 0;; ++t) {
            long e = f.exp + spec.base * t;
            if (e > trunc) break;
            // multiply by (1 + sign q^e) in place, descending to avoid feedback
            for (long x = trunc - e; x >= 0; --x) {
                const Rat& v = r.at(x);
                if (v != 0) r.add(x + e, f.sign > 0 ? v : -v);
            }
        }
    }
    return r;
}

QLaurent poch1(int sign, long exp, long base, long length) {
    return poch_finite(PochSpec{{Mono{sign, exp}}, base, length});
}

QSeries poch1_inf(int sign, long exp, long base, long trunc) {
    return poch_infinite(PochSpec{{Mono{sign, exp}}, base, std::nullopt}, trunc);
}

QLaurent qbinom_theorem_rhs(long L, int sign, long zexp) {
    return poch1(sign, zexp, 1, L);
}

QSeries partitions_gf(long trunc) {
    return series_inverse_unit(poch1_inf(-1, 1, 1, trunc));
}

}  // namespace qv
