#include "qv/transforms.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace qv {

namespace {

long floor2(long a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

long kernel_weight(KernelKind kind, long m, long k) {
    switch (kind) {
        case KernelKind::C: return tri(m) + tri(m + k);
        case KernelKind::W: return (m + k) * (m + k) + k * k;
        case KernelKind::O: return 2 * tri(m + k) + 2 * tri(k);
    }
    return 0;
}

long kernel_cols(KernelKind kind, long k) {
    switch (kind) {
        case KernelKind::C: return k;
        case KernelKind::W: return 2 * k;
        case KernelKind::O: return 2 * k + 1;
    }
    return 0;
}

QLaurent kernel_make(KernelKind kind, long L, long k) {
    QLaurent acc;
    long cols = kernel_cols(kind, k);
    for (long m = 0; m + cols <= L; ++m) {
        QLaurent t = trinom(L, m, cols);
        if (t.is_zero()) continue;
        acc += t.shifted(kernel_weight(kind, m, k));
    }
    return acc;
}

struct KKey {
    int kind;
    long L, k;
    bool operator==(const KKey&) const = default;
};
struct KKeyHash {
    std::size_t operator()(const KKey& x) const {
        std::size_t h = static_cast<std::size_t>(x.kind);
        h = h * 1000003u + static_cast<std::size_t>(x.L);
        h = h * 1000003u + static_cast<std::size_t>(x.k);
        return h;
    }
};
std::shared_mutex kmu;
std::unordered_map<KKey, std::shared_ptr<const QLaurent>, KKeyHash> kcache;

}  // namespace

const char* kernel_name(KernelKind k) {
    switch (k) {
        case KernelKind::C: return "C";
        case KernelKind::W: return "W";
        case KernelKind::O: return "O";
    }
    return "?";
}

std::shared_ptr<const QLaurent> kernel_ref(KernelKind kind, long L, long k) {
    KKey key{static_cast<int>(kind), L, k};
    {
        std::shared_lock lk(kmu);
        auto it = kcache.find(key);
        if (it != kcache.end()) return it->second;
    }
    auto v = std::make_shared<const QLaurent>(kernel_make(kind, L, k));
    std::unique_lock lk(kmu);
    return kcache.try_emplace(key, std::move(v)).first->second;
}

QLaurent kernel(KernelKind kind, long L, long k) { return *kernel_ref(kind, L, k); }

long kernel_kmax(KernelKind kind, long L) {
    switch (kind) {
        case KernelKind::C: return L;
        case KernelKind::W: return floor2(L);
        case KernelKind::O: return floor2(L - 1);
    }
    return -1;
}

QLaurent shape_binom(KernelKind kind, long k, long j) {
    switch (kind) {
        case KernelKind::C: return qbin(k, floor2(k - j));
        case KernelKind::W: return qbin(2 * k, k - j);
        case KernelKind::O: return qbin(2 * k + 1, k - j);
    }
    return {};
}

QLaurent alpha_shape(KernelKind kind, const AlphaSeq& alpha, long k) {
    QLaurent acc;
    for (const auto& [j, w] : alpha) {
        QLaurent b = shape_binom(kind, k, j);
        if (b.is_zero() || w.is_zero()) continue;
        acc += w * b;
    }
    return acc;
}

long transform_weight(KernelKind kind, long j) {
    switch (kind) {
        case KernelKind::C: return tri(j);
        case KernelKind::W: return 2 * j * j;
        case KernelKind::O: return 2 * j * j + 2 * j;
    }
    return 0;
}

static QLaurent target_binom(KernelKind kind, long L, long j) {
    switch (kind) {
        case KernelKind::C: return qbin(2 * L + 1, L - j);
        case KernelKind::W: return qbin(2 * L, L - 2 * j);
        case KernelKind::O: return qbin(2 * L, L - 2 * j - 1);
    }
    return {};
}

std::pair<QLaurent, QLaurent> apply_transform(KernelKind kind,
                                              const AlphaSeq& alpha, long L) {
    QLaurent lhs;
    for (long k = 0; k <= kernel_kmax(kind, L); ++k) {
        QLaurent f = alpha_shape(kind, alpha, k);
        if (f.is_zero()) continue;
        lhs += *kernel_ref(kind, L, k) * f;
    }
    QLaurent rhs;
    for (const auto& [j, w] : alpha) {
        QLaurent b = target_binom(kind, L, j);
        if (b.is_zero() || w.is_zero()) continue;
        rhs += (w * b).shifted(transform_weight(kind, j));
    }
    return {lhs, rhs};
}

VerificationRecord kernel_identity_record(KernelKind kind, long L, long a) {
    AlphaSeq alpha;
    alpha[a] = QLaurent::one();
    auto [lhs, rhs] = apply_transform(kind, alpha, L);
    return compare_polys(std::string("kernel-") + kernel_name(kind),
                         {{"L", L}, {"a", a}}, lhs, rhs);
}

QSeries apply_limit_transform(KernelKind kind,
                              const std::function<QSeries(long, long)>& F,
                              long trunc) {
    // 1/(q;q)_n, extended on demand
    std::vector<QSeries> inv{QSeries::one(trunc)};
    auto invp = [&](long n) -> const QSeries& {
        while (static_cast<long>(inv.size()) <= n) {
            long i = static_cast<long>(inv.size());
            QLaurent f = QLaurent::one();
            f.add_term(i, -1);
            inv.push_back(inv.back() * series_inverse_unit(to_series(f, trunc)));
        }
        return inv[static_cast<std::size_t>(n)];
    };

    QSeries acc(trunc);
    for (long k = 0; kernel_weight(kind, 0, k) <= trunc; ++k) {
        QSeries fk = F(k, trunc);
        if (fk.is_zero()) continue;
        QSeries base = fk * invp(kernel_cols(kind, k));
        for (long m = 0; kernel_weight(kind, m, k) <= trunc; ++m)
            acc += (base * invp(m)).shifted(kernel_weight(kind, m, k));
    }
    return acc;
}

QSeries limit_transform_rhs(KernelKind kind, const AlphaSeq& alpha, long trunc) {
    QLaurent num;
    for (const auto& [j, w] : alpha)
        num += w.shifted(transform_weight(kind, j));
    return to_series(num, trunc) * partitions_gf(trunc);
}

}  // namespace qv
