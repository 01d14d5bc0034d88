#include "qv/positivity.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace qv {

bool conjecture_member(long N, long M, long aK, long bK, long K) {
    if (K < 1 || N < 0 || M < 0 || aK < 0 || bK < 0) return false;
    long s = aK + bK;
    long d = K * (N - M);
    long lo = bK - K * K, hi = K * K - aK;
    if (K == 2) return K < s && s < 2 * K * K - K && lo < d && d < hi;
    return K <= s && s <= 2 * K * K - K && lo <= d && d <= hi;
}

namespace {

// mpq_class(n, d) does not reduce; keep every stored ratio canonical
Rat ratio(long n, long d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace

std::vector<ConjectureCell> enumerate_domain(long Klo, long Khi, long Nlo,
                                             long Nhi, long Mlo, long Mhi) {
    std::vector<ConjectureCell> out;
    for (long K = std::max(Klo, 1L); K <= Khi; ++K)
        for (long N = std::max(Nlo, 0L); N <= Nhi; ++N)
            for (long M = std::max(Mlo, 0L); M <= Mhi; ++M)
                for (long aK = 0; aK <= 2 * K * K - K; ++aK)
                    for (long bK = 0; bK <= 2 * K * K - K - aK; ++bK) {
                        if (!conjecture_member(N, M, aK, bK, K)) continue;
                        ConjectureCell c;
                        c.g = GParams{N, M, ratio(aK, K), ratio(bK, K), K};
                        c.origin = "domain";
                        out.push_back(std::move(c));
                    }
    return out;
}

namespace {

long need(const std::map<std::string, long>& p, const std::string& k) {
    auto it = p.find(k);
    if (it == p.end())
        throw std::invalid_argument("missing generator parameter " + k);
    return it->second;
}

long pow2(long n) { return 1L << n; }

// X(n) = (4^n - 1) / 3, the exponent-growth factor of the iterated chains
long chainX(long n) { return (pow2(2 * n) - 1) / 3; }

GParams from_scaled(long N, long M, long aK, long bK, long K) {
    if (N < 0 || M < 0 || aK < 0 || bK < 0)
        throw std::invalid_argument("generator outside N,M,aK,bK >= 0");
    return GParams{N, M, ratio(aK, K), ratio(bK, K), K};
}

}  // namespace

GParams instance_gparams(const std::string& id,
                         const std::map<std::string, long>& p) {
    if (id == "POS-FQ") {
        long v = need(p, "v"), i = need(p, "i"), L = need(p, "L");
        if (v < 2 || i < 1 || i > v || L < 0)
            throw std::invalid_argument("POS-FQ needs v>=2, 1<=i<=v, L>=0");
        return from_scaled(L, L + v - i, 2 * v - i, i, v);
    }
    if (id == "POS-T11" || id == "POS-N17") {
        long v = need(p, "v"), D = need(p, "Delta"), L = need(p, "L");
        if (v < 2 || D < 0 || D >= v || L < D)
            throw std::invalid_argument(id + " needs v>=2, 0<=Delta<v, L>=Delta");
        if (id == "POS-T11")
            return from_scaled(L - D, L + D, (v + D) * (2 * v + 1),
                               (v - D) * (2 * v + 1), 2 * v);
        return from_scaled(L - D, L + D, 2 * v * (v + D) + v,
                           2 * v * (v - D) + v, 2 * v);
    }
    if (id == "POS-ODD") {
        long v = need(p, "v"), L = need(p, "L");
        if (v < 2 || L < 0) throw std::invalid_argument("POS-ODD needs v>=2, L>=0");
        return from_scaled(L, L + 1, 2 * v * (v + 1), 2 * v * v, 2 * v);
    }
    if (id == "POS-EVEN") {
        long v = need(p, "v"), L = need(p, "L");
        if (v < 2 || L < 1) throw std::invalid_argument("POS-EVEN needs v>=2, L>=1");
        return from_scaled(L - 1, L + 1, 2 * v * (5 * v + 3), 2 * v * (5 * v - 2),
                           4 * v);
    }
    if (id == "POS-CHAIN-C") {
        long v = need(p, "v"), n = need(p, "n"), L = need(p, "L");
        long off = pow2(n - 2);
        if (v < 2 || n < 2 || L < off)
            throw std::invalid_argument("POS-CHAIN-C needs v>=2, n>=2, L>=2^(n-2)");
        long X = chainX(n);
        return from_scaled(L - off, L + off, v * (X * (2 * v + 1) + 1),
                           v * (X * (2 * v - 1) + 1), pow2(n) * v);
    }
    if (id == "POS-CHAIN-T" || id == "POS-CHAIN-N") {
        long v = need(p, "v"), D = need(p, "Delta"), n = need(p, "n"),
             L = need(p, "L");
        long off = D * pow2(n - 1);
        if (v < 2 || D < 0 || D >= v || n < 1 || L < off)
            throw std::invalid_argument(
                "chain generators need v>=2, 0<=Delta<v, n>=1, L>=Delta*2^(n-1)");
        long X = chainX(n);
        if (id == "POS-CHAIN-T")
            return from_scaled(L - off, L + off, (2 * v * X + 1) * (v + D),
                               (2 * v * X + 1) * (v - D), pow2(n) * v);
        return from_scaled(L - off, L + off, 2 * v * X * (v + D) + v,
                           2 * v * X * (v - D) + v, pow2(n) * v);
    }
    throw std::invalid_argument("unknown generator id " + id);
}

const std::vector<std::string>& generator_ids() {
    static const std::vector<std::string> ids{
        "POS-FQ",      "POS-T11",     "POS-N17",     "POS-ODD",
        "POS-EVEN",    "POS-CHAIN-C", "POS-CHAIN-T", "POS-CHAIN-N"};
    return ids;
}

VerificationRecord check_cell(const ConjectureCell& cell) {
    std::map<std::string, long> params = cell.extra;
    params["K"] = cell.g.K;
    params["N"] = cell.g.N;
    params["M"] = cell.g.M;
    params["aK"] = static_cast<long>(
        Rat(cell.g.alpha * cell.g.K).get_num().get_si());
    params["bK"] = static_cast<long>(
        Rat(cell.g.beta * cell.g.K).get_num().get_si());
    return check_nonneg(cell.origin, std::move(params), g_eval(cell.g));
}

std::string checkpoint_key(const GParams& g) {
    std::ostringstream os;
    os << g.K << ' ' << g.N << ' ' << g.M << ' '
       << Rat(g.alpha * g.K).get_num().get_str() << ' '
       << Rat(g.beta * g.K).get_num().get_str();
    return os.str();
}

std::string checkpoint_line(const GParams& g, Status s) {
    return checkpoint_key(g) + ' ' + status_name(s);
}

std::set<std::string> load_checkpoint(std::istream& in) {
    std::set<std::string> done;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream is(line);
        long K, N, M, aK, bK;
        std::string verdict;
        if (is >> K >> N >> M >> aK >> bK >> verdict) {
            std::ostringstream os;
            os << K << ' ' << N << ' ' << M << ' ' << aK << ' ' << bK;
            done.insert(os.str());
        }
    }
    return done;
}

}  // namespace qv
