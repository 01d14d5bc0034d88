#include "qv/qlaurent.hpp"

#include <algorithm>
#include <sstream>

namespace qv {

QLaurent QLaurent::monomial(const Rat& c, long e) {
    QLaurent p;
    if (c != 0) p.c_[e] = c;
    return p;
}

long QLaurent::min_exp() const {
    if (c_.empty()) throw std::logic_error("min_exp of zero");
    return c_.begin()->first;
}

long QLaurent::max_exp() const {
    if (c_.empty()) throw std::logic_error("max_exp of zero");
    return c_.rbegin()->first;
}

Rat QLaurent::coeff(long e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Rat(0) : it->second;
}

void QLaurent::add_term(long e, const Rat& v) {
    if (v == 0) return;
    auto [it, fresh] = c_.try_emplace(e, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) c_.erase(it);
    }
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
    for (const auto& [e, v] : o.c_) add_term(e, v);
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
    for (const auto& [e, v] : o.c_) add_term(e, -v);
    return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    if (a.is_zero() || b.is_zero()) return r;
    // Dense accumulation over the exponent window. The window is small for
    // everything this engine touches; fall back to map accumulation if not.
    long lo = a.min_exp() + b.min_exp();
    long hi = a.max_exp() + b.max_exp();
    long width = hi - lo + 1;
    if (width <= 1'000'000) {
        std::vector<Rat> acc(static_cast<std::size_t>(width));
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_)
                acc[static_cast<std::size_t>(ea + eb - lo)] += va * vb;
        for (long e = lo; e <= hi; ++e) {
            Rat& v = acc[static_cast<std::size_t>(e - lo)];
            if (v != 0) r.c_.emplace_hint(r.c_.end(), e, std::move(v));
        }
    } else {
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_)
                r.add_term(ea + eb, va * vb);
    }
    return r;
}

QLaurent QLaurent::shifted(long s) const {
    QLaurent r;
    for (const auto& [e, v] : c_) r.c_.emplace_hint(r.c_.end(), e + s, v);
    return r;
}

QLaurent QLaurent::scaled(const Rat& c) const {
    QLaurent r;
    if (c == 0) return r;
    for (const auto& [e, v] : c_) r.c_.emplace_hint(r.c_.end(), e, v * c);
    return r;
}

QLaurent QLaurent::substitute_power(long d) const {
    if (d < 1) throw std::invalid_argument("substitute_power: d must be >= 1");
    QLaurent r;
    for (const auto& [e, v] : c_) r.c_.emplace_hint(r.c_.end(), e * d, v);
    return r;
}

QLaurent QLaurent::truncated(long max_e) const {
    QLaurent r;
    for (const auto& [e, v] : c_) {
        if (e > max_e) break;
        r.c_.emplace_hint(r.c_.end(), e, v);
    }
    return r;
}

bool QLaurent::nonneg() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const auto& t) { return t.second >= 0; });
}

std::string QLaurent::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : c_) {
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        Rat a = abs(v);
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

QLaurent to_polynomial(const QLaurent& a) {
    for (const auto& [e, v] : a.terms()) {
        if (e < 0)
            throw NotAPolynomial("negative exponent q^" + std::to_string(e));
        if (v.get_den() != 1)
            throw NonIntegerCoefficient("coefficient " + v.get_str() +
                                        " at q^" + std::to_string(e));
    }
    return a;
}

QSeries::QSeries(long trunc) : trunc_(trunc) {
    if (trunc < 0) throw std::invalid_argument("QSeries: trunc must be >= 0");
    c_.resize(static_cast<std::size_t>(trunc) + 1);
}

QSeries QSeries::one(long trunc) {
    QSeries s(trunc);
    s.c_[0] = 1;
    return s;
}

const Rat& QSeries::at(long e) const {
    if (e < 0 || e > trunc_) throw std::out_of_range("QSeries::at");
    return c_[static_cast<std::size_t>(e)];
}

void QSeries::add(long e, const Rat& v) {
    if (e < 0) throw NotAPolynomial("series term with exponent q^" + std::to_string(e));
    if (e > trunc_) return;
    c_[static_cast<std::size_t>(e)] += v;
}

void QSeries::set(long e, const Rat& v) {
    if (e < 0 || e > trunc_) throw std::out_of_range("QSeries::set");
    c_[static_cast<std::size_t>(e)] = v;
}

static void require_same_trunc(const QSeries& a, const QSeries& b) {
    if (a.trunc() != b.trunc())
        throw std::invalid_argument("QSeries: mixed truncation orders");
}

QSeries& QSeries::operator+=(const QSeries& o) {
    require_same_trunc(*this, o);
    for (long e = 0; e <= trunc_; ++e) c_[e] += o.c_[e];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    require_same_trunc(*this, o);
    for (long e = 0; e <= trunc_; ++e) c_[e] -= o.c_[e];
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    require_same_trunc(a, b);
    QSeries r(a.trunc_);
    for (long i = 0; i <= a.trunc_; ++i) {
        if (a.c_[i] == 0) continue;
        long jmax = a.trunc_ - i;
        for (long j = 0; j <= jmax; ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

QSeries QSeries::shifted(long s) const {
    if (s < 0) throw std::invalid_argument("QSeries::shifted: s must be >= 0");
    QSeries r(trunc_);
    for (long e = 0; e + s <= trunc_; ++e) r.c_[e + s] = c_[e];
    return r;
}

QSeries QSeries::scaled(const Rat& c) const {
    QSeries r(trunc_);
    for (long e = 0; e <= trunc_; ++e) r.c_[e] = c_[e] * c;
    return r;
}

bool QSeries::operator==(const QSeries& o) const {
    require_same_trunc(*this, o);
    return c_ == o.c_;
}

bool QSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& v) { return v == 0; });
}

bool QSeries::nonneg() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& v) { return v >= 0; });
}

bool QSeries::integral() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const Rat& v) { return v.get_den() == 1; });
}

std::string QSeries::str() const {
    return from_series(*this).str() + " + O(q^" + std::to_string(trunc_ + 1) + ")";
}

QSeries series_inverse_unit(const QSeries& s) {
    if (s.at(0) == 0) throw ZeroConstantTerm("series has no constant term");
    long T = s.trunc();
    QSeries r(T);
    Rat u = 1 / s.at(0);
    r.set(0, u);
    // r[n] = -u * sum_{k=1..n} s[k] r[n-k]
    for (long n = 1; n <= T; ++n) {
        Rat acc = 0;
        for (long k = 1; k <= n; ++k) {
            if (s.at(k) == 0) continue;
            acc += s.at(k) * r.at(n - k);
        }
        if (acc != 0) r.set(n, -u * acc);
    }
    return r;
}

QSeries to_series(const QLaurent& p, long trunc) {
    QSeries s(trunc);
    for (const auto& [e, v] : p.terms()) {
        if (e < 0)
            throw NotAPolynomial("series from Laurent with exponent q^" +
                                 std::to_string(e));
        if (e > trunc) break;
        s.set(e, v);
    }
    return s;
}

QLaurent from_series(const QSeries& s) {
    QLaurent p;
    for (long e = 0; e <= s.trunc(); ++e) p.add_term(e, s.at(e));
    return p;
}

}  // namespace qv
