#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qv {

using Rat = mpq_class;

struct NotAPolynomial : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonIntegerCoefficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroConstantTerm : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonIntegerExponent : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DivergentSpec : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact Laurent polynomial in q with rational coefficients.
// Canonical form: the map never stores a zero coefficient, so equality of
// values is equality of maps.
class QLaurent {
public:
    QLaurent() = default;

    static QLaurent monomial(const Rat& c, long e);
    static QLaurent one() { return monomial(1, 0); }

    bool is_zero() const { return c_.empty(); }
    long min_exp() const;  // requires a nonzero value
    long max_exp() const;
    Rat coeff(long e) const;
    std::size_t term_count() const { return c_.size(); }
    const std::map<long, Rat>& terms() const { return c_; }

    void add_term(long e, const Rat& v);

    QLaurent& operator+=(const QLaurent& o);
    QLaurent& operator-=(const QLaurent& o);
    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b);

    QLaurent shifted(long s) const;  // multiply by q^s
    QLaurent scaled(const Rat& c) const;
    QLaurent substitute_power(long d) const;  // q -> q^d, d >= 1
    QLaurent truncated(long max_e) const;     // drop exponents above max_e

    bool nonneg() const;  // every coefficient >= 0
    bool operator==(const QLaurent& o) const { return c_ == o.c_; }
    bool operator!=(const QLaurent& o) const { return c_ != o.c_; }

    std::string str() const;

private:
    std::map<long, Rat> c_;
};

// Identity on genuine polynomials; rejects negative exponents and
// non-integer coefficients.
QLaurent to_polynomial(const QLaurent& a);

// Truncated formal power series: coefficients for exponents 0..trunc.
// Equality is only meaningful between series of the same truncation order.
class QSeries {
public:
    explicit QSeries(long trunc);
    static QSeries one(long trunc);

    long trunc() const { return trunc_; }
    const Rat& at(long e) const;
    void add(long e, const Rat& v);  // ignores e > trunc
    void set(long e, const Rat& v);

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    QSeries shifted(long s) const;  // multiply by q^s, s >= 0
    QSeries scaled(const Rat& c) const;

    bool operator==(const QSeries& o) const;
    bool operator!=(const QSeries& o) const { return !(*this == o); }
    bool is_zero() const;
    bool nonneg() const;
    bool integral() const;  // every coefficient has denominator 1

    std::string str() const;

private:
    long trunc_;
    std::vector<Rat> c_;
};

// Multiplicative inverse of a unit series, exact to the truncation order.
QSeries series_inverse_unit(const QSeries& s);

// Conversions. to_series requires min exponent >= 0.
QSeries to_series(const QLaurent& p, long trunc);
QLaurent from_series(const QSeries& s);

}  // namespace qv
