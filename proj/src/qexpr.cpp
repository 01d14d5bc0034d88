#include "qv/qexpr.hpp"

#include <cctype>

#include "qv/qbinom.hpp"

namespace qv {

SyntaxError::SyntaxError(std::size_t pos, std::string exp)
    : std::runtime_error("expected " + exp + " at offset " + std::to_string(pos)),
      position(pos),
      expected(std::move(exp)) {}

ExprPtr make_int(long v) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Int;
    e->ival = v;
    return e;
}

ExprPtr make_qpow(long ex) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::QPow;
    e->ival = ex;
    return e;
}

ExprPtr make_neg(ExprPtr x) {
    if (x->kind == ExprKind::Int) return make_int(-x->ival);
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Neg;
    e->a = std::move(x);
    return e;
}

ExprPtr make_binary(ExprKind k, ExprPtr x, ExprPtr y) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->a = std::move(x);
    e->b = std::move(y);
    return e;
}

ExprPtr make_pow(ExprPtr x, long n) {
    if (x->kind == ExprKind::QPow) return make_qpow(x->ival * n);
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Pow;
    e->ival = n;
    e->a = std::move(x);
    return e;
}

ExprPtr make_poch(std::vector<QMono> args, QMono base, std::optional<long> length) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Poch;
    e->args = std::move(args);
    e->base = base;
    e->length = length;
    return e;
}

ExprPtr make_qbin(long top, long bottom, QMono base) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::QBin;
    e->top = top;
    e->bottom = bottom;
    e->base = base;
    return e;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    ExprPtr run() {
        ExprPtr e = expr();
        skip();
        if (pos_ != s_.size()) fail("end of input");
        return e;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& expected) { throw SyntaxError(pos_ + 1, expected); }

    bool at(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool eat(char c) {
        if (!at(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) fail(what);
    }

    bool word(const char* w) {
        skip();
        std::size_t n = std::string::traits_type::length(w);
        if (s_.compare(pos_, n, w) != 0) return false;
        pos_ += n;
        return true;
    }

    long integer(const char* what) {
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail(what);
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            v = v * 10 + (s_[pos_++] - '0');
        return v;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (eat('+'))
                e = make_binary(ExprKind::Add, e, term());
            else if (eat('-'))
                e = make_binary(ExprKind::Sub, e, term());
            else
                return e;
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        for (;;) {
            if (eat('*'))
                e = make_binary(ExprKind::Mul, e, factor());
            else if (eat('/'))
                e = make_binary(ExprKind::Div, e, factor());
            else
                return e;
        }
    }

    ExprPtr factor() {
        bool neg = eat('-');
        ExprPtr e = atom();
        if (eat('^')) e = make_pow(e, integer("an exponent"));
        return neg ? make_neg(e) : e;
    }

    ExprPtr atom() {
        skip();
        if (pos_ >= s_.size()) fail("an expression");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return make_int(integer("a number"));
        if (s_.compare(pos_, 5, "qbin(") == 0) {
            pos_ += 5;
            long top = integer("a number");
            expect(',', "','");
            long bottom = integer("a number");
            QMono base{1, 1};
            if (eat(';')) base = mono();
            expect(')', "')'");
            return make_qbin(top, bottom, base);
        }
        if (c == 'q') {
            ++pos_;
            return make_qpow(1);
        }
        if (s_.compare(pos_, 2, "P(") == 0) {
            pos_ += 2;
            std::vector<QMono> args{mono()};
            while (eat(',')) args.push_back(mono());
            expect(';', "';'");
            QMono base = mono();
            std::optional<long> length;
            if (eat(';')) {
                if (!word("inf")) length = integer("a length or 'inf'");
            }
            expect(')', "';' or ')'");
            return make_poch(std::move(args), base, length);
        }
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            expect(')', "')'");
            return e;
        }
        fail("an expression");
    }

    QMono mono() {
        long sign = eat('-') ? -1 : 1;
        skip();
        if (pos_ < s_.size() && s_[pos_] == 'q') {
            ++pos_;
            long ex = eat('^') ? integer("an exponent") : 1;
            return QMono{sign, ex};
        }
        return QMono{sign * integer("a monomial"), 0};
    }
};

std::string mono_str(const QMono& m) {
    if (m.qexp == 0) return std::to_string(m.coef);
    if (m.coef != 1 && m.coef != -1)
        throw std::logic_error("monomial with |coef| > 1 and positive exponent");
    std::string s = m.coef == -1 ? "-q" : "q";
    if (m.qexp != 1) s += "^" + std::to_string(m.qexp);
    return s;
}

// factor = 1 - arg * base^t for one t; exponents stay nonnegative because the
// grammar only admits nonnegative q-powers.
QLaurent poch_factor(const QMono& arg, const Rat& basepow, long e) {
    QLaurent f = QLaurent::one();
    f.add_term(e, -arg.coef * basepow);
    return f;
}

QSeries eval_poch(const Expr& e, long trunc) {
    if (e.length) {
        QLaurent p = QLaurent::one();
        for (const QMono& arg : e.args) {
            Rat basepow = 1;
            for (long t = 0; t < *e.length; ++t) {
                p = p * poch_factor(arg, basepow, arg.qexp + e.base.qexp * t);
                basepow *= e.base.coef;
            }
        }
        return to_series(p.truncated(trunc), trunc);
    }
    QSeries acc = QSeries::one(trunc);
    for (const QMono& arg : e.args) {
        if (arg.coef == 0) continue;
        if (arg.qexp < 1)
            throw DivergentSpec("infinite product needs argument exponent >= 1");
        if (e.base.qexp < 1)
            throw DivergentSpec("infinite product needs a positive base exponent");
        Rat basepow = 1;
        for (long t = 0; arg.qexp + e.base.qexp * t <= trunc; ++t) {
            acc = acc * to_series(poch_factor(arg, basepow, arg.qexp + e.base.qexp * t), trunc);
            basepow *= e.base.coef;
        }
    }
    return acc;
}

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).run(); }

std::string print_expr(const Expr& e) {
    switch (e.kind) {
        case ExprKind::Int:
            return std::to_string(e.ival);
        case ExprKind::QPow:
            return e.ival == 1 ? "q" : "q^" + std::to_string(e.ival);
        case ExprKind::Neg:
            return "(-" + print_expr(*e.a) + ")";
        case ExprKind::Add:
            return "(" + print_expr(*e.a) + "+" + print_expr(*e.b) + ")";
        case ExprKind::Sub:
            return "(" + print_expr(*e.a) + "-" + print_expr(*e.b) + ")";
        case ExprKind::Mul:
            return "(" + print_expr(*e.a) + "*" + print_expr(*e.b) + ")";
        case ExprKind::Div:
            return "(" + print_expr(*e.a) + "/" + print_expr(*e.b) + ")";
        case ExprKind::Pow: {
            std::string base = print_expr(*e.a);
            // a bare negative literal would swallow the '^' into a negation
            if (e.a->kind == ExprKind::Int && e.a->ival < 0) base = "(" + base + ")";
            return "(" + base + "^" + std::to_string(e.ival) + ")";
        }
        case ExprKind::Poch: {
            std::string s = "P(";
            for (std::size_t i = 0; i < e.args.size(); ++i) {
                if (i) s += ",";
                s += mono_str(e.args[i]);
            }
            s += ";" + mono_str(e.base);
            s += ";" + (e.length ? std::to_string(*e.length) : std::string("inf"));
            return s + ")";
        }
        case ExprKind::QBin:
            return "qbin(" + std::to_string(e.top) + "," + std::to_string(e.bottom) + ";" +
                   mono_str(e.base) + ")";
    }
    return "?";
}

bool ast_equal(const Expr& x, const Expr& y) {
    if (x.kind != y.kind) return false;
    auto mono_eq = [](const QMono& a, const QMono& b) {
        return a.coef == b.coef && a.qexp == b.qexp;
    };
    switch (x.kind) {
        case ExprKind::Int:
        case ExprKind::QPow:
            return x.ival == y.ival;
        case ExprKind::Neg:
            return ast_equal(*x.a, *y.a);
        case ExprKind::Add:
        case ExprKind::Sub:
        case ExprKind::Mul:
        case ExprKind::Div:
            return ast_equal(*x.a, *y.a) && ast_equal(*x.b, *y.b);
        case ExprKind::Pow:
            return x.ival == y.ival && ast_equal(*x.a, *y.a);
        case ExprKind::Poch: {
            if (x.args.size() != y.args.size() || x.length != y.length ||
                !mono_eq(x.base, y.base))
                return false;
            for (std::size_t i = 0; i < x.args.size(); ++i)
                if (!mono_eq(x.args[i], y.args[i])) return false;
            return true;
        }
        case ExprKind::QBin:
            return x.top == y.top && x.bottom == y.bottom && mono_eq(x.base, y.base);
    }
    return false;
}

QSeries eval_expr(const Expr& e, long trunc) {
    switch (e.kind) {
        case ExprKind::Int: {
            QSeries s(trunc);
            s.set(0, e.ival);
            return s;
        }
        case ExprKind::QPow: {
            if (e.ival < 0) throw NotAPolynomial("negative power of q");
            QSeries s(trunc);
            s.add(e.ival, 1);
            return s;
        }
        case ExprKind::Neg:
            return eval_expr(*e.a, trunc).scaled(-1);
        case ExprKind::Add:
            return eval_expr(*e.a, trunc) + eval_expr(*e.b, trunc);
        case ExprKind::Sub:
            return eval_expr(*e.a, trunc) - eval_expr(*e.b, trunc);
        case ExprKind::Mul:
            return eval_expr(*e.a, trunc) * eval_expr(*e.b, trunc);
        case ExprKind::Div:
            return eval_expr(*e.a, trunc) * series_inverse_unit(eval_expr(*e.b, trunc));
        case ExprKind::Pow: {
            QSeries s = QSeries::one(trunc);
            QSeries base = eval_expr(*e.a, trunc);
            for (long t = 0; t < e.ival; ++t) s = s * base;
            return s;
        }
        case ExprKind::Poch:
            return eval_poch(e, trunc);
        case ExprKind::QBin: {
            if (e.base.coef != 1 || e.base.qexp < 1)
                throw std::invalid_argument("qbin base must be a positive power of q");
            return to_series(qbin(e.top, e.bottom, e.base.qexp), trunc);
        }
    }
    throw std::logic_error("unhandled expression node");
}

}  // namespace qv
