#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qv/qbinom.hpp"
#include "qv/qexpr.hpp"

using qv::ExprKind;
using qv::ExprPtr;
using qv::QMono;
using qv::QSeries;

namespace {

QSeries ev(const std::string& text, long trunc) {
    return qv::eval_expr(*qv::parse_expr(text), trunc);
}

QSeries from_coeffs(const std::vector<long>& cs) {
    QSeries s(static_cast<long>(cs.size()) - 1);
    for (std::size_t i = 0; i < cs.size(); ++i) s.set(static_cast<long>(i), cs[i]);
    return s;
}

// random AST respecting the grammar's invariants: monomials are +-q^e or a
// bare integer, exponents after '^' are nonnegative
struct Gen {
    std::mt19937 rng{424242u};

    long pick(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng);
    }

    QMono mono() {
        if (pick(0, 1)) return QMono{pick(-3, 3), 0};
        return QMono{pick(0, 1) ? 1 : -1, pick(1, 5)};
    }

    ExprPtr node(int depth) {
        long kind = pick(0, depth <= 0 ? 3 : 9);
        switch (kind) {
            case 0: return qv::make_int(pick(-9, 9));
            case 1: return qv::make_qpow(pick(0, 6));
            case 2: {
                std::vector<QMono> args;
                long n = pick(1, 3);
                for (long t = 0; t < n; ++t) args.push_back(mono());
                std::optional<long> len;
                if (pick(0, 1)) len = pick(0, 4);
                return qv::make_poch(std::move(args), mono(), len);
            }
            case 3: return qv::make_qbin(pick(0, 8), pick(0, 8), mono());
            case 4: return qv::make_neg(node(depth - 1));
            case 5: return qv::make_pow(node(depth - 1), pick(0, 4));
            default: {
                auto k = static_cast<ExprKind>(
                    pick(static_cast<long>(ExprKind::Add), static_cast<long>(ExprKind::Div)));
                return qv::make_binary(k, node(depth - 1), node(depth - 1));
            }
        }
    }
};

}  // namespace

TEST_CASE("ast shapes of the pochhammer forms") {
    ExprPtr e = qv::parse_expr("P(-q;q^2;inf)");
    REQUIRE(e->kind == ExprKind::Poch);
    REQUIRE(e->args.size() == 1);
    CHECK(e->args[0].coef == -1);
    CHECK(e->args[0].qexp == 1);
    CHECK(e->base.coef == 1);
    CHECK(e->base.qexp == 2);
    CHECK_FALSE(e->length.has_value());

    ExprPtr d = qv::parse_expr("P(q^20,q^3,q^17;q^20)/P(q;q)");
    REQUIRE(d->kind == ExprKind::Div);
    REQUIRE(d->a->kind == ExprKind::Poch);
    CHECK(d->a->args.size() == 3);
    CHECK(d->a->args[1].qexp == 3);
    CHECK(d->a->base.qexp == 20);
    CHECK_FALSE(d->a->length.has_value());
    CHECK(d->b->kind == ExprKind::Poch);

    // omitted length and explicit inf are the same tree
    CHECK(qv::ast_equal(*qv::parse_expr("P(q;q)"), *qv::parse_expr("P(q;q;inf)")));
    // finite length is stored
    ExprPtr f = qv::parse_expr("P(q;q;4)");
    REQUIRE(f->length.has_value());
    CHECK(*f->length == 4);
}

TEST_CASE("syntax errors carry a 1-based offset") {
    try {
        qv::parse_expr("P(q;q");
        FAIL("expected a SyntaxError");
    } catch (const qv::SyntaxError& e) {
        CHECK(e.position == 6);
        CHECK(std::string(e.what()) == "expected ';' or ')' at offset 6");
    }
    CHECK_THROWS_AS(qv::parse_expr(""), qv::SyntaxError);
    CHECK_THROWS_AS(qv::parse_expr("1+"), qv::SyntaxError);
    CHECK_THROWS_AS(qv::parse_expr("(1"), qv::SyntaxError);
    CHECK_THROWS_AS(qv::parse_expr("qbin(4 2)"), qv::SyntaxError);
    CHECK_THROWS_AS(qv::parse_expr("1 2"), qv::SyntaxError);  // trailing junk
    CHECK_THROWS_AS(qv::parse_expr("q^"), qv::SyntaxError);
    try {
        qv::parse_expr("1+*2");
        FAIL("expected a SyntaxError");
    } catch (const qv::SyntaxError& e) {
        CHECK(e.position == 3);
        CHECK_FALSE(e.expected.empty());
    }
}

TEST_CASE("whitespace is free between tokens") {
    CHECK(qv::ast_equal(*qv::parse_expr(" 1 + q * ( 2 - q ^ 2 ) "),
                        *qv::parse_expr("1+q*(2-q^2)")));
    CHECK(qv::ast_equal(*qv::parse_expr("P( -q ; q ^ 2 ; inf )"),
                        *qv::parse_expr("P(-q;q^2;inf)")));
    CHECK(qv::ast_equal(*qv::parse_expr("qbin( 4 , 2 ; q )"),
                        *qv::parse_expr("qbin(4,2;q)")));
}

TEST_CASE("arithmetic evaluation") {
    CHECK(ev("1/(1-q)", 3) == from_coeffs({1, 1, 1, 1}));
    CHECK(ev("2^3", 2) == from_coeffs({8, 0, 0}));
    CHECK(ev("q^2*q^3", 6) == from_coeffs({0, 0, 0, 0, 0, 1, 0}));
    CHECK(ev("(1+q)^2", 2) == from_coeffs({1, 2, 1}));
    CHECK(ev("1-q^2/(1-q)", 3) == from_coeffs({1, 0, -1, -1}));
    CHECK(ev("-3", 1) == from_coeffs({-3, 0}));
    CHECK(ev("q^0", 1) == from_coeffs({1, 0}));
}

TEST_CASE("pochhammer and binomial evaluation") {
    CHECK(ev("qbin(4,2)", 4) == from_coeffs({1, 1, 2, 1, 1}));
    CHECK(ev("qbin(4,2;q)", 4) == from_coeffs({1, 1, 2, 1, 1}));
    CHECK(ev("qbin(4,2;q^2)", 8) == qv::to_series(qv::qbin(4, 2, 2), 8));

    QSeries pent(5);
    pent.set(0, 1);
    pent.set(1, -1);
    pent.set(2, -1);
    pent.set(5, 1);
    CHECK(ev("P(q;q;inf)", 5) == pent);
    CHECK(ev("P(q;q)", 5) == pent);
    CHECK(ev("1/P(q;q)", 20) == qv::partitions_gf(20));

    CHECK(ev("P(0;q;inf)", 6) == QSeries::one(6));  // zero argument drops out
    CHECK(ev("P(q;1;2)", 4) == from_coeffs({1, -2, 1, 0, 0}));
    CHECK(ev("P(-q;q;3)", 6) == qv::to_series(qv::poch1(1, 1, 1, 3), 6));
    CHECK(ev("P(q,q^2;q^3;2)", 12) ==
          qv::to_series(qv::poch1(-1, 1, 3, 2) * qv::poch1(-1, 2, 3, 2), 12));
}

TEST_CASE("evaluation failure modes") {
    CHECK_THROWS_AS(ev("1/q", 5), qv::ZeroConstantTerm);
    CHECK_THROWS_AS(ev("1/(2-2)", 5), qv::ZeroConstantTerm);
    CHECK_THROWS_AS(ev("P(q^0;q;inf)", 5), qv::DivergentSpec);
    CHECK_THROWS_AS(ev("P(1;q)", 5), qv::DivergentSpec);
    CHECK_THROWS_AS(ev("P(q;1;inf)", 5), qv::DivergentSpec);
    CHECK_THROWS_AS(ev("qbin(4,2;-q)", 5), std::invalid_argument);
    CHECK_THROWS_AS(ev("qbin(4,2;2)", 5), std::invalid_argument);
}

TEST_CASE("ast_equal distinguishes structure") {
    CHECK_FALSE(qv::ast_equal(*qv::make_int(1), *qv::make_int(2)));
    CHECK_FALSE(qv::ast_equal(*qv::make_int(1), *qv::make_qpow(1)));
    CHECK_FALSE(qv::ast_equal(*qv::parse_expr("P(q,1;q)"), *qv::parse_expr("P(1,q;q)")));
    CHECK_FALSE(qv::ast_equal(*qv::parse_expr("1+q"), *qv::parse_expr("q+1")));
    CHECK(qv::ast_equal(*qv::parse_expr("1+q"), *qv::parse_expr("1+q")));
}

TEST_CASE("powers of bare q fold into one node") {
    ExprPtr e = qv::parse_expr("q^3");
    CHECK(e->kind == ExprKind::QPow);
    CHECK(e->ival == 3);
    ExprPtr folded = qv::make_pow(qv::make_qpow(2), 3);
    CHECK(folded->kind == ExprKind::QPow);
    CHECK(folded->ival == 6);
    // a non-q base keeps the Pow node
    ExprPtr kept = qv::make_pow(qv::make_int(5), 2);
    CHECK(kept->kind == ExprKind::Pow);
}

TEST_CASE("negative integer literals fold through unary minus") {
    ExprPtr lit = qv::parse_expr("-5");
    CHECK(lit->kind == ExprKind::Int);
    CHECK(lit->ival == -5);
    CHECK(qv::make_neg(qv::make_int(5))->ival == -5);
    // the power still binds tighter than the sign
    ExprPtr p = qv::parse_expr("-5^2");
    REQUIRE(p->kind == ExprKind::Neg);
    CHECK(p->a->kind == ExprKind::Pow);
    CHECK(ev("-5^2", 0).at(0) == -25);
    // a built tree with a negative base parenthesizes it on the way out
    ExprPtr built = qv::make_pow(qv::make_int(-5), 2);
    CHECK(qv::print_expr(*built) == "((-5)^2)");
    CHECK(qv::ast_equal(*qv::parse_expr(qv::print_expr(*built)), *built));
    // q keeps the explicit negation node
    CHECK(qv::parse_expr("-q")->kind == ExprKind::Neg);
    CHECK(qv::ast_equal(*qv::parse_expr("(1--5)"),
                        *qv::make_binary(ExprKind::Sub, qv::make_int(1), qv::make_int(-5))));
}

TEST_CASE("print/parse round trip on 500 random trees") {
    Gen gen;
    for (int trial = 0; trial < 500; ++trial) {
        ExprPtr e = gen.node(5);
        std::string text = qv::print_expr(*e);
        ExprPtr back;
        CAPTURE(text);
        REQUIRE_NOTHROW(back = qv::parse_expr(text));
        CHECK(qv::ast_equal(*e, *back));
        // printing is a fixed point
        CHECK(qv::print_expr(*back) == text);
    }
}
