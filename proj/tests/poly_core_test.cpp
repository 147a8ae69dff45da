#include <gtest/gtest.h>

#include <random>

#include "socle/errors.hpp"
#include "socle/parser.hpp"
#include "socle/polynomial.hpp"

using namespace socle;

namespace {

RingPtr qxy() { return PolyRing::make({"x", "y"}); }

Polynomial random_poly(const RingPtr& P, std::mt19937_64& rng, int terms, int max_deg) {
    std::uniform_int_distribution<int> e(0, max_deg), c(-5, 5);
    Polynomial f(P);
    for (int t = 0; t < terms; ++t) {
        std::vector<std::uint32_t> exps(P->nvars());
        for (auto& x : exps) x = static_cast<std::uint32_t>(e(rng));
        f += Polynomial::monomial(P, c(rng), Monomial(std::span<const std::uint32_t>(exps)));
    }
    return f;
}

}  // namespace

TEST(Monomial, DivisionLcmGcd) {
    const Monomial a{2, 1, 0}, b{1, 3, 1};
    EXPECT_EQ(lcm(a, b), (Monomial{2, 3, 1}));
    EXPECT_EQ(gcd(a, b), (Monomial{1, 1, 0}));
    EXPECT_TRUE((Monomial{1, 1, 0}).divides(a));
    EXPECT_FALSE(a.divides(b));
    EXPECT_EQ((Monomial{1, 1, 0}).quotient_of(a), (Monomial{1, 0, 0}));
    EXPECT_EQ(colon(a, b), (Monomial{1, 0, 0}));
    EXPECT_EQ(a.degree(), 3u);
}

TEST(Monomial, Orders) {
    const auto drl = MonomialOrder::degrevlex();
    const auto lex = MonomialOrder::lex();
    // x*z^2 versus y^3 and x*y*z versus x*z^2 in three variables.
    EXPECT_TRUE(compare_unchecked(Monomial{1, 2, 0}, Monomial{1, 1, 1}, drl) > 0);
    EXPECT_TRUE(compare_unchecked(Monomial{0, 3, 0}, Monomial{1, 0, 2}, drl) > 0);
    EXPECT_TRUE(compare_unchecked(Monomial{1, 0, 2}, Monomial{0, 3, 0}, lex) > 0);
    const auto elim = MonomialOrder::eliminate_from(2);
    // Any monomial involving the trailing block beats one without it.
    EXPECT_TRUE(compare_unchecked(Monomial{0, 0, 1}, Monomial{5, 5, 0}, elim) > 0);
}

TEST(Polynomial, ParsePrintRoundTrip) {
    const auto P = PolyRing::make({"x", "y", "z"});
    const auto f = parse_polynomial("3/4 x^2 y - (x + z)^2 + 2", P);
    EXPECT_EQ(parse_polynomial(to_string(f), P), f);
    EXPECT_EQ(f.degree(), 3);
    EXPECT_FALSE(f.is_homogeneous());
    EXPECT_EQ(to_string(parse_polynomial("x*y + y^2", P)), "x*y + y^2");
}

TEST(Polynomial, ParseErrorsCarryPositions) {
    const auto P = qxy();
    try {
        parse_polynomial("x + @", P);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    EXPECT_THROW(parse_polynomial("x + w", P), ParseError);
    EXPECT_THROW(parse_polynomial("x / y", P), ParseError);
}

TEST(Polynomial, RingAxiomsOnRandomInputs) {
    const auto P = PolyRing::make({"x", "y", "z"});
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_poly(P, rng, 4, 3), b = random_poly(P, rng, 4, 3), c = random_poly(P, rng, 3, 2);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_TRUE((a - a).is_zero());
        if (!b.is_zero()) {
            const auto q = exact_quotient(a * b, b);
            ASSERT_TRUE(q.has_value());
            EXPECT_EQ(*q, a);
        }
    }
}

TEST(Polynomial, ExactQuotientRejects) {
    const auto P = qxy();
    EXPECT_FALSE(exact_quotient(parse_polynomial("x^2 + y", P), parse_polynomial("x", P)).has_value());
}

TEST(Polynomial, RingMismatch) {
    const auto a = parse_polynomial("x", qxy());
    const auto b = parse_polynomial("x", PolyRing::make({"x", "z"}));
    EXPECT_THROW(poly_arith(a, b, ArithOp::add), RingMismatch);
}

TEST(Field, PrimeFieldArithmetic) {
    const auto F = FieldSpec::prime(7);
    EXPECT_EQ(F.mul(3, 5), 1);
    EXPECT_EQ(F.inv(3), 5);
    EXPECT_EQ(F.normalize(Scalar(1, 2)), 4);
    EXPECT_THROW(FieldSpec::prime(8), PreconditionError);
    const auto P = PolyRing::make({"x"}, FieldSpec::prime(5));
    EXPECT_TRUE(parse_polynomial("(x+1)^5 - x^5 - 1", P).is_zero());
}
