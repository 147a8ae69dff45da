#include <gtest/gtest.h>

#include <random>

#include "socle/groebner.hpp"
#include "socle/ideal.hpp"
#include "socle/parser.hpp"

using namespace socle;

namespace {

std::vector<Polynomial> gens(const RingPtr& P, const char* s) { return parse_polynomial_list(s, P); }

}  // namespace

TEST(Groebner, SmallExample) {
    const auto P = PolyRing::make({"x", "y"});
    const auto gb = buchberger(gens(P, "x^2, x*y + y^2"), P);
    const auto expect = gens(P, "x*y + y^2, x^2, y^3");
    ASSERT_EQ(gb.generators().size(), 3u);
    for (const auto& g : expect) EXPECT_NE(std::find(gb.generators().begin(), gb.generators().end(), g), gb.generators().end());
    EXPECT_EQ(normal_form(parse_polynomial("x*y", P), gb), parse_polynomial("-y^2", P));
    EXPECT_TRUE(normal_form(parse_polynomial("x*y^2", P), gb).is_zero());
}

TEST(Groebner, UnitIdeal) {
    const auto P = PolyRing::make({"x", "y"});
    EXPECT_TRUE(buchberger(gens(P, "x*y - 1, x"), P).is_unit());
}

TEST(Groebner, ReducedBasisIsGroebnerAndCanonical) {
    const auto P = PolyRing::make({"x", "y", "z"});
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-3, 3), e(0, 2);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Polynomial> G;
        for (int k = 0; k < 3; ++k) {
            Polynomial f(P);
            for (int t = 0; t < 3; ++t)
                f += Polynomial::monomial(P, c(rng), Monomial{static_cast<std::uint32_t>(e(rng)), static_cast<std::uint32_t>(e(rng)),
                                                              static_cast<std::uint32_t>(e(rng))});
            G.push_back(f);
        }
        const auto gb = buchberger(G, P);
        EXPECT_TRUE(is_groebner_basis(gb.generators()));
        for (const auto& g : G) EXPECT_TRUE(ideal_member(g, gb));
        // Reordering inputs and adding redundant combinations leaves the reduced basis unchanged.
        auto H = G;
        std::reverse(H.begin(), H.end());
        H.push_back(G[0] * G[1] + G[2]);
        EXPECT_EQ(buchberger(H, P), gb);
        for (const auto& g : gb.generators()) EXPECT_EQ(g.leading_coeff(), 1);
    }
}

TEST(Groebner, LexEliminationExample) {
    const auto P = PolyRing::make({"x", "y"}, {}, MonomialOrder::lex());
    // Lex basis of (x^2 + y^2 - 1, x - y) holds a univariate polynomial in y.
    const auto gb = buchberger(gens(P, "x^2 + y^2 - 1, x - y"), P);
    bool univariate = false;
    for (const auto& g : gb.generators()) univariate |= g.leading_monomial()[0] == 0;
    EXPECT_TRUE(univariate);
    EXPECT_TRUE(ideal_member(parse_polynomial("2*y^2 - 1", P), gb));
}

TEST(Groebner, PrimeField) {
    const auto P = PolyRing::make({"x", "y"}, FieldSpec::prime(32003));
    const auto gb = buchberger(gens(P, "x^2 - 2*y, x*y - 3"), P);
    EXPECT_TRUE(is_groebner_basis(gb.generators()));
    EXPECT_TRUE(ideal_member(parse_polynomial("x^3 - 2*x*y", P), gb));
}

TEST(Groebner, IdealCachesAgreeAcrossOrders) {
    const auto P = PolyRing::make({"x", "y", "z"});
    const Ideal I = Ideal::parse(P, "x*y - z^2, y^2 - x*z");
    const auto& a = I.groebner();
    const auto& b = I.groebner(MonomialOrder::lex());
    EXPECT_EQ(&a, &I.groebner());
    for (const auto& g : b.generators()) EXPECT_TRUE(ideal_member(g.rebase(P), a));
    for (const auto& g : a.generators()) EXPECT_TRUE(ideal_member(g.rebase(b.generators().front().ring()), b));
}
