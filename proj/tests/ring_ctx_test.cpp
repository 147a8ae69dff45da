#include <gtest/gtest.h>

#include "rings.hpp"
#include "socle/errors.hpp"
#include "socle/parser.hpp"
#include "socle/ring.hpp"

using namespace socle;

namespace {

Polynomial poly(const RingHandle& R, const char* s) { return parse_polynomial(s, R->ambient()); }

// Regularity straight from the definition: (b : x) meet a = b, on preimages.
bool regular_by_colon(const Polynomial& x, const SubquotientModule& M) {
    const Ideal& a = M.top().preimage();
    const Ideal& b = M.bottom().preimage();
    return intersect(colon(b, x), a) == b;
}

}  // namespace

TEST(RingCtx, RejectsBadPresentations) {
    const auto P = PolyRing::make({"x", "y"});
    EXPECT_THROW(RingPresentation::make(Ideal::parse(P, "x^2 + y")), PreconditionError);
    EXPECT_THROW(RingPresentation::make(Ideal::unit(P)), PreconditionError);
}

TEST(RingCtx, IdealsModuloDefining) {
    const auto R = testrings::seqcm();
    EXPECT_EQ(R->dimension(), 2);
    const RIdeal J = RIdeal::parse(R, "x*y + y^2");
    EXPECT_TRUE(J.contains(poly(R, "y^2")));
    EXPECT_EQ(RIdeal::parse(R, "x*y, x*z"), RIdeal::zero(R));
    EXPECT_EQ(dimension(RIdeal::parse(R, "x")), 2);
    EXPECT_EQ(dimension(RIdeal::parse(R, "y, z")), 1);
    EXPECT_EQ(dimension(RIdeal::maximal(R)), 0);
    EXPECT_EQ(colon(RIdeal::zero(R), poly(R, "x")), RIdeal::parse(R, "y, z"));
    EXPECT_THROW(RIdeal::from_preimage(R, Ideal::parse(R->ambient(), "x*y")), PreconditionError);
}

TEST(RingCtx, PowersMatchRepeatedProducts) {
    const auto R = testrings::hypersurface();
    const RIdeal q = RIdeal::parse(R, "x^2 + y*z, y^2 - x*z");
    EXPECT_EQ(power(q, 3), product(product(q, q), q));
    EXPECT_EQ(power(q, 1), q);
}

TEST(RingCtx, Lengths) {
    const auto R = testrings::r2();
    EXPECT_EQ(length_subquotient(SubquotientModule(RIdeal::unit(R), RIdeal::parse(R, "x^2, y^2"))), 4u);
    // (x, y)/(x^2, xy, y^2) is two-dimensional over the field.
    EXPECT_EQ(length_subquotient(SubquotientModule(RIdeal::maximal(R), RIdeal::parse(R, "x^2, x*y, y^2"))), 2u);
    EXPECT_THROW(length_subquotient(SubquotientModule(RIdeal::unit(R), RIdeal::parse(R, "x"))), PreconditionError);
    EXPECT_THROW(SubquotientModule(RIdeal::parse(R, "x"), RIdeal::parse(R, "y")), PreconditionError);
}

TEST(RingCtx, ModuleDimensions) {
    const auto R = testrings::seqcm();
    EXPECT_EQ(SubquotientModule::full(R).dimension(), 2);
    EXPECT_EQ(SubquotientModule(RIdeal::parse(R, "x"), RIdeal::zero(R)).dimension(), 1);
    EXPECT_EQ(SubquotientModule(RIdeal::parse(R, "x"), RIdeal::parse(R, "x")).dimension(), kEmptyDimension);
}

TEST(RingCtx, RegularElements) {
    const auto R = testrings::seqcm();
    const auto M = SubquotientModule::full(R);
    EXPECT_TRUE(is_regular_on(poly(R, "x + y"), M));
    EXPECT_FALSE(is_regular_on(poly(R, "y"), M));
    EXPECT_FALSE(is_regular_on(poly(R, "x"), M));
}

TEST(RingCtx, HilbertSeriesRegularityAgreesWithColon) {
    const std::vector<RingHandle> rings{testrings::seqcm(), testrings::two_planes(), testrings::hypersurface(),
                                        testrings::sr_path()};
    Rng rng(99);
    for (const auto& R : rings) {
        std::vector<SubquotientModule> modules{SubquotientModule::full(R),
                                               SubquotientModule(RIdeal::maximal(R), RIdeal::zero(R))};
        const auto& vars = R->ambient()->variables();
        modules.emplace_back(RIdeal::parse(R, vars[0]), RIdeal::zero(R));
        for (const auto& M : modules) {
            for (unsigned deg : {1u, 2u}) {
                for (int t = 0; t < 3; ++t) {
                    const auto x = random_form(R, deg, std::nullopt, rng);
                    EXPECT_EQ(is_regular_on(x, M), regular_by_colon(x, M)) << R->id() << " " << to_string(x);
                }
                // Single variables are often zero divisors, which exercises the other branch.
                for (std::size_t v = 0; v < vars.size(); ++v) {
                    const auto x = Polynomial::variable(R->ambient(), v).pow(deg);
                    EXPECT_EQ(is_regular_on(x, M), regular_by_colon(x, M)) << R->id() << " " << to_string(x);
                }
            }
        }
    }
}

TEST(RingCtx, Depth) {
    EXPECT_EQ(depth_subquotient(SubquotientModule::full(testrings::two_planes())).depth, 1);
    EXPECT_EQ(depth_subquotient(SubquotientModule::full(testrings::seqcm())).depth, 1);
    EXPECT_EQ(depth_subquotient(SubquotientModule::full(testrings::r3())).depth, 3);
    EXPECT_EQ(depth_subquotient(SubquotientModule::full(testrings::hypersurface())).depth, 2);
    EXPECT_EQ(depth_subquotient(SubquotientModule::full(testrings::artinian_type2())).depth, 0);
    // depth <= dim on every corpus ring.
    for (const auto& R : {testrings::r2(), testrings::seqcm(), testrings::two_planes(), testrings::sr_path()}) {
        const auto d = depth_subquotient(SubquotientModule::full(R));
        EXPECT_LE(d.depth, R->dimension());
        EXPECT_EQ(d.sequence.size(), static_cast<std::size_t>(d.depth));
    }
}

TEST(RingCtx, RandomForms) {
    const auto R3 = testrings::r3();
    Rng rng(4);
    const auto f = random_form(R3, 1, std::nullopt, rng);
    EXPECT_TRUE(f.is_homogeneous());
    EXPECT_EQ(f.degree(), 1);
    const auto R = testrings::seqcm();
    const RIdeal yz = RIdeal::parse(R, "y, z");
    for (int t = 0; t < 5; ++t) {
        const auto g = random_form(R, 2, yz, rng);
        EXPECT_EQ(g.degree(), 2);
        EXPECT_TRUE(yz.contains(g));
    }
    // Same seed, same element.
    EXPECT_EQ(random_form(R, 2, yz, std::uint64_t{17}), random_form(R, 2, yz, std::uint64_t{17}));
    EXPECT_THROW(random_form(testrings::artinian_type2(), 2, std::nullopt, rng), PreconditionError);
}
