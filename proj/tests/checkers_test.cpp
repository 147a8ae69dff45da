#include <gtest/gtest.h>

#include "rings.hpp"
#include "socle/checkers.hpp"
#include "socle/errors.hpp"
#include "socle/socle.hpp"

using namespace socle;

TEST(Properties, CorpusDecisions) {
    const auto r2 = is_sequentially_cm(testrings::r2());
    EXPECT_TRUE(r2.is_regular);
    EXPECT_TRUE(r2.is_gorenstein);
    EXPECT_EQ(r2.cm_type, 1);

    const auto art = is_sequentially_cm(testrings::artinian_type2());
    EXPECT_EQ(art.dimension, 0);
    EXPECT_TRUE(art.is_cm);
    EXPECT_FALSE(art.is_gorenstein);
    EXPECT_EQ(art.cm_type, 2);

    const auto seq = is_sequentially_cm(testrings::seqcm());
    EXPECT_EQ(seq.depth, 1);
    EXPECT_FALSE(seq.is_cm);
    EXPECT_EQ(seq.is_seq_cm, true);
    ASSERT_TRUE(seq.socle_invariants.has_value());
    EXPECT_EQ(seq.socle_invariants->at(1), 1);
    EXPECT_EQ(seq.socle_invariants->at(2), 1);
    EXPECT_EQ(seq.lambda, (std::vector<int>{1, 2}));
    ASSERT_EQ(seq.quotients.size(), 2u);
    for (const auto& q : seq.quotients) {
        EXPECT_TRUE(q.is_cm);
        EXPECT_EQ(q.type, 1);
    }

    const auto planes = is_sequentially_cm(testrings::two_planes());
    EXPECT_EQ(planes.depth, 1);
    EXPECT_FALSE(planes.is_cm);
    EXPECT_EQ(planes.is_seq_cm, false);

    EXPECT_EQ(cm_type(testrings::sr_path()), 2);
    EXPECT_TRUE(is_gorenstein(testrings::hypersurface()));
    EXPECT_THROW(cm_type(testrings::seqcm()), PreconditionError);
}

TEST(Properties, ImplicationChain) {
    for (const auto& R : {testrings::r2(), testrings::hypersurface(), testrings::artinian_type2(), testrings::seqcm(),
                          testrings::two_planes(), testrings::sr_path()}) {
        const auto p = is_sequentially_cm(R);
        if (p.is_regular) EXPECT_TRUE(p.is_gorenstein) << R->id();
        if (p.is_gorenstein) EXPECT_TRUE(p.is_cm) << R->id();
        if (p.is_cm) EXPECT_EQ(p.is_seq_cm, true) << R->id();
        EXPECT_LE(p.depth, p.dimension) << R->id();
    }
}

TEST(Properties, DeepWitness) {
    const auto seq = is_sequentially_cm(testrings::seqcm());
    ASSERT_TRUE(seq.deep_witness.has_value());
    EXPECT_EQ(seq.deep_witness->index_of_reducibility, 2u);
}

TEST(Verdicts, StringsRoundTrip) {
    for (auto v : {Verdict::confirmed, Verdict::refuted_as_expected, Verdict::inconclusive, Verdict::contradicted,
                   Verdict::not_witnessed, Verdict::not_applicable})
        EXPECT_EQ(parse_verdict(to_string(v)), v);
    EXPECT_THROW(parse_verdict("maybe"), PreconditionError);
}

TEST(Verify, UnknownTheorem) {
    EXPECT_THROW(verify_theorem("thm_9_9", testrings::r2(), {}), PreconditionError);
    EXPECT_EQ(theorem_ids().size(), 13u);
}

TEST(Verify, RegularRingConfirmsEverything) {
    VerifyParams p;
    p.seed = 7;
    const auto R = testrings::r2();
    const auto props = is_sequentially_cm(R);
    for (const auto& t : theorem_ids()) {
        const auto v = verify_theorem(t, R, p, &props);
        EXPECT_TRUE(v.verdict == Verdict::confirmed || v.verdict == Verdict::not_applicable) << t << " " << to_string(v.verdict);
        EXPECT_NE(v.verdict, Verdict::contradicted) << t;
    }
}

TEST(Verify, ArtinianRing) {
    const auto R = testrings::artinian_type2();
    EXPECT_EQ(verify_theorem("thm_6_3", R, {}).verdict, Verdict::confirmed);
    EXPECT_EQ(verify_theorem("thm_6_2", R, {}).verdict, Verdict::refuted_as_expected);
    EXPECT_EQ(verify_theorem("thm_6_7", R, {}).verdict, Verdict::not_applicable);
}

TEST(Verify, Deterministic) {
    VerifyParams p;
    p.seed = 3;
    const auto R = testrings::seqcm();
    const auto a = verify_theorem("prop_P2_7", R, p);
    const auto b = verify_theorem("prop_P2_7", testrings::seqcm(), p);
    EXPECT_EQ(a.verdict, Verdict::confirmed);
    EXPECT_EQ(a.witnesses, b.witnesses);
    ASSERT_EQ(a.comparisons.size(), b.comparisons.size());
    for (std::size_t i = 0; i < a.comparisons.size(); ++i) EXPECT_EQ(a.comparisons[i].computed, b.comparisons[i].computed);
}

TEST(Verify, DepthZeroLineWithPoint) {
    // k[x,y]/(xy, y^2): the embedded point y survives in q:m, so I^2 != qI.
    // By hand l(R/q^{n+1}) = 2n+3 for q = (x^2) and l(R/m^{n+1}) = n+2, hence
    // e_1(I) - e_1(q) = 0 while f_0(q) = r_0 + r_1 = 2.
    const auto R = testrings::make({"x", "y"}, "x*y, y^2", "line_with_point");
    const auto v = verify_theorem("prop_coe", R, {});
    EXPECT_EQ(v.verdict, Verdict::contradicted);
    bool flagged = false;
    for (const auto& n : v.notes) flagged |= n.find("d = 1") != std::string::npos;
    EXPECT_TRUE(flagged);
    ASSERT_FALSE(v.comparisons.empty());
    EXPECT_EQ(v.comparisons.front().predicted, "2");
    EXPECT_EQ(v.comparisons.front().computed, "0");
    EXPECT_EQ(verify_theorem("fact_F2_5_4", R, {}).verdict, Verdict::contradicted);
}
