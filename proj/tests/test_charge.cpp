#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace vcs;

namespace {

// C is interior with two ends; its neighbours carry boundary tori
ManifoldGraph two_end_block(GluingMatrix g0, GluingMatrix g1, std::vector<ExceptionalFiber> ex = {}) {
    ManifoldGraph m;
    SeifertBlockData c;
    c.num_boundary = 2;
    c.exceptional = std::move(ex);
    m.blocks.emplace("C", c);
    SeifertBlockData n;
    n.num_boundary = 2;
    n.exceptional = {{2, 1}};
    m.blocks.emplace("N0", n);
    m.blocks.emplace("N1", n);
    m.jsj_tori.push_back({"T0", {"N0", 0}, {"C", 0}, g0});
    m.jsj_tori.push_back({"T1", {"N1", 0}, {"C", 1}, g1});
    m.boundary_tori = {{"N0", 1}, {"N1", 1}};
    return m;
}

oracle::Vec to_vec(const IntVector& v) {
    oracle::Vec out;
    for (const auto& x : v) out.push_back(oracle::to_i64(x));
    return out;
}

void check_against_oracle(const oracle::RandomBlock& rb, SelfGluing mode, int trial) {
    ASSERT_TRUE(validate(rb.graph).ok()) << "trial " << trial;
    const auto& ends = mode == SelfGluing::PerEnd ? rb.ends_per_end : rb.ends_per_torus;
    const ChargeVerdict v = is_chargeless_block(rb.graph, "C", {mode});
    ASSERT_EQ(v.fiber_slopes.size(), ends.size());
    for (std::size_t i = 0; i < ends.size(); ++i) {
        ASSERT_EQ(v.end_indices[i], ends[i].boundary);
        ASSERT_EQ(v.fiber_slopes[i], (Slope{ends[i].p, ends[i].q})) << "trial " << trial << " end " << i;
    }
    oracle::i64 box = 6;
    if (v.witness)
        for (const auto& x : *v.witness) box = std::max(box, std::abs(oracle::to_i64(x)));
    const auto brute = oracle::brute_force_chargeless(rb.spec, rb.k, ends, box);
    ASSERT_EQ(v.chargeless, brute.found) << "trial " << trial;
    if (v.witness) {
        ASSERT_TRUE(oracle::weights_are_solution(rb.spec, rb.k, ends, to_vec(*v.witness)));
    } else {
        ASSERT_TRUE(brute.always_zero[*v.obstruction - 1]) << "trial " << trial;
    }
}

}  // namespace

TEST(Chargeless, SameClassGivesOppositeWeights) {
    // both neighbours' fibers arrive as the local fiber h
    const auto m = two_end_block(GluingMatrix::identity(), GluingMatrix::identity());
    const ChargeVerdict v = is_chargeless_block(m, "C");
    EXPECT_TRUE(v.chargeless);
    EXPECT_EQ(*v.witness, (IntVector{1, -1}));
    EXPECT_FALSE(v.filled_euler.has_value());  // fiber filling is not Seifert
}

TEST(Chargeless, ClassesHAndTwoH) {
    // classes h and 2h
    ManifoldGraph m = two_end_block(GluingMatrix::identity(), GluingMatrix::identity());
    const SeifertBlockData& c = m.seifert("C");
    const IntVector h = class_in_h1(c, 0, Slope{0, 1});
    IntVector two_h = h;
    for (auto& x : two_h) x *= 2;
    const auto pres = presentation_h1(c);
    const LatticeBasis L = kernel_lattice({h, two_h}, pres.relations);
    EXPECT_EQ(*all_nonzero_vector(L), (IntVector{2, -1}));
}

TEST(Chargeless, InfiniteOrderSingleEnd) {
    ManifoldGraph m;
    SeifertBlockData c;
    c.num_boundary = 1;
    m.blocks.emplace("C", c);
    SeifertBlockData n;
    n.num_boundary = 2;
    m.blocks.emplace("N", n);
    m.jsj_tori.push_back({"T", {"N", 0}, {"C", 0}, GluingMatrix::identity()});  // fiber meets fiber: class h
    m.boundary_tori = {{"N", 1}};
    const ChargeVerdict v = is_chargeless_block(m, "C");
    EXPECT_FALSE(v.chargeless);
    EXPECT_EQ(v.obstruction, std::optional<std::size_t>(1));
}

TEST(Chargeless, Errors) {
    const ManifoldGraph m = parse_manifold(oracle::catalog_text("manifolds/chargeless_mixed.m3"));
    try {
        is_chargeless_block(m, "S1");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotInterior);
    }
    try {
        is_chargeless_block(m, "H");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotSeifert);
    }
}

TEST(Chargeless, Catalog) {
    const auto good = is_chargeless_manifold(parse_manifold(oracle::catalog_text("manifolds/chargeless_mixed.m3")));
    EXPECT_TRUE(good.chargeless);
    ASSERT_EQ(good.verdicts.size(), 1U);
    EXPECT_EQ(*good.verdicts[0].witness, (IntVector{1, 1, 1}));
    EXPECT_EQ(good.verdicts[0].filled_euler, std::optional<Rational>(0));

    const auto bad = is_chargeless_manifold(parse_manifold(oracle::catalog_text("manifolds/charged_mixed.m3")));
    EXPECT_FALSE(bad.chargeless);
    EXPECT_EQ(bad.charged_blocks(), (std::vector<std::string>{"S2"}));

    const auto none = is_chargeless_manifold(parse_manifold(oracle::catalog_text("manifolds/trefoil_exterior.m3")));
    EXPECT_TRUE(none.chargeless);
    EXPECT_TRUE(none.verdicts.empty());
}

TEST(Chargeless, CatalogAgreesWithOracle) {
    // S2: g=0, exceptional (3,1), adjacent fibers (3,1),(3,-1),(3,-1)
    oracle::SeifertSpec s{0, {{3, 1}}, 0};
    const std::vector<oracle::EndSpec> ends{{0, 3, 1}, {1, 3, -1}, {2, 3, -1}};
    EXPECT_TRUE(oracle::brute_force_chargeless(s, 3, ends, 4).found);
    EXPECT_TRUE(oracle::weights_are_solution(s, 3, ends, {1, 1, 1}));
    const std::vector<oracle::EndSpec> charged{{0, 3, 1}, {1, 3, -1}, {2, 3, 1}};
    EXPECT_FALSE(oracle::brute_force_chargeless(s, 3, charged, 6).found);
}

TEST(Chargeless, RandomBlocksAgreeWithBruteForce) {
    std::mt19937_64 rng(424242);
    int chargeless = 0, charged = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto rb = oracle::random_interior_block(rng);
        check_against_oracle(rb, SelfGluing::PerEnd, trial);
        const bool c = is_chargeless_block(rb.graph, "C").chargeless;
        (c ? chargeless : charged)++;
    }
    EXPECT_GT(chargeless, 3);
    EXPECT_GT(charged, 3);
}

TEST(Chargeless, SelfGluingBothReadings) {
    std::mt19937_64 rng(99);
    int self = 0;
    for (int trial = 0; self < 40 && trial < 2000; ++trial) {
        const auto rb = oracle::random_interior_block(rng);
        if (rb.ends_per_end.size() == rb.ends_per_torus.size()) continue;
        ++self;
        check_against_oracle(rb, SelfGluing::PerEnd, trial);
        check_against_oracle(rb, SelfGluing::PerTorus, trial);
    }
    EXPECT_EQ(self, 40);
}

TEST(Filling, Examples) {
    SeifertBlockData trefoil;
    trefoil.num_boundary = 1;
    trefoil.exceptional = {{2, 1}, {3, 1}};
    trefoil.section_obstruction = 0;
    const auto closed = fill_along_slopes(trefoil, {{6, 1}});
    EXPECT_EQ(closed.num_boundary, 0U);
    EXPECT_EQ(closed.exceptional, (std::vector<ExceptionalFiber>{{2, 1}, {3, 1}, {6, 1}}));

    SeifertBlockData t2i;
    t2i.num_boundary = 2;
    const auto filled = fill_along_slopes(t2i, {{1, 0}, {1, 0}});
    EXPECT_EQ(euler_number(filled), 0);

    try {
        fill_along_slopes(t2i, {{0, 1}, {1, 0}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::FiberFilling);
    }
    EXPECT_THROW(fill_along_slopes(t2i, {{1, 0}}), Error);
}

TEST(Euler, Examples) {
    SeifertBlockData b;
    b.exceptional = {{2, 1}, {3, 1}, {6, 1}};
    b.section_obstruction = -1;
    EXPECT_EQ(euler_number(b), 0);
    EXPECT_EQ(euler_number(SeifertBlockData{}), 0);
    SeifertBlockData three;
    three.section_obstruction = 3;
    EXPECT_EQ(euler_number(three), -3);
    SeifertBlockData neg;
    neg.exceptional = {{3, -1}};
    EXPECT_EQ(euler_number(neg), Rational(1, 3));
    SeifertBlockData open;
    open.num_boundary = 1;
    EXPECT_THROW(euler_number(open), Error);
}

TEST(Euler, AllOnesWitnessMeansZero) {
    std::mt19937_64 rng(5);
    int seen = 0;
    for (int trial = 0; trial < 3000 && seen < 20; ++trial) {
        const auto rb = oracle::random_interior_block(rng, false);
        const ChargeVerdict v = is_chargeless_block(rb.graph, "C");
        if (!v.witness || !is_all_ones(*v.witness) || !v.filled_euler) continue;
        ++seen;
        EXPECT_EQ(*v.filled_euler, 0) << "trial " << trial;
    }
    EXPECT_GT(seen, 0);
}

TEST(Classify, GeometryTable) {
    const std::map<std::string, bool> expected{{"h3", true},  {"e3", true},  {"h2xr", true},
                                               {"s2xr", true}, {"s3", true},  {"sol", false},
                                               {"nil", false}, {"sl2r", false}, {"trefoil_exterior", true}};
    for (const auto& [name, vcs_expected] : expected) {
        const auto v = classify_vcs(parse_manifold(oracle::catalog_text("manifolds/" + name + ".m3")));
        EXPECT_EQ(v.vcs, vcs_expected) << name;
        EXPECT_EQ(v.reason, vcs_expected ? VcsReason::GeometricGood : VcsReason::GeometricBad) << name;
    }
}

TEST(Classify, Nongeometric) {
    const auto yes = classify_vcs(parse_manifold(oracle::catalog_text("manifolds/chargeless_mixed.m3")));
    EXPECT_TRUE(yes.vcs);
    EXPECT_EQ(yes.reason, VcsReason::NongeometricChargeless);
    ASSERT_TRUE(yes.partition.has_value());
    EXPECT_TRUE(yes.partition->bipartite);

    const auto no = classify_vcs(parse_manifold(oracle::catalog_text("manifolds/charged_mixed.m3")));
    EXPECT_FALSE(no.vcs);
    EXPECT_EQ(no.reason, VcsReason::NongeometricCharged);
    EXPECT_EQ(no.failing_blocks, (std::vector<std::string>{"S2"}));
}

TEST(Classify, MissingLabel) {
    const ManifoldGraph m = parse_manifold("block M seifert genus=1 boundaries=0 exceptional= b=0\n");
    try {
        classify_vcs(m);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::MissingGeometryLabel);
    }
}
