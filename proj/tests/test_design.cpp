#include <gtest/gtest.h>

#include <numeric>

#include "ccc/design.hpp"
#include "ccc/design_constructions.hpp"
#include "ccc/design_existence.hpp"
#include "ccc/design_io.hpp"
#include "oracles.hpp"

using namespace ccc;

namespace {

SetSystem fano() {
    return SetSystem{7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}};
}

GroupDivisibleDesign single_block_filler(int points) {
    Block all(static_cast<std::size_t>(points));
    std::iota(all.begin(), all.end(), 0);
    return GroupDivisibleDesign::from_pbd(SetSystem{points, {all}});
}

/// The {4}-GDD of type 3^5 from AG(2,4) minus a point, built test-side.
GroupDivisibleDesign gdd_3_to_5() {
    SetSystem ag{16, oracle::affine_plane_gf4()};
    return delete_point(ag, 0);
}

}  // namespace

TEST(VerifyPbd, Fano) {
    EXPECT_TRUE(verify_pbd(fano()).ok());
    SetSystem broken = fano();
    broken.blocks.pop_back();
    auto r = verify_pbd(broken);
    EXPECT_EQ(r.count(ViolationKind::uncovered_pair), 3U);
    EXPECT_EQ(r.violations.size(), 3U);

    SetSystem repeated = fano();
    repeated.blocks.push_back({0, 1, 3});
    EXPECT_GE(verify_pbd(repeated).count(ViolationKind::repeated_pair), 1U);

    SetSystem unsorted{3, {{1, 0, 2}}};
    EXPECT_EQ(verify_pbd(unsorted).count(ViolationKind::block_order), 1U);
    SetSystem out_of_range{3, {{0, 1, 3}}};
    EXPECT_EQ(verify_pbd(out_of_range).count(ViolationKind::point_range), 1U);
}

TEST(VerifyGdd, Violations) {
    auto td = transversal_design(4, 3);
    EXPECT_TRUE(verify_gdd(td).ok());
    EXPECT_TRUE(verify_gdd(GroupDivisibleDesign::from_pbd(fano())).ok());

    auto bad = td;
    bad.base.blocks.push_back({0, 1});
    EXPECT_GE(verify_gdd(bad).count(ViolationKind::block_meets_group), 1U);

    auto missing = td;
    missing.groups.pop_back();
    EXPECT_GE(verify_gdd(missing).count(ViolationKind::group_partition), 1U);
}

TEST(GddType, Rendering) {
    EXPECT_EQ(gdd_type(transversal_design(4, 3)).to_string(), "3^4");
    EXPECT_EQ(gdd_type(GroupDivisibleDesign::from_pbd(fano())).to_string(), "1^7");
    GddType mixed{{{9, 1}, {1, 28}}};
    EXPECT_EQ(mixed.to_string(), "1^28 9^1");
    EXPECT_EQ(mixed.point_count(), 37);
}

TEST(TransversalDesign, AllSmallPrimes) {
    for (int p : {2, 3, 5, 7, 11, 13}) {
        for (int k = 2; k <= p; ++k) {
            auto td = transversal_design(k, p);
            ASSERT_TRUE(verify_gdd(td).ok()) << k << "," << p;
            ASSERT_TRUE(oracle::is_gdd(td.point_count(), td.groups, td.blocks())) << k << "," << p;
            EXPECT_EQ(td.blocks().size(), static_cast<std::size_t>(p * p));
            EXPECT_EQ(gdd_type(td).to_string(), std::to_string(p) + "^" + std::to_string(k));
        }
    }
    auto td32 = transversal_design(3, 2);
    EXPECT_EQ(td32.point_count(), 6);
    EXPECT_EQ(td32.blocks().size(), 4U);
    EXPECT_TRUE(verify_gdd(td32).ok());
    auto td55 = transversal_design(5, 5);
    EXPECT_EQ(td55.blocks().size(), 25U);
    EXPECT_THROW(transversal_design(4, 4), std::invalid_argument);
    EXPECT_THROW(transversal_design(5, 3), std::invalid_argument);
}

TEST(Planes, Affine) {
    for (int p : {2, 3, 5, 7}) {
        auto plane = affine_plane(p);
        EXPECT_TRUE(verify_pbd(plane).ok());
        EXPECT_TRUE(oracle::is_pbd(plane.point_count, plane.blocks));
        EXPECT_EQ(plane.blocks.size(), static_cast<std::size_t>(p * p + p));
    }
    EXPECT_EQ(affine_plane(2).blocks.size(), 6U);
    EXPECT_THROW(affine_plane(4), std::invalid_argument);
}

TEST(Planes, Projective) {
    for (int p : {2, 3, 5, 7}) {
        auto plane = projective_plane(p);
        EXPECT_TRUE(verify_pbd(plane).ok());
        EXPECT_TRUE(oracle::is_pbd(plane.point_count, plane.blocks));
        EXPECT_EQ(plane.blocks.size(), static_cast<std::size_t>(p * p + p + 1));
    }
}

TEST(BlockCensus, Identities) {
    auto census = block_census(affine_plane(5));
    EXPECT_EQ(census[5], 30);
    EXPECT_EQ(census.covered_pairs, 300);
    EXPECT_EQ(block_census(fano())[3], 7);

    auto g = gdd_3_to_5();
    auto gc = block_census(g);
    EXPECT_EQ(gc[4], 15);
    EXPECT_EQ(gc.required_pairs, 15 * 14 / 2 - 5 * 3);

    SetSystem broken = fano();
    broken.blocks.pop_back();
    EXPECT_THROW(block_census(broken), design_error);
}

TEST(PbdFromGdd, Examples) {
    auto pbd = pbd_from_gdd(transversal_design(4, 3));
    EXPECT_EQ(pbd.blocks.size(), 13U);
    EXPECT_TRUE(verify_pbd(pbd).ok());
    EXPECT_EQ(pbd_from_gdd(GroupDivisibleDesign::from_pbd(fano())), fano().canonicalize());
}

TEST(DeletePoint, Examples) {
    auto g = delete_point(projective_plane(3), 5);
    EXPECT_TRUE(verify_gdd(g).ok());
    EXPECT_EQ(gdd_type(g).to_string(), "3^4");

    auto a = delete_point(affine_plane(5), 0);
    EXPECT_TRUE(verify_gdd(a).ok());
    EXPECT_EQ(gdd_type(a).to_string(), "4^6");

    auto f = delete_point(fano(), 3);
    EXPECT_TRUE(verify_gdd(f).ok());
    EXPECT_EQ(gdd_type(f).to_string(), "2^3");

    auto g35 = gdd_3_to_5();
    EXPECT_TRUE(verify_gdd(g35).ok());
    EXPECT_EQ(gdd_type(g35).to_string(), "3^5");

    EXPECT_THROW(delete_point(fano(), 7), std::out_of_range);
    EXPECT_THROW(delete_point(transversal_design(3, 3), 0), design_error);
}

TEST(DeletePoint, ProjectivePlanesGiveTwoBlockSizes) {
    for (int p : {2, 3, 5, 7}) {
        auto g = delete_point(projective_plane(p), 0);
        auto pbd = pbd_from_gdd(g);
        EXPECT_EQ(pbd.point_count, p * p + p);
        EXPECT_TRUE(verify_pbd(pbd).ok());
        std::set<std::size_t> sizes;
        for (const auto& b : pbd.blocks) sizes.insert(b.size());
        EXPECT_EQ(sizes, (std::set<std::size_t>{static_cast<std::size_t>(p), static_cast<std::size_t>(p + 1)}));
    }
}

TEST(DeletePoint, FromGddSingletonGroup) {
    auto g = GroupDivisibleDesign::from_pbd(projective_plane(3));
    auto out = delete_point(g, 0);
    EXPECT_EQ(gdd_type(out).to_string(), "3^4");
}

TEST(Wfc, InflateTd32ByThree) {
    auto master = transversal_design(3, 2);
    std::map<std::size_t, GroupDivisibleDesign> ingredients;
    for (std::size_t b = 0; b < master.blocks().size(); ++b) ingredients.emplace(b, transversal_design(3, 3));
    auto out = wfc(master, WeightFunction(6, 3), ingredients);
    EXPECT_TRUE(verify_gdd(out).ok());
    EXPECT_TRUE(oracle::is_gdd(out.point_count(), out.groups, out.blocks()));
    EXPECT_EQ(gdd_type(out).to_string(), "6^3");
    EXPECT_EQ(out.blocks().size(), 36U);
}

TEST(Wfc, InflateTd33ByTwo) {
    auto master = transversal_design(3, 3);
    std::map<std::size_t, GroupDivisibleDesign> ingredients;
    for (std::size_t b = 0; b < master.blocks().size(); ++b) ingredients.emplace(b, transversal_design(3, 2));
    auto out = wfc(master, WeightFunction(9, 2), ingredients);
    EXPECT_TRUE(verify_gdd(out).ok());
    EXPECT_EQ(gdd_type(out).to_string(), "6^3");
    EXPECT_EQ(out.blocks().size(), 9U * 4U);
}

TEST(Wfc, UnitWeightIsIdentity) {
    auto master = transversal_design(3, 3);
    std::map<std::size_t, GroupDivisibleDesign> ingredients;
    for (std::size_t b = 0; b < master.blocks().size(); ++b) ingredients.emplace(b, single_block_filler(3));
    auto out = wfc(master, WeightFunction(9, 1), ingredients);
    EXPECT_EQ(out, master);
}

TEST(Wfc, RejectsWrongIngredient) {
    auto master = transversal_design(3, 2);
    std::map<std::size_t, GroupDivisibleDesign> ingredients;
    for (std::size_t b = 0; b < master.blocks().size(); ++b) ingredients.emplace(b, transversal_design(3, 2));
    EXPECT_THROW(wfc(master, WeightFunction(6, 3), ingredients), construction_error);
    ingredients.erase(0);
    EXPECT_THROW(wfc(master, WeightFunction(6, 2), ingredients), construction_error);
}

TEST(AdjoinAndFill, Td43PlusOnePoint) {
    auto td = transversal_design(4, 3);
    std::map<std::size_t, Filler> fillers;
    for (std::size_t g = 0; g < 4; ++g) fillers.emplace(g, single_block_filler(4));
    auto out = adjoin_and_fill(td, 1, fillers);
    EXPECT_TRUE(out.all_groups_singletons());
    EXPECT_TRUE(verify_pbd(out.base).ok());
    EXPECT_EQ(out.point_count(), 13);
    EXPECT_TRUE(oracle::is_pbd(13, out.blocks()));
}

TEST(AdjoinAndFill, NoIdealPointsMatchesPbdFromGdd) {
    auto td = transversal_design(4, 3);
    std::map<std::size_t, Filler> fillers;
    for (std::size_t g = 0; g < 4; ++g) fillers.emplace(g, single_block_filler(3));
    auto out = adjoin_and_fill(td, 0, fillers);
    EXPECT_EQ(out.base, pbd_from_gdd(td));
}

TEST(AdjoinAndFill, Gdd63PlusOnePointWithFano) {
    auto master = transversal_design(3, 2);
    std::map<std::size_t, GroupDivisibleDesign> ingredients;
    for (std::size_t b = 0; b < master.blocks().size(); ++b) ingredients.emplace(b, transversal_design(3, 3));
    auto g63 = wfc(master, WeightFunction(6, 3), ingredients);
    std::map<std::size_t, Filler> fillers;
    for (std::size_t g = 0; g < 3; ++g) fillers.emplace(g, GroupDivisibleDesign::from_pbd(fano()));
    auto out = adjoin_and_fill(g63, 1, fillers);
    EXPECT_TRUE(out.all_groups_singletons());
    EXPECT_TRUE(verify_pbd(out.base).ok());
    EXPECT_EQ(out.point_count(), 19);
}

TEST(AdjoinAndFill, AlignMarker) {
    // Three ideal points join the last group; the others are filled by the
    // complete bipartite graph between the group and the ideal points.
    auto td = transversal_design(4, 3);
    GroupDivisibleDesign k33;
    k33.base.point_count = 6;
    k33.groups = {{0, 1, 2}, {3, 4, 5}};
    for (int a = 0; a < 3; ++a) {
        for (int b = 3; b < 6; ++b) k33.base.blocks.push_back({a, b});
    }
    std::map<std::size_t, Filler> fillers{{0, k33}, {1, k33}, {2, k33}, {3, AlignIdeal{}}};
    auto out = adjoin_and_fill(td, 3, fillers);
    EXPECT_TRUE(verify_gdd(out).ok());
    EXPECT_EQ(gdd_type(out).to_string(), "3^3 6^1");

    std::map<std::size_t, Filler> twice{{0, AlignIdeal{}}, {1, AlignIdeal{}}};
    EXPECT_THROW(adjoin_and_fill(td, 3, twice), construction_error);
    std::map<std::size_t, Filler> wrong{{0, single_block_filler(5)}};
    EXPECT_THROW(adjoin_and_fill(td, 1, wrong), construction_error);
}

TEST(Existence, Gdd4) {
    EXPECT_TRUE(gdd4_g4m1_admissible(9, 12));
    EXPECT_TRUE(gdd4_g4m1_admissible(36, 15));
    EXPECT_FALSE(gdd4_g4m1_admissible(3, 6));
    EXPECT_TRUE(gdd4_g4m1_admissible(3, 3));
    EXPECT_FALSE(gdd4_g4m1_admissible(4, 3));
}

TEST(Existence, Gdd5Examples) {
    EXPECT_EQ(gdd5_gu_admissible(3, 21), Existence::exists);
    EXPECT_EQ(gdd5_gu_admissible(3, 5), Existence::does_not_exist);
    EXPECT_EQ(gdd5_gu_admissible(2, 15), Existence::unknown);
    EXPECT_EQ(gdd5_gu_admissible(2, 11), Existence::does_not_exist);
    EXPECT_EQ(gdd5_gu_admissible(6, 5), Existence::does_not_exist);
    EXPECT_EQ(gdd5_gu_admissible(1, 21), Existence::exists);
    EXPECT_EQ(gdd5_gu_admissible(20, 5), Existence::exists);
    EXPECT_EQ(gdd5_gu_admissible(10, 7), Existence::unknown);
}

// Soundness: never "exists" when the tabulated congruence fails.
TEST(Existence, Gdd5NeverExistsOutsideTable) {
    auto table = [](int g, int u) {
        int r = g % 20;
        if (r == 0) return u >= 5;
        if (r % 2 == 1 && r != 5 && r != 15) return u % 20 == 1 || u % 20 == 5;
        if (r == 2 || r == 6 || r == 14 || r == 18) return u % 10 == 1 || u % 10 == 5;
        if (r == 4 || r == 8 || r == 12 || r == 16) return u % 5 == 0 || u % 5 == 1;
        if (r == 5 || r == 15) return u % 4 == 1;
        return u % 2 == 1 && u >= 5;  // r == 10
    };
    for (int g = 1; g <= 40; ++g) {
        for (int u = 1; u <= 250; ++u) {
            auto e = gdd5_gu_admissible(g, u);
            if (!table(g, u)) {
                ASSERT_EQ(e, Existence::does_not_exist) << g << "^" << u;
            }
            // Pair counting: blocks of size 5 must cover g^2 u(u-1)/2 pairs.
            if (e == Existence::exists && u >= 2) {
                std::int64_t pairs = static_cast<std::int64_t>(g) * g * u * (u - 1) / 2;
                ASSERT_EQ(pairs % 10, 0) << g << "^" << u;
            }
        }
    }
}

TEST(Existence, ExceptionTables) {
    auto t4 = pbd_8910_exceptions();
    EXPECT_TRUE(t4.count(11));
    EXPECT_TRUE(t4.count(580));
    EXPECT_TRUE(t4.count(581));
    EXPECT_TRUE(t4.count(582));
    EXPECT_FALSE(t4.count(57));
    EXPECT_FALSE(t4.count(64));
    EXPECT_FALSE(t4.count(110));
    EXPECT_EQ(pbd_4789_exceptions().size(), 44U);
    EXPECT_EQ(quaternary_distance3_open_lengths(), (std::set<int>{44, 47, 51, 54, 59, 62, 158, 167, 173}));
    // Every open length is missed by both closures.
    std::set<int> both;
    for (int n : pbd_4789_exceptions()) {
        if (t4.count(n) || n < 8) both.insert(n);
    }
    for (int n : quaternary_distance3_open_lengths()) EXPECT_TRUE(both.count(n)) << n;
}

TEST(DesignFile, RoundTripAndErrors) {
    auto td = transversal_design(3, 2);
    std::string text = design_to_string(td);
    auto doc = parse_design(text);
    EXPECT_TRUE(doc.groups_present);
    EXPECT_EQ(doc.design, td);

    auto pbd = parse_design(design_to_string(fano()));
    EXPECT_FALSE(pbd.groups_present);
    EXPECT_TRUE(pbd.design.all_groups_singletons());
    EXPECT_EQ(pbd.design.base, fano().canonicalize());

    EXPECT_THROW(parse_design("{\"points\": 3}"), format_error);
    EXPECT_THROW(parse_design("{\"points\": 3, \"blocks\": [[0,1]], \"extra\": 1}"), format_error);
    EXPECT_THROW(parse_design("{\"points\": 3, \"blocks\": [[0,\"a\"]]}"), format_error);
    EXPECT_THROW(parse_design("not json"), format_error);
    EXPECT_THROW(parse_design("[1,2]"), format_error);
}
