#include "properties.hpp"

#include <gtest/gtest.h>

namespace {

constexpr std::uint64_t kSeed = 20260;
constexpr std::size_t kInstances = 200;

const std::vector<oracle::Mat>& instances() {
    static const auto v = oracle::random_instances(kInstances, kSeed);
    return v;
}

void expect_none(const props::Violations& v) {
    for (const auto& s : v) ADD_FAILURE() << s;
}

TEST(RandomConfigurations, AreSeededAndWellFormed) {
    auto again = oracle::random_instances(kInstances, kSeed);
    EXPECT_EQ(again, instances());
    std::size_t graded = 0;
    for (const auto& m : instances()) {
        auto a = oracle::to_config(m);
        EXPECT_TRUE(a.is_pointed());
        EXPECT_LE(a.dim(), 3u);
        EXPECT_LE(a.size(), 6u);
        graded += toric::grading(a).has_value();
    }
    EXPECT_GE(graded, kInstances / 2);
}

TEST(RandomConfigurations, CircuitsInsideUniversalInsideGraver) {
    for (const auto& m : instances()) expect_none(props::toric_sets(m));
}

TEST(RandomConfigurations, EliminationOracleGivesSameIdeal) {
    for (const auto& m : instances()) expect_none(props::elimination_oracle(m));
}

TEST(RandomConfigurations, VolumeIsScaledLeadingHilbertCoefficient) {
    for (const auto& m : instances()) expect_none(props::volume_and_hilbert(m));
}

TEST(RandomConfigurations, SquarefreeInitialIdealIffUnimodularTriangulation) {
    std::mt19937_64 rng(kSeed + 1);
    std::size_t compared = 0, squarefree = 0;
    for (const auto& m : instances()) expect_none(props::squarefree_vs_triangulation(m, rng, compared, squarefree));
    // both outcomes must actually occur
    EXPECT_GT(compared, 150u);
    EXPECT_GT(squarefree, 10u);
    EXPECT_LT(squarefree, compared - 10);
}

TEST(RandomConfigurations, UnimodularImpliesHereditaryImpliesNormal) {
    std::mt19937_64 rng(kSeed + 2);
    std::size_t unimodular = 0;
    for (const auto& m : instances()) {
        expect_none(props::unimodular_chain(m, rng));
        unimodular += toric::is_unimodular(oracle::to_config(m)).unimodular;
    }
    EXPECT_GT(unimodular, 10u);
    EXPECT_LT(unimodular, kInstances - 10);
}

TEST(RandomConfigurations, GraverMatchesCompletionProcedure) {
    std::size_t checked = 0;
    for (const auto& m : instances()) {
        bool c = false;
        expect_none(props::graver_oracle(m, c));
        checked += c;
    }
    EXPECT_GT(checked, 50u);
}

TEST(RandomConfigurations, CircuitsCutOutTheToricVariety) {
    std::size_t inconclusive = 0, used = 0;
    for (const auto& m : instances()) {
        auto a = oracle::to_config(m);
        if (!toric::grading(a) || toric::kernel_lattice(a).rank() == 0) continue;
        expect_none(props::circuits_cut_out(m, 6, inconclusive));
        if (++used == 10) break;
    }
    EXPECT_EQ(used, 10u);
    EXPECT_EQ(inconclusive, 0u);
}

}  // namespace
