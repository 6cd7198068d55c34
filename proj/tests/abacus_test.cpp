#include <gtest/gtest.h>

#include <vector>

#include "plethabacus/abacus.hpp"
#include "support/geometry.hpp"

using namespace plethabacus;

namespace {

const partition ten_strip_shape{13, 10, 10, 5, 4, 3, 1};

}  // namespace

TEST(Abacus, ValidatesBeads) {
    EXPECT_THROW(abacus(2, {0}), invalid_abacus);
    EXPECT_THROW(abacus(2, {1, 1}), invalid_abacus);
    EXPECT_THROW(abacus(1, {-1}), invalid_abacus);
    EXPECT_THROW(abacus(-1, {}), invalid_abacus);
    EXPECT_EQ(abacus(3, {5, 0, 2}).beads(), (std::vector<int>{0, 2, 5}));
}

TEST(Abacus, TenStripShapeBetaNumbers) {
    const auto a = normalized_abacus(ten_strip_shape);
    EXPECT_EQ(a.bead_count(), 7);
    EXPECT_EQ(a.beads(), (std::vector<int>{1, 4, 6, 8, 14, 15, 19}));
    EXPECT_EQ(a.max_position(), 19);
    EXPECT_EQ(a.row_of(15), 2);
    EXPECT_EQ(a.beads_between(5, 15), 3);
}

TEST(Abacus, EmptyPartition) {
    EXPECT_EQ(normalized_abacus({}).bead_count(), 0);
    EXPECT_EQ(normalized_abacus({}).max_position(), -1);
    EXPECT_EQ(abacus_for({}, 3).beads(), (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(partition_of(abacus(3, {0, 1, 2})), partition{});
}

TEST(Abacus, ExtraBeadsShiftPositions) {
    const auto a = abacus_for({2, 1}, 4);
    EXPECT_EQ(a.beads(), (std::vector<int>{0, 1, 3, 5}));
    EXPECT_EQ(with_bead_count(normalized_abacus({2, 1}), 4), a);
    EXPECT_THROW(abacus_for({2, 1, 1}, 2), bead_count_too_small);
}

TEST(Abacus, RoundTripsThroughPartition) {
    for (const auto& lambda : geometry::partitions_up_to(10))
        for (int extra = 0; extra < 3; ++extra)
            EXPECT_EQ(partition_of(abacus_for(lambda, static_cast<int>(lambda.length()) + extra)), lambda);
}

TEST(Abacus, SwapBeadTenStripShape) {
    const auto a = normalized_abacus(ten_strip_shape);
    EXPECT_EQ(partition_of(swap_bead(a, 15, 10)), (partition{13, 9, 4, 3, 3, 3, 1}));
    EXPECT_EQ(strip_height(a, 15, 10), 3);
}

TEST(Abacus, SwapBeadRejectsBlockedMoves) {
    const auto a = normalized_abacus(ten_strip_shape);
    EXPECT_THROW(swap_bead(a, 16, 2), not_movable);   // no bead
    EXPECT_THROW(swap_bead(a, 15, 1), not_movable);   // 14 holds a bead
    EXPECT_THROW(swap_bead(a, 4, 5), not_movable);    // below position 0
    EXPECT_THROW(strip_height(a, 19, 5), not_movable);
}

TEST(Abacus, MovableBeads) {
    const auto a = normalized_abacus(ten_strip_shape);
    EXPECT_EQ(movable_beads(a, 2), (std::vector<int>{4, 14, 15, 19}));
    for (int beta : movable_beads(a, 2)) {
        EXPECT_TRUE(a.has_bead(beta));
        EXPECT_FALSE(a.has_bead(beta - 2));
    }
}

TEST(Runners, PositionsAndBeads) {
    const auto a = normalized_abacus(ten_strip_shape);
    EXPECT_EQ(runner_beads(a, 2, 0), (std::vector<int>{4, 6, 8, 14}));
    EXPECT_EQ(runner_beads(a, 2, 1), (std::vector<int>{1, 15, 19}));
    EXPECT_THROW(runner_beads(a, 2, 2), bad_runner);
    EXPECT_THROW(runner_positions(a, 0, 0), bad_runner);
    const auto column = runner_positions(a, 3, 1);
    EXPECT_TRUE(column[0]);   // position 1
    EXPECT_TRUE(column[1]);   // position 4
    EXPECT_FALSE(column[2]);  // position 7
}

TEST(Runners, RenderTenStripShape) {
    const auto text = render_runners(normalized_abacus(ten_strip_shape), 2);
    EXPECT_EQ(text,
              "0 1\n"
              "o X\n"
              "o o\n"
              "X o\n"
              "X o\n"
              "X o\n"
              "o o\n"
              "o o\n"
              "X X\n"
              "o o\n"
              "o X\n");
}

TEST(Runners, RenderSingleRunner) { EXPECT_EQ(render_runners(normalized_abacus({2, 1}), 1), "0\no\nX\no\nX\n"); }

TEST(Moves, ApplyTracksBeads) {
    const auto a = normalized_abacus(ten_strip_shape);
    const std::vector<bead_move> moves{{19, 17}, {15, 13}};
    const auto result = apply_moves(a, moves);
    EXPECT_EQ(result.final.beads(), (std::vector<int>{1, 4, 6, 8, 13, 14, 17}));
    EXPECT_EQ(result.destination.at(19), 17);
    EXPECT_EQ(result.destination.at(15), 13);
    EXPECT_EQ(result.destination.at(14), 14);
}

TEST(Moves, IllegalMoveReportsIndex) {
    const auto a = normalized_abacus(ten_strip_shape);
    const std::vector<bead_move> moves{{19, 17}, {17, 15}};
    try {
        apply_moves(a, moves);
        FAIL() << "expected illegal_move";
    } catch (const illegal_move& e) {
        EXPECT_EQ(e.index, 1u);
    }
    EXPECT_THROW(apply_moves(a, std::vector<bead_move>{{3, 2}}), illegal_move);
    EXPECT_THROW(apply_moves(a, std::vector<bead_move>{{4, 5}}), illegal_move);
    EXPECT_THROW(apply_moves(a, std::vector<bead_move>{{1, -1}}), illegal_move);
}

TEST(Moves, InversionsMatchSingleStripHeight) {
    // One move from beta to beta - s jumps exactly the beads strictly between.
    for (const auto& lambda : geometry::partitions_up_to(9)) {
        const auto a = normalized_abacus(lambda);
        for (int s = 1; s <= 5; ++s) {
            for (int beta : movable_beads(a, s)) {
                const std::vector<bead_move> move{{beta, beta - s}};
                const auto inv = inversion_sign(a, move);
                EXPECT_EQ(static_cast<int>(inv.pairs.size()), strip_height(a, beta, s));
            }
        }
    }
}

TEST(Moves, EmptySequenceHasSignOne) {
    const auto inv = inversion_sign(normalized_abacus(ten_strip_shape), {});
    EXPECT_EQ(inv.sign, 1);
    EXPECT_TRUE(inv.pairs.empty());
}
