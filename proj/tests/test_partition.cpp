#include <gtest/gtest.h>

#include "error_matchers.hpp"
#include "semideg/partition.hpp"
#include "test_graphs.hpp"

namespace semideg {
namespace {

using testing::raises;

FourPartition sample() {
  return FourPartition::from_classes(8, {{{0, 4}, {1, 5, 6}, {2}, {3, 7}}}, 0.01);
}

TEST(FourPartition, ClassArithmeticWrapsAround) {
  EXPECT_EQ(next_class(3), 0);
  EXPECT_EQ(prev_class(0), 3);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(prev_class(next_class(i)), i);
}

TEST(FourPartition, MembersSetsAndImbalance) {
  const auto p = sample();
  EXPECT_EQ(p.order(), 8u);
  EXPECT_EQ(p.members(1), (std::vector<Vertex>{1, 5, 6}));
  EXPECT_EQ(p.set(3).to_vector(), (std::vector<Vertex>{3, 7}));
  EXPECT_EQ(p.class_of(6), 1);
  EXPECT_EQ(p.class_of(8), -1);
  EXPECT_EQ(p.imbalance(), 1);
  EXPECT_DOUBLE_EQ(p.mu(), 0.01);
}

TEST(FourPartition, RejectsOverlapGapsAndRange) {
  EXPECT_TRUE(raises(ErrorCode::kBadPartition,
                     [] { FourPartition::from_classes(3, {{{0}, {0}, {1}, {2}}}, 0.1); }));
  EXPECT_TRUE(raises(ErrorCode::kBadPartition,
                     [] { FourPartition::from_classes(3, {{{0}, {}, {1}, {}}}, 0.1); }));
  EXPECT_TRUE(raises(ErrorCode::kOutOfRange,
                     [] { FourPartition::from_classes(2, {{{0}, {1}, {2}, {}}}, 0.1); }));
  const std::vector<int> bad{0, 4};
  EXPECT_TRUE(raises(ErrorCode::kBadPartition, [&] { FourPartition::from_assignment(bad, 0.1); }));
}

TEST(FourPartition, MoveKeepsEverythingElse) {
  const auto p = sample();
  const auto q = p.with_move(5, 3);
  EXPECT_EQ(q.members(1), (std::vector<Vertex>{1, 6}));
  EXPECT_EQ(q.members(3), (std::vector<Vertex>{3, 5, 7}));
  EXPECT_EQ(q.imbalance(), -1);
  EXPECT_EQ(p.class_of(5), 1);
  EXPECT_TRUE(raises(ErrorCode::kVertexNotInPartition, [&] { p.with_move(8, 0); }));
}

TEST(FourPartition, RotationShiftsClassNames) {
  const auto p = sample();
  const auto r = p.rotated(1);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(r.members(i), p.members(next_class(i)));
  for (int shift = 0; shift < 8; ++shift) {
    const auto a = p.rotated(shift).rotated(4 - shift % 4);
    EXPECT_EQ(a.assignment(), p.assignment());
  }
}

TEST(PartitionJson, RoundTrip) {
  const auto p = sample();
  const std::string text = serialize_partition(p);
  EXPECT_EQ(text, R"({"classes":[[0,4],[1,5,6],[2],[3,7]],"mu":0.01})");
  const auto q = parse_partition(text, 8);
  EXPECT_EQ(q.assignment(), p.assignment());
  EXPECT_DOUBLE_EQ(q.mu(), 0.01);
}

TEST(PartitionJson, Errors) {
  EXPECT_TRUE(raises(ErrorCode::kParseError, [] { parse_partition("{", 1); }));
  EXPECT_TRUE(raises(ErrorCode::kParseError, [] { parse_partition(R"({"classes":[[0]]})", 1); }));
  EXPECT_TRUE(raises(ErrorCode::kParseError,
                     [] { parse_partition(R"({"classes":[["a"],[],[],[]]})", 1); }));
  EXPECT_TRUE(raises(ErrorCode::kBadPartition,
                     [] { parse_partition(R"({"classes":[[0],[],[],[]]})", 2); }));
}

}  // namespace
}  // namespace semideg
