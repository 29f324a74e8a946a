#include <gtest/gtest.h>

#include <set>

#include "cyclotype/classical.hpp"
#include "cyclotype/error.hpp"
#include "cyclotype/oracle.hpp"

using namespace cyclotype;

namespace {

Partition P(Flavor f, std::vector<int> parts) { return Partition::make(f, std::move(parts)); }

}  // namespace

TEST(Partition, Validation) {
    EXPECT_THROW(P(Flavor::sl, {1, 3}), DomainError);
    EXPECT_THROW(P(Flavor::so, {4, 1}), DomainError);
    EXPECT_THROW(P(Flavor::sp, {3, 1}), DomainError);
    EXPECT_THROW(P(Flavor::sp, {3}), DomainError);
    EXPECT_NO_THROW(P(Flavor::so, {4, 4, 1}));
    EXPECT_NO_THROW(P(Flavor::sp, {3, 3, 2}));
    EXPECT_EQ(Partition::parse(Flavor::so, "5,4,4,1").to_string(), "5,4,4,1");
}

TEST(Partition, EnumerationCounts) {
    // p(6) = 11, of which the zero partition is excluded
    EXPECT_EQ(all_partitions(Flavor::sl, 6).size(), 10u);
    EXPECT_EQ(all_partitions(Flavor::sl, 6, true).size(), 11u);
    // nilpotent orbits of sp_6: 8 including zero; so_7: 7 including zero
    EXPECT_EQ(all_partitions(Flavor::sp, 6, true).size(), 8u);
    EXPECT_EQ(all_partitions(Flavor::so, 7, true).size(), 7u);
}

TEST(Depth, Examples) {
    EXPECT_EQ(depth(P(Flavor::sp, {4, 2})), 6);
    EXPECT_EQ(depth(P(Flavor::so, {5, 4, 4, 1})), 7);
    EXPECT_EQ(depth(P(Flavor::so, {5, 3})), 6);
    EXPECT_EQ(depth(P(Flavor::so, {7, 1, 1, 1})), 10);
    EXPECT_EQ(depth(P(Flavor::so, {5, 5})), 8);
    EXPECT_EQ(depth(P(Flavor::sl, {3, 1})), 4);
}

TEST(Even, Examples) {
    EXPECT_TRUE(is_even(P(Flavor::so, {5, 3})));
    EXPECT_TRUE(is_even(P(Flavor::sp, {4, 2})));
    EXPECT_FALSE(is_even(P(Flavor::so, {5, 4, 4, 1})));
}

TEST(Classify, Examples) {
    auto a = classify(P(Flavor::sl, {3, 3, 1}));
    EXPECT_EQ(a.type, (CyclicType{Kind::Semisimple, true}));
    EXPECT_EQ(a.depth, 4);
    EXPECT_EQ(a.rank, 2);

    auto b = classify(P(Flavor::so, {5, 3}));
    EXPECT_EQ(b.type, (CyclicType{Kind::Semisimple, true}));
    EXPECT_EQ(b.depth, 6);
    EXPECT_EQ(b.rank, 2);

    auto c = classify(P(Flavor::sp, {4, 2}));
    EXPECT_EQ(c.type.kind, Kind::Mixed);
    EXPECT_EQ(c.depth, 6);

    auto d = classify(P(Flavor::so, {5, 4, 4, 1}));
    EXPECT_EQ(d.type.kind, Kind::Nilpotent);
    EXPECT_EQ(d.depth, 7);
    EXPECT_EQ(d.rank, 0);
}

TEST(Classify, ZeroRejected) {
    EXPECT_THROW(classify(P(Flavor::sl, {1, 1, 1})), DomainError);
    EXPECT_THROW(depth(P(Flavor::so, {1, 1, 1, 1, 1, 1, 1})), DomainError);
}

TEST(Rank, Examples) {
    EXPECT_EQ(rank(P(Flavor::sl, {3, 3, 1})), 2);
    EXPECT_EQ(rank(P(Flavor::so, {7, 1, 1, 1})), 1);
    EXPECT_EQ(rank(P(Flavor::sp, {3, 3})), 1);
}

TEST(ReducingSubalgebra, Examples) {
    EXPECT_EQ(reducing_subalgebra(P(Flavor::sl, {3, 3, 1})),
              (std::vector<ReducingFactor>{{Flavor::sl, 3}, {Flavor::sl, 3}}));
    EXPECT_EQ(reducing_subalgebra(P(Flavor::so, {5, 3})), (std::vector<ReducingFactor>{{Flavor::so, 8}}));
    EXPECT_EQ(reducing_subalgebra(P(Flavor::sp, {3, 3})), (std::vector<ReducingFactor>{{Flavor::sl, 3}}));
    EXPECT_EQ(ReducingFactor({Flavor::so, 8}).name(), "so_8");
}

TEST(Projections, Examples) {
    auto a = projections(P(Flavor::sl, {4, 2, 1}));
    EXPECT_EQ(a.es, (std::vector<int>{4}));
    EXPECT_EQ(a.en, (std::vector<int>{2, 1}));
    auto b = projections(P(Flavor::so, {5, 5, 5, 2, 2}));
    EXPECT_EQ(b.es, (std::vector<int>{5, 5}));
    EXPECT_EQ(b.en, (std::vector<int>{5, 2, 2}));
    auto c = projections(P(Flavor::so, {5, 3, 2, 2}));
    EXPECT_EQ(c.es, (std::vector<int>{5, 3}));
    EXPECT_EQ(c.en, (std::vector<int>{2, 2}));
}

TEST(Bush, So7111) {
    auto members = bush(P(Flavor::so, {7, 1, 1, 1}));
    std::set<Partition> got(members.begin(), members.end());
    EXPECT_EQ(got, (std::set<Partition>{P(Flavor::so, {7, 1, 1, 1}), P(Flavor::so, {7, 3})}));
}

TEST(Bush, SingleOneHasNoReplacement) {
    EXPECT_EQ(bush(P(Flavor::sl, {3, 1})), (std::vector<Partition>{P(Flavor::sl, {3, 1})}));
}

TEST(Bush, Sp4AgainstOracle) {
    // brute force over sp_4: same depth and rank as the head, not of nilpotent type per the oracle
    auto head = P(Flavor::sp, {2, 1, 1});
    auto hv = oracle_verdict(head, 3, 0);
    std::set<Partition> expected;
    for (const auto& q : all_partitions(Flavor::sp, 4)) {
        auto qv = oracle_verdict(q, 3, 0);
        if (qv.depth == hv.depth && rank(q) == rank(head) && qv.type.kind != Kind::Nilpotent &&
            projections(q).es == projections(head).es)
            expected.insert(q);
    }
    auto members = bush(head);
    EXPECT_EQ(std::set<Partition>(members.begin(), members.end()), expected);
}

TEST(Bush, RejectsNonSemisimpleHead) {
    EXPECT_THROW(bush(P(Flavor::sp, {4, 2})), DomainError);
    EXPECT_THROW(bush(P(Flavor::so, {5, 4, 4, 1})), DomainError);
}

TEST(NilpotentImage, Examples) {
    EXPECT_EQ(nilpotent_cyclic_jordan_type(P(Flavor::so, {5, 4, 4, 1})).parts, (std::vector<int>{13, 1}));
    EXPECT_EQ(nilpotent_cyclic_jordan_type(P(Flavor::so, {3, 2, 2})).parts, (std::vector<int>{7}));
    EXPECT_EQ(nilpotent_cyclic_jordan_type(P(Flavor::so, {3, 2, 2, 2, 2})).parts, (std::vector<int>{7, 2, 2}));
    EXPECT_THROW(nilpotent_cyclic_jordan_type(P(Flavor::so, {5, 3})), DomainError);
}

TEST(ClassicalType, SmallCoincidences) {
    EXPECT_EQ(classical_type(Flavor::so, 6), SimpleType::parse("A3"));
    EXPECT_EQ(classical_type(Flavor::sp, 2), SimpleType::parse("A1"));
    EXPECT_EQ(classical_type(Flavor::so, 9), SimpleType::parse("B4"));
    EXPECT_EQ(classical_type(Flavor::so, 10), SimpleType::parse("D5"));
    EXPECT_EQ(classical_dim(Flavor::sp, 6), 21);
    EXPECT_EQ(classical_dim(Flavor::so, 7), 21);
    EXPECT_EQ(classical_dim(Flavor::sl, 4), 15);
}
