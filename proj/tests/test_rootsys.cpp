#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "cyclotype/error.hpp"
#include "cyclotype/rootsys.hpp"

using namespace cyclotype;

namespace {

// Closed-form number of roots per family.
int expected_roots(SimpleType t) {
    const int n = t.rank;
    switch (t.family) {
        case Family::A: return n * (n + 1);
        case Family::B:
        case Family::C: return 2 * n * n;
        case Family::D: return 2 * n * (n - 1);
        case Family::E6: return 72;
        case Family::E7: return 126;
        case Family::E8: return 240;
        case Family::F4: return 48;
        case Family::G2: return 12;
    }
    return -1;
}

// Coxeter number per family.
int coxeter(SimpleType t) {
    const int n = t.rank;
    switch (t.family) {
        case Family::A: return n + 1;
        case Family::B:
        case Family::C: return 2 * n;
        case Family::D: return 2 * n - 2;
        case Family::E6: return 12;
        case Family::E7: return 18;
        case Family::E8: return 30;
        case Family::F4: return 12;
        case Family::G2: return 6;
    }
    return -1;
}

std::vector<SimpleType> sample_types() {
    return {SimpleType::make(Family::A, 1), SimpleType::make(Family::A, 2), SimpleType::make(Family::A, 5),
            SimpleType::make(Family::B, 2), SimpleType::make(Family::B, 4), SimpleType::make(Family::C, 3),
            SimpleType::make(Family::C, 5), SimpleType::make(Family::D, 4), SimpleType::make(Family::D, 6),
            SimpleType::make(Family::E6, 6), SimpleType::make(Family::E7, 7), SimpleType::make(Family::E8, 8),
            SimpleType::make(Family::F4, 4), SimpleType::make(Family::G2, 2)};
}

}  // namespace

TEST(RootSystem, A2HasSixRoots) { EXPECT_EQ(build_root_system(SimpleType::parse("A2")).root_count, 6); }

TEST(RootSystem, E8) {
    auto rs = build_root_system(SimpleType::parse("E8"));
    EXPECT_EQ(rs.root_count, 240);
    EXPECT_EQ(rs.dim(), 248);
    EXPECT_EQ(rs.highest_root_coeffs, (Root{2, 3, 4, 6, 5, 4, 3, 2}));
}

TEST(RootSystem, G2HighestRoot) {
    auto rs = build_root_system(SimpleType::parse("G2"));
    EXPECT_EQ(rs.root_count, 12);
    EXPECT_EQ(rs.highest_root_coeffs, (Root{3, 2}));
}

TEST(RootSystem, CountsMatchClosedForms) {
    for (auto t : sample_types()) {
        auto rs = build_root_system(t);
        EXPECT_EQ(rs.root_count, expected_roots(t)) << t.name();
        EXPECT_EQ(rs.dim(), t.dim()) << t.name();
        EXPECT_EQ(static_cast<int>(rs.positive_roots().size()), rs.root_count / 2) << t.name();
        int h = 1 + std::accumulate(rs.highest_root_coeffs.begin(), rs.highest_root_coeffs.end(), 0);
        EXPECT_EQ(h, coxeter(t)) << t.name();
    }
}

TEST(RootSystem, RootsAreClosedUnderNegation) {
    for (auto t : sample_types()) {
        auto rs = build_root_system(t);
        std::set<Root> all(rs.roots.begin(), rs.roots.end());
        for (const auto& r : rs.roots) {
            Root neg(r.size());
            for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
            EXPECT_TRUE(all.count(neg)) << t.name();
        }
    }
}

TEST(RootSystem, InvalidTypesRejected) {
    EXPECT_THROW(SimpleType::make(Family::D, 2), DomainError);
    EXPECT_THROW(SimpleType::make(Family::B, 1), DomainError);
    EXPECT_THROW(SimpleType::make(Family::E6, 7), DomainError);
    EXPECT_THROW(SimpleType::parse("X5"), DomainError);
}

TEST(RootSystem, ParseAndName) {
    EXPECT_EQ(SimpleType::parse("A_3").name(), "A3");
    EXPECT_EQ(SimpleType::parse("E8"), SimpleType::make(Family::E8, 8));
    EXPECT_EQ(SimpleType::parse("C4").dim(), 36);
}

TEST(ExtendedDiagram, A1) {
    auto d = extended_diagram(build_root_system(SimpleType::parse("A1")));
    EXPECT_EQ(d.nodes(), 2);
    EXPECT_EQ(d.affine_marks, (std::vector<int>{1, 1}));
}

TEST(ExtendedDiagram, MarksSumToCoxeterNumber) {
    for (auto t : sample_types()) {
        if (t.family == Family::A && t.rank == 1) continue;
        auto d = extended_diagram(build_root_system(t));
        EXPECT_EQ(d.nodes(), t.rank + 1);
        EXPECT_EQ(std::accumulate(d.affine_marks.begin(), d.affine_marks.end(), 0), coxeter(t)) << t.name();
        // removing node 0 recovers the finite diagram
        std::vector<int> finite(t.rank);
        std::iota(finite.begin(), finite.end(), 1);
        EXPECT_EQ(classify_subdiagram(d.graph.induced(finite)), (std::vector<SimpleType>{t})) << t.name();
    }
}

TEST(ExtendedDiagram, E8AndG2) {
    auto e8 = extended_diagram(build_root_system(SimpleType::parse("E8")));
    EXPECT_EQ(e8.nodes(), 9);
    EXPECT_EQ(std::accumulate(e8.affine_marks.begin(), e8.affine_marks.end(), 0), 30);
    auto g2 = extended_diagram(build_root_system(SimpleType::parse("G2")));
    EXPECT_EQ(g2.nodes(), 3);
    EXPECT_EQ(std::accumulate(g2.affine_marks.begin(), g2.affine_marks.end(), 0), 6);
}

TEST(TwistedDiagram, MarkSums) {
    auto e6 = twisted_diagram(SimpleType::parse("E6"), 2);
    EXPECT_EQ(e6.nodes(), 5);
    EXPECT_EQ(std::accumulate(e6.affine_marks.begin(), e6.affine_marks.end(), 0), 9);
    auto d4 = twisted_diagram(SimpleType::parse("D4"), 3);
    EXPECT_EQ(d4.nodes(), 3);
    EXPECT_EQ(std::accumulate(d4.affine_marks.begin(), d4.affine_marks.end(), 0), 4);
    EXPECT_THROW(twisted_diagram(SimpleType::parse("F4"), 2), DomainError);
}

TEST(Subdiagram, Basics) {
    EXPECT_TRUE(classify_subdiagram(DynkinGraph::from_edges(0, {})).empty());
    EXPECT_EQ(classify_subdiagram(DynkinGraph::from_edges(2, {})),
              (std::vector<SimpleType>{SimpleType::parse("A1"), SimpleType::parse("A1")}));
}

TEST(Subdiagram, F4ExtendedZeroNodes) {
    // F4^(1) labels 0 1 0 0 0: zero nodes 0,2,3,4
    auto d = extended_diagram(build_root_system(SimpleType::parse("F4")));
    EXPECT_EQ(classify_subdiagram(d.graph.induced({0, 2, 3, 4})),
              (std::vector<SimpleType>{SimpleType::parse("A1"), SimpleType::parse("C3")}));
}

TEST(Subdiagram, RecognizesEveryFamilyFromItsCartanMatrix) {
    for (auto t : sample_types())
        EXPECT_EQ(classify_subdiagram(DynkinGraph::from_cartan(cartan_matrix(t))), (std::vector<SimpleType>{t}))
            << t.name();
}

TEST(TypeSum, ParseAndPrint) {
    auto s = parse_type_sum("A_1 ⊕ A_5");
    EXPECT_EQ(s.to_string(), "A1+A5");
    EXPECT_EQ(s.dim(), 38);
    auto t = parse_type_sum("A_2 + T_2");
    EXPECT_EQ(t.torus, 2);
    EXPECT_EQ(t.dim(), 10);
    EXPECT_EQ(parse_type_sum("T_8").to_string(), "T8");
    EXPECT_EQ(parse_type_sum("2A_1").summands.size(), 2u);
}
