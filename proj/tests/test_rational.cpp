#include <gtest/gtest.h>

#include "cyclotype/rational.hpp"

using namespace cyclotype;

namespace {

QMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    QMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

// Naive Laplace expansion, used as an independent determinant.
Q det(const QMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Q total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        QMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, k = 0; j < n; ++j)
                if (j != c) minor(i - 1, k++) = m(i, j);
        Q term = m(0, c) * det(minor);
        total += c % 2 ? Q(-term) : term;
    }
    return total;
}

}  // namespace

TEST(Rational, IdentityAndProduct) {
    auto a = from_rows({{1, 2}, {3, 4}});
    EXPECT_EQ(a * QMatrix::identity(2), a);
    EXPECT_EQ(a * a, from_rows({{7, 10}, {15, 22}}));
    EXPECT_EQ(a.transpose(), from_rows({{1, 3}, {2, 4}}));
    EXPECT_TRUE((a - a).is_zero());
}

TEST(Rational, CommutatorOfSl2Triple) {
    auto e = from_rows({{0, 1}, {0, 0}});
    auto f = from_rows({{0, 0}, {1, 0}});
    auto h = from_rows({{1, 0}, {0, -1}});
    EXPECT_EQ(commutator(e, f), h);
    EXPECT_EQ(commutator(h, e), e.scaled(2));
    EXPECT_EQ(commutator(h, f), f.scaled(-2));
}

TEST(Rational, RankAndKernel) {
    auto m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    EXPECT_EQ(rank(m), 2u);
    auto ker = kernel(m);
    ASSERT_EQ(ker.size(), 1u);
    for (std::size_t i = 0; i < 3; ++i) {
        Q s = 0;
        for (std::size_t j = 0; j < 3; ++j) s += m(i, j) * ker[0][j];
        EXPECT_EQ(s, 0);
    }
    EXPECT_EQ(rank(QMatrix::identity(4)), 4u);
    EXPECT_TRUE(kernel(QMatrix::identity(4)).empty());
}

TEST(Rational, ExactFractions) {
    QMatrix m(2, 2);
    m(0, 0) = Q(1, 3);
    m(0, 1) = Q(1, 6);
    m(1, 0) = Q(2, 3);
    m(1, 1) = Q(1, 3);
    EXPECT_EQ(rank(m), 1u);
}

TEST(Rational, CharpolyMatchesDeterminant) {
    auto m = from_rows({{2, -1, 0, 3}, {1, 0, 5, -2}, {0, 4, 1, 1}, {7, 0, -3, 2}});
    auto c = charpoly(m);
    ASSERT_EQ(degree(c), 4);
    EXPECT_EQ(c[4], 1);
    // c(0) = det(-M) = det(M) for even size
    EXPECT_EQ(c[0], det(m));
    // c(1) = det(I - M)
    Q at1 = 0;
    for (const auto& x : c) at1 += x;
    EXPECT_EQ(at1, det(QMatrix::identity(4) - m));
}

TEST(Rational, CayleyHamilton) {
    auto m = from_rows({{0, 1, 2}, {3, -1, 0}, {1, 1, 1}});
    EXPECT_TRUE(evaluate(charpoly(m), m).is_zero());
}

TEST(Rational, PolyGcdAndDivision) {
    // (x-1)^2 (x+2) and its derivative share (x-1)
    Poly p{Q(2), Q(-3), Q(0), Q(1)};
    auto g = poly_gcd(p, derivative(p));
    EXPECT_EQ(g, (Poly{Q(-1), Q(1)}));
    EXPECT_EQ(poly_div_exact(p, g), (Poly{Q(-2), Q(1), Q(1)}));
}
