#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace cyclotype {

using Q = mpq_class;

/// Dense matrix over the rationals, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Q& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Q& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix scaled(const Q& c) const;
    QMatrix transpose() const;

    bool is_zero() const;
    bool operator==(const QMatrix& o) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Q> a_;
};

/// [A, B] = AB - BA
QMatrix commutator(const QMatrix& a, const QMatrix& b);

std::size_t rank(QMatrix m);

/// Basis of the right null space {x : m x = 0}.
std::vector<std::vector<Q>> kernel(QMatrix m);

/// Polynomial with rational coefficients, lowest degree first.
using Poly = std::vector<Q>;

void trim(Poly& p);
int degree(const Poly& p);
Poly derivative(const Poly& p);
Poly poly_gcd(Poly a, Poly b);
/// Exact quotient; throws if the division leaves a remainder.
Poly poly_div_exact(const Poly& a, const Poly& b);

/// det(xI - m), computed with the division-free Berkowitz recursion.
Poly charpoly(const QMatrix& m);

/// p(m) by Horner's scheme.
QMatrix evaluate(const Poly& p, const QMatrix& m);

}  // namespace cyclotype
