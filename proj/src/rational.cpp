#include "cyclotype/rational.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace cyclotype {

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    QMatrix r(*this);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    QMatrix r(*this);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
    return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Q& x = (*this)(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (sgn(o(k, j)) != 0) r(i, j) += x * o(k, j);
        }
    return r;
}

QMatrix QMatrix::scaled(const Q& c) const {
    QMatrix r(*this);
    for (auto& x : r.a_) x *= c;
    return r;
}

QMatrix QMatrix::transpose() const {
    QMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool QMatrix::is_zero() const {
    for (const auto& x : a_)
        if (sgn(x) != 0) return false;
    return true;
}

bool QMatrix::operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::string QMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
        os << '\n';
    }
    return os.str();
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Q inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            Q f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(QMatrix m) { return rref(m).size(); }

std::vector<std::vector<Q>> kernel(QMatrix m) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Q>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Q> v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

void trim(Poly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const Poly& p) {
    Poly q(p);
    trim(q);
    return static_cast<int>(q.size()) - 1;
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
    trim(d);
    return d;
}

namespace {

// a = q*b + r
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    Poly bb(b);
    trim(bb);
    if (bb.empty()) throw std::domain_error("polynomial division by zero");
    r = a;
    trim(r);
    q.assign(r.size() >= bb.size() ? r.size() - bb.size() + 1 : 0, Q(0));
    while (!r.empty() && r.size() >= bb.size()) {
        std::size_t shift = r.size() - bb.size();
        Q c = r.back() / bb.back();
        q[shift] = c;
        for (std::size_t k = 0; k < bb.size(); ++k) r[shift + k] -= c * bb[k];
        trim(r);
    }
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly q, r;
        poly_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Q lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
    Poly q, r;
    poly_divmod(a, b, q, r);
    if (!r.empty()) throw std::logic_error("inexact polynomial division");
    return q;
}

Poly charpoly(const QMatrix& a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("charpoly needs a square matrix");
    if (n == 0) return Poly{Q(1)};
    // v holds det(xI - A_r) with the leading coefficient first
    std::vector<Q> v{Q(1), Q(-a(0, 0))};
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<Q> t(r + 2);
        t[0] = 1;
        t[1] = -a(r, r);
        std::vector<Q> x(r);
        for (std::size_t i = 0; i < r; ++i) x[i] = a(i, r);
        for (std::size_t k = 2; k <= r + 1; ++k) {
            Q s = 0;
            for (std::size_t j = 0; j < r; ++j) s += a(r, j) * x[j];
            t[k] = -s;
            std::vector<Q> y(r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) y[i] += a(i, j) * x[j];
            x = std::move(y);
        }
        std::vector<Q> w(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j) w[i] += t[i - j] * v[j];
        v = std::move(w);
    }
    return Poly(v.rbegin(), v.rend());
}

QMatrix evaluate(const Poly& p, const QMatrix& m) {
    const std::size_t n = m.rows();
    QMatrix acc(n, n);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * m + QMatrix::identity(n).scaled(*it);
    return acc;
}

}  // namespace cyclotype
