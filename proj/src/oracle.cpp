#include "cyclotype/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

#include "cyclotype/error.hpp"

namespace cyclotype {

namespace {

struct Block {
    int start = 0;
    int size = 0;
    /// Two Jordan chains of length size/2 on dual isotropic halves.
    bool paired = false;
};

// Block-diagonal anti-diagonal form. Within a block of size k the entry in row i is +1,
// except for sp where rows in the second half carry -1.
QMatrix build_form(Flavor f, int n, const std::vector<Block>& blocks) {
    QMatrix j(n, n);
    for (const auto& b : blocks)
        for (int i = 0; i < b.size; ++i) {
            int sign = (f == Flavor::sp && i >= b.size / 2) ? -1 : 1;
            j(b.start + i, b.start + b.size - 1 - i) = sign;
        }
    return j;
}

// -J^{-1} X^T J, the involution whose fixed points form g
QMatrix involution(const QMatrix& j, const QMatrix& jinv, const QMatrix& x) {
    return (jinv * x.transpose() * j).scaled(-1);
}

}  // namespace

MatrixRealization realize(const Partition& p) {
    CYCLOTYPE_REQUIRE(admissible(p.flavor, p.parts), "inadmissible partition " + p.to_string());
    MatrixRealization r;
    r.partition = p;
    r.flavor = p.flavor;
    r.n = p.n();
    const int n = r.n;

    std::vector<Block> blocks;
    int pos = 0;
    for (std::size_t i = 0; i < p.parts.size();) {
        int k = p.parts[i];
        bool pair = (p.flavor == Flavor::so && k % 2 == 0) || (p.flavor == Flavor::sp && k % 2 == 1);
        if (pair) {
            blocks.push_back({pos, 2 * k, true});
            pos += 2 * k;
            i += 2;
        } else {
            blocks.push_back({pos, k, false});
            pos += k;
            i += 1;
        }
    }

    r.e = QMatrix(n, n);
    r.h = QMatrix(n, n);
    r.f = QMatrix(n, n);
    if (p.flavor == Flavor::sl) {
        for (const auto& b : blocks)
            for (int i = 0; i + 1 < b.size; ++i) r.e(b.start + i, b.start + i + 1) = 1;
    } else {
        QMatrix j = build_form(p.flavor, n, blocks);
        QMatrix jinv = p.flavor == Flavor::so ? j : j.scaled(-1);
        QMatrix x(n, n);
        for (const auto& b : blocks) {
            if (b.paired) {
                for (int i = 0; i + 1 < b.size / 2; ++i) x(b.start + i, b.start + i + 1) = 1;
            } else {
                for (int i = 0; 2 * i <= b.size - 2; ++i) x(b.start + i, b.start + i + 1) = 1;
            }
        }
        r.e = x + involution(j, jinv, x);
        r.form = j;
    }
    for (const auto& b : blocks) {
        int chain = b.paired ? b.size / 2 : b.size;
        for (int i = 0; i < b.size; ++i) r.h(b.start + i, b.start + i) = chain - 1 - 2 * (i % chain);
    }
    // [e,f] = h with f subdiagonal: e_{i,i+1} f_{i+1,i} = sum_{j<=i} h_jj
    Q running = 0;
    for (int i = 0; i + 1 < n; ++i) {
        running += r.h(i, i);
        if (sgn(r.e(i, i + 1)) != 0) {
            r.f(i + 1, i) = running / r.e(i, i + 1);
        } else if (sgn(running) != 0) {
            throw std::logic_error("realize: inconsistent chain sums");
        }
    }

    if (p.flavor == Flavor::sl) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b) continue;
                QMatrix m(n, n);
                m(a, b) = 1;
                r.basis_of_g.push_back(std::move(m));
            }
        for (int a = 0; a + 1 < n; ++a) {
            QMatrix m(n, n);
            m(a, a) = 1;
            m(a + 1, a + 1) = -1;
            r.basis_of_g.push_back(std::move(m));
        }
    } else {
        const QMatrix& j = *r.form;
        QMatrix jinv = p.flavor == Flavor::so ? j : j.scaled(-1);
        // E_ab - kappa E_{b'a'} with a' the form partner of a; keep one of each pair
        std::vector<int> partner(n);
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c)
                if (sgn(j(a, c)) != 0) partner[a] = c;
        std::set<std::pair<int, int>> seen;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                std::pair<int, int> key{a, b}, mate{partner[b], partner[a]};
                if (seen.count(key)) continue;
                seen.insert(key);
                seen.insert(mate);
                QMatrix m(n, n);
                m(a, b) = 1;
                m = m + involution(j, jinv, m);
                if (!m.is_zero()) r.basis_of_g.push_back(std::move(m));
            }
    }

    const bool ok = commutator(r.e, r.f) == r.h && commutator(r.h, r.e) == r.e.scaled(2) &&
                    commutator(r.h, r.f) == r.f.scaled(-2) && in_algebra(r, r.e) && in_algebra(r, r.h) &&
                    in_algebra(r, r.f) &&
                    static_cast<int>(r.basis_of_g.size()) == classical_dim(p.flavor, n);
    if (!ok) throw std::logic_error("realize: sl2-triple check failed for " + p.to_string());
    return r;
}

MatrixRealization realize(Flavor f, const Partition& p) {
    CYCLOTYPE_REQUIRE(f == p.flavor, "flavor mismatch");
    return realize(p);
}

bool in_algebra(const MatrixRealization& r, const QMatrix& x) {
    if (!r.form) {
        Q tr = 0;
        for (int i = 0; i < r.n; ++i) tr += x(i, i);
        return sgn(tr) == 0;
    }
    return (x.transpose() * *r.form + *r.form * x).is_zero();
}

namespace {

// Columns are the flattened images of the basis under X -> [a, X] + c X.
QMatrix adjoint_system(const QMatrix& a, const Q& c, const std::vector<QMatrix>& basis) {
    const std::size_t n = a.rows();
    QMatrix sys(n * n, basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        QMatrix img = commutator(a, basis[k]);
        if (sgn(c) != 0) img = img + basis[k].scaled(c);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) sys(i * n + j, k) = img(i, j);
    }
    return sys;
}

}  // namespace

int oracle_depth(const MatrixRealization& r) {
    std::set<int, std::greater<>> candidates;
    for (int a = 0; a < r.n; ++a)
        for (int b = 0; b < r.n; ++b) {
            Q diff = r.h(a, a) - r.h(b, b);
            int v = static_cast<int>(diff.get_num().get_si());
            if (v > 0) candidates.insert(v);
        }
    for (int d : candidates)
        if (!kernel(adjoint_system(r.h, Q(d), r.basis_of_g)).empty()) return d;
    throw std::logic_error("oracle_depth: h acts trivially");
}

std::vector<QMatrix> lowest_space(const MatrixRealization& r, int d) {
    auto ker = kernel(adjoint_system(r.h, Q(d), r.basis_of_g));
    if (ker.empty()) throw std::logic_error("lowest_space: empty eigenspace for -" + std::to_string(d));
    std::vector<QMatrix> out;
    for (const auto& v : ker) {
        QMatrix m(r.n, r.n);
        for (std::size_t k = 0; k < v.size(); ++k)
            if (sgn(v[k]) != 0) m = m + r.basis_of_g[k].scaled(v[k]);
        out.push_back(std::move(m));
    }
    return out;
}

CyclicSample sample_cyclic(const MatrixRealization& r, const std::vector<QMatrix>& basis, std::uint64_t seed) {
    CYCLOTYPE_REQUIRE(!basis.empty(), "sample_cyclic needs a non-empty basis");
    std::mt19937_64 gen(seed);
    CyclicSample s;
    s.seed = seed;
    s.F = QMatrix(r.n, r.n);
    for (const auto& b : basis) {
        // numerator in +-{1..9}, denominator in {1..4}; raw engine bits keep this platform independent
        std::uint64_t x = gen(), y = gen();
        long num = static_cast<long>(1 + x % 9) * ((x >> 32) & 1 ? -1 : 1);
        long den = static_cast<long>(1 + y % 4);
        Q c(num, den);
        c.canonicalize();
        s.coordinates.push_back(c);
        s.F = s.F + b.scaled(c);
    }
    return s;
}

bool is_nilpotent_matrix(const QMatrix& m) {
    QMatrix p = m;
    for (std::size_t k = 1; k < m.rows(); ++k) {
        if (p.is_zero()) return true;
        p = p * m;
    }
    return p.is_zero();
}

bool is_semisimple_element(const QMatrix& m) {
    Poly c = charpoly(m);
    Poly g = poly_gcd(c, derivative(c));
    Poly q = poly_div_exact(c, g);
    return evaluate(q, m).is_zero();
}

bool is_regular_element(const MatrixRealization& r, const QMatrix& m) {
    std::size_t rk = rank(adjoint_system(m, Q(0), r.basis_of_g));
    int centralizer = static_cast<int>(r.basis_of_g.size() - rk);
    return centralizer == classical_rank(r.flavor, r.n);
}

std::vector<int> jordan_type(const QMatrix& m) {
    CYCLOTYPE_REQUIRE(is_nilpotent_matrix(m), "jordan_type needs a nilpotent matrix");
    const int n = static_cast<int>(m.rows());
    std::vector<int> ranks{n};
    QMatrix p = m;
    while (ranks.back() > 0) {
        ranks.push_back(static_cast<int>(rank(p)));
        p = p * m;
    }
    // blocks of size >= k: ranks[k-1] - ranks[k]
    std::vector<int> at_least;
    for (std::size_t k = 1; k < ranks.size(); ++k) at_least.push_back(ranks[k - 1] - ranks[k]);
    std::vector<int> parts;
    for (std::size_t k = 0; k < at_least.size(); ++k) {
        int exactly = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
        for (int i = 0; i < exactly; ++i) parts.push_back(static_cast<int>(k + 1));
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
}

OracleVerdict oracle_verdict(const Partition& p, int trials, std::uint64_t seed) {
    CYCLOTYPE_REQUIRE(trials >= 1, "trials must be at least 1");
    CYCLOTYPE_REQUIRE(!p.is_zero(), "the zero orbit has no cyclic elements");
    auto r = realize(p);
    OracleVerdict v;
    v.depth = oracle_depth(r);
    auto basis = lowest_space(r, v.depth);
    v.lowest_dim = static_cast<int>(basis.size());
    constexpr int retry_budget = 4;
    for (int round = 0; round < retry_budget; ++round) {
        std::vector<CyclicType> types;
        std::vector<std::vector<int>> jordans;
        std::vector<std::uint64_t> seeds;
        for (int t = 0; t < trials; ++t) {
            std::uint64_t s = seed + static_cast<std::uint64_t>(round) * 1000003ULL + static_cast<std::uint64_t>(t);
            seeds.push_back(s);
            QMatrix m = r.e + sample_cyclic(r, basis, s).F;
            CyclicType ct;
            if (is_nilpotent_matrix(m)) {
                ct.kind = Kind::Nilpotent;
                jordans.push_back(jordan_type(m));
            } else if (is_semisimple_element(m)) {
                ct.kind = Kind::Semisimple;
                ct.regular = is_regular_element(r, m);
            } else {
                ct.kind = Kind::Mixed;
            }
            types.push_back(ct);
        }
        bool unanimous = std::all_of(types.begin(), types.end(), [&](const CyclicType& t) { return t == types[0]; }) &&
                         std::all_of(jordans.begin(), jordans.end(), [&](const auto& j) { return j == jordans[0]; });
        if (unanimous) {
            v.type = types[0];
            if (!jordans.empty()) v.jordan = jordans[0];
            v.seeds = seeds;
            v.reseeds = round;
            return v;
        }
    }
    throw GenericityError("no unanimous verdict for " + to_string(p.flavor) + " " + p.to_string());
}

CyclicType oracle_type(const Partition& p, int trials, std::uint64_t seed) {
    return oracle_verdict(p, trials, seed).type;
}

CyclicType oracle_type(Flavor f, const Partition& p, int trials, std::uint64_t seed) {
    CYCLOTYPE_REQUIRE(f == p.flavor, "flavor mismatch");
    return oracle_type(p, trials, seed);
}

}  // namespace cyclotype
