#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclotype/classical.hpp"
#include "cyclotype/partition.hpp"
#include "cyclotype/rational.hpp"

namespace cyclotype {

/// An sl2-triple through a nilpotent of the given Jordan type, in the defining representation.
struct MatrixRealization {
    Partition partition;
    Flavor flavor = Flavor::sl;
    int n = 0;
    /// Symmetric (so) or alternating (sp) form; absent for sl.
    std::optional<QMatrix> form;
    QMatrix e, h, f;
    std::vector<QMatrix> basis_of_g;
};

/// Block construction with anti-diagonal forms; so pairs even blocks, sp pairs odd blocks.
MatrixRealization realize(const Partition& p);
MatrixRealization realize(Flavor f, const Partition& p);

/// X in g, i.e. trace 0 for sl and X^T form + form X = 0 otherwise.
bool in_algebra(const MatrixRealization& r, const QMatrix& x);

/// Largest eigenvalue of ad h on g, computed from the realization alone.
int oracle_depth(const MatrixRealization& r);

/// Basis of {X in g : [h, X] = -d X}.
std::vector<QMatrix> lowest_space(const MatrixRealization& r, int d);

struct CyclicSample {
    QMatrix F;
    std::uint64_t seed = 0;
    std::vector<Q> coordinates;
};

/// F = sum c_k B_k with small non-zero rational c_k drawn from a seeded stream.
CyclicSample sample_cyclic(const MatrixRealization& r, const std::vector<QMatrix>& basis, std::uint64_t seed);

bool is_nilpotent_matrix(const QMatrix& m);
/// Squarefree part of the characteristic polynomial annihilates m.
bool is_semisimple_element(const QMatrix& m);
/// Centralizer of m in g has dimension rank g.
bool is_regular_element(const MatrixRealization& r, const QMatrix& m);
/// Partition from ranks of powers; throws DomainError for a non-nilpotent matrix.
std::vector<int> jordan_type(const QMatrix& m);

struct OracleVerdict {
    CyclicType type;
    int depth = 0;
    int lowest_dim = 0;
    /// Jordan type of e+F for nilpotent verdicts.
    std::optional<std::vector<int>> jordan;
    std::vector<std::uint64_t> seeds;
    /// Number of reseeded rounds needed to reach unanimity.
    int reseeds = 0;
};

/// Classifies e+F over `trials` samples with seeds seed, seed+1, ...; reseeds on disagreement
/// and throws GenericityError when no unanimous round is found.
OracleVerdict oracle_verdict(const Partition& p, int trials, std::uint64_t seed);
CyclicType oracle_type(const Partition& p, int trials, std::uint64_t seed);
CyclicType oracle_type(Flavor f, const Partition& p, int trials, std::uint64_t seed);

}  // namespace cyclotype
