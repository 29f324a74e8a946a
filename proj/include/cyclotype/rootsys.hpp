#pragma once

#include <string>
#include <vector>

namespace cyclotype {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

struct SimpleType {
    Family family = Family::A;
    int rank = 1;

    /// Validates the rank against the family (A >= 1, B/C >= 2, D >= 3, exceptional fixed).
    static SimpleType make(Family f, int rank);
    /// Accepts "A3", "A_3", "E8", "E_8".
    static SimpleType parse(const std::string& s);

    /// "A3", "E8"
    std::string name() const;
    int dim() const;

    auto operator<=>(const SimpleType&) const = default;
};

using IntMatrix = std::vector<std::vector<int>>;
using Root = std::vector<int>;

/// Cartan matrix in the convention A[i][j] = <alpha_i, alpha_j^vee>, Bourbaki node order.
IntMatrix cartan_matrix(SimpleType t);

/// Squared root lengths of the simple roots of a connected Cartan matrix, shortest = 1.
std::vector<int> root_lengths(const IntMatrix& a);

struct RootSystem {
    SimpleType simple_type;
    IntMatrix cartan;
    /// Positive roots by height, then their negatives in the same order.
    std::vector<Root> roots;
    Root highest_root_coeffs;
    int root_count = 0;

    int rank() const { return simple_type.rank; }
    int dim() const { return rank() + root_count; }
    std::vector<Root> positive_roots() const;
};

RootSystem build_root_system(SimpleType t);

struct Edge {
    int u = 0, v = 0;
    int bond = 1;
    /// For bond > 1: the endpoint carrying the long root.
    int long_end = -1;
};

/// Diagram stored as a generalized Cartan matrix; zero off-diagonal entry means no edge.
struct DynkinGraph {
    IntMatrix a;

    int size() const { return static_cast<int>(a.size()); }
    static DynkinGraph from_cartan(IntMatrix a);
    /// Rejects a multiple bond without a long endpoint.
    static DynkinGraph from_edges(int n, const std::vector<Edge>& edges);
    DynkinGraph induced(const std::vector<int>& nodes) const;
};

/// Connected components of g, one simple type each, sorted.
/// B2 and C2 are reported as B2.
std::vector<SimpleType> classify_subdiagram(const DynkinGraph& g);

struct AffineDiagram {
    SimpleType base;
    int twist = 1;
    DynkinGraph graph;
    std::vector<int> affine_marks;

    int nodes() const { return graph.size(); }
    /// "E8^(1)", "E6^(2)"
    std::string name() const;
};

AffineDiagram extended_diagram(const RootSystem& rs);
AffineDiagram twisted_diagram(SimpleType base, int k);

/// A direct sum of simple types plus a central torus, as printed in tables.
struct TypeSum {
    std::vector<SimpleType> summands;
    int torus = 0;

    int rank() const;
    int dim() const;
    std::string to_string() const;
    bool operator==(const TypeSum&) const = default;
};

/// Parses descriptors such as "A_1 ⊕ A_5", "A_2 + T_2", "2A_2", "[A_5]''", "Ã_2", "T_8", "0".
/// Bracket decorations, primes and tildes are dropped; summands are sorted.
TypeSum parse_type_sum(const std::string& s);

}  // namespace cyclotype
