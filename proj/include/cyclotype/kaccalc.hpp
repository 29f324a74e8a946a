#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cyclotype/report.hpp"
#include "cyclotype/rootsys.hpp"

namespace cyclotype {

/// Non-negative labels s_0..s_n on an affine diagram; encodes a finite-order automorphism.
struct KacLabeling {
    AffineDiagram diagram;
    std::vector<int> labels;

    static KacLabeling make(AffineDiagram d, std::vector<int> labels);
};

/// Fixed subalgebra: semisimple part from the zero-labelled nodes plus a torus.
using FixedPointSet = TypeSum;

/// m = twist * sum a_i s_i
int order(const KacLabeling& l);
FixedPointSet fixed_point_set(const KacLabeling& l);
int dim_fixed(const KacLabeling& l);

/// dim h^w = dim g^sigma - |Delta| / m. Throws DomainError when |Delta|/m is not integral
/// or the result is negative.
int dim_hw(const KacLabeling& l, const RootSystem& rs);

/// Affine diagram by name: "E8", "E8^(1)", "E6^(2)", "D4^(3)"; twist overrides when > 0.
AffineDiagram diagram_by_name(const std::string& name, int twist = 0);

/// One row of the regular-element diagram tables.
struct Table6Row {
    std::string diagram;
    SimpleType base;
    int twist = 1;
    int order = 0;
    std::string printed;
    std::vector<int> labels;
    std::string fixed;
    int dim_hw = 0;
};

std::vector<Table6Row> load_table6(const std::filesystem::path& file);

/// Recomputes order, fixed-point set and dim h^w for every row.
Report verify_table6(const std::vector<Table6Row>& rows);

/// Orders of the untwisted rows for an exceptional type, sorted and distinct.
std::vector<int> regular_numbers(SimpleType t, const std::vector<Table6Row>& rows);

}  // namespace cyclotype
