#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclotype/partition.hpp"

namespace cyclotype {

enum class Kind { Nilpotent, Semisimple, Mixed };

std::string to_string(Kind k);

struct CyclicType {
    Kind kind = Kind::Mixed;
    /// Only meaningful for Semisimple.
    bool regular = false;

    bool operator==(const CyclicType&) const = default;
    /// "nilpotent", "semisimple", "regular semisimple", "mixed"
    std::string to_string() const;
};

/// A simple factor of the reducing subalgebra, e.g. sl_3 or so_8.
struct ReducingFactor {
    Flavor flavor = Flavor::sl;
    int dim = 0;

    std::string name() const;
    bool operator==(const ReducingFactor&) const = default;
};

struct Projections {
    std::vector<int> es;
    std::vector<int> en;
};

struct ClassificationRecord {
    Partition partition;
    int depth = 0;
    bool even = false;
    CyclicType type;
    int rank = 0;
    std::vector<ReducingFactor> gs;
    std::optional<Projections> projections;
    std::optional<Partition> bush_head;
    std::optional<Partition> cyclic_jordan_type;
    /// so_n with n < 7: type decided by the matrix oracle.
    bool small_rank = false;
    /// Type D partition with two orbits sharing this record.
    bool very_even = false;
};

int depth(const Partition& p);
bool is_even(const Partition& p);

/// Nilpotent-type criterion: so, n >= 7, n_1 odd, n_1 - n_2 = 1.
bool nilpotent_type(const Partition& p);

/// Type from the closed-form criteria (no oracle delegation).
CyclicType closed_form_type(const Partition& p);

ClassificationRecord classify(const Partition& p);

int rank(const Partition& p);
std::vector<ReducingFactor> reducing_subalgebra(const Partition& p);
Projections projections(const Partition& p);

/// es padded with 1s to size n; the semisimple-type member of the bush of p.
Partition bush_head(const Partition& p);

/// Members of the bush headed by the semisimple-type partition p, sorted descending.
std::vector<Partition> bush(const Partition& p);

/// Jordan type of a generic e+F when p is of nilpotent type.
Partition nilpotent_cyclic_jordan_type(const Partition& p);

}  // namespace cyclotype
