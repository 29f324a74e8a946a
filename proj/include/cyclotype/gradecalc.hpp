#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cyclotype/kaccalc.hpp"
#include "cyclotype/partition.hpp"
#include "cyclotype/rootsys.hpp"

namespace cyclotype {

/// Weighted Dynkin diagram: labels s_i in {0,1,2}, not all zero.
struct Characteristic {
    SimpleType simple_type;
    std::vector<int> labels;

    static Characteristic make(SimpleType t, std::vector<int> labels);
    bool even() const;
    bool operator==(const Characteristic&) const = default;
};

/// sum_i s_i * coeff_i(alpha)
int weight(const Root& alpha, const std::vector<int>& labels);

int depth_from_characteristic(const RootSystem& rs, const Characteristic& c);

struct ZGrading {
    int depth = 0;
    /// j -> dim g_j for -depth <= j <= depth
    std::map<int, int> dims;

    int dim(int j) const {
        auto it = dims.find(j);
        return it == dims.end() ? 0 : it->second;
    }
};

ZGrading z_grading(const RootSystem& rs, const Characteristic& c);

struct SigmaData {
    int m = 0;
    int order = 0;
    /// residue mod m -> dimension
    std::map<int, int> mod_dims;
    KacLabeling kac;
    FixedPointSet fixed_set;
};

SigmaData sigma_data(const RootSystem& rs, const Characteristic& c);

struct PartitionCharacteristic {
    Characteristic primary;
    /// Second diagram for very even partitions in type D.
    std::optional<Characteristic> very_even_alt;
};

/// Dominant h read from the Jordan blocks. so_6 uses the A3 order (alpha_2, alpha_1, alpha_3) of D3.
PartitionCharacteristic characteristic_from_partition(const Partition& p);
PartitionCharacteristic characteristic_from_partition(Flavor f, const Partition& p);

/// |Delta| == m * dim g^sigma with m = d/2 + 1; only for even characteristics.
bool regular_order_check(const RootSystem& rs, const Characteristic& c);

}  // namespace cyclotype
