#pragma once

#include <string>
#include <vector>

#include "cyclotype/rootsys.hpp"

namespace cyclotype {

enum class Flavor { sl, so, sp };

std::string to_string(Flavor f);
Flavor parse_flavor(const std::string& s);

/// Jordan type of a nilpotent element in the defining representation.
struct Partition {
    Flavor flavor = Flavor::sl;
    std::vector<int> parts;

    /// Validates ordering and admissibility; throws DomainError.
    static Partition make(Flavor f, std::vector<int> parts);
    /// Parses "5,4,4,1"; rejects non-increasing input instead of sorting it.
    static Partition parse(Flavor f, const std::string& csv);

    int n() const;
    int p() const { return static_cast<int>(parts.size()); }
    int multiplicity(int k) const;
    int largest() const { return parts.front(); }
    /// Second distinct position, parts[1]; 0 when there is only one part.
    int second() const { return parts.size() > 1 ? parts[1] : 0; }
    /// All parts equal to 1, i.e. e = 0.
    bool is_zero() const;
    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;
};

/// Even parts with even multiplicity for so, odd parts with even multiplicity for sp.
bool admissible(Flavor f, const std::vector<int>& parts);

/// All admissible partitions of n for the flavor, in reverse lexicographic order.
/// The zero partition (1^n) is included only when include_zero is set.
std::vector<Partition> all_partitions(Flavor f, int n, bool include_zero = false);

/// Simple type of sl_n, so_n, sp_n. so_3 is A1, so_6 is A3; so_4 and so_2 are rejected.
SimpleType classical_type(Flavor f, int n);

/// Rank of the Lie algebra sl_n, so_n, sp_n (so_4 included).
int classical_rank(Flavor f, int n);

/// Dimension of sl_n, so_n, sp_n.
int classical_dim(Flavor f, int n);

}  // namespace cyclotype
