#pragma once

#include <vector>

#include "cyclotype/classical.hpp"
#include "cyclotype/oracle.hpp"
#include "cyclotype/report.hpp"

namespace cyclotype {

/// Classifier, oracle and grading data for one partition.
struct SweepEntry {
    Partition partition;
    ClassificationRecord record;
    OracleVerdict oracle;
    int characteristic_depth = 0;
    int grading_lowest_dim = 0;
};

/// sl and sp with n <= max_slsp, so with min_so <= n <= max_so; zero orbit excluded.
std::vector<Partition> sweep_partitions(int max_slsp = 8, int min_so = 7, int max_so = 10);

/// Runs classifier, oracle (trials with seeds 0..trials-1) and grading on each partition.
std::vector<SweepEntry> run_sweep(const std::vector<Partition>& parts, int trials = 3);

/// Oracle verdict equals the classifier type.
Report check_equivalence(const std::vector<SweepEntry>& entries);
/// Nilpotent type exactly when the depth is odd, for both classifier and oracle.
Report check_parity(const std::vector<SweepEntry>& entries);
/// dim g_{-d} and depth agree between oracle, grading and classifier.
Report check_grading(const std::vector<SweepEntry>& entries);

/// Jordan type of e+F for nilpotent-type so partitions with n <= max_n, one item per seed.
Report check_jordan_image(int max_n = 12, int seeds = 3);

/// Bush coherence for all classical partitions with n <= max_n.
Report check_bushes(int max_n = 10);

}  // namespace cyclotype
