#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace bbplan {

// Pearson correlation coefficient. Returns 0.0 when either input has zero
// variance; throws on length mismatch or empty input.
double pearson(std::span<const double> xs, std::span<const double> ys);

// Spearman rank correlation with average ranks for ties.
double spearman(std::span<const double> xs, std::span<const double> ys);

// Average (fractional) ranks, 1-based.
std::vector<double> average_ranks(std::span<const double> xs);

// Joint-count forms: counts[x][y] is the number of samples with integer
// values (x, y). Equivalent to expanding every cell into counts[x][y] raw
// pairs, but exact: a perfectly linear (Pearson) or perfectly monotone
// (Spearman) relation yields +/-1.0 with no floating-point residue.
using JointCounts = std::vector<std::vector<std::uint64_t>>;

double pearson_counts(const JointCounts& counts);
double spearman_counts(const JointCounts& counts);

}  // namespace bbplan
