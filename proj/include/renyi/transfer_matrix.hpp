#pragma once

#include <optional>
#include <vector>

#include "renyi/interval.hpp"

namespace renyi {

/// (m+1)x(m+1) truncation of the transfer matrix acting on density
/// coefficients (ell, a0, a1, ...), optionally conjugated by
/// diag(1, rho, rho^2, ...).
///
/// Index conventions: row/column 0 is the log coefficient; row i >= 1 is
/// coefficient a_{i-1}.  The core block (rows and columns >= 1) is upper
/// triangular; structural zeros are stored as exact [0, 0].
struct TruncatedMatrix {
    int m = 0;
    double rho = 1.0;
    std::vector<Interval> entries;  // row-major, (m+1)^2

    const Interval& at(int i, int j) const { return entries[static_cast<size_t>(i) * (m + 1) + j]; }
    Interval& at(int i, int j) { return entries[static_cast<size_t>(i) * (m + 1) + j]; }
    int dim() const { return m + 1; }
};

/// Enclosure of the unscaled entry A_{r,k}, defined for all r, k >= 0.
Interval transfer_entry(int r, int k);

/// Build A_m scaled by rho: entry (i,j) = A_{i,j} * rho^{i-j}.
/// Requires m >= 1 and 1 <= rho <= 3.
TruncatedMatrix build(int m, double rho);

/// Enclosure of sum_i |M_{i,j}| over the rows present, optionally skipping
/// one row (Gershgorin radii).
Interval column_abs_sum(const TruncatedMatrix& M, int j,
                        std::optional<int> exclude_row = std::nullopt);

/// Enclosure of 9 / (4 m^2 3^m), an upper bound for the column-0 tail
/// sum_{r>=m} (1/r) sum_{j>=r} 1/(j 3^j).
Interval col0_tail_bound(int m);

std::string matrix_to_json(const TruncatedMatrix& M);
std::string matrix_to_csv_midpoints(const TruncatedMatrix& M);

}  // namespace renyi
