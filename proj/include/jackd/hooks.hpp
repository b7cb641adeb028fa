#pragma once

#include "jackd/exactalg.hpp"
#include "jackd/partitions.hpp"

#include <vector>

namespace jackd {

/// Lower hook a*arm + leg + 1 of a cell, as a polynomial in the parameter.
/// Throws std::domain_error for cells outside the shape.
AlphaPoly lower_hook(const Partition& lam, Cell c);

/// Upper hook a*(arm + 1) + leg.
AlphaPoly upper_hook(const Partition& lam, Cell c);

/// Lower hooks along the first row: entry j-1 is a*(lambda_1 - j) + lambda'_j.
std::vector<AlphaPoly> first_row_lower_hooks(const Partition& lam);

/// Product of the first-row lower hooks; 1 for the empty shape.
AlphaPoly principal_lower_hook_product(const Partition& lam);

/// Product of (h_i - j*a) over the first-row lower hooks h_i.
AlphaPoly shifted_first_row_product(const Partition& lam, int j);

/// The same product with the shift left symbolic: prod_i (h_i - a*x).
XPoly first_row_product_poly(const Partition& lam);

/// Shape left after deleting the given first-row columns (1-based indices,
/// distinct). Throws std::domain_error for out-of-range columns.
Partition column_minor(const Partition& lam, const std::vector<int>& cols);

/// Principal lower hook product of the minor, computed from the surviving
/// first-row hooks of lam (each column left of a deletion loses one arm).
AlphaPoly column_minor_product(const Partition& lam, const std::vector<int>& cols);

/// Sum of principal lower hook products over all C(lambda_1, k) column
/// k-minors; empty sum (zero) for k > lambda_1, the full product for k = 0.
AlphaPoly column_minor_sum(const Partition& lam, int k);

/// Subset-enumeration route of the sum above (exact same contract); exposed
/// for cross-checks against the finite-difference route.
AlphaPoly column_minor_sum_subsets(const Partition& lam, int k);

/// Finite-difference route: sum_j (-1)^j C(k,j) prod_i (h_i - j*a), divided
/// exactly by a^k k!.
AlphaPoly column_minor_sum_differences(const Partition& lam, int k);

/// prod_{i=0}^{j} ((j+1)*a - h_{lambda_1 - i}) over the trailing first-row
/// hooks; 1 for j < 0. Requires j <= lambda_1 - 1.
AlphaPoly tail_gap_product(const Partition& lam, int j);

/// Coefficients of the first-row shift polynomial in the scaled falling
/// factorial basis, by the first-column-removal recurrence. Entry k has
/// sign (-1)^k.
std::vector<AlphaPoly> falling_basis_coeffs(const Partition& lam);

/// How the complement-row factors of an extended hook product are shifted.
/// RowLowerCompUpperPlus: row cells contribute lower hooks minus j*a and the
/// complement cells upper hooks plus j*a (the combination the shifted
/// products actually factor into; pinned by the oracle tests).
/// RowLowerCompLowerMinus: both sides lower hooks minus j*a.
enum class ExtendedHookFlavor { RowLowerCompUpperPlus, RowLowerCompLowerMinus };

/// Extended i-th principal hook product with shift j: the row-i hook product
/// of lam times the row-i hook product of the reversed complement, each
/// factor shifted per the flavor. Requires 1 <= i <= length(lam); empty rows
/// contribute 1.
AlphaPoly extended_hook_product(const Partition& lam, int i, int j,
                                ExtendedHookFlavor flavor =
                                    ExtendedHookFlavor::RowLowerCompUpperPlus);

/// The complement of lam inside its bounding rectangle, rows reversed so the
/// result is again a partition.
Partition reversed_complement(const Partition& lam);

}  // namespace jackd
