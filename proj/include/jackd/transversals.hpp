#pragma once

#include "jackd/exactalg.hpp"
#include "jackd/partitions.hpp"
#include "jackd/rational.hpp"

#include <functional>
#include <vector>

namespace jackd {

/// A set of cells of a shape, no two in the same column.
struct Transversal {
    std::vector<Cell> cells;
};

/// Visits every k-cell column transversal of lam exactly once: column
/// subsets in lexicographic order, then row choices per column. Streams with
/// O(k) working memory.
void for_each_transversal(const Partition& lam, int k,
                          const std::function<void(const Transversal&)>& visit);

Int count_transversals(const Partition& lam, int k);

/// Lower hook product of the cell set itself (arms and legs measured inside
/// the transversal). Throws std::domain_error if two cells share a column or
/// a cell falls outside the shape. The empty transversal has weight 1.
AlphaPoly transversal_weight(const Partition& lam, const Transversal& t);

/// Sum of transversal weights over all k-transversals; equals the sum of
/// column (lambda_1 - k)-minor hook products, and 0 for k > lambda_1.
/// Enumerates directly for narrow shapes and otherwise uses the minor-sum
/// route (the two agree; equality is under test).
AlphaPoly transversal_weight_sum(const Partition& lam, int k);

/// The enumeration route on its own, for identity tests (lambda_1 <= 6).
AlphaPoly transversal_weight_sum_enumerated(const Partition& lam, int k);

}  // namespace jackd
