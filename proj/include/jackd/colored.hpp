#pragma once

#include "jackd/exactalg.hpp"
#include "jackd/partitions.hpp"
#include "jackd/rational.hpp"

#include <string>
#include <vector>

namespace jackd {

/// Counts of colored-permutation derangements of a shape, by number of
/// disjoint cycles: d[k-1] is the count with exactly k cycles.
struct DerangementProfile {
    Partition shape;
    std::vector<Int> d;

    Int total() const;
    Int count(int k) const {  // 0 outside 1..lambda_1
        return (k >= 1 && k <= static_cast<int>(d.size())) ? d[k - 1] : Int(0);
    }
    std::string to_json() const;
};

/// Scans the symmetric group on [lambda_1]; each cycle contributes one color
/// factor (the column height at its largest symbol; one less for fixed
/// points, whose first color is forbidden). Cap: lambda_1 <= 10.
DerangementProfile colored_derangement_counts(const Partition& lam);

/// Same scan without the derangement restriction (fixed points keep all
/// their colors).
DerangementProfile colored_permutation_counts(const Partition& lam);

/// Profile computed by materializing every coloring individually; validation
/// oracle for the counting shortcut. Cap: lambda_1 <= 6.
DerangementProfile colored_derangement_counts_materialized(const Partition& lam);

/// The polynomial sum_k d_k a^(lambda_1 - k); 1 for the empty shape.
AlphaPoly derangement_count_poly(const Partition& lam);

/// Number of colored permutations with all of some k-subset of symbols held
/// as first-color fixed points and exactly k + j cycles in total, summed
/// over the k-subsets. Cap: lambda_1 <= 6.
Int marked_fixed_colored_count(const Partition& lam, int k, int j);

/// Generalized rencontres count as a polynomial in the parameter:
/// C(n,k) * sum_i (-1)^i ((n-k)!/i!) a^(n-k-i). Integer coefficients.
AlphaPoly rencontres_poly(int n, int k);

/// The same count at a fixed parameter value; alpha = 0 is rejected.
Rat rencontres(int n, int k, const Rat& alpha);

/// rencontres / (alpha^n n!); sums to 1 over k.
Rat rencontres_prob(int n, int k, const Rat& alpha);

/// Perfect matchings of [2n] sharing no block with the fixed matching
/// {{1,2},{3,4},...}, by inclusion-exclusion. Cap n <= 16.
Int matching_derangement_count(int n);

/// The same by explicit enumeration (n <= 7).
Int matching_derangement_count_enumerated(int n);

/// Colored perfect matchings of [2*lambda_1] with no first-color block on a
/// partner pair: each connected component of pairs is monochromatic, colored
/// by the column height at its largest pair (partner-pair components lose
/// one color). Cap: lambda_1 <= 7.
Int colored_matching_derangements(const Partition& lam);

/// All colored matchings of the shape (no derangement restriction).
Int colored_matching_total(const Partition& lam);

struct HyperoctahedralCounts {
    Int total_derangements;   // no positively signed fixed symbol
    Int balanced;             // every cycle carries an even number of minus signs
    Int totally_unbalanced;   // every cycle carries an odd number
};

/// Enumerates the signed permutations on m symbols. Cap m <= 7.
HyperoctahedralCounts hyperoctahedral_counts(int m);

/// Signed-permutation derangements of m symbols whose unbalanced cycles all
/// live on the first k symbols: sum_i C(k,i) (2i-1)!! D'_{2(m-i)}.
Int signed_derangements_fixing_subcube(int m, int k);

/// The same by explicit enumeration (m <= 7).
Int signed_derangements_fixing_subcube_enumerated(int m, int k);

}  // namespace jackd
