#pragma once

#include "jackd/partitions.hpp"
#include "jackd/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace jackd {

enum class SymBasis { Monomial, PowerSum };

/// A symmetric function of homogeneous degree n, stored as exact
/// coefficients over partition-indexed basis elements.
struct SymFuncExpansion {
    int n = 0;
    SymBasis basis = SymBasis::Monomial;
    std::map<Partition, Rat> coeffs;

    Rat coeff(const Partition& p) const {
        const auto it = coeffs.find(p);
        return it == coeffs.end() ? Rat(0) : it->second;
    }
};

/// Expansion of the power-sum product p_mu in the monomial basis, by exact
/// iterated multiplication. Cap |mu| <= 10.
SymFuncExpansion power_to_monomial(const Partition& mu);

/// Power-sum expansions of the deformed orthogonal basis elements for every
/// partition of n at the given parameter value: orthogonalizes the monomial
/// basis along reverse-lexicographic order (a linear extension of dominance)
/// under <p_lam, p_mu> = delta * alpha^len(lam) * z_lam, normalized so the
/// coefficient of m_(1^n) is n!. Throws std::domain_error when the
/// orthogonalization degenerates at the given parameter (possible at
/// negative rationals) and std::length_error above the size cap (n <= 7).
std::map<Partition, std::map<Partition, Rat>> jack_power_expansions(int n,
                                                                    const Rat& alpha);

/// One row of the family above, in the power-sum basis.
SymFuncExpansion jack_in_power_basis(const Partition& lam, const Rat& alpha);

/// Converts a power-sum expansion to the monomial basis.
SymFuncExpansion to_monomial_basis(const SymFuncExpansion& f);

/// Sum of the power-sum coefficients over the partitions with no singleton
/// part.
Rat eta_from_jack_expansion(const Partition& lam, const Rat& alpha);

/// Irreducible symmetric group character by the border-strip recursion,
/// memoized. Requires |lam| == |mu| (std::domain_error) and size <= 14
/// (std::length_error).
Int symmetric_group_character(const Partition& lam, const Partition& mu);

/// Full character table for a fixed n with class data. Built once, immutable
/// afterwards; safe for concurrent reads.
class CharacterTable {
public:
    static CharacterTable build(int n);

    /// Loads the JSON cache entry for n from cache_dir, rebuilding (and
    /// rewriting) on any structural or consistency failure. An empty
    /// cache_dir skips the disk entirely.
    static CharacterTable load_or_build(int n, const std::string& cache_dir);

    int n() const { return n_; }
    const std::vector<Partition>& classes() const { return classes_; }
    Int chi(const Partition& lam, const Partition& mu) const;
    Int class_size(const Partition& mu) const;
    Int dimension(const Partition& lam) const;  // chi at the identity class

    /// Row and column orthogonality over all pairs.
    bool orthogonality_holds() const;

    std::string to_json() const;
    static CharacterTable from_json(const std::string& text);

private:
    int n_ = 0;
    std::vector<Partition> classes_;
    std::map<Partition, int> index_;
    std::vector<std::vector<Int>> chi_;  // [lam index][class index]
};

/// Character-sum route: sum over fixed-point-free classes of
/// |C_mu| chi(lam, mu), divided by the dimension. Cap n <= 12.
Rat eta_from_character_sum(const Partition& lam, const std::string& cache_dir = "");

/// Number of standard Young tableaux, by the hook length formula.
Int syt_count(const Partition& lam);

/// Number of standard tableaux of the skew shape lam/mu, by corner-removal
/// recursion. Throws std::domain_error if mu is not contained in lam.
Int skew_syt_count(const Partition& lam, const Partition& mu);

Int z_factor(const Partition& mu);    // prod i^(m_i) m_i!
Int class_size(const Partition& mu);  // |mu|! / z_factor
}  // namespace jackd
