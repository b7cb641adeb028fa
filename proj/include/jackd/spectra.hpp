#pragma once

#include "jackd/colored.hpp"
#include "jackd/exactalg.hpp"
#include "jackd/partitions.hpp"

#include <string>
#include <vector>

namespace jackd {

/// The eigenvalue attached to a shape, as a polynomial in the parameter:
/// (-1)^(|lam| - lam_1) times the colored-derangement count polynomial.
/// Dispatches to the colored scan for narrow shapes and to the minor-sum
/// route otherwise (all routes agree; the agreement is under test).
AlphaPoly eta(const Partition& lam);

/// Alternating sum of column minor sums: (-1)^(|lam| - lam_1) *
/// sum_k (-1)^k column_minor_sum(lam, k).
AlphaPoly eta_minor_sum(const Partition& lam);

/// Closed form at parameter zero: signed product of (column height - 1).
Rat eta_alpha0(const Partition& lam);

/// Rencontres-weighted route for any n >= lam_1: the weighted sum of shifted
/// first-row products, evaluated at lam_1 + 1 integer parameter samples and
/// interpolated back to a polynomial. Sample integrality and the degree
/// bound are asserted (violations signal a bug, not bad input).
AlphaPoly eta_rencontres(const Partition& lam, int n);

/// Closed form at parameter 1 via extended hook products and fixed-point
/// probabilities.
Rat eta1_closed(const Partition& lam);

/// Two-row closed form at parameter 1 for the shape (n-k, k).
Rat eta1_two_row(int n, int k);

/// Three-row closed form at parameter 1; requires exactly three parts.
Rat eta1_three_row(const Partition& lam);

/// Determinant form at parameter 1: det W / det V with V Vandermonde in
/// lambda_i - i.
Rat eta1_det(const Partition& lam);

/// Closed form at parameter 2: rows taken in consecutive pairs, extended
/// hook products shifted within each pair block.
Rat eta2_closed(const Partition& lam);

/// Two-row closed form at parameter 2 for (n-k, k): (-1)^k times the count
/// of signed derangements whose unbalanced cycles sit on k fixed symbols.
Rat eta2_two_row(int n, int k);

/// True iff every column height is even (rows pair up).
bool doubly_even_conjugate(const Partition& lam);

/// Parameter-2 closed form for shapes with doubly even conjugate, expressed
/// through the half shape formed by the odd-indexed rows.
Rat eta2_doubly_even(const Partition& lam);

/// Character-weighted permutation sum over the complete-graph adjacency
/// matrix, via dimension * eta at parameter 1. Cap |lam| <= 12.
Int complete_graph_immanant(const Partition& lam);

/// The same by a literal permutation sum (cap |lam| <= 8).
Int complete_graph_immanant_direct(const Partition& lam);

/// Coefficients (ascending in x) of the normalized immanantal polynomial of
/// x*I - (J - I), computed through the branching rule. Monic; cap 9.
std::vector<Rat> immanant_char_poly(const Partition& lam);

/// The same by the literal n!-term sum (cap 6).
std::vector<Rat> immanant_char_poly_direct(const Partition& lam);

/// Derangement count polynomial of a one-row shape of any width, by
/// inclusion-exclusion over column subsets (no enumeration).
AlphaPoly one_row_derangement_poly(int n);

enum class EtaMethod { Auto, Colored, Minors, Rencontres, Closed1, Det1, Closed2 };

/// Evaluates eta at a fixed parameter with an optional method override.
/// Methods tied to a specific parameter value reject other values.
Rat eta_at(const Partition& lam, const Rat& alpha, EtaMethod method = EtaMethod::Auto);

EtaMethod parse_eta_method(const std::string& name);

/// Either the symbolic parameter or a fixed rational value.
struct AlphaSpec {
    bool symbolic = true;
    Rat value;

    static AlphaSpec sym() { return AlphaSpec{}; }
    static AlphaSpec fixed(Rat v) { return AlphaSpec{false, std::move(v)}; }
    static AlphaSpec parse(const std::string& text);
    std::string to_string() const;
};

struct SpectrumRow {
    Partition shape;
    AlphaPoly eta_poly;  // populated in symbolic mode
    Rat eta_value;       // populated in fixed mode
    bool has_mult = false;
    Int mult;
};

struct SpectrumTable {
    int n = 0;
    AlphaSpec alpha;
    std::vector<SpectrumRow> rows;

    std::string to_json() const;
    std::string to_csv() const;
    std::string to_plain() const;
};

/// One row per partition of n in reverse-lexicographic order. Multiplicity
/// column only for parameter 1 (dimension squared) and 2 (tableaux of the
/// doubled shape). Caps: n <= 12, and n <= 8 at parameter 2.
SpectrumTable spectrum_table(int n, const AlphaSpec& alpha);

}  // namespace jackd
