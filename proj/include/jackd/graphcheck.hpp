#pragma once

#include "jackd/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace jackd {

/// Symmetric 0/1 adjacency with bit-packed rows and a zero diagonal.
class DenseGraph {
public:
    explicit DenseGraph(int vertices);

    int vertices() const { return n_; }
    bool adjacent(int i, int j) const {
        return (bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] >>
                (j & 63)) & 1u;
    }
    void add_edge(int i, int j);
    long degree(int i) const;

private:
    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Cayley-style graph on all permutations of n symbols, adjacent when they
/// disagree in every position. Cap n <= 7. The construction asserts the
/// predicted regularity degree.
DenseGraph build_perm_derangement_graph(int n);

/// Graph on the perfect matchings of 2n points, adjacent when their edge
/// sets are disjoint. Cap n <= 6.
DenseGraph build_matching_derangement_graph(int n);

/// Eigenvalues of the adjacency matrix, ascending, by a dense symmetric
/// solver. Cap 12000 vertices. The trace (sum of eigenvalues) is checked
/// against zero to 1e-6 per vertex.
std::vector<double> spectrum_numeric(const DenseGraph& g);

struct SpectrumCheckEntry {
    std::string eta;        // exact eigenvalue, as a rational string
    Int expected_mult;      // summed over shapes sharing the value
    long found_mult = 0;    // numeric eigenvalues within tolerance
    double max_residual = 0.0;
};

struct SpectrumReport {
    int n = 0;
    int alpha = 1;
    bool pass = false;
    long vertices = 0;
    std::vector<SpectrumCheckEntry> entries;

    std::string to_json() const;
};

/// Builds the graph for the given family (alpha 1 or 2), computes its
/// numeric spectrum, and matches it against the exact eigenvalue multiset
/// with multiplicities (dimension squared, resp. doubled-shape tableaux).
/// Shapes sharing an eigenvalue are merged before matching. A mismatch is
/// reported, not thrown.
SpectrumReport verify_spectrum(int n, int alpha);

}  // namespace jackd
