#pragma once

#include <string>
#include <vector>

namespace jackd {

/// An integer partition stored without trailing zeros. Parts are weakly
/// decreasing positive integers; the empty partition is allowed. Values are
/// immutable after construction and safe to share between threads.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Parses the comma-separated form "10,6,3,1". The empty string is the
    /// empty partition. Throws std::invalid_argument on malformed input.
    static Partition parse(const std::string& text);

    int size() const { return size_; }           // number of cells
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 1-based part accessor; reads 0 for rows beyond the last part.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;
    std::string to_string() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// A cell of a Young diagram, 1-based (row, col).
struct Cell {
    int row = 1;
    int col = 1;
};

/// Frobenius coordinates (a | b): a_i = lambda_i - i and b_i = lambda'_i - i
/// for i up to the diagonal length d.
struct FrobeniusCoords {
    std::vector<int> a;
    std::vector<int> b;
    int d = 0;
};

/// All partitions of n in reverse-lexicographic order, (n) first and (1^n)
/// last. Throws std::length_error above the cap.
std::vector<Partition> partitions_of(int n, int cap = 40);

bool cell_in(const Partition& lam, Cell c);
int arm(const Partition& lam, Cell c);   // cells strictly to the right
int leg(const Partition& lam, Cell c);   // cells strictly below

/// True iff inner fits inside outer row by row.
bool contains(const Partition& outer, const Partition& inner);

/// True iff lam dominates mu: every prefix sum of mu is <= the corresponding
/// prefix sum of lam. Requires |lam| == |mu| (std::domain_error otherwise).
bool dominates(const Partition& lam, const Partition& mu);

/// All partitions reachable from mu by one raising move: remove an outer
/// corner and place it on an inner corner in a strictly higher row. Repeated
/// closure reaches exactly the dominance up-set of mu.
std::vector<Partition> covers_up(const Partition& mu);

FrobeniusCoords frobenius(const Partition& lam);

/// Reconstructs a partition from Frobenius coordinates (inverse of the
/// above; used for validation).
Partition from_frobenius(const FrobeniusCoords& fc);

/// Indices of the vertical steps among the first lambda_1 + 1 edges of the
/// boundary path: (lambda_1 - lambda_i + i - 1 : i - 1 <= lambda_i). Always
/// starts with 0 and is strictly increasing.
std::vector<int> boundary_vertical_indices(const Partition& lam);

/// True iff no part equals 1.
bool fixed_point_free(const Partition& mu);

/// lambda with every part doubled.
Partition double_partition(const Partition& lam);

/// lambda with its first column removed (every part decreased by one).
Partition remove_first_column(const Partition& lam);

/// lambda with its last k columns removed: parts capped at lambda_1 - k.
Partition remove_last_columns(const Partition& lam, int k);

}  // namespace jackd
