#include "jackd/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jackd {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
    if (text.empty()) return Partition();
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok.size() > 9 ||
            tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed shape: '" + text + "'");
        const int value = std::stoi(tok);
        if (value <= 0)
            throw std::invalid_argument("malformed shape: '" + text + "'");
        parts.push_back(value);
    }
    if (text.back() == ',')
        throw std::invalid_argument("malformed shape: '" + text + "'");
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.resize(parts_[0]);
        for (int c = 1; c <= parts_[0]; ++c) {
            int h = 0;
            while (h < length() && parts_[h] >= c) ++h;
            cols[c - 1] = h;
        }
    }
    return Partition(std::move(cols));
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::vector<Partition> partitions_of(int n, int cap) {
    if (n < 0) throw std::domain_error("partitions_of: negative n");
    if (n > cap) throw std::length_error("partitions_of: n exceeds cap");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Reverse-lexicographic generation starting from (n).
    std::vector<int> cur{n};
    for (;;) {
        out.emplace_back(cur);
        // Find rightmost part > 1.
        int k = static_cast<int>(cur.size()) - 1;
        int ones = 0;
        while (k >= 0 && cur[k] == 1) {
            ones += 1;
            --k;
        }
        if (k < 0) break;
        const int v = cur[k] - 1;
        int rem = cur[k] + ones;
        cur.resize(k);
        while (rem > 0) {
            const int take = std::min(v, rem);
            cur.push_back(take);
            rem -= take;
        }
    }
    return out;
}

bool cell_in(const Partition& lam, Cell c) {
    return c.row >= 1 && c.col >= 1 && c.col <= lam.part(c.row);
}

int arm(const Partition& lam, Cell c) {
    if (!cell_in(lam, c)) throw std::domain_error("arm: cell outside shape");
    return lam.part(c.row) - c.col;
}

int leg(const Partition& lam, Cell c) {
    if (!cell_in(lam, c)) throw std::domain_error("leg: cell outside shape");
    return lam.conjugate().part(c.col) - c.row;
}

bool contains(const Partition& outer, const Partition& inner) {
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

bool dominates(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        throw std::domain_error("dominates: partitions of unequal size");
    long long slam = 0, smu = 0;
    const int rows = std::max(lam.length(), mu.length());
    for (int i = 1; i <= rows; ++i) {
        slam += lam.part(i);
        smu += mu.part(i);
        if (smu > slam) return false;
    }
    return true;
}

std::vector<Partition> covers_up(const Partition& mu) {
    std::vector<Partition> out;
    const int len = mu.length();
    for (int r = 1; r <= len; ++r) {
        if (mu.part(r) == mu.part(r + 1)) continue;  // not an outer corner
        for (int s = 1; s < r; ++s) {
            // Inner corner of mu in row s: can a cell be appended there?
            if (s > 1 && mu.part(s - 1) == mu.part(s)) continue;
            std::vector<int> parts = mu.parts();
            parts[r - 1] -= 1;
            parts[s - 1] += 1;
            out.emplace_back(std::move(parts));
        }
    }
    return out;
}

FrobeniusCoords frobenius(const Partition& lam) {
    FrobeniusCoords fc;
    const Partition conj = lam.conjugate();
    int d = 0;
    while (lam.part(d + 1) >= d + 1) ++d;
    fc.d = d;
    for (int i = 1; i <= d; ++i) {
        fc.a.push_back(lam.part(i) - i);
        fc.b.push_back(conj.part(i) - i);
    }
    return fc;
}

Partition from_frobenius(const FrobeniusCoords& fc) {
    // Rebuild rows 1..d directly, then the rows below the diagonal from b.
    std::vector<int> parts;
    for (int i = 1; i <= fc.d; ++i) parts.push_back(fc.a[i - 1] + i);
    // Column i has height b_i + i; rows beyond d are read off column counts.
    for (int r = fc.d + 1;; ++r) {
        int width = 0;
        for (int i = 1; i <= fc.d; ++i)
            if (fc.b[i - 1] + i >= r) width = i;
        if (width == 0) break;
        parts.push_back(width);
    }
    return Partition(std::move(parts));
}

std::vector<int> boundary_vertical_indices(const Partition& lam) {
    std::vector<int> nu;
    for (int i = 1;; ++i) {
        if (i - 1 > lam.part(i)) break;
        nu.push_back(lam.part(1) - lam.part(i) + i - 1);
        if (i > lam.length()) break;  // only i = 1 applies to the empty shape
    }
    return nu;
}

bool fixed_point_free(const Partition& mu) {
    return mu.empty() || mu.parts().back() != 1;
}

Partition double_partition(const Partition& lam) {
    std::vector<int> parts = lam.parts();
    for (int& p : parts) p *= 2;
    return Partition(std::move(parts));
}

Partition remove_first_column(const Partition& lam) {
    std::vector<int> parts;
    for (int p : lam.parts())
        if (p > 1) parts.push_back(p - 1);
    return Partition(std::move(parts));
}

Partition remove_last_columns(const Partition& lam, int k) {
    if (k < 0 || k > lam.part(1))
        throw std::domain_error("remove_last_columns: bad column count");
    std::vector<int> parts;
    for (int p : lam.parts()) {
        const int q = std::min(p, lam.part(1) - k);
        if (q > 0) parts.push_back(q);
    }
    return Partition(std::move(parts));
}

}  // namespace jackd
