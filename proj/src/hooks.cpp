#include "jackd/hooks.hpp"

#include <algorithm>
#include <stdexcept>

namespace jackd {

AlphaPoly lower_hook(const Partition& lam, Cell c) {
    return AlphaPoly::linear(Rat(arm(lam, c)), Rat(leg(lam, c) + 1));
}

AlphaPoly upper_hook(const Partition& lam, Cell c) {
    return AlphaPoly::linear(Rat(arm(lam, c) + 1), Rat(leg(lam, c)));
}

std::vector<AlphaPoly> first_row_lower_hooks(const Partition& lam) {
    const Partition conj = lam.conjugate();
    std::vector<AlphaPoly> h;
    h.reserve(lam.part(1));
    for (int j = 1; j <= lam.part(1); ++j)
        h.push_back(AlphaPoly::linear(Rat(lam.part(1) - j), Rat(conj.part(j))));
    return h;
}

AlphaPoly principal_lower_hook_product(const Partition& lam) {
    AlphaPoly prod(1);
    for (const AlphaPoly& h : first_row_lower_hooks(lam)) prod *= h;
    return prod;
}

AlphaPoly shifted_first_row_product(const Partition& lam, int j) {
    AlphaPoly prod(1);
    const AlphaPoly shift = AlphaPoly::linear(Rat(j), Rat(0));
    for (const AlphaPoly& h : first_row_lower_hooks(lam)) prod *= h - shift;
    return prod;
}

XPoly first_row_product_poly(const Partition& lam) {
    XPoly prod = XPoly::constant(AlphaPoly(1));
    const AlphaPoly minus_a = -AlphaPoly::variable();
    for (const AlphaPoly& h : first_row_lower_hooks(lam))
        prod = prod.times_linear(minus_a, h);
    return prod;
}

namespace {
void check_columns(const Partition& lam, const std::vector<int>& cols) {
    for (int c : cols)
        if (c < 1 || c > lam.part(1))
            throw std::domain_error("column index outside the first row");
    for (std::size_t i = 0; i < cols.size(); ++i)
        for (std::size_t j = i + 1; j < cols.size(); ++j)
            if (cols[i] == cols[j])
                throw std::domain_error("repeated column index");
}
}  // namespace

Partition column_minor(const Partition& lam, const std::vector<int>& cols) {
    check_columns(lam, cols);
    const Partition conj = lam.conjugate();
    std::vector<int> sorted(cols);
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> heights;
    std::size_t next = 0;
    for (int c = 1; c <= lam.part(1); ++c) {
        if (next < sorted.size() && sorted[next] == c) {
            ++next;
            continue;
        }
        heights.push_back(conj.part(c));
    }
    return Partition(std::move(heights)).conjugate();
}

AlphaPoly column_minor_product(const Partition& lam, const std::vector<int>& cols) {
    check_columns(lam, cols);
    std::vector<int> sorted(cols);
    std::sort(sorted.begin(), sorted.end());
    const auto hooks = first_row_lower_hooks(lam);
    AlphaPoly prod(1);
    std::size_t next = 0;
    for (int c = 1; c <= lam.part(1); ++c) {
        if (next < sorted.size() && sorted[next] == c) {
            ++next;
            continue;
        }
        // Each deleted column to the right removes one arm cell.
        const int removed_right = static_cast<int>(sorted.size() - next);
        prod *= hooks[c - 1] - AlphaPoly::linear(Rat(removed_right), Rat(0));
    }
    return prod;
}

AlphaPoly column_minor_sum_subsets(const Partition& lam, int k) {
    if (k < 0) throw std::domain_error("column_minor_sum: negative k");
    const int w = lam.part(1);
    if (k > w) return AlphaPoly();
    const auto hooks = first_row_lower_hooks(lam);
    AlphaPoly total;
    std::vector<int> subset(k);
    // Iterate k-subsets of [w] in lexicographic order.
    for (int i = 0; i < k; ++i) subset[i] = i + 1;
    for (;;) {
        AlphaPoly prod(1);
        std::size_t next = 0;
        for (int c = 1; c <= w; ++c) {
            if (next < subset.size() && subset[next] == c) {
                ++next;
                continue;
            }
            const int removed_right = k - static_cast<int>(next);
            prod *= hooks[c - 1] - AlphaPoly::linear(Rat(removed_right), Rat(0));
        }
        total += prod;
        if (k == 0) break;
        int pos = k - 1;
        while (pos >= 0 && subset[pos] == w - (k - 1 - pos)) --pos;
        if (pos < 0) break;
        ++subset[pos];
        for (int i = pos + 1; i < k; ++i) subset[i] = subset[i - 1] + 1;
    }
    return total;
}

AlphaPoly column_minor_sum_differences(const Partition& lam, int k) {
    if (k < 0) throw std::domain_error("column_minor_sum: negative k");
    if (k > lam.part(1)) return AlphaPoly();
    AlphaPoly acc;
    for (int j = 0; j <= k; ++j) {
        AlphaPoly term = shifted_first_row_product(lam, j) * Rat(binomial(k, j));
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc.div_exact_alpha_power(k) * Rat(Int(1), factorial(k));
}

AlphaPoly column_minor_sum(const Partition& lam, int k) {
    if (k < 0) throw std::domain_error("column_minor_sum: negative k");
    if (k > lam.part(1)) return AlphaPoly();
    // The subset route is preferred while the subset count stays small; the
    // two routes are interchangeable (equality is under test).
    const Int count = binomial(lam.part(1), k);
    if (count <= 100000) return column_minor_sum_subsets(lam, k);
    return column_minor_sum_differences(lam, k);
}

AlphaPoly tail_gap_product(const Partition& lam, int j) {
    if (j < 0) return AlphaPoly(1);
    if (j > lam.part(1) - 1)
        throw std::domain_error("tail_gap_product: shift exceeds first row");
    const auto hooks = first_row_lower_hooks(lam);
    AlphaPoly prod(1);
    for (int i = 0; i <= j; ++i) {
        const AlphaPoly& h = hooks[lam.part(1) - i - 1];
        prod *= AlphaPoly::linear(Rat(j + 1), Rat(0)) - h;
    }
    return prod;
}

std::vector<AlphaPoly> falling_basis_coeffs(const Partition& lam) {
    if (lam.empty()) return {AlphaPoly(1)};
    const Partition hat = remove_first_column(lam);
    const std::vector<AlphaPoly> prev = falling_basis_coeffs(hat);
    const int w = lam.part(1);
    const Rat height(lam.conjugate().part(1));
    std::vector<AlphaPoly> out(w + 1);
    auto prev_at = [&](int k) {
        return (k >= 0 && k < static_cast<int>(prev.size())) ? prev[k] : AlphaPoly();
    };
    for (int k = 0; k <= w; ++k)
        out[k] = AlphaPoly::linear(Rat(w - 1 - k), height) * prev_at(k) - prev_at(k - 1);
    return out;
}

Partition reversed_complement(const Partition& lam) {
    std::vector<int> rows;
    for (int i = lam.length(); i >= 1; --i) {
        const int r = lam.part(1) - lam.part(i);
        if (r > 0) rows.push_back(r);
    }
    return Partition(std::move(rows));
}

AlphaPoly extended_hook_product(const Partition& lam, int i, int j,
                                ExtendedHookFlavor flavor) {
    if (i < 1 || i > lam.length())
        throw std::domain_error("extended_hook_product: row outside both shapes");
    const AlphaPoly shift = AlphaPoly::linear(Rat(j), Rat(0));
    const Partition conj = lam.conjugate();
    AlphaPoly prod(1);
    for (int c = 1; c <= lam.part(i); ++c) {
        const AlphaPoly h =
            AlphaPoly::linear(Rat(lam.part(i) - c), Rat(conj.part(c) - i + 1));
        prod *= h - shift;
    }
    // The complement row i maps to row length(lam) + 1 - i of the reversed
    // complement shape.
    const Partition comp = reversed_complement(lam);
    const int row = lam.length() + 1 - i;
    if (row >= 1 && row <= comp.length()) {
        for (int c = 1; c <= comp.part(row); ++c) {
            const Cell cell{row, c};
            if (flavor == ExtendedHookFlavor::RowLowerCompUpperPlus) {
                prod *= upper_hook(comp, cell) + shift;
            } else {
                prod *= lower_hook(comp, cell) - shift;
            }
        }
    }
    return prod;
}

}  // namespace jackd
