#include "jackd/transversals.hpp"

#include "jackd/hooks.hpp"

#include <stdexcept>

namespace jackd {

namespace {

void visit_subsets(int w, int k,
                   const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i + 1;
    for (;;) {
        fn(subset);
        if (k == 0) return;
        int pos = k - 1;
        while (pos >= 0 && subset[pos] == w - (k - 1 - pos)) --pos;
        if (pos < 0) return;
        ++subset[pos];
        for (int i = pos + 1; i < k; ++i) subset[i] = subset[i - 1] + 1;
    }
}

}  // namespace

void for_each_transversal(const Partition& lam, int k,
                          const std::function<void(const Transversal&)>& visit) {
    if (k < 0) throw std::domain_error("for_each_transversal: negative k");
    if (k > lam.part(1)) return;  // no k-transversal exists
    const Partition conj = lam.conjugate();
    visit_subsets(lam.part(1), k, [&](const std::vector<int>& cols) {
        Transversal t;
        t.cells.resize(k);
        for (int i = 0; i < k; ++i) t.cells[i].col = cols[i];
        // Odometer over the row choice in each selected column.
        std::vector<int> row(k, 1);
        for (;;) {
            for (int i = 0; i < k; ++i) t.cells[i].row = row[i];
            visit(t);
            int pos = k - 1;
            while (pos >= 0 && row[pos] == conj.part(cols[pos])) --pos;
            if (pos < 0) break;
            ++row[pos];
            for (int i = pos + 1; i < k; ++i) row[i] = 1;
        }
    });
}

Int count_transversals(const Partition& lam, int k) {
    if (k < 0) throw std::domain_error("count_transversals: negative k");
    if (k > lam.part(1)) return 0;
    // Elementary symmetric function of the column heights.
    const Partition conj = lam.conjugate();
    std::vector<Int> e(k + 1, 0);
    e[0] = 1;
    for (int c = 1; c <= lam.part(1); ++c)
        for (int t = std::min(k, c); t >= 1; --t) e[t] += e[t - 1] * conj.part(c);
    return e[k];
}

AlphaPoly transversal_weight(const Partition& lam, const Transversal& t) {
    for (std::size_t i = 0; i < t.cells.size(); ++i) {
        if (!cell_in(lam, t.cells[i]))
            throw std::domain_error("transversal cell outside the shape");
        for (std::size_t j = i + 1; j < t.cells.size(); ++j)
            if (t.cells[i].col == t.cells[j].col)
                throw std::domain_error("transversal cells share a column");
    }
    AlphaPoly prod(1);
    for (const Cell& c : t.cells) {
        int arm_in_t = 0, leg_in_t = 0;
        for (const Cell& o : t.cells) {
            if (o.row == c.row && o.col > c.col) ++arm_in_t;
            if (o.col == c.col && o.row > c.row) ++leg_in_t;
        }
        prod *= AlphaPoly::linear(Rat(arm_in_t), Rat(leg_in_t + 1));
    }
    return prod;
}

AlphaPoly transversal_weight_sum_enumerated(const Partition& lam, int k) {
    AlphaPoly total;
    for_each_transversal(lam, k, [&](const Transversal& t) {
        total += transversal_weight(lam, t);
    });
    return total;
}

AlphaPoly transversal_weight_sum(const Partition& lam, int k) {
    if (k < 0) throw std::domain_error("transversal_weight_sum: negative k");
    if (k > lam.part(1)) return AlphaPoly();
    if (lam.part(1) <= 6) return transversal_weight_sum_enumerated(lam, k);
    return column_minor_sum(lam, lam.part(1) - k);
}

}  // namespace jackd
