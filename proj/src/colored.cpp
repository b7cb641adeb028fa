#include "jackd/colored.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jackd {

Int DerangementProfile::total() const {
    Int t = 0;
    for (const Int& x : d) t += x;
    return t;
}

std::string DerangementProfile::to_json() const {
    nlohmann::json j;
    j["shape"] = shape.to_string();
    nlohmann::json arr = nlohmann::json::array();
    std::size_t last = d.size();
    while (last > 0 && d[last - 1] == 0) --last;
    for (std::size_t i = 0; i < last; ++i) {
        if (d[i].fits_slong_p())
            arr.push_back(d[i].get_si());
        else
            arr.push_back(jackd::to_string(d[i]));
    }
    j["d"] = arr;
    return j.dump();
}

namespace {

constexpr int kColoredScanCap = 10;

struct CycleInfo {
    int max_symbol;  // 0-based
    int length;
};

std::vector<CycleInfo> cycles_of(const std::vector<int>& perm,
                                 std::vector<char>& seen) {
    const int m = static_cast<int>(perm.size());
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<CycleInfo> cycles;
    for (int s = 0; s < m; ++s) {
        if (seen[s]) continue;
        int len = 0, mx = s, t = s;
        do {
            seen[t] = 1;
            mx = std::max(mx, t);
            ++len;
            t = perm[t];
        } while (t != s);
        cycles.push_back({mx, len});
    }
    return cycles;
}

DerangementProfile scan_profile(const Partition& lam, bool deranged) {
    const int m = lam.part(1);
    if (m > kColoredScanCap)
        throw std::length_error("colored permutation scan: first row too long");
    DerangementProfile profile;
    profile.shape = lam;
    profile.d.assign(m, 0);
    if (m == 0) return profile;
    const Partition conj = lam.conjugate();
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> seen(m);
    do {
        const auto cycles = cycles_of(perm, seen);
        Int weight = 1;
        for (const CycleInfo& c : cycles) {
            const int colors = (c.length == 1 && deranged)
                                   ? conj.part(c.max_symbol + 1) - 1
                                   : conj.part(c.max_symbol + 1);
            if (colors == 0) {
                weight = 0;
                break;
            }
            weight *= colors;
        }
        if (weight != 0) profile.d[cycles.size() - 1] += weight;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return profile;
}

}  // namespace

DerangementProfile colored_derangement_counts(const Partition& lam) {
    return scan_profile(lam, true);
}

DerangementProfile colored_permutation_counts(const Partition& lam) {
    return scan_profile(lam, false);
}

DerangementProfile colored_derangement_counts_materialized(const Partition& lam) {
    const int m = lam.part(1);
    if (m > 6)
        throw std::length_error("colored materialization: first row too long");
    DerangementProfile profile;
    profile.shape = lam;
    profile.d.assign(m, 0);
    if (m == 0) return profile;
    const Partition conj = lam.conjugate();
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> seen(m);
    do {
        const auto cycles = cycles_of(perm, seen);
        // Walk every assignment of one color per cycle.
        std::vector<int> bound(cycles.size()), color(cycles.size(), 1);
        for (std::size_t i = 0; i < cycles.size(); ++i)
            bound[i] = conj.part(cycles[i].max_symbol + 1);
        for (;;) {
            bool valid = true;
            for (std::size_t i = 0; i < cycles.size(); ++i)
                if (cycles[i].length == 1 && color[i] == 1) valid = false;
            if (valid) profile.d[cycles.size() - 1] += 1;
            int pos = static_cast<int>(cycles.size()) - 1;
            while (pos >= 0 && color[pos] == bound[pos]) --pos;
            if (pos < 0) break;
            ++color[pos];
            for (std::size_t i = pos + 1; i < cycles.size(); ++i) color[i] = 1;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return profile;
}

AlphaPoly derangement_count_poly(const Partition& lam) {
    if (lam.empty()) return AlphaPoly(1);
    const DerangementProfile profile = colored_derangement_counts(lam);
    const int m = lam.part(1);
    std::vector<Rat> coeffs(m);  // coefficient of a^(m-k) is d_k
    for (int k = 1; k <= m; ++k) coeffs[m - k] = Rat(profile.count(k));
    return AlphaPoly(std::move(coeffs));
}

Int marked_fixed_colored_count(const Partition& lam, int k, int j) {
    const int m = lam.part(1);
    if (m > 6) throw std::length_error("marked colored count: first row too long");
    if (k < 0 || j < 0) throw std::domain_error("marked colored count: negative index");
    const Partition conj = lam.conjugate();
    Int total = 0;
    if (m == 0) return (k == 0 && j == 0) ? Int(1) : Int(0);
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> seen(m);
    do {
        const auto cycles = cycles_of(perm, seen);
        if (static_cast<int>(cycles.size()) != k + j) continue;
        std::vector<int> fixed;
        for (const CycleInfo& c : cycles)
            if (c.length == 1) fixed.push_back(c.max_symbol);
        if (static_cast<int>(fixed.size()) < k) continue;
        // Free color factor with all cycles unrestricted.
        Int base = 1;
        for (const CycleInfo& c : cycles) base *= conj.part(c.max_symbol + 1);
        // Choose which k fixed points are pinned to the first color: each
        // choice divides out the pinned symbols' color counts.
        const int f = static_cast<int>(fixed.size());
        std::vector<int> subset(k);
        for (int i = 0; i < k; ++i) subset[i] = i;
        for (;;) {
            Int w = base;
            for (int i = 0; i < k; ++i) w /= conj.part(fixed[subset[i]] + 1);
            total += w;
            if (k == 0) break;
            int pos = k - 1;
            while (pos >= 0 && subset[pos] == f - (k - pos)) --pos;
            if (pos < 0) break;
            ++subset[pos];
            for (int i = pos + 1; i < k; ++i) subset[i] = subset[i - 1] + 1;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

AlphaPoly rencontres_poly(int n, int k) {
    if (k < 0 || k > n) throw std::domain_error("rencontres: need 0 <= k <= n");
    const Int choose = binomial(n, k);
    std::vector<Rat> coeffs(n - k + 1);
    for (int i = 0; i <= n - k; ++i) {
        Int c = factorial(n - k) / factorial(i);
        if (i % 2 != 0) c = -c;
        coeffs[n - k - i] = Rat(c * choose);
    }
    return AlphaPoly(std::move(coeffs));
}

Rat rencontres(int n, int k, const Rat& alpha) {
    if (alpha == 0) throw std::domain_error("rencontres: parameter must be nonzero");
    return rencontres_poly(n, k).eval(alpha);
}

Rat rencontres_prob(int n, int k, const Rat& alpha) {
    Rat denom = Rat(factorial(n));
    for (int i = 0; i < n; ++i) denom *= alpha;
    return rencontres(n, k, alpha) / denom;
}

Int matching_derangement_count(int n) {
    if (n < 0 || n > 16) throw std::length_error("matching derangements: bad n");
    Int total = 0;
    for (int k = 0; k <= n; ++k) {
        const Int term = binomial(n, k) * odd_double_factorial(n - k);
        total += (k % 2 == 0) ? term : -term;
    }
    return total;
}

namespace {

// Visits every perfect matching of [2m] as a partner array.
void visit_matchings(int two_m, std::vector<int>& partner,
                     const std::function<void(const std::vector<int>&)>& fn) {
    int a = 0;
    while (a < two_m && partner[a] >= 0) ++a;
    if (a == two_m) {
        fn(partner);
        return;
    }
    for (int b = a + 1; b < two_m; ++b) {
        if (partner[b] >= 0) continue;
        partner[a] = b;
        partner[b] = a;
        visit_matchings(two_m, partner, fn);
        partner[a] = -1;
        partner[b] = -1;
    }
}

struct Dsu {
    std::vector<int> up;
    explicit Dsu(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
    void join(int a, int b) { up[find(a)] = find(b); }
};

Int colored_matching_count(const Partition& lam, bool deranged) {
    const int m = lam.part(1);
    if (m > 7) throw std::length_error("colored matchings: first row too long");
    if (m == 0) return 1;
    const Partition conj = lam.conjugate();
    Int total = 0;
    std::vector<int> partner(2 * m, -1);
    visit_matchings(2 * m, partner, [&](const std::vector<int>& match) {
        // Blocks force equal colors on the pairs they touch; group pairs.
        Dsu dsu(m);
        for (int s = 0; s < 2 * m; ++s)
            if (match[s] > s) dsu.join(s / 2, match[s] / 2);
        std::vector<int> comp_max(m, -1), comp_size(m, 0);
        for (int p = 0; p < m; ++p) {
            const int root = dsu.find(p);
            comp_max[root] = std::max(comp_max[root], p);
            comp_size[root] += 1;
        }
        Int weight = 1;
        for (int p = 0; p < m; ++p) {
            if (dsu.find(p) != p) continue;
            int colors = conj.part(comp_max[p] + 1);
            // A one-pair component is a block on a partner pair.
            if (comp_size[p] == 1 && deranged) colors -= 1;
            if (colors == 0) {
                weight = 0;
                break;
            }
            weight *= colors;
        }
        total += weight;
    });
    return total;
}

}  // namespace

Int colored_matching_derangements(const Partition& lam) {
    return colored_matching_count(lam, true);
}

Int colored_matching_total(const Partition& lam) {
    return colored_matching_count(lam, false);
}

Int matching_derangement_count_enumerated(int n) {
    if (n < 0 || n > 7) throw std::length_error("matching enumeration: bad n");
    if (n == 0) return 1;
    Int total = 0;
    std::vector<int> partner(2 * n, -1);
    visit_matchings(2 * n, partner, [&](const std::vector<int>& match) {
        for (int p = 0; p < n; ++p)
            if (match[2 * p] == 2 * p + 1) return;
        total += 1;
    });
    return total;
}

namespace {

template <typename Fn>
void scan_signed_permutations(int m, Fn fn) {
    if (m > 7) throw std::length_error("signed permutation scan: m too large");
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> seen(m);
    do {
        const auto cycles = cycles_of(perm, seen);
        // Record the member set of each cycle as a bitmask.
        std::vector<unsigned> masks;
        std::fill(seen.begin(), seen.end(), 0);
        for (int s = 0; s < m; ++s) {
            if (seen[s]) continue;
            unsigned mask = 0;
            int t = s;
            do {
                seen[t] = 1;
                mask |= 1u << t;
                t = perm[t];
            } while (t != s);
            masks.push_back(mask);
        }
        for (unsigned signs = 0; signs < (1u << m); ++signs) fn(perm, cycles, masks, signs);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

HyperoctahedralCounts hyperoctahedral_counts(int m) {
    HyperoctahedralCounts out{0, 0, 0};
    if (m == 0) {
        out.total_derangements = out.balanced = out.totally_unbalanced = 1;
        return out;
    }
    scan_signed_permutations(m, [&](const std::vector<int>& perm,
                                    const std::vector<CycleInfo>&,
                                    const std::vector<unsigned>& masks,
                                    unsigned signs) {
        bool fixed_point = false;
        for (std::size_t i = 0; i < perm.size(); ++i)
            if (perm[i] == static_cast<int>(i) && !((signs >> i) & 1u)) fixed_point = true;
        bool all_even = true, all_odd = true;
        for (unsigned mask : masks) {
            if (__builtin_parity(mask & signs))
                all_even = false;
            else
                all_odd = false;
        }
        if (!fixed_point) out.total_derangements += 1;
        if (all_even) out.balanced += 1;
        if (all_odd) out.totally_unbalanced += 1;
    });
    return out;
}

Int signed_derangements_fixing_subcube(int m, int k) {
    if (k < 0 || k > m) throw std::domain_error("subcube count: need 0 <= k <= m");
    Int total = 0;
    for (int i = 0; i <= k; ++i)
        total += binomial(k, i) * odd_double_factorial(i) * matching_derangement_count(m - i);
    return total;
}

Int signed_derangements_fixing_subcube_enumerated(int m, int k) {
    if (k < 0 || k > m) throw std::domain_error("subcube count: need 0 <= k <= m");
    if (m == 0) return 1;
    Int total = 0;
    const unsigned low = (k == 0) ? 0u : ((1u << k) - 1u);
    scan_signed_permutations(m, [&](const std::vector<int>& perm,
                                    const std::vector<CycleInfo>&,
                                    const std::vector<unsigned>& masks,
                                    unsigned signs) {
        for (std::size_t i = 0; i < perm.size(); ++i)
            if (perm[i] == static_cast<int>(i) && !((signs >> i) & 1u)) return;
        for (unsigned mask : masks)
            if (__builtin_parity(mask & signs) && (mask & ~low)) return;
        total += 1;
    });
    return total;
}

}  // namespace jackd
