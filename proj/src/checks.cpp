#include "jackd/checks.hpp"

#include "jackd/colored.hpp"
#include "jackd/exactalg.hpp"
#include "jackd/graphcheck.hpp"
#include "jackd/hooks.hpp"
#include "jackd/jack_oracle.hpp"
#include "jackd/partitions.hpp"
#include "jackd/spectra.hpp"
#include "jackd/transversals.hpp"

#include <chrono>
#include <stdexcept>

namespace jackd {

namespace {

class Battery {
public:
    explicit Battery(std::string name) : result_{std::move(name), true, "", 0.0} {
        start_ = std::chrono::steady_clock::now();
    }

    void require(bool ok, const std::string& what) {
        ++checked_;
        if (!ok && result_.pass) {
            result_.pass = false;
            result_.detail = "failed: " + what;
        }
    }

    CheckResult finish(const std::string& summary) {
        const auto end = std::chrono::steady_clock::now();
        result_.seconds = std::chrono::duration<double>(end - start_).count();
        if (result_.pass)
            result_.detail = summary + " (" + std::to_string(checked_) + " checks)";
        return result_;
    }

private:
    CheckResult result_;
    long checked_ = 0;
    std::chrono::steady_clock::time_point start_;
};

std::vector<Partition> shapes_with_bounds(int max_first_row, int max_size) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n)
        for (const Partition& lam : partitions_of(n))
            if (lam.part(1) <= max_first_row) out.push_back(lam);
    return out;
}

}  // namespace

CheckResult check_paper_value_regression() {
    Battery b("value regression (10,6,3,1)");
    const Partition lam = Partition::parse("10,6,3,1");
    const Rat expected(4242315);
    b.require(eta_at(lam, Rat(1), EtaMethod::Colored) == expected, "colored route");
    b.require(eta_at(lam, Rat(1), EtaMethod::Minors) == expected, "minor-sum route");
    b.require(eta_rencontres(lam, 10).eval(Rat(1)) == expected, "rencontres route");
    b.require(eta1_closed(lam) == expected, "closed-form route");
    b.require(eta1_det(lam) == expected, "determinant route");
    return b.finish("five exact routes agree at 4242315");
}

CheckResult check_oracle_agreement(int max_n) {
    Battery b("symbolic eigenvalue vs orthogonalization oracle");
    for (int n = 1; n <= max_n; ++n) {
        const int top_sample = std::max(5, n);
        std::vector<std::map<Partition, std::map<Partition, Rat>>> families;
        for (int a = 1; a <= top_sample; ++a)
            families.push_back(jack_power_expansions(n, Rat(a)));
        for (const Partition& lam : partitions_of(n)) {
            // Degree in the parameter is first part - 1, so first part + 1
            // integer samples (at least the five standard ones) pin it.
            const int samples = std::max(5, lam.part(1));
            std::vector<std::pair<Rat, Rat>> pts;
            for (int a = 1; a <= samples; ++a) {
                Rat value(0);
                for (const auto& [mu, c] : families[a - 1].at(lam))
                    if (fixed_point_free(mu)) value += c;
                pts.emplace_back(Rat(a), value);
            }
            const AlphaPoly interpolated{newton_interpolate(pts)};
            b.require(interpolated == eta(lam),
                      "oracle mismatch at shape " + lam.to_string());
        }
    }
    return b.finish("interpolated oracle equals the signed count polynomial, n <= " +
                    std::to_string(max_n));
}

CheckResult check_character_oracle(int max_n, const std::string& cache_dir) {
    Battery b("character-sum oracle vs closed forms");
    for (int n = 1; n <= max_n; ++n) {
        const CharacterTable table = CharacterTable::load_or_build(n, cache_dir);
        for (const Partition& lam : partitions_of(n)) {
            Int acc = 0;
            for (const Partition& mu : table.classes())
                if (fixed_point_free(mu))
                    acc += table.class_size(mu) * table.chi(lam, mu);
            const Rat reference = Rat(acc) / Rat(table.dimension(lam));
            b.require(eta1_closed(lam) == reference,
                      "closed form at " + lam.to_string());
            b.require(eta1_det(lam) == reference, "determinant at " + lam.to_string());
            b.require(eta_minor_sum(lam).eval(Rat(1)) == reference,
                      "minor sum at " + lam.to_string());
            b.require(eta_rencontres(lam, lam.part(1)).eval(Rat(1)) == reference,
                      "rencontres at " + lam.to_string());
        }
    }
    return b.finish("all routes match the character sums, n <= " +
                    std::to_string(max_n));
}

CheckResult check_graph_spectra(int max_n) {
    Battery b("graph spectra vs exact eigenvalues");
    for (int n = 2; n <= max_n; ++n)
        b.require(verify_spectrum(n, 1).pass,
                  "permutation graph on " + std::to_string(n) + " symbols");
    for (int n = 1; n <= max_n; ++n)
        b.require(verify_spectrum(n, 2).pass,
                  "matching graph on " + std::to_string(2 * n) + " points");
    return b.finish("numeric multisets match with exact multiplicities, n <= " +
                    std::to_string(max_n));
}

CheckResult check_hook_identities(int max_first_row, int max_size) {
    Battery b("hook product identities");
    const AlphaPoly a = AlphaPoly::variable();
    for (const Partition& lam : shapes_with_bounds(max_first_row, max_size)) {
        const int w = lam.part(1);
        if (w >= 1) {
            // Expansion over first minors.
            AlphaPoly rhs;
            for (int i = 1; i < w; ++i) rhs += a * column_minor_product(lam, {i});
            rhs += first_row_lower_hooks(lam).back() * column_minor_product(lam, {w});
            b.require(principal_lower_hook_product(lam) == rhs,
                      "minor expansion at " + lam.to_string());
        }
        // Shift-split identity for every admissible shift.
        for (int j = 0; j <= w - 1; ++j) {
            AlphaPoly lhs;
            for (int i = 1; i <= w; ++i) {
                const Partition minor = column_minor(lam, {i});
                lhs += tail_gap_product(minor, j - 1) *
                       principal_lower_hook_product(remove_last_columns(minor, j));
            }
            lhs = a * lhs;
            const AlphaPoly rhs =
                tail_gap_product(lam, j - 1) *
                    principal_lower_hook_product(remove_last_columns(lam, j)) +
                tail_gap_product(lam, j) *
                    principal_lower_hook_product(remove_last_columns(lam, j + 1));
            b.require(lhs == rhs, "shift split at " + lam.to_string() + " j=" +
                                      std::to_string(j));
        }
        // Finite-difference form of the minor sums, division free.
        for (int k = 0; k <= w; ++k) {
            AlphaPoly scale(1);
            for (int i = 0; i < k; ++i) scale *= a;
            scale = scale * Rat(factorial(k));
            AlphaPoly rhs;
            for (int j = 0; j <= k; ++j) {
                const AlphaPoly term =
                    shifted_first_row_product(lam, j) * Rat(binomial(k, j));
                if (j % 2 == 0)
                    rhs += term;
                else
                    rhs -= term;
            }
            const AlphaPoly subsets = column_minor_sum_subsets(lam, k);
            b.require(scale * subsets == rhs,
                      "difference form at " + lam.to_string() + " k=" + std::to_string(k));
            b.require(subsets == column_minor_sum_differences(lam, k),
                      "minor sum routes at " + lam.to_string());
        }
        // Transversal weights against minor sums, including the empty range.
        for (int k = 0; k <= w + 1; ++k)
            b.require(transversal_weight_sum_enumerated(lam, k) ==
                          column_minor_sum(lam, w - k >= 0 ? w - k : w + 1),
                      "transversal sum at " + lam.to_string() + " k=" + std::to_string(k));
        // Falling-basis coefficients: recurrence vs direct expansion, signs,
        // coefficient counts, and the total against the derangement counts.
        const std::vector<AlphaPoly> coeffs = falling_basis_coeffs(lam);
        b.require(coeffs == falling_factorial_expand(first_row_product_poly(lam)),
                  "falling coefficients at " + lam.to_string());
        AlphaPoly total;
        for (int k = 0; k <= w; ++k) {
            total += coeffs[k];
            const AlphaPoly signed_coeff = (k % 2 == 0) ? coeffs[k] : -coeffs[k];
            for (int d = 0; d <= signed_coeff.degree(); ++d)
                b.require(signed_coeff.coeff(d) >= 0,
                          "coefficient sign at " + lam.to_string());
            for (int j = 0; j + k <= w; ++j)
                b.require(signed_coeff.coeff(w - k - j) ==
                              Rat(marked_fixed_colored_count(lam, k, j)),
                          "coefficient count at " + lam.to_string());
        }
        b.require(total == derangement_count_poly(lam),
                  "coefficient total at " + lam.to_string());
    }
    return b.finish("all identities hold symbolically, first row <= " +
                    std::to_string(max_first_row) + ", size <= " +
                    std::to_string(max_size));
}

CheckResult check_sign_pattern(int max_n) {
    Battery b("sign pattern and parameter-zero closed form");
    const std::vector<Rat> alphas{Rat(0), Rat(1, 2), Rat(1), Rat(2), Rat(3)};
    const Partition single(std::vector<int>{1});
    for (int n = 0; n <= max_n; ++n)
        for (const Partition& lam : partitions_of(n)) {
            const AlphaPoly e = eta(lam);
            const bool negative = (lam.size() - lam.part(1)) % 2 != 0;
            for (const Rat& alpha : alphas) {
                const Rat v = e.eval(alpha);
                const Rat signed_v = negative ? Rat(-v) : v;
                b.require(signed_v >= 0, "sign at " + lam.to_string());
                if (alpha > 0 && v == 0)
                    b.require(lam == single,
                              "unexpected zero at " + lam.to_string());
            }
        }
    for (int n = 0; n <= max_n + 1; ++n)
        for (const Partition& lam : partitions_of(n))
            b.require(eta_alpha0(lam) == eta_minor_sum(lam).eval(Rat(0)),
                      "parameter-zero form at " + lam.to_string());
    return b.finish("signs follow (-1)^(size - first part), n <= " +
                    std::to_string(max_n));
}

CheckResult check_kuwales(int max_n) {
    Battery b("dominance monotonicity of magnitudes");
    const std::vector<Rat> alphas{Rat(0), Rat(1, 2), Rat(1), Rat(2), Rat(3)};
    for (int n = 1; n <= max_n; ++n) {
        const std::vector<Partition> all = partitions_of(n);
        std::map<Partition, AlphaPoly> etas;
        for (const Partition& lam : all) etas[lam] = eta(lam);
        for (const Partition& lam : all)
            for (const Partition& mu : all) {
                if (mu.part(1) != lam.part(1) || mu == lam) continue;
                if (!dominates(lam, mu)) continue;
                for (const Rat& alpha : alphas) {
                    const Rat lo = abs(etas[mu].eval(alpha));
                    const Rat hi = abs(etas[lam].eval(alpha));
                    b.require(lo <= hi, "pair " + mu.to_string() + " vs " +
                                            lam.to_string());
                }
            }
    }
    return b.finish("dominated shapes never exceed in magnitude, n <= " +
                    std::to_string(max_n));
}

CheckResult check_extrema(int max_n) {
    Battery b("extremal shapes and the one-row lower bound");
    const std::vector<Rat> alphas{Rat(1), Rat(2), Rat(3)};
    for (int n = 6; n <= max_n; ++n) {
        const Partition top(std::vector<int>{n});
        const Partition runner(std::vector<int>{n - 1, 1});
        for (const Rat& alpha : alphas) {
            const Rat top_value = eta(top).eval(alpha);
            const Rat runner_value = eta(runner).eval(alpha);
            for (const Partition& lam : partitions_of(n)) {
                if (lam == top) continue;
                const Rat v = eta(lam).eval(alpha);
                b.require(v < top_value, "maximum at n=" + std::to_string(n));
                if (lam == runner) continue;
                b.require(v > runner_value, "minimum at n=" + std::to_string(n));
                b.require(abs(v) < abs(runner_value),
                          "second magnitude at n=" + std::to_string(n));
            }
        }
    }
    for (int n = 4; n <= 30; ++n)
        for (const Rat& alpha : alphas) {
            const Rat d = one_row_derangement_poly(n).eval(alpha);
            Rat hook(1);
            for (int i = 0; i < n; ++i) hook *= Rat(i) * alpha + 1;
            b.require(d * 3 > hook, "one-row bound at n=" + std::to_string(n));
        }
    return b.finish("extrema as expected for 6 <= n <= " + std::to_string(max_n) +
                    ", one-row bound to n = 30");
}

CheckResult check_alpha2_structure(int max_n) {
    Battery b("parameter-2 structure");
    // Two-row shapes: formula vs enumeration vs the colored matching count.
    for (int n = 2; n <= std::min(max_n, 7); ++n)
        for (int k = 0; 2 * k <= n; ++k) {
            const Partition lam = (k == 0) ? Partition(std::vector<int>{n})
                                           : Partition(std::vector<int>{n - k, k});
            const Int sum_form = signed_derangements_fixing_subcube(n - k, k);
            b.require(sum_form == signed_derangements_fixing_subcube_enumerated(n - k, k),
                      "subcube count displays at n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
            const Rat two_row = eta2_two_row(n, k);
            b.require(two_row == eta(lam).eval(Rat(2)),
                      "two-row form at " + lam.to_string());
            b.require(two_row == eta2_closed(lam), "closed form at " + lam.to_string());
            const Int matchings = colored_matching_derangements(lam);
            const Rat signed_matchings =
                (lam.size() - lam.part(1)) % 2 == 0 ? Rat(matchings) : Rat(-matchings);
            b.require(two_row == signed_matchings,
                      "matching count at " + lam.to_string());
        }
    b.require(eta2_two_row(4, 2) == 5, "square shape value");
    for (int m = 1; 2 * m <= 7; ++m) {
        const Rat expected = (m % 2 == 0)
                                 ? Rat(hyperoctahedral_counts(m).total_derangements)
                                 : Rat(-hyperoctahedral_counts(m).total_derangements);
        b.require(eta2_two_row(2 * m, m) == expected,
                  "square vs signed derangements at m=" + std::to_string(m));
    }
    // Doubly even conjugates: both closed forms against the generic value.
    for (int half = 1; 2 * half <= max_n; ++half)
        for (const Partition& rho : partitions_of(half)) {
            std::vector<int> parts;
            for (int p : rho.parts()) {
                parts.push_back(p);
                parts.push_back(p);
            }
            const Partition lam(std::move(parts));
            const Rat reference = eta(lam).eval(Rat(2));
            b.require(eta2_doubly_even(lam) == reference,
                      "half-shape form at " + lam.to_string());
            b.require(eta2_closed(lam) == reference,
                      "paired closed form at " + lam.to_string());
        }
    // Signed permutation counts by enumeration.
    b.require(hyperoctahedral_counts(4).total_derangements == 233,
              "derangements of the signed group on 4 symbols");
    for (int m = 0; m <= 5; ++m) {
        const HyperoctahedralCounts counts = hyperoctahedral_counts(m);
        b.require(counts.balanced == odd_double_factorial(m),
                  "balanced count at m=" + std::to_string(m));
        b.require(counts.totally_unbalanced == odd_double_factorial(m),
                  "totally unbalanced count at m=" + std::to_string(m));
    }
    return b.finish("two-row, doubly even, and signed counts agree, n <= " +
                    std::to_string(max_n));
}

CheckResult check_immanants() {
    Battery b("complete-graph immanants");
    for (int n = 1; n <= 9; ++n) {
        const Partition col(std::vector<int>(n, 1));
        const Int expected = (n % 2 == 0) ? Int(-(n - 1)) : Int(n - 1);
        b.require(complete_graph_immanant(col) == expected,
                  "single column at n=" + std::to_string(n));
    }
    for (int n = 1; n <= 8; ++n)
        for (int j = 1; j <= n; ++j) {
            std::vector<int> parts{j};
            parts.insert(parts.end(), n - j, 1);
            const Partition hook_shape(std::move(parts));
            const Int derangements_j = rencontres(j, 0, Rat(1)).get_num();
            Int expected = binomial(n, j) * derangements_j;
            if ((n - j) % 2 != 0) expected = -expected;
            expected += ((n - 1) % 2 == 0) ? binomial(n - 1, j) : -binomial(n - 1, j);
            b.require(complete_graph_immanant(hook_shape) == expected,
                      "hook shape at n=" + std::to_string(n) + " j=" + std::to_string(j));
        }
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lam : partitions_of(n))
            b.require(immanant_char_poly(lam) == immanant_char_poly_direct(lam),
                      "immanantal polynomial at " + lam.to_string());
    return b.finish("column, hook, and polynomial forms match the direct sums");
}

std::vector<CheckResult> run_suite(const std::string& suite, int max_n,
                                   const std::string& cache_dir) {
    auto capped = [&](int dflt) { return max_n > 0 ? std::min(max_n, dflt) : dflt; };
    std::vector<CheckResult> results;
    const bool all = suite == "all";
    if (all || suite == "main") {
        results.push_back(check_paper_value_regression());
        results.push_back(check_oracle_agreement(capped(6)));
        results.push_back(check_character_oracle(capped(8), cache_dir));
    }
    if (all || suite == "signs") results.push_back(check_sign_pattern(capped(9)));
    if (all || suite == "kuwales") results.push_back(check_kuwales(capped(9)));
    if (all || suite == "extrema") results.push_back(check_extrema(capped(9)));
    if (all || suite == "graphs") results.push_back(check_graph_spectra(capped(5)));
    if (all || suite == "identities") {
        results.push_back(check_hook_identities(capped(6), 12));
        results.push_back(check_immanants());
    }
    if (all || suite == "alpha2") results.push_back(check_alpha2_structure(capped(8)));
    if (results.empty()) throw std::invalid_argument("unknown suite: '" + suite + "'");
    return results;
}

}  // namespace jackd
