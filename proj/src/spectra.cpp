#include "jackd/spectra.hpp"

#include "jackd/hooks.hpp"
#include "jackd/jack_oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jackd {

namespace {

bool sign_negative(const Partition& lam) {
    return (lam.size() - lam.part(1)) % 2 != 0;
}

AlphaPoly apply_sign(const Partition& lam, AlphaPoly p) {
    return sign_negative(lam) ? -p : p;
}

Rat apply_sign(const Partition& lam, Rat v) {
    return sign_negative(lam) ? Rat(-v) : v;
}

// Rencontres count at parameter 1, with the out-of-range convention d = 0.
Int fixed_point_count1(int m, int j) {
    if (m < 0 || j < 0 || j > m) return 0;
    const Rat v = rencontres_poly(m, j).eval(1);
    return v.get_num();
}

// Probability that a signed permutation on m symbols has exactly j
// positively signed fixed symbols.
Rat signed_fixed_prob(int m, int j) {
    if (j < 0 || j > m) return Rat(0);
    return rencontres_prob(m, j, Rat(2));
}

}  // namespace

AlphaPoly eta(const Partition& lam) {
    if (lam.empty()) return AlphaPoly(1);
    if (lam.part(1) <= 7) return apply_sign(lam, derangement_count_poly(lam));
    return eta_minor_sum(lam);
}

AlphaPoly eta_minor_sum(const Partition& lam) {
    AlphaPoly acc;
    for (int k = 0; k <= lam.part(1); ++k) {
        const AlphaPoly term = column_minor_sum(lam, k);
        if (k % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return apply_sign(lam, acc);
}

Rat eta_alpha0(const Partition& lam) {
    Rat prod(1);
    const Partition conj = lam.conjugate();
    for (int i = 1; i <= conj.length(); ++i) prod *= Rat(conj.part(i) - 1);
    return apply_sign(lam, prod);
}

AlphaPoly eta_rencontres(const Partition& lam, int n) {
    const int w = lam.part(1);
    if (n < w) throw std::domain_error("eta_rencontres: need n >= first part");
    std::vector<std::pair<Rat, Rat>> samples;
    for (int a = 1; a <= w + 1; ++a) {
        const Rat alpha(a);
        Rat acc(0);
        for (int j = 0; j <= n; ++j)
            acc += rencontres(n, j, alpha) * shifted_first_row_product(lam, j).eval(alpha);
        Rat denom = Rat(factorial(n));
        for (int i = 0; i < n; ++i) denom *= alpha;
        Rat value = apply_sign(lam, acc / denom);
        if (!is_integer(value))
            throw std::runtime_error("eta_rencontres: inexact sample value");
        samples.emplace_back(alpha, std::move(value));
    }
    AlphaPoly result(newton_interpolate(samples));
    if (result.degree() >= std::max(w, 1))
        throw std::runtime_error("eta_rencontres: interpolant degree too high");
    return result;
}

Rat eta1_closed(const Partition& lam) {
    if (lam.empty()) return Rat(1);
    const int w = lam.part(1);
    const Rat order(factorial(w));
    Rat total(0);
    for (int i = 1; i <= lam.length(); ++i) {
        if (i > lam.part(i) + 1) break;
        const int t = w - lam.part(i) + i - 1;
        const Rat prob = Rat(fixed_point_count1(w, t)) / order;
        if (prob == 0) continue;
        const Rat hook = extended_hook_product(lam, i, 0).eval(1);
        const Rat term = prob * hook;
        total += (lam.part(i) % 2 == 0) ? term : Rat(-term);
    }
    return (lam.size() % 2 == 0) ? total : Rat(-total);
}

Rat eta1_two_row(int n, int k) {
    if (k < 0 || n - k < k) throw std::domain_error("eta1_two_row: not a two-row shape");
    const Rat num = Rat((k % 2 == 0 ? 1 : -1) * fixed_point_count1(n - k + 1, 1) +
                        ((n - k) % 2 == 0 ? 1 : -1) * fixed_point_count1(k, 1));
    return num / Rat(n - 2 * k + 1);
}

Rat eta1_three_row(const Partition& lam) {
    if (lam.length() != 3) throw std::domain_error("eta1_three_row: need three parts");
    const int l1 = lam.part(1), l2 = lam.part(2), l3 = lam.part(3);
    const int n = lam.size();
    auto sgn = [&](int r) { return (n - r) % 2 == 0 ? 1 : -1; };
    auto dshift = [&](int m) { return Rat(2 * fixed_point_count1(m, 2)); };
    Rat total = Rat(sgn(l1)) * dshift(l1 + 2) / Rat((l1 - l3 + 2) * (l1 - l2 + 1));
    total += Rat(sgn(l2)) * dshift(l2 + 1) / Rat((l1 - l2 + 1) * (l2 - l3 + 1));
    total += Rat(sgn(l3)) * dshift(l3) / Rat((l1 - l3 + 2) * (l2 - l3 + 1));
    return total;
}

Rat eta1_det(const Partition& lam) {
    if (lam.empty()) return Rat(1);
    const int len = lam.length();
    std::vector<std::vector<Rat>> w(len, std::vector<Rat>(len));
    std::vector<std::vector<Rat>> v(len, std::vector<Rat>(len));
    const Int lead = factorial(len - 1);
    // The sign normalization of the first column depends on the parities of
    // the size, the first part, and the row count; with it the plain ratio
    // of determinants matches the closed form for every shape.
    const int parity = (lam.size() + lam.part(1) + len * (len - 1) / 2) % 2;
    for (int i = 1; i <= len; ++i) {
        const Int x(lam.part(i) - i);
        Int entry = lead * fixed_point_count1(lam.part(i) + len - i, len - 1);
        if ((lam.part(1) - lam.part(i) + i - 1 + parity) % 2 != 0) entry = -entry;
        w[i - 1][0] = Rat(entry);
        for (int j = 2; j <= len; ++j) w[i - 1][j - 1] = Rat(pow_int(x, len - j));
        for (int j = 1; j <= len; ++j) v[i - 1][j - 1] = Rat(pow_int(x, j - 1));
    }
    return det_exact(std::move(w)) / det_exact(std::move(v));
}

Rat eta2_closed(const Partition& lam) {
    if (lam.empty()) return Rat(1);
    const int w = lam.part(1);
    Rat total(0);
    for (int i = 1;; ++i) {
        const int row = 2 * i - 1;
        const int len_odd = lam.part(row);
        if (i > len_odd + 1) break;
        const int start = w - len_odd + i - 1;
        Rat inner(0);
        for (int jp = 0; jp <= len_odd - lam.part(row + 1); ++jp) {
            if (start + jp > w) break;
            const Rat prob = signed_fixed_prob(w, start + jp);
            if (prob == 0) continue;
            // The signed row product already alternates with the shift, so
            // no explicit sign appears here.
            const Rat hook = extended_hook_product(lam, row, jp).eval(2);
            inner += prob * hook;
        }
        total += (len_odd % 2 == 0) ? inner : Rat(-inner);
    }
    return (lam.size() % 2 == 0) ? total : Rat(-total);
}

Rat eta2_two_row(int n, int k) {
    if (k < 0 || n - k < k) throw std::domain_error("eta2_two_row: not a two-row shape");
    const Rat count(signed_derangements_fixing_subcube(n - k, k));
    return (k % 2 == 0) ? count : Rat(-count);
}

bool doubly_even_conjugate(const Partition& lam) {
    for (int i = 1; i <= lam.length(); i += 2)
        if (lam.part(i) != lam.part(i + 1)) return false;
    return true;
}

Rat eta2_doubly_even(const Partition& lam) {
    if (!doubly_even_conjugate(lam))
        throw std::domain_error("eta2_doubly_even: conjugate has an odd part");
    if (lam.empty()) return Rat(1);
    std::vector<int> half;
    for (int i = 1; i <= lam.length(); i += 2) half.push_back(lam.part(i));
    const Partition mu(std::move(half));
    const Int scale = pow_int(Int(2), mu.part(1));
    Rat total(0);
    for (int i = 1; i <= mu.length(); ++i) {
        if (i > mu.part(i) + 1) break;
        const int t = mu.part(1) - mu.part(i) + i - 1;
        const Rat prob = signed_fixed_prob(mu.part(1), t);
        if (prob == 0) continue;
        const Rat hook = extended_hook_product(mu, i, 0).eval(1);
        const Rat term = prob * Rat(scale) * hook;
        total += (mu.part(i) % 2 == 0) ? term : Rat(-term);
    }
    return total;
}

Int complete_graph_immanant(const Partition& lam) {
    if (lam.size() > 12)
        throw std::length_error("complete_graph_immanant: size exceeds cap");
    const Rat value = Rat(syt_count(lam)) * eta(lam).eval(1);
    if (!is_integer(value))
        throw std::runtime_error("complete_graph_immanant: non-integer value");
    return value.get_num();
}

namespace {

Partition cycle_type(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    std::vector<int> lens;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        int len = 0;
        std::size_t t = s;
        do {
            seen[t] = 1;
            ++len;
            t = static_cast<std::size_t>(perm[t]);
        } while (t != s);
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return Partition(std::move(lens));
}

}  // namespace

Int complete_graph_immanant_direct(const Partition& lam) {
    const int n = lam.size();
    if (n > 8) throw std::length_error("complete_graph_immanant_direct: size exceeds cap");
    const CharacterTable table = CharacterTable::build(n);
    Int total = 0;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool derangement = true;
        for (int i = 0; i < n; ++i)
            if (perm[i] == i) derangement = false;
        if (derangement) total += table.chi(lam, cycle_type(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

std::vector<Rat> immanant_char_poly(const Partition& lam) {
    const int n = lam.size();
    if (n > 9) throw std::length_error("immanant_char_poly: size exceeds cap");
    const Rat dim(syt_count(lam));
    std::vector<Rat> coeffs(n + 1, Rat(0));
    for (int k = 0; k <= n; ++k) {
        Rat acc(0);
        for (const Partition& mu : partitions_of(n - k)) {
            if (!contains(lam, mu)) continue;
            acc += Rat(skew_syt_count(lam, mu) * syt_count(mu)) * eta(mu).eval(1);
        }
        acc *= Rat(binomial(n, k));
        if ((n - k) % 2 != 0) acc = -acc;
        coeffs[k] = acc / dim;
    }
    return coeffs;
}

std::vector<Rat> immanant_char_poly_direct(const Partition& lam) {
    const int n = lam.size();
    if (n > 6) throw std::length_error("immanant_char_poly_direct: size exceeds cap");
    const CharacterTable table = CharacterTable::build(n);
    std::vector<Rat> coeffs(n + 1, Rat(0));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int fixed = 0;
        for (int i = 0; i < n; ++i)
            if (perm[i] == i) ++fixed;
        // Off-diagonal entries of x*I - (J - I) are all -1.
        const Int chi = table.chi(lam, cycle_type(perm));
        coeffs[fixed] += ((n - fixed) % 2 == 0) ? Rat(chi) : Rat(-chi);
    } while (std::next_permutation(perm.begin(), perm.end()));
    const Rat dim(syt_count(lam));
    for (Rat& c : coeffs) c /= dim;
    return coeffs;
}

AlphaPoly one_row_derangement_poly(int n) {
    if (n < 0) throw std::domain_error("one_row_derangement_poly: negative n");
    AlphaPoly acc;
    for (int k = 0; k <= n; ++k) {
        AlphaPoly hook_product(1);
        for (int i = 0; i < n - k; ++i)
            hook_product *= AlphaPoly::linear(Rat(i), Rat(1));
        const AlphaPoly term = hook_product * Rat(binomial(n, k));
        if (k % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

Rat eta_at(const Partition& lam, const Rat& alpha, EtaMethod method) {
    switch (method) {
        case EtaMethod::Auto:
            if (alpha == 1) return eta1_closed(lam);
            if (alpha == 2) return eta2_closed(lam);
            if (alpha == 0) return eta_alpha0(lam);
            return eta(lam).eval(alpha);
        case EtaMethod::Colored:
            return apply_sign(lam, derangement_count_poly(lam)).eval(alpha);
        case EtaMethod::Minors:
            return eta_minor_sum(lam).eval(alpha);
        case EtaMethod::Rencontres:
            return eta_rencontres(lam, lam.part(1)).eval(alpha);
        case EtaMethod::Closed1:
            if (alpha != 1) throw std::domain_error("method closed1 requires alpha 1");
            return eta1_closed(lam);
        case EtaMethod::Det1:
            if (alpha != 1) throw std::domain_error("method det1 requires alpha 1");
            return eta1_det(lam);
        case EtaMethod::Closed2:
            if (alpha != 2) throw std::domain_error("method closed2 requires alpha 2");
            return eta2_closed(lam);
    }
    throw std::logic_error("eta_at: unknown method");
}

EtaMethod parse_eta_method(const std::string& name) {
    if (name == "auto") return EtaMethod::Auto;
    if (name == "colored") return EtaMethod::Colored;
    if (name == "minors") return EtaMethod::Minors;
    if (name == "rencontres") return EtaMethod::Rencontres;
    if (name == "closed1") return EtaMethod::Closed1;
    if (name == "det1") return EtaMethod::Det1;
    if (name == "closed2") return EtaMethod::Closed2;
    throw std::invalid_argument("unknown method: '" + name + "'");
}

AlphaSpec AlphaSpec::parse(const std::string& text) {
    if (text == "sym") return AlphaSpec::sym();
    return AlphaSpec::fixed(parse_rational(text));
}

std::string AlphaSpec::to_string() const {
    return symbolic ? "sym" : jackd::to_string(value);
}

SpectrumTable spectrum_table(int n, const AlphaSpec& alpha) {
    if (n > 12) throw std::length_error("spectrum_table: n exceeds cap");
    const bool mult1 = !alpha.symbolic && alpha.value == 1;
    const bool mult2 = !alpha.symbolic && alpha.value == 2;
    if (mult2 && n > 8)
        throw std::length_error("spectrum_table: n exceeds cap at parameter 2");
    SpectrumTable table;
    table.n = n;
    table.alpha = alpha;
    for (const Partition& lam : partitions_of(n)) {
        SpectrumRow row;
        row.shape = lam;
        if (alpha.symbolic)
            row.eta_poly = eta(lam);
        else
            row.eta_value = eta_at(lam, alpha.value);
        if (mult1) {
            const Int f = syt_count(lam);
            row.has_mult = true;
            row.mult = f * f;
        } else if (mult2) {
            row.has_mult = true;
            row.mult = syt_count(double_partition(lam));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string SpectrumTable::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["alpha"] = alpha.to_string();
    nlohmann::json rows_json = nlohmann::json::array();
    for (const SpectrumRow& row : rows) {
        nlohmann::json r;
        r["shape"] = row.shape.to_string();
        if (alpha.symbolic)
            r["eta"] = nlohmann::json::parse(row.eta_poly.to_json());
        else
            r["eta"] = to_string(row.eta_value);
        if (row.has_mult) {
            if (row.mult.fits_slong_p())
                r["mult"] = row.mult.get_si();
            else
                r["mult"] = to_string(row.mult);
        }
        rows_json.push_back(std::move(r));
    }
    j["rows"] = rows_json;
    return j.dump();
}

std::string SpectrumTable::to_csv() const {
    std::string out = "shape,eta,mult\n";
    for (const SpectrumRow& row : rows) {
        out += '"' + row.shape.to_string() + "\",";
        out += alpha.symbolic ? row.eta_poly.to_string() : to_string(row.eta_value);
        out += ',';
        if (row.has_mult) out += to_string(row.mult);
        out += '\n';
    }
    return out;
}

std::string SpectrumTable::to_plain() const {
    std::string out;
    for (const SpectrumRow& row : rows) {
        out += row.shape.to_string().empty() ? "-" : row.shape.to_string();
        out += "  ";
        out += alpha.symbolic ? row.eta_poly.to_string() : to_string(row.eta_value);
        if (row.has_mult) out += "  x" + to_string(row.mult);
        out += '\n';
    }
    return out;
}

}  // namespace jackd
